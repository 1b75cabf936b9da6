#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "qpart/errors.hpp"
#include "qpart/kernels.hpp"

namespace qpart {

AiryValues airy(double x)
{
    if (!(std::abs(x) <= 8.0))
        throw DomainError("airy: |x| <= 8 required");
    if (x > 2.0) {
        const double z = 2.0 / 3.0 * x * std::sqrt(x);
        const double ai = std::sqrt(x / 3.0) / std::numbers::pi * std::cyl_bessel_k(1.0 / 3.0, z);
        const double aip = -x / (std::numbers::pi * std::sqrt(3.0)) * std::cyl_bessel_k(2.0 / 3.0, z);
        return {ai, aip};
    }
    using L = long double;
    const L c1 = 0.355028053887817239260063186004183176L;  // Ai(0)
    const L c2 = 0.258819403792806798405183560189203963L;  // -Ai'(0)
    const L X = x;
    const L x3 = X * X * X;
    L f = 1, g = X, fp = 0, gp = 1;
    L tf = 1, tg = X, tfp = X * X / 2, tgp = 1;
    fp = tfp;
    for (int k = 0; k < 200; ++k) {
        tf *= x3 / ((3 * k + 2) * (3 * k + 3));
        tg *= x3 / ((3 * k + 3) * (3 * k + 4));
        tfp *= x3 / ((3 * k + 3) * (3 * k + 5));
        tgp *= x3 / ((3 * k + 1) * (3 * k + 3));
        f += tf;
        g += tg;
        fp += tfp;
        gp += tgp;
        const L m = std::fabs(tf) + std::fabs(tg) + std::fabs(tfp) + std::fabs(tgp);
        if (m < 1e-22L * (std::fabs(f) + std::fabs(g) + std::fabs(fp) + std::fabs(gp)))
            break;
    }
    return {static_cast<double>(c1 * f - c2 * g), static_cast<double>(c1 * fp - c2 * gp)};
}

double airy_kernel(double x, double y)
{
    const AiryValues a = airy(x);
    if (x == y)
        return a.aip * a.aip - x * a.ai * a.ai;
    const AiryValues b = airy(y);
    return (a.ai * b.aip - a.aip * b.ai) / (x - y);
}

LimitShape::LimitShape(double xi) : xi_(xi)
{
    if (!(xi >= 0.0 && xi < 1.0))
        throw DomainError("limit_shape: xi must lie in [0,1)");
    a_ = -2.0 * std::log1p(xi);
    b_ = -2.0 * std::log1p(-xi);
    alpha0_ = -2.0 * std::log1p(-xi);
    beta0_ = xi / ((1.0 - xi) * (1.0 - xi));
}

double LimitShape::rho(double x) const
{
    if (x < a_)
        return 1.0;
    if (x > b_)
        return 0.0;
    if (xi_ == 0.0)
        return 0.5;
    double c = 0.5 * (xi_ - std::expm1(-x) / xi_);
    if (std::abs(c) > 1.0 + 1e-12)
        throw Error("limit_shape: arccos argument " + std::to_string(c) + " outside [-1,1]");
    c = std::clamp(c, -1.0, 1.0);
    return std::acos(c) / std::numbers::pi;
}

double LimitShape::omega(double x) const
{
    if (x <= a_ || x >= b_)
        return std::abs(x);
    boost::math::quadrature::tanh_sinh<double> integrator;
    const double v = integrator.integrate([this](double t) { return 1.0 - 2.0 * rho(t); }, a_, x);
    return -a_ + v;
}

LimitShape limit_shape(double xi)
{
    return LimitShape(xi);
}

namespace {

HalfInteger nearest_half_integer(double y)
{
    return HalfInteger::above(static_cast<int>(std::floor(y)));
}

bool strictly_decreasing(const std::vector<ScalingRow>& rows)
{
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (!(rows[i].deviation < rows[i - 1].deviation))
            return false;
    return true;
}

void check_schedule(const std::vector<double>& qs)
{
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (!(qs[i] > 0.0 && qs[i] < 1.0))
            throw DomainError("scaling probe: q must lie in (0,1)");
        if (i > 0 && !(qs[i] > qs[i - 1]))
            throw DomainError("scaling probe: schedule must increase");
    }
}

}  // namespace

ScalingReport scaling_probe_bulk(double xi, double x, int offset, const std::vector<double>& q_schedule)
{
    const LimitShape ls(xi);
    if (!(x > ls.a() && x < ls.b()))
        throw DomainError("scaling_probe_bulk: x must lie inside (a,b)");
    check_schedule(q_schedule);
    const double rho = ls.rho(x);
    const double target =
        offset == 0 ? rho : std::sin(std::numbers::pi * rho * offset) / (std::numbers::pi * offset);
    ScalingReport rep{ScalingKind::bulk_sine, xi, {}, false};
    for (double q : q_schedule) {
        const double eps = -std::log(q);
        const MiwaTimes t = MiwaTimes::principal(xi, q);
        const SchurKernel k(t, t);
        const HalfInteger r = nearest_half_integer(x / eps);
        const HalfInteger s = r + offset;
        const double m = k(r, s);
        rep.rows.push_back({q, r.twice(), s.twice(), m, target, std::abs(m - target)});
    }
    rep.monotone_decreasing = strictly_decreasing(rep.rows);
    return rep;
}

ScalingReport scaling_probe_edge(double xi, double x, double y, const std::vector<double>& q_schedule)
{
    const LimitShape ls(xi);
    if (xi == 0.0)
        throw DomainError("scaling_probe_edge: xi must be positive");
    check_schedule(q_schedule);
    ScalingReport rep{ScalingKind::edge_airy, xi, {}, false};
    for (double q : q_schedule) {
        const double eps = -std::log(q);
        const double sc = std::cbrt(ls.beta0() / eps);
        const double centre = ls.alpha0() / eps;
        const MiwaTimes t = MiwaTimes::principal(xi, q);
        const SchurKernel k(t, t);
        const HalfInteger r = nearest_half_integer(centre + sc * x);
        const HalfInteger s = nearest_half_integer(centre + sc * y);
        const double xr = (r.value() - centre) / sc;
        const double ys = (s.value() - centre) / sc;
        const double m = sc * k(r, s);
        const double target = airy_kernel(xr, ys);
        rep.rows.push_back({q, r.twice(), s.twice(), m, target, std::abs(m - target)});
    }
    rep.monotone_decreasing = strictly_decreasing(rep.rows);
    return rep;
}

}  // namespace qpart
