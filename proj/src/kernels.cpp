#include "qpart/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include <Eigen/Dense>

#include "qpart/errors.hpp"
#include "summation.hpp"

namespace qpart {

namespace {

int next_pow2(int n)
{
    int g = 1;
    while (g < n)
        g *= 2;
    return g;
}

double max_abs(const std::vector<double>& v)
{
    double m = 0.0;
    for (double x : v)
        m = std::max(m, std::abs(x));
    return m;
}

bool tails_vanish(const std::vector<double>& c)
{
    const double scale = std::max(max_abs(c), 1e-300);
    const std::size_t n = c.size();
    for (std::size_t i : {std::size_t{0}, std::size_t{1}, n - 2, n - 1})
        if (std::abs(c[i]) > 1e-14 * scale)
            return false;
    return true;
}

}  // namespace

SchurKernel::SchurKernel(const MiwaTimes& t, const MiwaTimes& tt, SchurKernelOptions opts)
    : j_(Family::J_schur, 0, {0.0}), jt_(Family::J_tilde_schur, 0, {0.0})
{
    const auto& ctl = opts.control;
    auto f = [&](std::complex<double> z) { return std::exp(t.series(z, ctl) - tt.series(std::conj(z), ctl)); };
    auto ft = [&](std::complex<double> z) { return std::exp(tt.series(z, ctl) - t.series(std::conj(z), ctl)); };
    int radius = opts.radius > 0 ? opts.radius : 32;
    for (;;) {
        const int grid = opts.grid > 0 ? opts.grid : std::max(512, next_pow2(8 * radius + 4));
        auto c = circle_coefficients(f, -radius, radius, grid);
        auto ct = circle_coefficients(ft, -radius, radius, grid);
        if (tails_vanish(c) && tails_vanish(ct)) {
            const bool warn = grid < 4 * (2 * radius + 1);
            j_ = KernelTable(Family::J_schur, -radius, std::move(c), warn);
            jt_ = KernelTable(Family::J_tilde_schur, -radius, std::move(ct), warn);
            return;
        }
        if (opts.radius > 0 || radius >= 4096)
            throw NonConvergence("SchurKernel: coefficient tails above tolerance at radius " + std::to_string(radius));
        radius *= 2;
    }
}

double SchurKernel::operator()(HalfInteger r, HalfInteger s) const
{
    const int a = r.up();
    const int b = s.up();
    detail::CompensatedSum<double> sum;
    for (int j = std::max({0, j_.n_min() - a, jt_.n_min() - b}); a + j <= j_.n_max() && b + j <= jt_.n_max(); ++j)
        sum.add(j_.at(a + j) * jt_.at(b + j));
    return sum.value();
}

double schur_kernel(const MiwaTimes& t, const MiwaTimes& tt, HalfInteger r, HalfInteger s, SchurKernelOptions opts)
{
    return SchurKernel(t, tt, opts)(r, s);
}

QBesselKernel::QBesselKernel(const QParams& p, int radius) : p_(p), table_(Family::J3_qbessel, 0, {0.0})
{
    std::vector<double> c;
    c.reserve(2 * radius + 1);
    for (int n = -radius; n <= radius; ++n)
        c.push_back(q_bessel(3, n, 2.0 * p.xi(), p.q(), p.control()));
    table_ = KernelTable(Family::J3_qbessel, -radius, std::move(c));
}

double QBesselKernel::J(int n) const
{
    if (table_.contains(n))
        return table_.at(n);
    return q_bessel(3, n, 2.0 * p_.xi(), p_.q(), p_.control());
}

double QBesselKernel::diagonal(HalfInteger r) const
{
    // q^r sum_{k in Z'>0} q^k J_{r+k}^2 = sum_{n >= r+1/2} q^n J_n^2
    const double q = p_.q();
    detail::CompensatedSum<double> sum;
    const int a = r.up();
    int small = 0;
    for (int n = a; n < a + p_.max_terms(); ++n) {
        const double jn = J(n);
        const double term = std::pow(q, n) * jn * jn;
        sum.add(term);
        if (n >= 1 && term <= p_.tail_tol() * sum.value()) {
            if (++small >= 3)
                return sum.value();
        } else {
            small = 0;
        }
    }
    throw NonConvergence("QBesselKernel: diagonal series did not converge");
}

double QBesselKernel::hole_diagonal(HalfInteger r) const
{
    const double q = p_.q();
    detail::CompensatedSum<double> sum;
    const int a = r.down();
    int small = 0;
    for (int n = a; n > a - p_.max_terms(); --n) {
        const double jn = J(n);
        const double term = std::pow(q, n) * jn * jn;
        sum.add(term);
        if (n <= -1 && term <= p_.tail_tol() * sum.value()) {
            if (++small >= 3)
                return sum.value();
        } else {
            small = 0;
        }
    }
    throw NonConvergence("QBesselKernel: hole series did not converge");
}

double QBesselKernel::operator()(HalfInteger r, HalfInteger s) const
{
    if (r == s)
        return diagonal(r);
    const double d = 0.5 * (r.twice() - s.twice());
    const double qd = std::pow(p_.q(), 0.5 * d);
    const double den = qd - 1.0 / qd;
    const double num = J(r.up()) * J(s.down()) - J(r.down()) * J(s.up());
    return p_.xi() * num / den;
}

double q_bessel_kernel(const QParams& p, HalfInteger r, HalfInteger s)
{
    const int reach = std::max(std::abs(r.up()), std::abs(s.up())) + 40;
    return QBesselKernel(p, reach)(r, s);
}

DiscreteBesselKernel::DiscreteBesselKernel(double eta) : eta_(eta)
{
    if (!(eta >= 0.0))
        throw DomainError("discrete Bessel kernel needs eta >= 0");
}

double DiscreteBesselKernel::J(int n) const
{
    const double x = 2.0 * eta_;
    if (n >= 0)
        return x == 0.0 ? (n == 0 ? 1.0 : 0.0) : std::cyl_bessel_j(static_cast<double>(n), x);
    const double v = J(-n);
    return (n % 2 == 0) ? v : -v;
}

double DiscreteBesselKernel::tail_square_sum(int a) const
{
    detail::CompensatedSum<double> sum;
    for (int n = a;; ++n) {
        const double j = J(n);
        const double term = j * j;
        sum.add(term);
        if (n > 2.0 * eta_ + 2.0 && term <= 1e-17 * std::max(sum.value(), 1e-300))
            return sum.value();
        if (n > a + 100000)
            throw NonConvergence("discrete Bessel diagonal did not converge");
    }
}

double DiscreteBesselKernel::diagonal(HalfInteger r) const
{
    // sum_{n >= r+1/2} J_n^2; for r < 0 use sum_n J_n^2 = 1
    if (r.twice() > 0)
        return tail_square_sum(r.up());
    return 1.0 - tail_square_sum(-r.down());
}

double DiscreteBesselKernel::operator()(HalfInteger r, HalfInteger s) const
{
    if (r == s)
        return diagonal(r);
    const double d = 0.5 * (r.twice() - s.twice());
    return eta_ * (J(r.down()) * J(s.up()) - J(r.up()) * J(s.down())) / d;
}

double discrete_bessel_kernel(double eta, HalfInteger r, HalfInteger s)
{
    return DiscreteBesselKernel(eta)(r, s);
}

namespace {

struct KernelFactory {
    KernelFn operator()(const Plancherel&) const
    {
        throw DomainError("fixed-size Plancherel measure is not handled as a determinantal process");
    }
    KernelFn operator()(const PoissonizedPlancherel& k) const
    {
        auto kb = std::make_shared<DiscreteBesselKernel>(k.eta);
        return [kb](HalfInteger r, HalfInteger s) { return (*kb)(r, s); };
    }
    KernelFn operator()(const QppSquared& k) const
    {
        auto kb = std::make_shared<QBesselKernel>(k.params);
        return [kb](HalfInteger r, HalfInteger s) { return (*kb)(r, s); };
    }
    KernelFn operator()(const QppMixed& k) const
    {
        const double q = k.params.q();
        const double xi = k.params.xi();
        if (q == 0.0 && xi > 0.0)
            throw DomainError("mixed-type kernel needs q > 0");
        const MiwaTimes tt = MiwaTimes::delta(xi == 0.0 ? 0.0 : xi / std::sqrt(q));
        SchurKernelOptions o;
        o.control = k.params.control();
        auto ks = std::make_shared<SchurKernel>(MiwaTimes::principal(xi, q), tt, o);
        return [ks](HalfInteger r, HalfInteger s) { return (*ks)(r, s); };
    }
    KernelFn operator()(const SchurMeasure& k) const
    {
        SchurKernelOptions o;
        o.control = k.control;
        auto ks = std::make_shared<SchurKernel>(k.t, k.tt, o);
        return [ks](HalfInteger r, HalfInteger s) { return (*ks)(r, s); };
    }
};

}  // namespace

KernelFn make_kernel(const MeasureKind& kind)
{
    return std::visit(KernelFactory{}, kind);
}

double correlation(const KernelFn& k, const std::vector<HalfInteger>& points)
{
    const int n = static_cast<int>(points.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (points[i] == points[j])
                throw DomainError("correlation: duplicate point " + points[i].str());
    if (n == 0)
        return 1.0;
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = k(points[i], points[j]);
    return m.partialPivLu().determinant();
}

double correlation(const MeasureKind& kind, const std::vector<HalfInteger>& points)
{
    return correlation(make_kernel(kind), points);
}

}  // namespace qpart
