#include "qpart/oppainleve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qpart/errors.hpp"
#include "qpart/qspecial.hpp"
#include "summation.hpp"

namespace qpart {

namespace {

using cd = std::complex<double>;

cd poly_eval(const std::vector<double>& c, cd z)
{
    cd v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        v = v * z + *it;
    return v;
}

double mat_norm(const Mat2& m)
{
    return m.norm();
}

Weight op_weight(OPVariant v)
{
    return v == OPVariant::plain ? Weight::I : Weight::I_check;
}

}  // namespace

double inner_product_series(const std::vector<double>& f, const std::vector<double>& g, const QParams& p)
{
    if (!(p.xi() > 0.0))
        throw DomainError("inner_product_series: xi must be positive");
    // the terms alternate and exceed the result by orders of magnitude; extended precision absorbs that
    using LD = long double;
    const LD q = p.q();
    const LD xi = p.xi();
    const LD rq = std::sqrt(q);
    const LD pref = 1.0L / (q_pochhammer_inf(p.xi() * p.xi() * p.q(), p.q(), p.control()) *
                            q_pochhammer_inf(p.q(), p.q(), p.control()));
    auto eval = [](const std::vector<double>& c, LD s) {
        LD v = 0.0L;
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            v = v * s + *it;
        return v;
    };
    detail::CompensatedSum<LD> sum;
    LD coef = 1.0L;  // (xi^2 q)_n / (q)_n (-1)^n q^{n(n-1)/2} q^n
    LD qn = 1.0L;
    int small = 0;
    for (int n = 0; n < p.max_terms(); ++n) {
        if (n > 0) {
            qn *= q;
            coef *= -(1.0L - xi * xi * qn) / (1.0L - qn) * qn;
        }
        const LD zn = 0.5L * (xi * qn * rq + 1.0L / (xi * qn * rq));
        const LD term = coef * eval(f, zn) * eval(g, zn);
        if (!std::isfinite(static_cast<double>(term)))
            throw NonConvergence("inner_product_series: overflow before the terms decayed");
        sum.add(term);
        const LD tol = p.tail_tol() * std::max(1e-300L, std::abs(sum.value()));
        small = std::abs(term) <= tol ? small + 1 : 0;
        if (small >= 2 || coef == 0.0L)
            return static_cast<double>(pref * sum.value());
    }
    throw NonConvergence("inner_product_series: no convergence within max_terms");
}

std::vector<double> qpv_residuals(const PainleveState& st)
{
    const double q = st.params.q();
    const double xi = st.params.xi();
    std::vector<double> out(st.n_max, 0.0);
    for (int n = 1; n < st.n_max; ++n) {
        double lhs, rhs;
        if (st.branch == PainleveBranch::x) {
            const auto& v = st.values;
            const double v2 = v[n] * v[n];
            lhs = (v[n] * v[n + 1] - 1.0) * (v[n - 1] * v[n] - 1.0);
            rhs = (v2 - xi) * (v2 - 1.0 / xi) / (1.0 - v2 / (xi * std::pow(q, n)));
        } else {
            const double s = st.y_sq(n);
            lhs = (st.y_prod(n) - 1.0) * (st.y_prod(n - 1) - 1.0);
            rhs = (s + xi) * (s + 1.0 / xi) / (1.0 + std::pow(q, n) * s / xi);
        }
        out[n] = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
    }
    return out;
}

std::vector<double> qpv_residuals_unscaled_form(const OPSequence& op)
{
    // the check weight follows from xi -> -xi, q -> 1/q
    const bool plain = op.variant == OPVariant::plain;
    const double xi = plain ? op.params.xi() : -op.params.xi();
    const double q = plain ? op.params.q() : 1.0 / op.params.q();
    const double rq = std::sqrt(q);
    std::vector<double> out(op.n_max + 1, 0.0);
    for (int n = 1; n <= op.n_max; ++n) {
        const double xm = op.x[n - 1], x = op.x[n], xp = op.x[n + 1];
        const double qn = std::pow(q, n);
        const double a = xi * qn * rq * xm * x * xp * (1.0 - x * x);
        const double b = -(xm + q * xp) * (1.0 - x * x);
        const double c1 = rq * xi * (1.0 - x * x) * x;
        const double c2 = rq * xi * (1.0 - qn) * x * x * x;
        const double c3 = rq * (1.0 - 1.0 / qn) / xi * x;
        const double scale = std::max({std::abs(a), std::abs(b), std::abs(c1), std::abs(c2), std::abs(c3), 1e-300});
        out[n] = std::abs(a + b + c1 + c2 + c3) / scale;
    }
    return out;
}

std::vector<double> linearized_tail_residuals(const PainleveState& st)
{
    const double q = st.params.q();
    const double xi = st.params.xi();
    std::vector<double> out(st.n_max, 0.0);
    for (int n = 1; n < st.n_max; ++n) {
        const double c = st.branch == PainleveBranch::x ? (1.0 - std::pow(q, -n)) / xi + xi
                                                        : -((1.0 - std::pow(q, n)) / xi + xi);
        const auto& v = st.values;
        out[n] = std::abs(v[n - 1] + v[n + 1] - c * v[n]) / std::abs(v[n]);
    }
    return out;
}

std::vector<double> tail_comparator(const PainleveState& st)
{
    const double q = st.params.q();
    const double xi = st.params.xi();
    const double rxi = std::sqrt(xi);
    std::vector<double> out;
    for (int n = 0; n <= st.n_max; ++n) {
        if (st.branch == PainleveBranch::x)
            out.push_back(st.values[n] / (rxi * q_bessel(3, -n, 2.0 * xi, q, st.params.control())));
        else
            out.push_back(st.values[n] / (rxi * q_bessel(3, n, -2.0 * xi, q, st.params.control())));
    }
    return out;
}

std::vector<DpiiRow> dpii_limit_check(double eta, const std::vector<double>& q_schedule, const std::vector<int>& n_range,
                                      OPVariant v)
{
    if (!(eta > 0.0))
        throw DomainError("dpii_limit_check: eta must be positive");
    if (n_range.empty())
        throw DomainError("dpii_limit_check: empty index range");
    const int n_hi = *std::max_element(n_range.begin(), n_range.end());
    const int n_lo = *std::min_element(n_range.begin(), n_range.end());
    if (n_lo < 1 || n_hi > kMaxOPIndex)
        throw DomainError("dpii_limit_check: indices must lie in 1.." + std::to_string(kMaxOPIndex));
    std::vector<DpiiRow> rows;
    for (double q : q_schedule) {
        const QParams p(q, (1.0 - q) * eta);
        const OPSequence op = op_sequence(v, p, n_hi);
        DpiiRow row{q, {}, 0.0};
        for (int n : n_range) {
            const double x = op.x[n];
            const double r = std::abs((op.x[n - 1] + op.x[n + 1]) * (1.0 - x * x) + (n / eta) * x);
            row.residual.push_back(r);
            row.max_residual = std::max(row.max_residual, r);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat2 LaxMatrices::U(std::complex<double> z) const
{
    return U1.cast<cd>() * z + U0.cast<cd>();
}

Mat2 LaxMatrices::T(std::complex<double> z) const
{
    const cd den = 1.0 - z / z_pole;
    return (T2.cast<cd>() * z * z + T1.cast<cd>() * z + T0.cast<cd>()) / den;
}

LaxMatrices lax_matrices(int n, const OPSequence& op)
{
    if (n < 1 || n > op.n_max)
        throw DomainError("lax_matrices: n must lie in 1.." + std::to_string(op.n_max));
    const double q = op.params.q();
    const double xi = op.params.xi();
    if (!(xi > 0.0))
        throw DomainError("lax_matrices: xi must be positive");
    const double x = op.x[n], xm = op.x[n - 1], xp = op.x[n + 1];
    if (x == 0.0)
        throw SingularConfiguration("lax_matrices: x_" + std::to_string(n) + " = 0");
    const double rq = std::sqrt(q);
    const double qn = std::pow(q, n);
    const double w = 1.0 - x * x;

    LaxMatrices m;
    m.variant = op.variant;
    m.n = n;
    m.q = q;
    m.U1 << 1.0, 0.0, 0.0, 0.0;
    m.U0 << x * xp, -xp, -(1.0 - xp * xp) * x, 1.0 - xp * xp;
    m.K << x, -1.0, -w, -x;
    if (op.variant == OPVariant::plain) {
        m.z_pole = xi / rq;
        m.T2 << qn * q, 0.0, 0.0, 0.0;
        m.T0 << qn * w, qn * x, qn * w * x, qn * x * x;
        m.alpha = qn * (x * x - 1.0) * (q * xp + xm) / x - rq / xi;
        m.beta = -qn * q * xp;
        m.gamma = -qn * w * xm;
        m.delta = -rq / xi;
    } else {
        m.z_pole = -xi / rq;
        m.T2 << 0.0, 0.0, 0.0, q;
        m.T0 << x * x, -x, -w * x, w;
        const double h = qn * rq / xi;
        m.alpha = h;
        m.beta = xp;
        m.gamma = q * w * xm;
        m.delta = (x * x - 1.0) * (xp + q * xm) / x + h;
    }
    m.T1 << m.alpha, m.beta, m.gamma, m.delta;
    return m;
}

LaxReport lax_checks(int n, const OPSequence& op, const std::vector<std::complex<double>>& probes)
{
    if (n + 1 > op.n_max)
        throw DomainError("lax_checks: the sequence must extend to n + 1");
    const LaxMatrices a = lax_matrices(n, op);
    const LaxMatrices b = lax_matrices(n + 1, op);
    LaxReport rep;
    rep.n = n;
    rep.det_k = a.K.determinant();
    rep.k_square_defect = (a.K * a.K - Eigen::Matrix2d::Identity()).norm();
    rep.rank_u0_defect = std::abs(a.U0.determinant());
    const double q = op.params.q();
    for (cd z : probes) {
        for (cd w : {z, 1.0 / (q * z)})
            if (std::abs(w) < 1e-12 || std::abs(w - a.z_pole) < 1e-10)
                throw DomainError("lax_checks: probe too close to a pole");
        LaxProbe pr;
        pr.z = z;
        pr.compatibility = mat_norm(a.U(q * z) * a.T(z) - b.T(z) * a.U(z));
        const Mat2 k = a.K.cast<cd>();
        pr.inversion = mat_norm(a.T(z).inverse() - std::pow(q, -n) * k * a.T(1.0 / (q * z)) * k);
        rep.probes.push_back(pr);
    }
    return rep;
}

namespace {

// C[f](z) = (1/2 pi i) oint f(w)/(w - z) dw, trapezoid rule on |w| = 1
cd cauchy_trapezoid(const std::vector<cd>& fw, const std::vector<cd>& nodes, cd z)
{
    detail::CompensatedSum<double> re, im;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const cd t = fw[k] * nodes[k] / (nodes[k] - z);
        re.add(t.real());
        im.add(t.imag());
    }
    return cd(re.value(), im.value()) / static_cast<double>(nodes.size());
}

Mat2 assemble_y(const OPSequence& op, int n, cd z, int npts)
{
    const std::vector<double>& pn = op.poly[n];
    std::vector<double> ps(op.poly[n - 1].rbegin(), op.poly[n - 1].rend());
    std::vector<cd> nodes(npts), f1(npts), f2(npts);
    const Weight w = op_weight(op.variant);
    for (int k = 0; k < npts; ++k) {
        const double th = 2.0 * std::numbers::pi * k / npts;
        const cd u = std::polar(1.0, th);
        const cd wt = weight_value(w, op.params, u) * std::pow(u, -n);
        nodes[k] = u;
        f1[k] = poly_eval(pn, u) * wt;
        f2[k] = poly_eval(ps, u) * wt;
    }
    const double k2 = op.kappa_sq[n - 1];
    Mat2 y;
    y(0, 0) = poly_eval(pn, z);
    y(0, 1) = cauchy_trapezoid(f1, nodes, z);
    y(1, 0) = -k2 * poly_eval(ps, z);
    y(1, 1) = -k2 * cauchy_trapezoid(f2, nodes, z);
    return y;
}

}  // namespace

RHPSample rhp_sample(const OPSequence& op, int n, std::complex<double> z, int quadrature_points)
{
    if (n < 1 || n > op.n_max)
        throw DomainError("rhp_sample: n must lie in 1.." + std::to_string(op.n_max));
    if (std::abs(std::abs(z) - 1.0) < 1e-3)
        throw DomainError("rhp_sample: z lies within 1e-3 of the unit circle");
    if (quadrature_points < 16)
        throw DomainError("rhp_sample: at least 16 quadrature points are required");
    int npts = quadrature_points;
    Mat2 y = assemble_y(op, n, z, npts);
    while (true) {
        if (npts > (1 << 20))
            throw NonConvergence("rhp_sample: Cauchy transforms did not stabilize");
        const Mat2 y2 = assemble_y(op, n, z, 2 * npts);
        const double diff = (y2 - y).norm();
        y = y2;
        npts *= 2;
        if (diff <= 1e-14 * std::max(1.0, y.norm()))
            break;
    }
    return {n, z, y, y.determinant(), npts};
}

RHPSample rhp_sample(OPVariant v, int n, std::complex<double> z, const QParams& p, int quadrature_points)
{
    return rhp_sample(op_sequence(v, p, n), n, z, quadrature_points);
}

Mat2 rhp_psi(const OPSequence& op, int n, std::complex<double> z)
{
    const Mat2 y = rhp_sample(op, n, z).Y;
    const cd w = weight_value(op_weight(op.variant), op.params, z);
    Mat2 left = Mat2::Identity();
    left(1, 1) = 1.0 / op.kappa_sq[n];
    Mat2 right = Mat2::Zero();
    if (op.variant == OPVariant::plain) {
        right(0, 0) = w;
        right(1, 1) = std::pow(z, n);
    } else {
        right(0, 0) = 1.0;
        right(1, 1) = std::pow(z, n) / w;
    }
    return left * y * right;
}

double rhp_infinity_defect(const OPSequence& op, int n, double radius)
{
    const cd z(radius, 0.0);
    const Mat2 y = rhp_sample(op, n, z).Y;
    Mat2 d = Mat2::Zero();
    d(0, 0) = std::pow(z, -n);
    d(1, 1) = std::pow(z, n);
    return (y * d - Mat2::Identity()).norm();
}

double rhp_jump_residual(const OPSequence& op, int n, double theta, double delta)
{
    if (!(delta >= 4e-3 && delta < 0.5))
        throw DomainError("rhp_jump_residual: delta must lie in [4e-3, 0.5)");
    const cd u = std::polar(1.0, theta);
    auto boundary = [&](double sgn) {
        Mat2 v[3];
        for (int k = 0; k < 3; ++k)
            v[k] = rhp_sample(op, n, u * (1.0 + sgn * delta / (1 << k))).Y;
        // second-order Richardson in the offset
        return Mat2((8.0 * v[2] - 6.0 * v[1] + v[0]) / 3.0);
    };
    const Mat2 yp = boundary(-1.0);  // inside the circle
    const Mat2 ym = boundary(1.0);
    Mat2 jinv = Mat2::Identity();
    jinv(0, 1) = -std::pow(u, -n) * weight_value(op_weight(op.variant), op.params, u);
    return (yp * jinv - ym).norm();
}

}  // namespace qpart
