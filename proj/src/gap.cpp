#include "qpart/gap.hpp"

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "qpart/errors.hpp"
#include "qpart/kernels.hpp"
#include "qpart/measures.hpp"
#include "qpart/partitions.hpp"
#include "qpart/qspecial.hpp"
#include "summation.hpp"

namespace qpart {

double symbol_coefficient(SymbolVariant v, int n, const QParams& p)
{
    const double q = p.q();
    if (v == SymbolVariant::I)
        return modified_q_bessel(1, n, 2.0 * p.xi() * std::sqrt(q), q, p.control());
    return std::pow(q, 0.5 * n * n) * modified_q_bessel(2, n, 2.0 * p.xi(), q, p.control());
}

ToeplitzResult toeplitz_det(SymbolVariant v, int N, int shift, const QParams& p)
{
    if (N < 0)
        throw DomainError("toeplitz_det: N must be nonnegative");
    ToeplitzResult res;
    res.N = N;
    res.shift = shift;
    res.variant = v;
    if (N == 0)
        return res;
    const int lo = -(N - 1) - shift;
    std::vector<double> c(2 * N - 1);
    for (int k = 0; k < 2 * N - 1; ++k)
        c[k] = symbol_coefficient(v, lo + k, p);
    Eigen::MatrixXd m(N, N);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            m(i - 1, j - 1) = c[(-i + j - shift) - lo];
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
    res.value = lu.determinant();
    res.rcond = lu.rcond();
    double umin = INFINITY, umax = 0.0;
    for (int i = 0; i < N; ++i) {
        const double u = std::abs(lu.matrixLU()(i, i));
        umin = std::min(umin, u);
        umax = std::max(umax, u);
    }
    res.pivot_ratio = umax > 0.0 ? umin / umax : 0.0;
    res.numerically_singular = res.pivot_ratio < 1e-14;
    return res;
}

namespace {

double det_section(const QBesselKernel& k, const std::vector<HalfInteger>& pts, bool complement)
{
    const int n = static_cast<int>(pts.size());
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double kij = k(pts[i], pts[j]);
            m(i, j) = complement ? (i == j ? 1.0 : 0.0) - kij : kij;
        }
    return m.partialPivLu().determinant();
}

double dropped_mass(const QBesselKernel& k, HalfInteger start, int step, bool holes)
{
    detail::CompensatedSum<double> sum;
    HalfInteger r = start;
    for (int it = 0; it < 100000; ++it, r = r + step) {
        const double d = holes ? k.hole_diagonal(r) : k.diagonal(r);
        sum.add(d);
        if (d <= 1e-18 * std::max(sum.value(), 1e-300) || d < 1e-300)
            return sum.value();
    }
    throw NonConvergence("dropped diagonal mass did not converge");
}

GapResult fredholm(const GapQuery& g, int M0)
{
    if (M0 < 10)
        throw DomainError("fredholm truncation M must be at least 10");
    const QBesselKernel k(g.params, g.N + 2 * M0 + 40);
    for (int M = M0; M <= kFredholmMaxSection; M *= 2) {
        std::vector<HalfInteger> pts;
        GapResult res;
        res.truncation = M;
        if (g.variant == GapVariant::first_part) {
            for (int i = 0; i < M; ++i)
                pts.push_back(HalfInteger::above(g.N + i));
            res.error_bound = dropped_mass(k, HalfInteger::above(g.N + M), 1, false);
            if (res.error_bound < kFredholmDroppedMass) {
                res.value = det_section(k, pts, true);
                return res;
            }
        } else {
            for (int i = 0; i < M; ++i)
                pts.push_back(HalfInteger::below(-g.N - i));
            res.error_bound = dropped_mass(k, HalfInteger::below(-g.N - M), -1, true);
            if (res.error_bound < kFredholmDroppedMass) {
                res.value = det_section(k, pts, false);
                return res;
            }
        }
    }
    throw LimitExceeded("fredholm: truncation too small, dropped diagonal mass above 1e-12 at M = " +
                        std::to_string(kFredholmMaxSection));
}

GapResult enumeration(const GapQuery& g, int max_size)
{
    if (max_size > kMaxNormalizationSize)
        throw LimitExceeded("enumeration: max_size above " + std::to_string(kMaxNormalizationSize));
    const MeasureKind kind = QppSquared{g.params};
    detail::CompensatedSum<double> hit, all;
    enumerate_partitions(max_size, [&](const Partition& p) {
        const double m = measure(kind, p);
        all.add(m);
        const bool ok = g.variant == GapVariant::length ? p.length() <= g.N : p.part(1) <= g.N;
        if (ok)
            hit.add(m);
    });
    GapResult res;
    res.value = hit.value();
    res.error_bound = std::max(0.0, 1.0 - all.value());
    res.truncation = max_size;
    return res;
}

}  // namespace

GapResult gap_probability(const GapQuery& query, const GapMethod& method)
{
    if (query.N < 0)
        throw DomainError("gap_probability: N must be nonnegative");
    if (const auto* f = std::get_if<FredholmMethod>(&method))
        return fredholm(query, f->M);
    if (const auto* e = std::get_if<EnumerationMethod>(&method))
        return enumeration(query, e->max_size);
    const SymbolVariant v = query.variant == GapVariant::length ? SymbolVariant::I : SymbolVariant::I_check;
    GapResult res;
    res.value = toeplitz_det(v, query.N, 0, query.params).value / macmahon(query.params);
    res.truncation = query.N;
    return res;
}

std::vector<double> monotonicity_scan(GapVariant v, const QParams& p, int N_max, const GapMethod& method)
{
    if (N_max > 40)
        throw LimitExceeded("monotonicity_scan: N_max above 40");
    std::vector<double> out;
    for (int N = 0; N <= N_max; ++N)
        out.push_back(gap_probability(GapQuery{v, N, p}, method).value);
    return out;
}

}  // namespace qpart
