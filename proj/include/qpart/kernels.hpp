#pragma once

#include <functional>
#include <vector>

#include "qpart/half_integer.hpp"
#include "qpart/measures.hpp"
#include "qpart/qparams.hpp"
#include "qpart/qspecial.hpp"

namespace qpart {

using KernelFn = std::function<double(HalfInteger, HalfInteger)>;

struct SchurKernelOptions {
    int radius = 0;  // coefficient range [-radius, radius]; 0 grows it until the tails vanish
    int grid = 0;    // DFT points; 0 picks a power of two >= 8 * radius
    SeriesControl control{};
};

// K(r,s) = sum_{k in Z'_{>0}} J_{r+k} Jt_{s+k}, with J, Jt the Laurent coefficients of
// exp(sum t_n z^n - sum tt_n z^-n) and of the same with t and tt exchanged.
class SchurKernel {
public:
    SchurKernel(const MiwaTimes& t, const MiwaTimes& tt, SchurKernelOptions opts = {});

    double operator()(HalfInteger r, HalfInteger s) const;
    const KernelTable& j() const { return j_; }
    const KernelTable& j_tilde() const { return jt_; }

private:
    KernelTable j_;
    KernelTable jt_;
};

double schur_kernel(const MiwaTimes& t, const MiwaTimes& tt, HalfInteger r, HalfInteger s,
                    SchurKernelOptions opts = {});

// Christoffel-Darboux form built on J_n = J^(3)_n(2 xi; q) from the power series.
class QBesselKernel {
public:
    explicit QBesselKernel(const QParams& p, int radius = 96);

    double J(int n) const;
    double operator()(HalfInteger r, HalfInteger s) const;
    // q^r sum_{k in Z'_{>0}} q^k J_{r+k}^2
    double diagonal(HalfInteger r) const;
    // 1 - K(r,r) = sum_{n <= r-1/2} q^n J_n^2, summed directly
    double hole_diagonal(HalfInteger r) const;
    const QParams& params() const { return p_; }

private:
    QParams p_;
    KernelTable table_;
};

double q_bessel_kernel(const QParams& p, HalfInteger r, HalfInteger s);

class DiscreteBesselKernel {
public:
    explicit DiscreteBesselKernel(double eta);
    double operator()(HalfInteger r, HalfInteger s) const;
    double diagonal(HalfInteger r) const;

private:
    double J(int n) const;
    // sum_{n >= a} J_n(2 eta)^2 for a >= 0
    double tail_square_sum(int a) const;
    double eta_;
};

double discrete_bessel_kernel(double eta, HalfInteger r, HalfInteger s);

// Correlation kernel of a determinantal measure (every kind except fixed-size Plancherel).
KernelFn make_kernel(const MeasureKind& kind);

double correlation(const KernelFn& k, const std::vector<HalfInteger>& points);
double correlation(const MeasureKind& kind, const std::vector<HalfInteger>& points);

struct AiryValues {
    double ai;
    double aip;
};

// Ai and Ai' on |x| <= 8.
AiryValues airy(double x);
double airy_kernel(double x, double y);

class LimitShape {
public:
    explicit LimitShape(double xi);

    double xi() const { return xi_; }
    double a() const { return a_; }
    double b() const { return b_; }
    double alpha0() const { return alpha0_; }
    double beta0() const { return beta0_; }
    double rho(double x) const;
    double omega(double x) const;

private:
    double xi_, a_, b_, alpha0_, beta0_;
};

LimitShape limit_shape(double xi);

enum class ScalingKind { bulk_sine, edge_airy };

struct ScalingRow {
    double q;
    int r_twice;
    int s_twice;
    double measured;
    double target;
    double deviation;
};

struct ScalingReport {
    ScalingKind kind;
    double xi;
    std::vector<ScalingRow> rows;
    bool monotone_decreasing;
};

// K at the half-integers nearest x/eps and x/eps + offset (q = e^{-eps}), against the sine kernel.
ScalingReport scaling_probe_bulk(double xi, double x, int offset, const std::vector<double>& q_schedule);
// s K(r,r') with s = (beta0/eps)^{1/3}, r and r' nearest alpha0/eps + s x and alpha0/eps + s y,
// against K_Ai at the rescaled positions actually probed.
ScalingReport scaling_probe_edge(double xi, double x, double y, const std::vector<double>& q_schedule);

}  // namespace qpart
