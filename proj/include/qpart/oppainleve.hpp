#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qpart/qparams.hpp"

namespace qpart {

enum class OPVariant { plain, check };  // weights I and I_check

constexpr int kMaxOPIndex = 25;

// Monic orthogonal polynomials on the unit circle from Toeplitz determinants. The
// determinants are evaluated in 300-digit binary floating point and rounded on output.
struct OPSequence {
    OPVariant variant;
    QParams params;
    int n_max;
    std::vector<double> kappa_sq;     // Z_n / Z_{n+1}, n = 0..n_max
    std::vector<double> x;            // pi_n(0), n = 0..n_max + 1
    std::vector<double> log_z;        // log Z_n, n = 0..n_max + 2
    std::vector<double> zx_ratio;     // Z_{n+1} Z_{n-1} / Z_n^2, n = 1..n_max + 1 (entry 0 unused)
    std::vector<std::vector<double>> poly;  // ascending coefficients of pi_n, n = 0..n_max + 1

    double one_minus_x_sq(int n) const { return 1.0 - x[n] * x[n]; }
};

OPSequence op_sequence(OPVariant v, const QParams& p, int n_max);

// <f,g> in the variable (z + 1/z)/2 by the residue series over the nodes
// (xi q^{n+1/2} + xi^{-1} q^{-n-1/2})/2. Coefficients ascend in that variable.
double inner_product_series(const std::vector<double>& f, const std::vector<double>& g, const QParams& p);

enum class PainleveBranch { x, y };
enum class PainleveSource { recurrence, determinant };

// x-branch: values[n] = xi^{1/2} q^{n/2} x_n.
// y-branch: values[n] = u_n with y_n = i u_n, u_n = xi^{1/2} q^{-n/2} y_n; the rational identity
// is checked on the real bilinears y_n^2 = -u_n^2 and y_n y_{n+1} = -u_n u_{n+1}.
struct PainleveState {
    PainleveBranch branch;
    PainleveSource source;
    QParams params;
    int n_max;
    std::vector<double> values;  // n = 0..n_max

    double y_sq(int n) const { return -values[n] * values[n]; }
    double y_prod(int n) const { return -values[n] * values[n + 1]; }
};

PainleveState painleve_trajectory(PainleveBranch b, PainleveSource s, const QParams& p, int n_max);

// |LHS - RHS| / max(1, |RHS|) of the q-P_V relation at n = 1..n_max-1 (entry 0 unused).
std::vector<double> qpv_residuals(const PainleveState& st);
// Same relation in the x_n form before the change of variables, scaled by its largest term.
std::vector<double> qpv_residuals_unscaled_form(const OPSequence& op);
// |v_{n-1} + v_{n+1} - c_n v_n| / |v_n|, c_n = (1 - q^{-n})/xi + xi (x) or -((1 - q^n)/xi + xi) (y)
std::vector<double> linearized_tail_residuals(const PainleveState& st);
// v_n / (xi^{1/2} J^(3)_{-n}(2 xi)) for x; q^{-n/2} y_n / J^(3)_n(-2 xi) for y
std::vector<double> tail_comparator(const PainleveState& st);

struct DpiiRow {
    double q;
    std::vector<double> residual;  // indexed like n_range
    double max_residual;
};

// (v_{n-1} + v_{n+1})(1 - v_n^2) + (n/eta) v_n on determinant data at xi = (1-q) eta
std::vector<DpiiRow> dpii_limit_check(double eta, const std::vector<double>& q_schedule,
                                      const std::vector<int>& n_range, OPVariant v = OPVariant::plain);

using Mat2 = Eigen::Matrix2cd;

struct LaxMatrices {
    OPVariant variant;
    int n;
    double q;
    Eigen::Matrix2d U1, U0, T2, T1, T0, K;
    double z_pole;
    double alpha, beta, gamma, delta;

    Mat2 U(std::complex<double> z) const;
    Mat2 T(std::complex<double> z) const;
};

LaxMatrices lax_matrices(int n, const OPSequence& op);

struct LaxProbe {
    std::complex<double> z;
    double compatibility;  // ||U_n(qz) T_n(z) - T_{n+1}(z) U_n(z)||
    double inversion;      // ||T_n(z)^{-1} - q^{-n} K_n T_n(1/(qz)) K_n||
};

struct LaxReport {
    int n;
    double det_k;
    double k_square_defect;  // ||K_n^2 - 1||
    double rank_u0_defect;   // |det U_{n;0}|
    std::vector<LaxProbe> probes;
};

LaxReport lax_checks(int n, const OPSequence& op, const std::vector<std::complex<double>>& probes);

struct RHPSample {
    int n;
    std::complex<double> z;
    Mat2 Y;
    std::complex<double> det_Y;
    int quadrature_points;
};

// Y_n(z) for |z| != 1 from the polynomials and trapezoidal Cauchy transforms on the circle,
// doubling the node count from quadrature_points until stable. n >= 1.
RHPSample rhp_sample(const OPSequence& op, int n, std::complex<double> z, int quadrature_points = 2048);
RHPSample rhp_sample(OPVariant v, int n, std::complex<double> z, const QParams& p, int quadrature_points = 2048);

// diag(1, kappa_n^-2) Y_n(z) diag(I(z), z^n) for plain, diag(1, kappa_n^-2) Y_n(z) diag(1, z^n / I(z)) for check
Mat2 rhp_psi(const OPSequence& op, int n, std::complex<double> z);
// ||Y_n(z) diag(z^-n, z^n) - 1|| at z = radius
double rhp_infinity_defect(const OPSequence& op, int n, double radius);
// ||Y_+ J^{-1} - Y_-|| at e^{i theta}, boundary values by Richardson extrapolation over offsets
// delta, delta/2, delta/4 in the radial direction.
double rhp_jump_residual(const OPSequence& op, int n, double theta, double delta = 1e-2);

struct TauRow {
    int n;
    double residual;  // log Z_{n+1} - 2 log Z_n + log Z_{n-1} - log(1 - x_n^2)
};

std::vector<TauRow> tau_relation_check(OPVariant v, const QParams& p, int n_from, int n_to);

}  // namespace qpart
