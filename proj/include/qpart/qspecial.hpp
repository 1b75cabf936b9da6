#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "qpart/qparams.hpp"

namespace qpart {

// (x;q)_n for finite n >= 0.
double q_pochhammer(double x, double q, int n);
// (x;q)_inf
double q_pochhammer_inf(double x, double q, const SeriesControl& ctl = {});
std::complex<double> q_pochhammer_inf(std::complex<double> x, double q, const SeriesControl& ctl = {});

struct HypergeometricSpec {
    std::vector<double> upper;
    std::vector<double> lower;
    double q = 0.0;
    double x = 0.0;
};

// r phi s (a; b; q, x) including the ((-1)^n q^{n(n-1)/2})^{1+s-r} factor.
double basic_hypergeometric(const HypergeometricSpec& spec, const SeriesControl& ctl = {});

// M(xi;q) = prod_{n>=1} (1 - xi^2 q^n)^{-n}
double macmahon(const QParams& p);
// exp(sum_n xi^{2n} / (n (q^{n/2} - q^{-n/2})^2))
double macmahon_exponential(const QParams& p);
// Coefficients of prod_{n>=1} (1 - q^n)^{-n} up to q^{n_max}: plane partition counts.
std::vector<std::uint64_t> macmahon_series_coefficients(int n_max);

// J^{(kind)}_nu(x;q), kind in {1,2,3}. Integer nu of any sign is summed from the
// power series directly; non-integer nu uses the hypergeometric definition (x > 0).
double q_bessel(int kind, double nu, double x, double q, const SeriesControl& ctl = {});

enum class ModifiedRoute {
    automatic,       // positive power series where it converges
    power_series,    // rotation of the J series: all terms positive
    hypergeometric,  // the 1phi1 representation
};

// I^{(kind)}_nu(x;q), kind in {1,2}, integer nu.
double modified_q_bessel(int kind, int nu, double x, double q, const SeriesControl& ctl = {},
                         ModifiedRoute route = ModifiedRoute::automatic);

enum class Weight {
    I,        // 1 / (xi q^{1/2} z, xi q^{1/2} / z; q)_inf
    I_check,  // (-xi q^{1/2} z, -xi q^{1/2} / z; q)_inf
    J_gen,    // (xi q^{1/2} / z; q)_inf / (xi q^{1/2} z; q)_inf
};

std::complex<double> weight_value(Weight w, const QParams& p, std::complex<double> z);

enum class Family { I, I_check, J_gen, J_schur, J_tilde_schur, J3_qbessel };

// Immutable table of integer-indexed coefficients c_n, n_min <= n <= n_max.
class KernelTable {
public:
    KernelTable(Family family, int n_min, std::vector<double> coeffs, bool aliasing_warning = false);

    Family family() const { return family_; }
    int n_min() const { return n_min_; }
    int n_max() const { return n_min_ + static_cast<int>(coeffs_.size()) - 1; }
    bool contains(int n) const { return n >= n_min() && n <= n_max(); }
    // zero outside the stored range
    double at(int n) const { return contains(n) ? coeffs_[n - n_min_] : 0.0; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    bool aliasing_warning() const { return aliasing_warning_; }

private:
    Family family_;
    int n_min_;
    std::vector<double> coeffs_;
    bool aliasing_warning_;
};

// Real Fourier coefficients (1/2pi) int f(e^{it}) e^{-int} dt on a uniform grid.
// Values below 1e-300 are flushed to zero.
std::vector<double> circle_coefficients(const std::function<std::complex<double>(std::complex<double>)>& f,
                                        int n_min, int n_max, int grid);

KernelTable fourier_coefficients(Weight w, const QParams& p, int n_min, int n_max, int grid = 512);

}  // namespace qpart
