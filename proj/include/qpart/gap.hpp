#pragma once

#include <variant>
#include <vector>

#include "qpart/qparams.hpp"

namespace qpart {

enum class SymbolVariant { I, I_check };

// c_n = I^(1)_n(2 xi q^{1/2}; q) for I, q^{n^2/2} I^(2)_n(2 xi; q) for I_check
double symbol_coefficient(SymbolVariant v, int n, const QParams& p);

struct ToeplitzResult {
    int N = 0;
    int shift = 0;
    double value = 1.0;
    SymbolVariant variant = SymbolVariant::I;
    double rcond = 1.0;             // reciprocal condition estimate of the LU factorization
    double pivot_ratio = 1.0;       // min |u_ii| / max |u_ii|
    bool numerically_singular = false;
};

// det_{1<=i,j<=N} c_{-i+j-shift}
ToeplitzResult toeplitz_det(SymbolVariant v, int N, int shift, const QParams& p);

enum class GapVariant { length, first_part };

struct GapQuery {
    GapVariant variant;
    int N;
    QParams params;
};

struct ToeplitzMethod {};
struct FredholmMethod {
    int M = 40;
};
struct EnumerationMethod {
    int max_size = 25;
};
using GapMethod = std::variant<ToeplitzMethod, FredholmMethod, EnumerationMethod>;

struct GapResult {
    double value = 0.0;
    // enumeration: unenumerated mass; fredholm: dropped diagonal mass
    double error_bound = 0.0;
    int truncation = 0;  // final section size or enumeration cutoff
};

constexpr double kFredholmDroppedMass = 1e-12;
constexpr int kFredholmMaxSection = 2000;

GapResult gap_probability(const GapQuery& query, const GapMethod& method);

// P for N = 0..N_max
std::vector<double> monotonicity_scan(GapVariant v, const QParams& p, int N_max, const GapMethod& method = ToeplitzMethod{});

}  // namespace qpart
