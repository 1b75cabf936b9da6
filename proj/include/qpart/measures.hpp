#pragma once

#include <complex>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qpart/partitions.hpp"
#include "qpart/qparams.hpp"

namespace qpart {

// Power-sum coordinates t_1, t_2, ... of a Schur specialization.
class MiwaTimes {
public:
    enum class Kind { finite, principal, delta };

    // t_n as listed, zero beyond
    static MiwaTimes finite(std::vector<double> t);
    // t_n = xi^n q^{n/2} / (n (1 - q^n))
    static MiwaTimes principal(double xi, double q);
    // t_n = c delta_{n,1}
    static MiwaTimes delta(double c);

    Kind kind() const { return kind_; }
    // truncation order K, or 0 for the infinite principal family
    int order() const { return kind_ == Kind::principal ? 0 : static_cast<int>(t_.size()); }
    double t(int n) const;
    // sum_{n>=1} t_n z^n
    std::complex<double> series(std::complex<double> z, const SeriesControl& ctl = {}) const;
    // complete homogeneous functions h_0..h_k of the specialization
    std::vector<double> complete_homogeneous(int k) const;

private:
    MiwaTimes(Kind k, std::vector<double> t, double xi, double q) : kind_(k), t_(std::move(t)), xi_(xi), q_(q) {}
    Kind kind_;
    std::vector<double> t_;
    double xi_ = 0.0;
    double q_ = 0.0;
};

// exp(sum_n n t_n tt_n)
double schur_normalization(const MiwaTimes& t, const MiwaTimes& tt, const SeriesControl& ctl = {});
// s_lambda at the specialization, by the Jacobi-Trudi determinant
double schur_value(const Partition& lambda, const MiwaTimes& t);

struct Plancherel {
    int n;
};
struct PoissonizedPlancherel {
    double eta;
};
struct QppSquared {
    QParams params;
};
struct QppMixed {
    QParams params;
};
struct SchurMeasure {
    MiwaTimes t;
    MiwaTimes tt;
    SeriesControl control{};
};
using MeasureKind = std::variant<Plancherel, PoissonizedPlancherel, QppSquared, QppMixed, SchurMeasure>;

std::vector<int> hook_lengths(const Partition& lambda);

// exp(-xi^2/(1-q)): the total mass of the unnormalized mixed weights
double mixed_normalization(const QParams& p);

double measure(const MeasureKind& kind, const Partition& lambda);
boost::multiprecision::cpp_rational plancherel_exact(const Partition& lambda);

constexpr int kMaxNormalizationSize = 40;
double normalization_partial_sum(const MeasureKind& kind, int max_size);

struct QLimitRow {
    double q;
    double squared;
    double mixed;
    double pp;
};
std::vector<QLimitRow> q_limit_check(const Partition& lambda, double eta, const std::vector<double>& q_schedule);

}  // namespace qpart
