#include "qpart/measures.hpp"

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "qpart/errors.hpp"
#include "qpart/qspecial.hpp"
#include "summation.hpp"

namespace qpart {

MiwaTimes MiwaTimes::finite(std::vector<double> t)
{
    if (t.empty())
        throw DomainError("MiwaTimes: at least one time is required");
    return MiwaTimes(Kind::finite, std::move(t), 0.0, 0.0);
}

MiwaTimes MiwaTimes::principal(double xi, double q)
{
    QParams check(q, xi);
    return MiwaTimes(Kind::principal, {}, xi, q);
}

MiwaTimes MiwaTimes::delta(double c)
{
    return MiwaTimes(Kind::delta, {c}, 0.0, 0.0);
}

double MiwaTimes::t(int n) const
{
    if (n < 1)
        return 0.0;
    switch (kind_) {
    case Kind::finite: return n <= static_cast<int>(t_.size()) ? t_[n - 1] : 0.0;
    case Kind::delta: return n == 1 ? t_[0] : 0.0;
    default: return std::pow(xi_ * std::sqrt(q_), n) / (n * (1.0 - std::pow(q_, n)));
    }
}

std::complex<double> MiwaTimes::series(std::complex<double> z, const SeriesControl& ctl) const
{
    if (kind_ != Kind::principal) {
        std::complex<double> s = 0.0;
        std::complex<double> zn = 1.0;
        const int k = kind_ == Kind::delta ? 1 : static_cast<int>(t_.size());
        for (int n = 1; n <= k; ++n) {
            zn *= z;
            s += t(n) * zn;
        }
        return s;
    }
    const double a = xi_ * std::sqrt(q_);
    const double az = a * std::abs(z);
    if (az >= 1.0)
        throw DomainError("MiwaTimes::series: outside the disc of convergence");
    std::complex<double> s = 0.0;
    std::complex<double> w = 1.0;
    double qn = 1.0;
    for (int n = 1; n <= ctl.max_terms; ++n) {
        w *= a * z;
        qn *= q_;
        const std::complex<double> term = w / (n * (1.0 - qn));
        s += term;
        if (std::abs(term) * az / (1.0 - az) <= ctl.tail_tol * std::max(std::abs(s), 1e-300) || term == 0.0)
            return s;
    }
    throw NonConvergence("MiwaTimes::series: max_terms reached");
}

std::vector<double> MiwaTimes::complete_homogeneous(int k) const
{
    std::vector<double> h(k + 1, 0.0);
    h[0] = 1.0;
    for (int m = 1; m <= k; ++m) {
        detail::CompensatedSum<double> s;
        for (int n = 1; n <= m; ++n)
            s.add(n * t(n) * h[m - n]);
        h[m] = s.value() / m;
    }
    return h;
}

double schur_normalization(const MiwaTimes& t, const MiwaTimes& tt, const SeriesControl& ctl)
{
    int bound = ctl.max_terms;
    if (t.order() > 0)
        bound = std::min(bound, t.order());
    if (tt.order() > 0)
        bound = std::min(bound, tt.order());
    detail::CompensatedSum<double> s;
    int small = 0;
    for (int n = 1; n <= bound; ++n) {
        const double term = n * t.t(n) * tt.t(n);
        s.add(term);
        if (t.order() == 0 && tt.order() == 0) {
            if (std::abs(term) <= ctl.tail_tol * std::abs(s.value())) {
                if (++small >= 3)
                    return std::exp(s.value());
            } else {
                small = 0;
            }
            if (n == ctl.max_terms)
                throw NonConvergence("schur_normalization: max_terms reached");
        }
    }
    return std::exp(s.value());
}

double schur_value(const Partition& lambda, const MiwaTimes& t)
{
    const int l = lambda.length();
    if (l == 0)
        return 1.0;
    const auto h = t.complete_homogeneous(lambda.part(1) + l);
    Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> m(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            const int idx = lambda.part(i + 1) - (i + 1) + (j + 1);
            m(i, j) = idx < 0 ? 0.0L : static_cast<long double>(h[idx]);
        }
    return static_cast<double>(m.partialPivLu().determinant());
}

std::vector<int> hook_lengths(const Partition& lambda)
{
    std::vector<int> col(lambda.part(1), 0);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j)
            ++col[j];
    std::vector<int> out;
    out.reserve(lambda.size());
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            out.push_back(lambda.part(i) + col[j - 1] - i - j + 1);
    return out;
}

double mixed_normalization(const QParams& p)
{
    return std::exp(-p.xi() * p.xi() / (1.0 - p.q()));
}

boost::multiprecision::cpp_rational plancherel_exact(const Partition& lambda)
{
    const BigInt d = dimension(lambda);
    BigInt fact = 1;
    for (int k = 2; k <= lambda.size(); ++k)
        fact *= k;
    return boost::multiprecision::cpp_rational(d * d, fact);
}

namespace {

struct MeasureEval {
    const Partition& lambda;

    double operator()(const Plancherel& k) const
    {
        if (lambda.size() != k.n)
            throw DomainError("Plancherel(" + std::to_string(k.n) + ") evaluated at a partition of size " +
                              std::to_string(lambda.size()));
        return static_cast<double>(plancherel_exact(lambda));
    }
    double operator()(const PoissonizedPlancherel& k) const
    {
        double v = std::exp(-k.eta * k.eta);
        for (int h : hook_lengths(lambda))
            v *= (k.eta / h) * (k.eta / h);
        return v;
    }
    double operator()(const QppSquared& k) const
    {
        const double q = k.params.q();
        const double xi = k.params.xi();
        double v = std::pow(xi * xi * q, lambda.size()) * std::pow(q, 2.0 * b_of(lambda)) / macmahon(k.params);
        for (int h : hook_lengths(lambda)) {
            const double d = 1.0 - std::pow(q, h);
            v /= d * d;
        }
        return v;
    }
    double operator()(const QppMixed& k) const
    {
        const double q = k.params.q();
        const double xi = k.params.xi();
        double v = mixed_normalization(k.params) * std::pow(xi * xi, lambda.size()) *
                   std::pow(q, static_cast<double>(b_of(lambda)));
        for (int h : hook_lengths(lambda))
            v /= h * (1.0 - std::pow(q, h));
        return v;
    }
    double operator()(const SchurMeasure& k) const
    {
        return schur_value(lambda, k.t) * schur_value(lambda, k.tt) / schur_normalization(k.t, k.tt, k.control);
    }
};

}  // namespace

double measure(const MeasureKind& kind, const Partition& lambda)
{
    return std::visit(MeasureEval{lambda}, kind);
}

double normalization_partial_sum(const MeasureKind& kind, int max_size)
{
    if (max_size > kMaxNormalizationSize)
        throw LimitExceeded("normalization_partial_sum: max_size above " + std::to_string(kMaxNormalizationSize));
    const auto* pl = std::get_if<Plancherel>(&kind);
    detail::CompensatedSum<double> s;
    enumerate_partitions(max_size, [&](const Partition& p) {
        if (pl && p.size() != pl->n)
            return;
        s.add(measure(kind, p));
    });
    return s.value();
}

std::vector<QLimitRow> q_limit_check(const Partition& lambda, double eta, const std::vector<double>& q_schedule)
{
    for (std::size_t i = 1; i < q_schedule.size(); ++i)
        if (!(q_schedule[i] > q_schedule[i - 1]))
            throw DomainError("q_limit_check: schedule must increase");
    SeriesControl ctl;
    ctl.max_terms = 1000000;
    std::vector<QLimitRow> rows;
    const double pp = measure(PoissonizedPlancherel{eta}, lambda);
    for (double q : q_schedule) {
        QLimitRow r{q, 0, 0, pp};
        r.squared = measure(QppSquared{QParams(q, (1.0 - q) * eta, ctl)}, lambda);
        r.mixed = measure(QppMixed{QParams(q, std::sqrt(1.0 - q) * eta, ctl)}, lambda);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace qpart
