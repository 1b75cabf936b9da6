#include "qpart/qspecial.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qpart/errors.hpp"
#include "summation.hpp"

namespace qpart {

namespace {

void require_q(double q)
{
    if (!(std::abs(q) < 1.0))
        throw DomainError("|q| < 1 required (got q = " + std::to_string(q) + ")");
}

bool is_integer(double nu)
{
    return std::abs(nu) < 1e9 && nu == std::round(nu);
}

// sum_{m >= max(0,-n)} s^m q^{E(m)} (x/2)^{n+2m} / ((q;q)_m (q;q)_{n+m})
// with E(m) = c2 m(m-1)/2 + c1 m. Covers J^(1,2,3) and I^(1,2) at integer order.
double bessel_power_series(int n, double x, double q, double sign, double c2, double c1,
                           const SeriesControl& ctl)
{
    const int m0 = n < 0 ? -n : 0;
    const double h = 0.5 * x;
    const double h2 = h * h;
    const double e0 = c2 * 0.5 * m0 * (m0 - 1.0) + c1 * m0;
    double term = std::pow(sign, m0) * std::pow(q, e0) * std::pow(h, n + 2 * m0) /
                  (q_pochhammer(q, q, m0) * q_pochhammer(q, q, n + m0));
    detail::CompensatedSum<double> sum;
    sum.add(term);
    if (term == 0.0)
        return 0.0;
    int small = 0;
    for (int m = m0; m < m0 + ctl.max_terms; ++m) {
        const double de = c2 * m + c1;
        const double qm1 = std::pow(q, m + 1.0);
        const double qnm1 = std::pow(q, n + m + 1.0);
        const double ratio = sign * std::pow(q, de) * h2 / ((1.0 - qm1) * (1.0 - qnm1));
        term *= ratio;
        sum.add(term);
        if (term == 0.0)
            return sum.value();
        if (std::abs(term) <= ctl.tail_tol * std::abs(sum.value()) && std::abs(ratio) < 1.0) {
            if (++small >= 2)
                return sum.value();
        } else {
            small = 0;
        }
    }
    throw NonConvergence("q-Bessel power series did not converge at order " + std::to_string(n));
}

}  // namespace

double q_pochhammer(double x, double q, int n)
{
    if (n < 0)
        throw DomainError("q_pochhammer: n must be nonnegative");
    double p = 1.0;
    double xk = x;
    for (int k = 0; k < n; ++k) {
        p *= 1.0 - xk;
        xk *= q;
    }
    return p;
}

double q_pochhammer_inf(double x, double q, const SeriesControl& ctl)
{
    require_q(q);
    double p = 1.0;
    double xk = x;
    for (int k = 0; k < ctl.max_terms; ++k) {
        if (std::abs(xk) < ctl.tail_tol)
            return p;
        p *= 1.0 - xk;
        xk *= q;
    }
    if (std::abs(xk) < ctl.tail_tol)
        return p;
    throw NonConvergence("q_pochhammer_inf: max_terms reached");
}

std::complex<double> q_pochhammer_inf(std::complex<double> x, double q, const SeriesControl& ctl)
{
    require_q(q);
    std::complex<double> p = 1.0;
    std::complex<double> xk = x;
    for (int k = 0; k < ctl.max_terms; ++k) {
        if (std::abs(xk) < ctl.tail_tol)
            return p;
        p *= 1.0 - xk;
        xk *= q;
    }
    if (std::abs(xk) < ctl.tail_tol)
        return p;
    throw NonConvergence("q_pochhammer_inf: max_terms reached");
}

double basic_hypergeometric(const HypergeometricSpec& spec, const SeriesControl& ctl)
{
    ctl.validate();
    require_q(spec.q);
    const double q = spec.q;
    for (double b : spec.lower) {
        double bq = b;
        for (int m = 0; m <= ctl.max_terms; ++m) {
            if (std::abs(1.0 - bq) < 1e-14)
                throw DomainError("basic_hypergeometric: lower parameter " + std::to_string(b) +
                                  " equals q^-" + std::to_string(m));
            if (std::abs(bq) < 0.5)
                break;
            bq *= q;
        }
    }
    const int e = 1 + static_cast<int>(spec.lower.size()) - static_cast<int>(spec.upper.size());
    detail::CompensatedSum<double> sum;
    double term = 1.0;
    sum.add(term);
    double qn = 1.0;
    int small = 0;
    for (int n = 0; n < ctl.max_terms; ++n) {
        double ratio = spec.x;
        for (double a : spec.upper)
            ratio *= 1.0 - a * qn;
        for (double b : spec.lower)
            ratio /= 1.0 - b * qn;
        ratio /= 1.0 - qn * q;
        if (e != 0)
            ratio *= std::pow(-qn, e);
        term *= ratio;
        if (!std::isfinite(term))
            throw NonConvergence("basic_hypergeometric: terms overflow");
        if (term == 0.0)
            return sum.value();
        sum.add(term);
        if (std::abs(term) <= ctl.tail_tol * std::abs(sum.value())) {
            if (++small >= 2)
                return sum.value();
        } else {
            small = 0;
        }
        qn *= q;
    }
    throw NonConvergence("basic_hypergeometric: max_terms reached");
}

double macmahon(const QParams& p)
{
    const double q = p.q();
    const double xi2 = p.xi() * p.xi();
    detail::CompensatedSum<double> s;
    double qn = 1.0;
    for (int n = 1; n <= p.max_terms(); ++n) {
        qn *= q;
        const double f = xi2 * qn;
        if (f == 0.0)
            return std::exp(s.value());
        const double term = -n * std::log1p(-f);
        s.add(term);
        const double rr = q * (n + 1.0) / n;
        if (rr < 1.0 && term * rr / (1.0 - rr) < p.tail_tol() * s.value())
            return std::exp(s.value());
    }
    throw NonConvergence("macmahon: max_terms reached");
}

double macmahon_exponential(const QParams& p)
{
    const double q = p.q();
    const double xi2 = p.xi() * p.xi();
    const double r = xi2 * q;
    detail::CompensatedSum<double> s;
    double xin = 1.0;
    double qn = 1.0;
    for (int n = 1; n <= p.max_terms(); ++n) {
        xin *= xi2;
        qn *= q;
        const double d = 1.0 - qn;
        const double term = xin * qn / (n * d * d);
        s.add(term);
        if (term == 0.0 || term * r / (1.0 - r) < p.tail_tol() * s.value())
            return std::exp(s.value());
    }
    throw NonConvergence("macmahon_exponential: max_terms reached");
}

std::vector<std::uint64_t> macmahon_series_coefficients(int n_max)
{
    if (n_max < 0)
        throw DomainError("macmahon_series_coefficients: n_max must be nonnegative");
    std::vector<std::uint64_t> c(n_max + 1, 0);
    c[0] = 1;
    // multiply by 1/(1-q^n), n times
    for (int n = 1; n <= n_max; ++n)
        for (int rep = 0; rep < n; ++rep)
            for (int k = n; k <= n_max; ++k)
                c[k] += c[k - n];
    return c;
}

double q_bessel(int kind, double nu, double x, double q, const SeriesControl& ctl)
{
    require_q(q);
    if (kind < 1 || kind > 3)
        throw DomainError("q_bessel: kind must be 1, 2 or 3");
    if (kind == 1 && !(std::abs(x) < 2.0))
        throw DomainError("q_bessel: kind 1 requires |x| < 2");
    if (is_integer(nu)) {
        const int n = static_cast<int>(nu);
        switch (kind) {
        case 1: return bessel_power_series(n, x, q, -1.0, 0.0, 0.0, ctl);
        case 2: return bessel_power_series(n, x, q, -1.0, 2.0, n + 1.0, ctl);
        default: return bessel_power_series(n, x, q, -1.0, 1.0, 1.0, ctl);
        }
    }
    if (!(x > 0.0))
        throw DomainError("q_bessel: non-integer order needs x > 0");
    const double b = std::pow(q, nu + 1.0);
    const double pre = q_pochhammer_inf(b, q, ctl) / q_pochhammer_inf(q, q, ctl) * std::pow(0.5 * x, nu);
    HypergeometricSpec s;
    s.q = q;
    s.lower = {b};
    switch (kind) {
    case 1:
        s.upper = {0.0, 0.0};
        s.x = -0.25 * x * x;
        break;
    case 2:
        s.x = -0.25 * x * x * b;
        break;
    default:
        s.upper = {0.0};
        s.x = 0.25 * q * x * x;
        break;
    }
    return pre * basic_hypergeometric(s, ctl);
}

double modified_q_bessel(int kind, int nu, double x, double q, const SeriesControl& ctl, ModifiedRoute route)
{
    require_q(q);
    if (kind != 1 && kind != 2)
        throw DomainError("modified_q_bessel: kind must be 1 or 2");
    if (route == ModifiedRoute::automatic)
        route = (kind == 2 || std::abs(x) < 2.0) ? ModifiedRoute::power_series : ModifiedRoute::hypergeometric;
    if (route == ModifiedRoute::power_series) {
        if (kind == 1) {
            if (!(std::abs(x) < 2.0))
                throw DomainError("modified_q_bessel: kind 1 power series needs |x| < 2");
            return bessel_power_series(nu, x, q, 1.0, 0.0, 0.0, ctl);
        }
        return bessel_power_series(nu, x, q, 1.0, 2.0, nu + 1.0, ctl);
    }
    const double y = 0.5 * x;
    HypergeometricSpec s;
    s.q = q;
    s.upper = {y * y};
    s.lower = {0.0};
    s.x = std::pow(q, nu + 1.0);
    double pre = std::pow(y, nu) / q_pochhammer_inf(q, q, ctl);
    if (kind == 1) {
        const double p = q_pochhammer_inf(y * y, q, ctl);
        if (std::abs(p) < 1e-14)
            throw SingularConfiguration("modified_q_bessel: (x^2/4;q)_inf vanishes");
        pre /= p;
    }
    return pre * basic_hypergeometric(s, ctl);
}

std::complex<double> weight_value(Weight w, const QParams& p, std::complex<double> z)
{
    const double a = p.xi() * std::sqrt(p.q());
    const auto& c = p.control();
    switch (w) {
    case Weight::I:
        return 1.0 / (q_pochhammer_inf(a * z, p.q(), c) * q_pochhammer_inf(a / z, p.q(), c));
    case Weight::I_check:
        return q_pochhammer_inf(-a * z, p.q(), c) * q_pochhammer_inf(-a / z, p.q(), c);
    default:
        return q_pochhammer_inf(a / z, p.q(), c) / q_pochhammer_inf(a * z, p.q(), c);
    }
}

KernelTable::KernelTable(Family family, int n_min, std::vector<double> coeffs, bool aliasing_warning)
    : family_(family), n_min_(n_min), coeffs_(std::move(coeffs)), aliasing_warning_(aliasing_warning)
{
    if (coeffs_.empty())
        throw DomainError("KernelTable: empty coefficient range");
}

std::vector<double> circle_coefficients(const std::function<std::complex<double>(std::complex<double>)>& f,
                                        int n_min, int n_max, int grid)
{
    if (grid < 1 || n_max < n_min)
        throw DomainError("circle_coefficients: bad grid or range");
    std::vector<std::complex<double>> tw(grid);
    std::vector<std::complex<double>> vals(grid);
    for (int k = 0; k < grid; ++k) {
        const double th = 2.0 * std::numbers::pi * k / grid;
        tw[k] = std::polar(1.0, -th);
        vals[k] = f(std::polar(1.0, th));
    }
    std::vector<double> out;
    out.reserve(n_max - n_min + 1);
    for (int n = n_min; n <= n_max; ++n) {
        const long long nm = ((static_cast<long long>(n) % grid) + grid) % grid;
        detail::CompensatedSum<double> re;
        for (int k = 0; k < grid; ++k) {
            const int idx = static_cast<int>((nm * k) % grid);
            re.add((vals[k] * tw[idx]).real());
        }
        double c = re.value() / grid;
        if (std::abs(c) < 1e-300)
            c = 0.0;
        out.push_back(c);
    }
    return out;
}

KernelTable fourier_coefficients(Weight w, const QParams& p, int n_min, int n_max, int grid)
{
    const bool warn = grid < 4 * (std::abs(n_min) + std::abs(n_max) + 1);
    auto coeffs = circle_coefficients([&](std::complex<double> z) { return weight_value(w, p, z); },
                                      n_min, n_max, grid);
    Family fam = w == Weight::I ? Family::I : w == Weight::I_check ? Family::I_check : Family::J_gen;
    return KernelTable(fam, n_min, std::move(coeffs), warn);
}

}  // namespace qpart
