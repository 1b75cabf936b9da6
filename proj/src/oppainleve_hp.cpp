// Determinant data and forward recurrences evaluated in extended binary floating point.
#include <cmath>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "qpart/errors.hpp"
#include "qpart/oppainleve.hpp"

namespace qpart {

namespace {

namespace mp = boost::multiprecision;
using HP = mp::number<mp::cpp_bin_float<300>, mp::et_off>;
using HPMatrix = Eigen::Matrix<HP, Eigen::Dynamic, Eigen::Dynamic>;

const HP& hp_eps()
{
    static const HP e = std::numeric_limits<HP>::epsilon();
    return e;
}

// c_k for k >= 0 (the symbols are even in k)
std::vector<HP> hp_moments(OPVariant v, const QParams& p, int k_max)
{
    const HP q = p.q();
    const HP xi = p.xi();
    const HP a = v == OPVariant::plain ? xi * mp::sqrt(q) : xi;
    std::vector<HP> qp(1, HP(1));  // (q;q)_j
    auto qpoch = [&](int j) -> const HP& {
        while (static_cast<int>(qp.size()) <= j)
            qp.push_back(qp.back() * (1 - mp::pow(q, static_cast<int>(qp.size()))));
        return qp[j];
    };
    std::vector<HP> c(k_max + 1);
    for (int k = 0; k <= k_max; ++k) {
        HP sum = 0;
        for (int m = 0; m < 5000; ++m) {
            HP term = mp::pow(a, k + 2 * m) / (qpoch(m) * qpoch(k + m));
            if (v == OPVariant::check)
                term *= mp::pow(q, m * (m - 1) + (k + 1) * m);
            sum += term;
            if (term == 0 || (m > 0 && term < hp_eps() * sum))
                break;
            if (m == 4999)
                throw NonConvergence("moment series did not converge");
        }
        if (v == OPVariant::check)
            sum *= mp::pow(q, k * k) == 0 ? HP(0) : mp::sqrt(mp::pow(q, k * k));
        c[k] = sum;
    }
    return c;
}

HP hp_toeplitz(const std::vector<HP>& c, int n, int shift)
{
    if (n == 0)
        return HP(1);
    HPMatrix m(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m(i - 1, j - 1) = c[std::abs(-i + j - shift)];
    return m.partialPivLu().determinant();
}

struct HPData {
    std::vector<HP> z0;  // Z_n, n = 0..n_max + 2
    std::vector<HP> x;   // x_n, n = 0..n_max + 1
};

HPData hp_data(OPVariant v, const QParams& p, int n_max)
{
    if (n_max < 0 || n_max > kMaxOPIndex)
        throw DomainError("op_sequence: n_max must lie in 0.." + std::to_string(kMaxOPIndex));
    const auto c = hp_moments(v, p, n_max + 3);
    HPData d;
    for (int n = 0; n <= n_max + 2; ++n) {
        d.z0.push_back(hp_toeplitz(c, n, 0));
        if (!(d.z0.back() > 0))
            throw SingularConfiguration("Toeplitz determinant Z_" + std::to_string(n) + " is not positive");
    }
    for (int n = 0; n <= n_max + 1; ++n) {
        HP z1 = hp_toeplitz(c, n, 1);
        d.x.push_back((n % 2 == 0 ? z1 : -z1) / d.z0[n]);
    }
    return d;
}

}  // namespace

OPSequence op_sequence(OPVariant v, const QParams& p, int n_max)
{
    const HPData d = hp_data(v, p, n_max);
    OPSequence op{v, p, n_max, {}, {}, {}, {}, {}};
    for (int n = 0; n <= n_max; ++n)
        op.kappa_sq.push_back(static_cast<double>(d.z0[n] / d.z0[n + 1]));
    for (int n = 0; n <= n_max + 1; ++n)
        op.x.push_back(static_cast<double>(d.x[n]));
    for (int n = 0; n <= n_max + 2; ++n)
        op.log_z.push_back(static_cast<double>(mp::log(d.z0[n])));
    op.zx_ratio.push_back(0.0);
    for (int n = 1; n <= n_max + 1; ++n)
        op.zx_ratio.push_back(static_cast<double>(d.z0[n + 1] * d.z0[n - 1] / (d.z0[n] * d.z0[n])));
    // Szego recursion pi_{n+1}(z) = z pi_n(z) + x_{n+1} pi_n^*(z)
    std::vector<HP> cur{HP(1)};
    op.poly.push_back({1.0});
    for (int n = 0; n <= n_max; ++n) {
        std::vector<HP> next(n + 2, HP(0));
        for (int k = 0; k <= n; ++k) {
            next[k + 1] += cur[k];
            next[k] += d.x[n + 1] * cur[n - k];
        }
        cur = std::move(next);
        std::vector<double> out;
        for (const HP& c : cur)
            out.push_back(static_cast<double>(c));
        op.poly.push_back(std::move(out));
    }
    return op;
}

PainleveState painleve_trajectory(PainleveBranch b, PainleveSource s, const QParams& p, int n_max)
{
    if (!(p.xi() > 0.0))
        throw DomainError("painleve_trajectory: xi must be positive");
    if (n_max < 1)
        throw DomainError("painleve_trajectory: n_max must be at least 1");
    const OPVariant v = b == PainleveBranch::x ? OPVariant::plain : OPVariant::check;
    const HPData d = hp_data(v, p, s == PainleveSource::determinant ? n_max : 1);
    const HP q = p.q();
    const HP xi = p.xi();
    const HP rxi = mp::sqrt(xi);
    const HP rq = mp::sqrt(q);
    // v_n from determinants: x-branch xi^{1/2} q^{n/2} x_n, y-branch xi^{1/2} q^{-n/2} y_n
    auto from_det = [&](int n) {
        return b == PainleveBranch::x ? rxi * mp::pow(rq, n) * d.x[n] : rxi * d.x[n] / mp::pow(rq, n);
    };
    std::vector<HP> val;
    if (s == PainleveSource::determinant) {
        for (int n = 0; n <= n_max; ++n)
            val.push_back(from_det(n));
    } else {
        val.push_back(rxi);
        val.push_back(from_det(1));
        const HP tiny = mp::pow(HP(10), -250);
        for (int n = 1; n < n_max; ++n) {
            const HP vn = val[n];
            const HP v2 = vn * vn;
            if (mp::abs(vn) < tiny)
                throw SingularConfiguration("q-P_V recurrence: value vanishes at n = " + std::to_string(n));
            if (b == PainleveBranch::x) {
                const HP rhs = (v2 - xi) * (v2 - 1 / xi) / (1 - v2 / (xi * mp::pow(q, n)));
                const HP prev = val[n - 1] * vn - 1;
                if (mp::abs(prev) < tiny)
                    throw SingularConfiguration("q-P_V recurrence: x_{n-1} x_n = 1 at n = " + std::to_string(n));
                val.push_back((1 + rhs / prev) / vn);
            } else {
                // S_n = -u_n^2, P_n = -u_n u_{n+1}
                const HP sn = -v2;
                const HP rhs = (sn + xi) * (sn + 1 / xi) / (1 + mp::pow(q, n) * sn / xi);
                const HP pprev = -val[n - 1] * vn - 1;
                if (mp::abs(pprev) < tiny)
                    throw SingularConfiguration("q-P_V recurrence: y_{n-1} y_n = 1 at n = " + std::to_string(n));
                const HP pn = 1 + rhs / pprev;
                val.push_back(-pn / vn);
            }
        }
    }
    PainleveState st{b, s, p, n_max, {}};
    for (const HP& x : val)
        st.values.push_back(static_cast<double>(x));
    return st;
}

std::vector<TauRow> tau_relation_check(OPVariant v, const QParams& p, int n_from, int n_to)
{
    if (n_from < 1 || n_to < n_from)
        throw DomainError("tau_relation_check: need 1 <= n_from <= n_to");
    const HPData d = hp_data(v, p, n_to);
    std::vector<TauRow> rows;
    for (int n = n_from; n <= n_to; ++n) {
        // log Z_n rounded to binary64 first, as a consumer of the tabulated values would
        const double l0 = static_cast<double>(mp::log(d.z0[n - 1]));
        const double l1 = static_cast<double>(mp::log(d.z0[n]));
        const double l2 = static_cast<double>(mp::log(d.z0[n + 1]));
        const double xn = static_cast<double>(d.x[n]);
        rows.push_back({n, (l2 - 2.0 * l1 + l0) - std::log1p(-xn * xn)});
    }
    return rows;
}

}  // namespace qpart
