#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "qpart/errors.hpp"
#include "qpart/oppainleve.hpp"
#include "qpart/qspecial.hpp"

using namespace qpart;

namespace {

using cd = std::complex<double>;

const std::vector<cd> kProbes{{0.37, 0.21}, {2.6, 0.3}, {-1.1, 0.7}, {0.2, -1.5}, {1.3, 1.3}};

// circle moments c_k = (1/2pi) int w(e^{it}) e^{-ikt} dt by the trapezoid rule
std::vector<long double> moments(Weight w, const QParams& p, int k_max)
{
    const int pts = 2048;
    std::vector<long double> c(k_max + 1, 0.0L);
    for (int j = 0; j < pts; ++j) {
        const double t = 2.0 * std::numbers::pi * j / pts;
        const double v = weight_value(w, p, std::polar(1.0, t)).real();
        for (int k = 0; k <= k_max; ++k)
            c[k] += v * std::cos(k * t);
    }
    for (auto& x : c)
        x /= pts;
    return c;
}

// monic orthogonal polynomials by modified Gram-Schmidt on 1, z, ..., z^n with <z^i, z^j> = c_{|i-j|}
std::vector<std::vector<long double>> gram_schmidt(const std::vector<long double>& c, int n_max)
{
    auto ip = [&](const std::vector<long double>& f, const std::vector<long double>& g) {
        long double s = 0.0L;
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j)
                s += f[i] * g[j] * c[i > j ? i - j : j - i];
        return s;
    };
    std::vector<std::vector<long double>> basis;
    for (int n = 0; n <= n_max; ++n) {
        std::vector<long double> v(n + 1, 0.0L);
        v[n] = 1.0L;
        for (const auto& b : basis) {
            const long double r = ip(v, b) / ip(b, b);
            for (std::size_t i = 0; i < b.size(); ++i)
                v[i] -= r * b[i];
        }
        basis.push_back(v);
    }
    return basis;
}

double op_norm(const Mat2& m)
{
    return m.norm();
}

}  // namespace

TEST_CASE("orthogonal polynomial data from Toeplitz determinants")
{
    const QParams p(0.5, 0.3);
    for (OPVariant v : {OPVariant::plain, OPVariant::check}) {
        const OPSequence op = op_sequence(v, p, 15);
        REQUIRE(op.x.size() == 17);
        REQUIRE(op.kappa_sq.size() == 16);
        REQUIRE(op.poly.size() == 17);
        CHECK(op.x[0] == 1.0);
        const double c0 = v == OPVariant::plain ? modified_q_bessel(1, 0, 2.0 * 0.3 * std::sqrt(0.5), 0.5)
                                                 : modified_q_bessel(2, 0, 0.6, 0.5);
        CHECK(op.kappa_sq[0] == doctest::Approx(1.0 / c0).epsilon(1e-15));
        for (int n = 1; n <= 15; ++n) {
            CHECK(std::abs(op.zx_ratio[n] - op.one_minus_x_sq(n)) <= 1e-9);
            CHECK(op.one_minus_x_sq(n) > 0.0);
            CHECK(op.one_minus_x_sq(n) <= 1.0);
            CHECK(op.kappa_sq[n] > 0.0);
            CHECK(op.poly[n][0] == op.x[n]);
            CHECK(op.poly[n].back() == 1.0);
            CHECK(op.log_z[n + 1] - op.log_z[n] == doctest::Approx(-std::log(op.kappa_sq[n])).epsilon(1e-13));
        }
    }
    CHECK_THROWS_AS(op_sequence(OPVariant::plain, p, 26), DomainError);

    const OPSequence zero = op_sequence(OPVariant::plain, QParams(0.5, 0.0), 4);
    for (int n = 1; n <= 5; ++n)
        CHECK(zero.x[n] == 0.0);
    CHECK(zero.kappa_sq[3] == 1.0);
}

TEST_CASE("Gram-Schmidt oracle")
{
    const QParams p(0.5, 0.3);
    for (auto [v, w] : {std::pair{OPVariant::plain, Weight::I}, std::pair{OPVariant::check, Weight::I_check}}) {
        const OPSequence op = op_sequence(v, p, 10);
        const auto gs = gram_schmidt(moments(w, p, 12), 10);
        for (int n = 0; n <= 10; ++n) {
            CHECK(std::abs(op.x[n] - static_cast<double>(gs[n][0])) <= 1e-8);
            for (int k = 0; k <= n; ++k)
                CHECK(std::abs(op.poly[n][k] - static_cast<double>(gs[n][k])) <= 1e-8);
        }
    }
}

TEST_CASE("inner product as a residue series")
{
    const QParams p(0.5, 0.3);
    const auto c = moments(Weight::I, p, 4);
    const std::vector<double> one{1.0}, s{0.0, 1.0}, f{0.3, -1.0, 2.0};
    CHECK(inner_product_series(one, one, p) == doctest::Approx(static_cast<double>(c[0])).epsilon(1e-14));
    CHECK(inner_product_series(s, one, p) == doctest::Approx(static_cast<double>(c[1])).epsilon(1e-13));
    CHECK(inner_product_series(s, s, p) == doctest::Approx(static_cast<double>((c[0] + c[2]) / 2)).epsilon(1e-13));
    const std::vector<double> sum{1.3, 0.0, 2.0};
    const std::vector<double> a{1.0}, b{0.3, 0.0, 2.0};
    CHECK(inner_product_series(sum, f, p) ==
          doctest::Approx(inner_product_series(a, f, p) + inner_product_series(b, f, p)).epsilon(1e-13));
    CHECK(inner_product_series(f, f, p) > 0.0);
    CHECK_THROWS_AS(inner_product_series(one, one, QParams(0.5, 0.0)), DomainError);
}

TEST_CASE("q-P_V trajectories")
{
    for (double xi : {0.2, 0.3})
        for (double q : {0.4, 0.5}) {
            const QParams p(q, xi);
            for (PainleveBranch b : {PainleveBranch::x, PainleveBranch::y}) {
                const auto det = painleve_trajectory(b, PainleveSource::determinant, p, 13);
                CHECK(det.values[0] == doctest::Approx(std::sqrt(xi)).epsilon(1e-15));
                const auto res = qpv_residuals(det);
                for (int n = 1; n <= 12; ++n)
                    CHECK(res[n] <= 1e-7);
                const auto rec = painleve_trajectory(b, PainleveSource::recurrence, p, 13);
                for (int n = 0; n <= 12; ++n)
                    CHECK(std::abs(rec.values[n] - det.values[n]) <= 1e-7 * std::abs(det.values[n]));
            }
            for (OPVariant v : {OPVariant::plain, OPVariant::check}) {
                const auto r = qpv_residuals_unscaled_form(op_sequence(v, p, 12));
                for (int n = 1; n <= 12; ++n)
                    CHECK(r[n] <= 1e-12);
            }
        }
    const QParams p(0.5, 0.3);
    // the determinant and the recurrence still agree at the largest index
    const auto det = painleve_trajectory(PainleveBranch::x, PainleveSource::determinant, p, 25);
    const auto rec = painleve_trajectory(PainleveBranch::x, PainleveSource::recurrence, p, 25);
    CHECK(std::abs(rec.values[25] / det.values[25] - 1.0) <= 1e-7);
    // y-branch bilinears
    const auto y = painleve_trajectory(PainleveBranch::y, PainleveSource::determinant, p, 5);
    const OPSequence ck = op_sequence(OPVariant::check, p, 5);
    CHECK(y.y_sq(2) == doctest::Approx(-0.3 * std::pow(0.5, -2) * ck.x[2] * ck.x[2]).epsilon(1e-13));
    CHECK(y.y_prod(2) == doctest::Approx(-0.3 * std::pow(0.5, -2.5) * ck.x[2] * ck.x[3]).epsilon(1e-13));
    CHECK_THROWS_AS(painleve_trajectory(PainleveBranch::x, PainleveSource::recurrence, QParams(0.5, 0.0), 5), DomainError);
}

TEST_CASE("large-n tail")
{
    const QParams p(0.5, 0.3);
    for (PainleveBranch b : {PainleveBranch::x, PainleveBranch::y}) {
        const auto st = painleve_trajectory(b, PainleveSource::determinant, p, 16);
        const auto tc = tail_comparator(st);
        for (int n = 9; n <= 16; ++n)
            CHECK(std::abs(tc[n] - 1.0) <= std::abs(tc[n - 1] - 1.0) + 1e-15);
        CHECK(std::abs(tc[16] - 1.0) < 1e-9);
        const auto lin = linearized_tail_residuals(st);
        for (int n = 10; n < 16; ++n)
            CHECK(lin[n] < 1e-8);
    }
}

TEST_CASE("d-P_II limit")
{
    for (OPVariant v : {OPVariant::plain, OPVariant::check}) {
        const auto rows = dpii_limit_check(1.0, {0.9, 0.97, 0.99}, {1, 2, 3, 4}, v);
        REQUIRE(rows.size() == 3);
        CHECK(rows[1].max_residual < rows[0].max_residual);
        CHECK(rows[2].max_residual < rows[1].max_residual);
        CHECK(rows[2].residual[2] < rows[0].residual[2]);
    }
    CHECK_THROWS_AS(dpii_limit_check(1.0, {0.9}, {0}), DomainError);
}

TEST_CASE("Lax pair")
{
    const QParams p(0.5, 0.3);
    for (OPVariant v : {OPVariant::plain, OPVariant::check}) {
        const OPSequence op = op_sequence(v, p, 12);
        for (int n = 1; n <= 10; ++n) {
            const LaxMatrices m = lax_matrices(n, op);
            CHECK(m.U1 == Eigen::Matrix2d(Eigen::Vector2d(1.0, 0.0).asDiagonal()));
            CHECK(m.z_pole == doctest::Approx((v == OPVariant::plain ? 1.0 : -1.0) * 0.3 / std::sqrt(0.5)));
            const LaxReport r = lax_checks(n, op, kProbes);
            CHECK(std::abs(r.det_k + 1.0) <= 1e-15);
            CHECK(r.k_square_defect <= 1e-15);
            CHECK(r.rank_u0_defect <= 1e-16);
            for (const auto& pr : r.probes) {
                CHECK(pr.compatibility <= 1e-8);
                CHECK(pr.inversion <= 1e-8);
            }
        }
        const LaxMatrices m = lax_matrices(3, op);
        CHECK_THROWS_AS(lax_checks(3, op, {cd(m.z_pole, 0.0)}), DomainError);
        CHECK_THROWS_AS(lax_matrices(0, op), DomainError);
    }
}

TEST_CASE("Riemann-Hilbert matrices")
{
    const QParams p(0.5, 0.3);
    for (OPVariant v : {OPVariant::plain, OPVariant::check}) {
        const OPSequence op = op_sequence(v, p, 10);
        for (int n = 1; n <= 8; ++n) {
            const RHPSample s = rhp_sample(op, n, {2.0, 0.0});
            CHECK(std::abs(s.det_Y - 1.0) <= 1e-8);
            const Mat2 y0 = rhp_sample(op, n, {0.0, 0.0}).Y;
            CHECK(std::abs(y0(0, 0) - op.x[n]) <= 1e-8);
            CHECK(std::abs(y0(0, 1) - 1.0 / op.kappa_sq[n]) <= 1e-8);
            CHECK(std::abs(y0(1, 0) + op.kappa_sq[n - 1]) <= 1e-8);
            CHECK(std::abs(y0(1, 1) - op.x[n]) <= 1e-8);
        }
        CHECK(rhp_jump_residual(op, 3, 0.4) <= 1e-4);
        CHECK(rhp_infinity_defect(op, 3, 1e4) < rhp_infinity_defect(op, 3, 1e2) / 50.0);
        // the same sample from parameters
        const RHPSample a = rhp_sample(v, 4, {0.5, 0.2}, p);
        CHECK((a.Y - rhp_sample(op, 4, {0.5, 0.2}).Y).norm() < 1e-13);
        CHECK_THROWS_AS(rhp_sample(op, 2, {1.0005, 0.0}), DomainError);
        CHECK_THROWS_AS(rhp_sample(op, 0, {2.0, 0.0}), DomainError);

        // Psi_{n+1} = U_n Psi_n and Psi_n(qz) = T_n(z) Psi_n(z)
        const cd z(2.6, 0.3);
        for (int n = 1; n <= 6; ++n) {
            const LaxMatrices m = lax_matrices(n, op);
            const Mat2 psi = rhp_psi(op, n, z);
            CHECK(op_norm(rhp_psi(op, n + 1, z) - m.U(z) * psi) <= 1e-8 * op_norm(psi));
            CHECK(op_norm(rhp_psi(op, n, 0.5 * z) - m.T(z) * psi) <= 1e-8 * op_norm(psi));
        }
    }
}

TEST_CASE("tau relation")
{
    const QParams p(0.5, 0.3);
    for (OPVariant v : {OPVariant::plain, OPVariant::check}) {
        const auto rows = tau_relation_check(v, p, 2, 12);
        REQUIRE(rows.size() == 11);
        for (const auto& r : rows)
            CHECK(std::abs(r.residual) <= 1e-9);
    }
    CHECK_THROWS_AS(tau_relation_check(OPVariant::plain, p, 0, 3), DomainError);
}
