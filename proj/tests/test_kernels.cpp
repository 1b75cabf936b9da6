#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include <boost/math/special_functions/airy.hpp>

#include "qpart/errors.hpp"
#include "qpart/kernels.hpp"

using namespace qpart;

namespace {

HalfInteger hi(int twice)
{
    return HalfInteger::from_twice(twice);
}

// P[S in Xi(lambda)] by enumeration with the supplied weight
struct Enumerated {
    std::vector<double> one;  // indexed by (twice + span) / 2
    std::vector<double> two;
    double mass = 0.0;
    int span;
};

Enumerated enumerate(const MeasureKind& kind, int max_size, int span)
{
    const int np = span + 1;
    Enumerated e{std::vector<double>(np, 0.0), std::vector<double>(np * np, 0.0), 0.0, span};
    enumerate_partitions(max_size, [&](const Partition& l) {
        const double m = measure(kind, l);
        e.mass += m;
        std::vector<int> in;
        for (int i = 1; i <= l.length() + span; ++i) {
            const int t = 2 * (l.part(i) - i) + 1;
            if (t >= -span && t <= span)
                in.push_back((t + span) / 2);
        }
        for (std::size_t a = 0; a < in.size(); ++a) {
            e.one[in[a]] += m;
            for (std::size_t b = 0; b < in.size(); ++b)
                if (a != b)
                    e.two[in[a] * np + in[b]] += m;
        }
    });
    return e;
}

}  // namespace

TEST_CASE("Schur kernel equals the q-Bessel kernel for the squared measure")
{
    const QParams p(0.5, 0.3);
    const auto t = MiwaTimes::principal(0.3, 0.5);
    const SchurKernel sk(t, t);
    const QBesselKernel qk(p);
    double d = 0.0;
    for (int a = -15; a <= 15; a += 2)
        for (int b = -15; b <= 15; b += 2)
            d = std::max(d, std::abs(sk(hi(a), hi(b)) - qk(hi(a), hi(b))));
    CHECK(d <= 1e-10);
    CHECK(schur_kernel(t, t, hi(1), hi(3)) == doctest::Approx(q_bessel_kernel(p, hi(1), hi(3))).epsilon(1e-10));
    // diagonal plus hole density is one
    for (int a = -9; a <= 9; a += 2)
        CHECK(qk.diagonal(hi(a)) + qk.hole_diagonal(hi(a)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(qk(hi(-21), hi(-21)) == doctest::Approx(1.0).epsilon(1e-15));
    double tail = 0.0;
    for (int n = 11; n < 60; ++n)
        tail += std::pow(0.5, n) * std::pow(q_bessel(3, n, 0.6, 0.5), 2);
    CHECK(qk(hi(21), hi(21)) == doctest::Approx(tail).epsilon(1e-12));
}

TEST_CASE("squared measure is determinantal")
{
    const QParams p(0.5, 0.3);
    const MeasureKind kind = QppSquared{p};
    const Enumerated e = enumerate(kind, 22, 11);
    const double tail = 1.0 - e.mass;
    CHECK(tail < 1e-12);
    const KernelFn k = make_kernel(kind);
    const int np = 12;
    for (int i = 0; i < np; ++i) {
        CHECK(std::abs(correlation(k, {hi(2 * i - 11)}) - e.one[i]) <= 1e-5);
        for (int j = i + 1; j < np; ++j)
            CHECK(std::abs(correlation(k, {hi(2 * i - 11), hi(2 * j - 11)}) - e.two[i * np + j]) <= 1e-5);
    }
    CHECK_THROWS_AS(correlation(k, {hi(1), hi(1)}), DomainError);
    CHECK(correlation(k, {}) == 1.0);
}

TEST_CASE("mixed measure through its Schur specialization")
{
    const QParams p(0.5, 0.25);
    const MeasureKind kind = QppMixed{p};
    const Enumerated e = enumerate(kind, 22, 11);
    const KernelFn k = make_kernel(kind);
    for (int i = 0; i < 12; ++i)
        CHECK(std::abs(k(hi(2 * i - 11), hi(2 * i - 11)) - e.one[i]) <= 1e-6);
}

TEST_CASE("discrete Bessel kernel and the Poissonized Plancherel measure")
{
    const double eta = 0.7;
    const Enumerated e = enumerate(PoissonizedPlancherel{eta}, 25, 9);
    const DiscreteBesselKernel k(eta);
    for (int i = 0; i < 10; ++i) {
        CHECK(std::abs(k(hi(2 * i - 9), hi(2 * i - 9)) - e.one[i]) <= 1e-10);
        CHECK(k.diagonal(hi(2 * i - 9)) == doctest::Approx(k(hi(2 * i - 9), hi(2 * i - 9))).epsilon(1e-14));
        for (int j = i + 1; j < 10; ++j)
            CHECK(std::abs(correlation(KernelFn(k), {hi(2 * i - 9), hi(2 * j - 9)}) - e.two[i * 10 + j]) <= 1e-10);
    }
    CHECK_THROWS_AS(make_kernel(Plancherel{4}), DomainError);
}

TEST_CASE("q -> 1 limit of the q-Bessel kernel")
{
    std::vector<double> dev;
    for (double q : {0.9, 0.97, 0.99})
        dev.push_back(std::abs(q_bessel_kernel(QParams(q, 1.0 - q), hi(1), hi(3)) - discrete_bessel_kernel(1.0, hi(1), hi(3))));
    CHECK(dev[1] < dev[0]);
    CHECK(dev[2] < dev[1]);
}

TEST_CASE("Airy functions and kernel")
{
    for (double x = -8.0; x <= 8.0; x += 0.37) {
        const AiryValues a = airy(x);
        CHECK(a.ai == doctest::Approx(boost::math::airy_ai(x)).epsilon(1e-11).scale(1e-11));
        CHECK(a.aip == doctest::Approx(boost::math::airy_ai_prime(x)).epsilon(1e-11).scale(1e-11));
    }
    CHECK_THROWS_AS(airy(9.0), DomainError);
    // diagonal is the limit of the off-diagonal formula
    for (double x : {-2.0, 0.0, 1.5})
        CHECK(airy_kernel(x, x) == doctest::Approx(airy_kernel(x, x + 1e-5)).epsilon(1e-5));
    const double aip0 = boost::math::airy_ai_prime(0.0);
    CHECK(airy_kernel(0.0, 0.0) == doctest::Approx(aip0 * aip0).epsilon(1e-13));
    CHECK(airy_kernel(1.0, -1.0) == doctest::Approx(airy_kernel(-1.0, 1.0)).epsilon(1e-14));
}

TEST_CASE("limit shape")
{
    for (double xi : {0.1, 0.5, 0.9}) {
        const LimitShape s = limit_shape(xi);
        CHECK(s.a() == doctest::Approx(-2.0 * std::log(1.0 + xi)).epsilon(1e-15));
        CHECK(s.b() == doctest::Approx(-2.0 * std::log(1.0 - xi)).epsilon(1e-15));
        CHECK(std::abs(s.a()) != doctest::Approx(s.b()));
        CHECK(s.rho(s.a()) == doctest::Approx(1.0));
        CHECK(s.rho(s.b()) == doctest::Approx(0.0).scale(1.0));
        CHECK(s.omega(s.a() - 0.5) == doctest::Approx(std::abs(s.a() - 0.5)));
        // Omega' = 1 - 2 rho inside (a, b)
        const double x = 0.3 * s.a() + 0.7 * s.b(), h = 1e-4;
        const double slope = (s.omega(x + h) - s.omega(x - h)) / (2.0 * h);
        CHECK(slope == doctest::Approx(1.0 - 2.0 * s.rho(x)).epsilon(1e-6));
        // continuity at b
        CHECK(s.omega(s.b() - 1e-9) == doctest::Approx(s.b()).epsilon(1e-6));
    }
    const LimitShape z(0.0);
    CHECK(z.a() == 0.0);
    CHECK(z.b() == 0.0);
    CHECK(z.omega(-0.7) == doctest::Approx(0.7));
    CHECK(std::round(limit_shape(1.0 - 1e-12).a() * 1000.0) / 1000.0 == doctest::Approx(-1.386).epsilon(1e-12));
    const LimitShape s(0.4);
    double series = 0.0;
    for (int n = 1; n < 200; ++n)
        series += 2.0 * std::pow(0.4, n) / n;
    CHECK(s.alpha0() == doctest::Approx(series).epsilon(1e-14));
    CHECK(s.beta0() == doctest::Approx(0.4 / 0.36).epsilon(1e-14));
    CHECK_THROWS_AS(limit_shape(1.0), DomainError);
}

TEST_CASE("scaling probes")
{
    const std::vector<double> qs{0.9, 0.97, 0.99};
    const LimitShape s(0.5);
    const auto bulk = scaling_probe_bulk(0.5, 0.5 * (s.a() + s.b()), 1, qs);
    REQUIRE(bulk.rows.size() == 3);
    CHECK(bulk.monotone_decreasing);
    for (const auto& r : bulk.rows)
        CHECK(r.target == doctest::Approx(std::sin(M_PI * s.rho(0.5 * (s.a() + s.b()))) / M_PI));
    const auto edge = scaling_probe_edge(0.5, 0.0, 0.0, qs);
    CHECK(edge.monotone_decreasing);
    CHECK(edge.rows.back().deviation < 2e-3);
    CHECK_THROWS_AS(scaling_probe_bulk(0.5, 0.0, 1, {0.99, 0.9}), DomainError);
}
