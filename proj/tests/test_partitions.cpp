#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "qpart/errors.hpp"
#include "qpart/partitions.hpp"

using namespace qpart;

namespace {

// number of standard tableaux by removing corners
BigInt syt_count(std::vector<int> parts, std::map<std::vector<int>, BigInt>& memo)
{
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    if (parts.empty())
        return 1;
    if (auto it = memo.find(parts); it != memo.end())
        return it->second;
    BigInt total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const bool corner = i + 1 == parts.size() || parts[i + 1] < parts[i];
        if (!corner)
            continue;
        auto smaller = parts;
        --smaller[i];
        total += syt_count(smaller, memo);
    }
    memo[parts] = total;
    return total;
}

// Euler's pentagonal recursion
std::vector<long long> partition_numbers(int n_max)
{
    std::vector<long long> p(n_max + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > n)
                break;
            const long long sg = k % 2 ? 1 : -1;
            p[n] += sg * p[n - g1];
            if (g2 <= n)
                p[n] += sg * p[n - g2];
        }
    return p;
}

}  // namespace

TEST_CASE("partition validation and basic accessors")
{
    const Partition l({4, 2, 2, 1});
    CHECK(l.size() == 9);
    CHECK(l.length() == 4);
    CHECK(l.part(1) == 4);
    CHECK(l.part(7) == 0);
    CHECK(l.transpose() == Partition({4, 3, 1, 1}));
    CHECK(l.transpose().transpose() == l);
    CHECK(Partition().empty());
    CHECK_THROWS_AS(Partition({1, 2}), DomainError);
    CHECK_THROWS_AS(Partition({2, 0}), DomainError);
}

TEST_CASE("enumeration counts and order")
{
    const auto p = partition_numbers(30);
    for (int n = 0; n <= 30; ++n)
        CHECK(static_cast<long long>(partitions_of(n).size()) == p[n]);
    const auto all = enumerate_partitions(5);
    long long want = 0;
    for (int n = 0; n <= 5; ++n)
        want += p[n];
    CHECK(static_cast<long long>(all.size()) == want);
    CHECK(all[0].empty());
    // size first, then lexicographically descending
    const auto five = partitions_of(5);
    CHECK(five.front() == Partition({5}));
    CHECK(five[1] == Partition({4, 1}));
    CHECK(five.back() == Partition({1, 1, 1, 1, 1}));
    for (std::size_t i = 1; i < five.size(); ++i)
        CHECK(five[i].parts() < five[i - 1].parts());

    PartitionStream s(2);
    int count = 0;
    while (s.next())
        ++count;
    CHECK(count == 4);
    CHECK_THROWS_AS(PartitionStream(61), LimitExceeded);
    CHECK_THROWS_AS(enumerate_partitions(61), LimitExceeded);
}

TEST_CASE("hooks, contents and dimensions")
{
    std::map<std::vector<int>, BigInt> memo;
    for (int n = 0; n <= 12; ++n)
        for (const Partition& l : partitions_of(n))
            CHECK(dimension(l) == syt_count(l.parts(), memo));

    const CellStats cs = cell_stats(Partition({3, 1}));
    REQUIRE(cs.hook.size() == 2);
    CHECK(cs.hook[0] == std::vector<int>{4, 2, 1});
    CHECK(cs.hook[1] == std::vector<int>{1});
    CHECK(cs.content[0] == std::vector<int>{0, 1, 2});
    CHECK(cs.content[1] == std::vector<int>{-1});

    // b(lambda) = sum_j C(lambda'_j, 2)
    for (const Partition& l : partitions_of(9)) {
        long long want = 0;
        const Partition t = l.transpose();
        for (int c : t.parts())
            want += static_cast<long long>(c) * (c - 1) / 2;
        CHECK(b_of(l) == want);
    }

    // sum (dim lambda)^2 = n!
    for (int n = 0; n <= 8; ++n) {
        BigInt s = 0, f = 1;
        for (const Partition& l : partitions_of(n))
            s += dimension(l) * dimension(l);
        for (int k = 2; k <= n; ++k)
            f *= k;
        CHECK(s == f);
    }
}

TEST_CASE("fermionic coordinates")
{
    const auto c = fermionic_coordinates(Partition({3, 1}), 4);
    REQUIRE(c.size() == 4);
    CHECK(c[0].value() == 2.5);
    CHECK(c[1].value() == -0.5);
    CHECK(c[2].value() == -2.5);
    CHECK(c[3].value() == -3.5);
    const auto e = fermionic_coordinates(Partition(), 2);
    CHECK(e[0].value() == -0.5);
    CHECK(e[1].value() == -1.5);
}

TEST_CASE("specialized Schur functions")
{
    // Jacobi-Trudi with h_k = a^k / (q;q)_k for the principal specialization a, aq, aq^2, ...
    const double xi = 0.3, q = 0.5, a = xi * std::sqrt(q);
    auto h = [&](int k) {
        if (k < 0)
            return 0.0;
        double v = std::pow(a, k);
        for (int j = 1; j <= k; ++j)
            v /= 1.0 - std::pow(q, j);
        return v;
    };
    for (const Partition& l : {Partition({1}), Partition({2, 1}), Partition({3, 3, 1})}) {
        const int n = l.length();
        std::vector<std::vector<double>> m(n, std::vector<double>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m[i][j] = h(l.part(i + 1) - i - 1 + j + 1);
        double det;
        if (n == 1)
            det = m[0][0];
        else if (n == 2)
            det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        else
            det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                  m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        CHECK(schur_specialized(l, PrincipalSpec{xi, q}) == doctest::Approx(det).epsilon(1e-13));
    }
    // exponential specialization: xi^n dim / n!
    CHECK(schur_specialized(Partition({2, 1}), ExponentialSpec{0.5}) == doctest::Approx(0.125 * 2.0 / 6.0));
    CHECK_THROWS_AS(schur_specialized(Partition({1}), PrincipalSpec{0.3, 1.0}), DomainError);
}
