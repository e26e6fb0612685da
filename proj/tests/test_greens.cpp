#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "rzeta/greens.hpp"
#include "rzeta/towers.hpp"

using namespace rzeta;
using namespace rzeta::greens;

namespace {

const RationalPoly q = RationalPoly::var();

// Independent oracle for necklace counts: orbits of multiplication by q on
// Z/(q^d - 1), counting orbits of exact size d.
long brute_frobenius_orbits(long qv, int d) {
    long mod = 1;
    for (int i = 0; i < d; ++i) mod *= qv;
    mod -= 1;
    std::vector<char> seen(mod, 0);
    long orbits = 0;
    for (long x = 0; x < mod; ++x) {
        if (seen[x]) continue;
        long y = x, size = 0;
        do {
            seen[y] = 1;
            y = y * qv % mod;
            ++size;
        } while (y != x);
        if (size == d) ++orbits;
    }
    return orbits;
}

// Multiset count by knapsack over the (d, lambda) pool: an order-independent
// way to count types, structurally unlike the recursive enumerator.
long count_types_dp(int n) {
    std::vector<int> weights;
    for (int d = 1; d <= n; ++d)
        for (int m = 1; d * m <= n; ++m)
            for (std::size_t i = 0; i < partitions(m).size(); ++i) weights.push_back(d * m);
    // unbounded knapsack, one pass per distinct pool entry: counts multisets
    std::vector<long> ways(n + 1, 0);
    ways[0] = 1;
    for (int w : weights)
        for (int s = w; s <= n; ++s) ways[s] += ways[s - w];
    return ways[n];
}

Partition part(std::initializer_list<int> parts) { return Partition{std::vector<int>(parts)}; }

}  // namespace

TEST_CASE("partition enumeration") {
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(1) == std::vector<Partition>{part({1})});
    CHECK(partitions(0) == std::vector<Partition>{part({})});
    CHECK(partitions(6).size() == 11);
    // largest-first order
    std::vector<Partition> p4 = {part({4}), part({3, 1}), part({2, 2}), part({2, 1, 1}),
                                 part({1, 1, 1, 1})};
    CHECK(partitions(4) == p4);
}

TEST_CASE("hooks and the n-statistic") {
    auto check = [](const Partition& p, std::vector<int> hooks, int nstat) {
        auto st = partition_stats(p);
        std::sort(hooks.rbegin(), hooks.rend());
        CHECK(st.hooks == hooks);
        CHECK(st.nstat == nstat);
    };
    check(part({2}), {2, 1}, 0);
    check(part({1, 1}), {2, 1}, 1);
    check(part({2, 1}), {3, 1, 1}, 1);
    check(part({3, 2}), {4, 3, 2, 1, 1}, 2);
    check(part({}), {}, 0);
}

TEST_CASE("necklace counts") {
    CHECK(necklace_count(1) == q - 1);
    CHECK(necklace_count(2) == divexact(q * q - q, RationalPoly(2)));
    CHECK(necklace_count(3) == divexact(poly_pow(q, 3) - q, RationalPoly(3)));
    for (long qv : {2L, 3L, 4L, 5L})
        for (int d = 1; d <= 4; ++d)
            CHECK(necklace_count(d).eval(qv) == Rational(brute_frobenius_orbits(qv, d)));
}

TEST_CASE("type enumeration") {
    CHECK(enumerate_types(1).size() == 1);
    auto t2 = enumerate_types(2);
    REQUIRE(t2.size() == 4);
    std::set<std::vector<std::pair<int, std::vector<int>>>> got;
    for (const auto& t : t2) {
        std::vector<std::pair<int, std::vector<int>>> key;
        for (const auto& [d, lam] : t.orbits) key.emplace_back(d, lam.parts);
        std::sort(key.begin(), key.end());
        got.insert(key);
    }
    std::set<std::vector<std::pair<int, std::vector<int>>>> expect = {
        {{1, {2}}},
        {{1, {1, 1}}},
        {{1, {1}}, {1, {1}}},
        {{2, {1}}},
    };
    CHECK(got == expect);
    CHECK(enumerate_types(3).size() == 8);

    for (int n = 1; n <= 6; ++n) {
        auto types = enumerate_types(n);
        CHECK(static_cast<long>(types.size()) == count_types_dp(n));
        std::set<std::vector<std::pair<int, std::vector<int>>>> uniq;
        for (const auto& t : types) {
            CHECK(t.weight() == n);
            std::vector<std::pair<int, std::vector<int>>> key;
            for (const auto& [d, lam] : t.orbits) key.emplace_back(d, lam.parts);
            std::sort(key.begin(), key.end());
            uniq.insert(key);
        }
        CHECK(uniq.size() == types.size());
    }
}

TEST_CASE("degrees of the GL_2 families") {
    GLType steinberg{{{1, part({1, 1})}}};
    CHECK(type_degree(steinberg, 2) == DimensionPoly::var());
    GLType cuspidal{{{2, part({1})}}};
    CHECK(type_degree(cuspidal, 2) == DimensionPoly::from(q - 1));
    GLType principal{{{1, part({1})}, {1, part({1})}}};
    CHECK(type_degree(principal, 2) == DimensionPoly::from(q + 1));
    GLType trivial{{{1, part({2})}}};
    CHECK(type_degree(trivial, 2) == DimensionPoly(1));
}

TEST_CASE("counts of the GL_2 families") {
    CHECK(type_count(GLType{{{1, part({2})}}}) == q - 1);
    CHECK(type_count(GLType{{{2, part({1})}}}) == divexact(q * q - q, RationalPoly(2)));
    CHECK(type_count(GLType{{{1, part({1})}, {1, part({1})}}}) ==
          divexact((q - 1) * (q - 2), RationalPoly(2)));
}

TEST_CASE("gl zeta small cases") {
    CHECK(gl_zeta(0) == ZetaPoly::term(DimensionPoly(1), RationalPoly(1)));
    CHECK(gl_zeta(1) == ZetaPoly::term(DimensionPoly(1), q - 1));
    CHECK(gl_zeta(2).size() == 4);
    CHECK(gl_zeta(3).count() == poly_pow(q, 3) - q);
}

TEST_CASE("second moment equals the group order polynomial") {
    for (int n = 0; n <= 6; ++n)
        CHECK(gl_zeta(n).second_moment() == towers::gl_order(n));
}

TEST_CASE("degrees divide exactly for all types up to n=6") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& t : enumerate_types(n)) {
            DimensionPoly d = type_degree(t, n);  // throws on non-exact division
            CHECK(d.coeffs().back() > 0);
        }
}

TEST_CASE("class counts are nonnegative integers at prime powers") {
    for (int n = 1; n <= 5; ++n) {
        RationalPoly total;
        for (const auto& t : enumerate_types(n)) total += type_count(t);
        for (int qv : {2, 3, 4}) {
            Rational v = total.eval(qv);
            CHECK(denominator(v) == 1);
            CHECK(v >= 0);
        }
        CHECK(total == gl_zeta(n).count());
    }
}
