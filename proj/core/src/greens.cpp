#include "rzeta/greens.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace rzeta::greens {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

namespace {

void partitions_rec(int remaining, int maxpart, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition{acc});
        return;
    }
    for (int k = std::min(remaining, maxpart); k >= 1; --k) {
        acc.push_back(k);
        partitions_rec(remaining - k, k, acc, out);
        acc.pop_back();
    }
}

int mobius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

// (d, lambda) pairs ordered by degree, then by partition size, then parts
// lexicographically descending. Any fixed total order works; this one keeps
// enumeration output stable.
bool pair_less(const std::pair<int, Partition>& a, const std::pair<int, Partition>& b) {
    if (a.first != b.first) return a.first < b.first;
    if (a.second.parts.size() != b.second.parts.size())
        return a.second.parts.size() < b.second.parts.size();
    return a.second.parts > b.second.parts;
}

void types_rec(int remaining, std::size_t start,
               const std::vector<std::pair<int, Partition>>& pool,
               const std::vector<int>& pool_weight, std::vector<std::pair<int, Partition>>& acc,
               std::vector<GLType>& out) {
    if (remaining == 0) {
        out.push_back(GLType{acc});
        return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
        if (pool_weight[i] > remaining) continue;
        acc.push_back(pool[i]);
        types_rec(remaining - pool_weight[i], i, pool, pool_weight, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int n) {
    if (n < 0) throw Error("partitions of a negative number");
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(n, n == 0 ? 1 : n, acc, out);
    return out;
}

PartitionStats partition_stats(const Partition& p) {
    PartitionStats st;
    st.nstat = 0;
    const auto& parts = p.parts;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        st.nstat += static_cast<int>(i) * parts[i];
        for (int j = 1; j <= parts[i]; ++j) {
            int arm = parts[i] - j;
            int leg = 0;
            for (std::size_t r = i + 1; r < parts.size() && parts[r] >= j; ++r) ++leg;
            st.hooks.push_back(arm + leg + 1);
        }
    }
    std::sort(st.hooks.rbegin(), st.hooks.rend());
    return st;
}

RationalPoly necklace_count(int d) {
    if (d < 1) throw Error("necklace_count requires d >= 1");
    RationalPoly sum;
    RationalPoly q = RationalPoly::var();
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        int mu = mobius(d / e);
        if (mu == 0) continue;
        sum += (poly_pow(q, e) - RationalPoly(1)) * RationalPoly(mu);
    }
    return sum * RationalPoly(Rational(1, d));
}

int GLType::weight() const {
    int w = 0;
    for (const auto& [d, lam] : orbits) w += d * lam.size();
    return w;
}

std::vector<GLType> enumerate_types(int n) {
    if (n < 1) throw Error("enumerate_types requires n >= 1");
    std::vector<std::pair<int, Partition>> pool;
    for (int d = 1; d <= n; ++d)
        for (int m = 1; d * m <= n; ++m)
            for (const auto& lam : partitions(m)) pool.emplace_back(d, lam);
    std::sort(pool.begin(), pool.end(), pair_less);
    std::vector<int> pool_weight(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i)
        pool_weight[i] = pool[i].first * pool[i].second.size();

    std::vector<GLType> out;
    std::vector<std::pair<int, Partition>> acc;
    types_rec(n, 0, pool, pool_weight, acc, out);
    return out;
}

DimensionPoly type_degree(const GLType& t, int n) {
    if (t.weight() != n) throw Error("type weight does not match n");
    RationalPoly q = RationalPoly::var();
    RationalPoly num(1);
    for (int k = 1; k <= n; ++k) num *= poly_pow(q, k) - RationalPoly(1);
    RationalPoly den(1);
    for (const auto& [d, lam] : t.orbits) {
        auto st = partition_stats(lam);
        num *= poly_pow(q, static_cast<unsigned>(d) * st.nstat);
        for (int h : st.hooks) den *= poly_pow(q, static_cast<unsigned>(d) * h) - RationalPoly(1);
    }
    DimensionPoly deg = DimensionPoly::from(divexact(num, den));
    if (deg.is_zero() || deg.coeffs().back() <= 0)
        throw Error("character degree polynomial not positive: " + deg.to_string());
    return deg;
}

RationalPoly type_count(const GLType& t) {
    // Group the pairs per orbit degree d; within one degree, choosing K_d
    // distinct orbits carrying a prescribed multiset of partitions counts
    // m_d(m_d-1)...(m_d-K_d+1) / prod over partitions of (repetitions!).
    std::map<int, std::map<std::vector<int>, int>> per_degree;
    for (const auto& [d, lam] : t.orbits) per_degree[d][lam.parts] += 1;

    RationalPoly count(1);
    for (const auto& [d, lams] : per_degree) {
        RationalPoly m = necklace_count(d);
        int taken = 0;
        Int rep_fact = 1;
        for (const auto& [parts, k] : lams) {
            for (int i = 1; i <= k; ++i) rep_fact *= i;
            taken += k;
        }
        RationalPoly falling(1);
        for (int i = 0; i < taken; ++i) falling *= m - RationalPoly(i);
        count *= falling * RationalPoly(Rational(1, rep_fact));
    }
    return count;
}

const ZetaPoly& gl_zeta(int n) {
    if (n < 0) throw Error("gl_zeta requires n >= 0");
    static std::map<int, ZetaPoly> cache;
    static std::mutex mtx;
    {
        std::lock_guard lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    ZetaPoly z;
    if (n == 0) {
        z.add_term(DimensionPoly(1), RationalPoly(1));
    } else {
        for (const auto& t : enumerate_types(n)) z.add_term(type_degree(t, n), type_count(t));
    }
    std::lock_guard lock(mtx);
    return cache.emplace(n, std::move(z)).first->second;
}

}  // namespace rzeta::greens
