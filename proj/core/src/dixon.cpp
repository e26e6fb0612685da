#include "rzeta/oracle/dixon.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace rzeta::oracle {

namespace {

using u64 = std::uint64_t;

u64 add_m(u64 a, u64 b, u64 m) { return (a + b) % m; }
u64 sub_m(u64 a, u64 b, u64 m) { return (a + m - b) % m; }
u64 mul_m(u64 a, u64 b, u64 m) { return a * b % m; }

u64 pow_m(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mul_m(r, a, m);
        a = mul_m(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 inv_m(u64 a, u64 m) { return pow_m(a, m - 2, m); }

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Smallest prime r = 1 (mod e) with r > 2 sqrt(|G|). Always exists by
// Dirichlet; the scan bound only guards against runaway input.
u64 dixon_prime(u64 exponent, u64 group_order) {
    u64 lo = 1;
    while (lo * lo < 4 * group_order) ++lo;  // lo = ceil(2 sqrt(|G|))
    for (u64 r = exponent + 1;; r += exponent) {
        if (r <= lo) continue;
        if (is_prime_u64(r)) return r;
        if (r > 100000000ULL) throw NoSuitablePrime("no prime found below 1e8");
    }
}

using Vec = std::vector<u64>;
using Matrix = std::vector<Vec>;  // row major

// Characteristic polynomial mod m via Hessenberg reduction; coefficients
// ascending, leading coefficient 1.
Vec charpoly(Matrix h, u64 m) {
    const std::size_t n = h.size();
    for (std::size_t col = 0; col + 2 < n; ++col) {
        std::size_t piv = col + 1;
        while (piv < n && h[piv][col] == 0) ++piv;
        if (piv == n) continue;
        if (piv != col + 1) {
            std::swap(h[piv], h[col + 1]);
            for (std::size_t i = 0; i < n; ++i) std::swap(h[i][piv], h[i][col + 1]);
        }
        u64 d = inv_m(h[col + 1][col], m);
        for (std::size_t i = col + 2; i < n; ++i) {
            if (h[i][col] == 0) continue;
            u64 f = mul_m(h[i][col], d, m);
            for (std::size_t j = 0; j < n; ++j) h[i][j] = sub_m(h[i][j], mul_m(f, h[col + 1][j], m), m);
            for (std::size_t j = 0; j < n; ++j) h[j][col + 1] = add_m(h[j][col + 1], mul_m(f, h[j][i], m), m);
        }
    }
    // det(xI - H) for upper Hessenberg H by the standard recurrence.
    std::vector<Vec> p(n + 1);
    p[0] = {1};
    for (std::size_t i = 1; i <= n; ++i) {
        Vec cur(i + 1, 0);
        // (x - h_{ii}) * p_{i-1}
        for (std::size_t k = 0; k < p[i - 1].size(); ++k) {
            cur[k + 1] = add_m(cur[k + 1], p[i - 1][k], m);
            cur[k] = sub_m(cur[k], mul_m(h[i - 1][i - 1], p[i - 1][k], m), m);
        }
        u64 subdiag = 1;
        for (std::size_t j = i - 1; j >= 1; --j) {
            subdiag = mul_m(subdiag, h[j][j - 1], m);
            if (subdiag == 0) break;
            u64 f = mul_m(subdiag, h[j - 1][i - 1], m);
            for (std::size_t k = 0; k < p[j - 1].size(); ++k)
                cur[k] = sub_m(cur[k], mul_m(f, p[j - 1][k], m), m);
        }
        p[i] = std::move(cur);
    }
    return p[n];
}

u64 eval_poly(const Vec& c, u64 x, u64 m) {
    u64 acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = add_m(mul_m(acc, x, m), *it, m);
    return acc;
}

// Null space basis of a (copied) matrix mod m, via reduced row echelon form.
std::vector<Vec> kernel_basis(Matrix a, u64 m) {
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        u64 f = inv_m(a[rank][col], m);
        for (auto& x : a[rank]) x = mul_m(x, f, m);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            u64 g = a[i][col];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] = sub_m(a[i][j], mul_m(g, a[rank][j], m), m);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<Vec> basis;
    std::size_t pi = 0;
    for (std::size_t col = 0; col < cols; ++col) {
        if (pi < pivot_col.size() && pivot_col[pi] == col) {
            ++pi;
            continue;
        }
        Vec v(cols, 0);
        v[col] = 1;
        for (std::size_t i = 0; i < rank; ++i) v[pivot_col[i]] = sub_m(0, a[i][col], m);
        basis.push_back(std::move(v));
    }
    return basis;
}

// A subspace of the class space, spanned by column vectors of length r.
struct Subspace {
    std::vector<Vec> basis;  // each of length r (global coordinates)
};

// Restriction R of A to the span of B: A b_t = sum_s R[s][t] b_s. Solved by
// one elimination on [B | A b_1 | ... | A b_m]; inconsistency means the
// subspace was not invariant, which the refinement guarantees against.
Matrix restrict_action(const Matrix& a, const Subspace& sp, u64 m) {
    const std::size_t r = a.size(), dim = sp.basis.size();
    Matrix aug(r, Vec(2 * dim, 0));
    for (std::size_t t = 0; t < dim; ++t) {
        for (std::size_t i = 0; i < r; ++i) aug[i][t] = sp.basis[t][i];
        for (std::size_t i = 0; i < r; ++i) {
            u64 s = 0;
            for (std::size_t k = 0; k < r; ++k)
                if (a[i][k] && sp.basis[t][k]) s = add_m(s, mul_m(a[i][k], sp.basis[t][k], m), m);
            aug[i][dim + t] = s;
        }
    }
    std::vector<std::size_t> pivot_row(dim);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t piv = rank;
        while (piv < r && aug[piv][col] == 0) ++piv;
        if (piv == r) throw EigenvectorFailure("dependent subspace basis");
        std::swap(aug[piv], aug[rank]);
        u64 f = inv_m(aug[rank][col], m);
        for (auto& x : aug[rank]) x = mul_m(x, f, m);
        for (std::size_t i = 0; i < r; ++i) {
            if (i == rank || aug[i][col] == 0) continue;
            u64 g = aug[i][col];
            for (std::size_t j = 0; j < 2 * dim; ++j)
                aug[i][j] = sub_m(aug[i][j], mul_m(g, aug[rank][j], m), m);
        }
        pivot_row[col] = rank;
        ++rank;
    }
    for (std::size_t i = rank; i < r; ++i)
        for (std::size_t t = 0; t < dim; ++t)
            if (aug[i][dim + t] != 0) throw EigenvectorFailure("subspace not invariant");
    Matrix res(dim, Vec(dim, 0));
    for (std::size_t s = 0; s < dim; ++s)
        for (std::size_t t = 0; t < dim; ++t) res[s][t] = aug[pivot_row[s]][dim + t];
    return res;
}

}  // namespace

DimensionMultiset dixon_degrees(const GroupTable& g) {
    if (g.class_reps.empty()) throw Error("conjugacy classes not computed");
    const std::size_t r = g.class_count();
    const u64 order = g.order();

    // Exponent of the group: element order is a class function, so the lcm
    // over class representatives suffices.
    u64 exponent = 1;
    for (auto rep : g.class_reps) exponent = std::lcm<u64, u64>(exponent, g.element_order(rep));
    const u64 P = dixon_prime(exponent, order);

    std::vector<std::uint32_t> inv_of(order);
    for (std::uint32_t x = 0; x < order; ++x) inv_of[x] = g.inverse(x);

    std::vector<std::size_t> inverse_class(r);
    for (std::size_t j = 0; j < r; ++j)
        inverse_class[j] = static_cast<std::size_t>(g.class_of[inv_of[g.class_reps[j]]]);

    std::vector<std::vector<std::uint32_t>> members(r);
    for (std::uint32_t x = 0; x < order; ++x)
        members[static_cast<std::size_t>(g.class_of[x])].push_back(x);

    // Class multiplication matrix of class i: entry [j][k] counts pairs
    // (x, y) in C_i x C_j with x y = z_k for a fixed representative z_k.
    auto structure_matrix = [&](std::size_t i) {
        Matrix a(r, Vec(r, 0));
        for (auto x : members[i]) {
            std::uint32_t xi = inv_of[x];
            for (std::size_t k = 0; k < r; ++k) {
                auto j = static_cast<std::size_t>(g.class_of[g.mul(xi, g.class_reps[k])]);
                a[j][k] = add_m(a[j][k], 1, P);
            }
        }
        return a;
    };

    const auto id_class = static_cast<std::size_t>(g.class_of[g.identity()]);
    std::vector<Subspace> spaces(1);
    spaces[0].basis.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
        spaces[0].basis[i].assign(r, 0);
        spaces[0].basis[i][i] = 1;
    }

    for (std::size_t i = 0; i < r; ++i) {
        if (i == id_class) continue;
        bool split_needed = false;
        for (const auto& sp : spaces) split_needed |= sp.basis.size() > 1;
        if (!split_needed) break;

        Matrix a = structure_matrix(i);
        std::vector<Subspace> next;
        for (auto& sp : spaces) {
            const std::size_t dim = sp.basis.size();
            if (dim == 1) {
                next.push_back(std::move(sp));
                continue;
            }
            Matrix res = restrict_action(a, sp, P);
            Vec cp = charpoly(res, P);
            std::size_t found = 0;
            for (u64 lam = 0; lam < P && found < dim; ++lam) {
                if (eval_poly(cp, lam, P) != 0) continue;
                Matrix shifted = res;
                for (std::size_t t = 0; t < dim; ++t) shifted[t][t] = sub_m(shifted[t][t], lam, P);
                auto ker = kernel_basis(shifted, P);
                if (ker.empty()) continue;
                Subspace eig;
                for (const auto& kv : ker) {
                    Vec global(r, 0);
                    for (std::size_t t = 0; t < dim; ++t) {
                        if (kv[t] == 0) continue;
                        for (std::size_t row = 0; row < r; ++row)
                            global[row] = add_m(global[row], mul_m(kv[t], sp.basis[t][row], P), P);
                    }
                    eig.basis.push_back(std::move(global));
                }
                found += eig.basis.size();
                next.push_back(std::move(eig));
            }
            if (found != dim)
                throw EigenvectorFailure("class matrix not diagonalizable over F_r");
        }
        spaces = std::move(next);
    }

    for (const auto& sp : spaces)
        if (sp.basis.size() != 1)
            throw EigenvectorFailure("common eigenspaces not one-dimensional");
    if (spaces.size() != r) throw EigenvectorFailure("wrong number of eigensystems");

    // Degree from the second orthogonality relation: with omega the central
    // character values, sum_j omega_j omega_{j*} / |C_j| = |G| / d^2; d is
    // the unique integer at most sqrt(|G|) with that square mod r.
    u64 max_deg = 1;
    while ((max_deg + 1) * (max_deg + 1) <= order) ++max_deg;

    DimensionMultiset degrees;
    for (const auto& sp : spaces) {
        const Vec& v = sp.basis[0];
        if (v[id_class] == 0) throw EigenvectorFailure("eigenvector vanishes at identity class");
        u64 norm = inv_m(v[id_class], P);
        u64 s = 0;
        for (std::size_t j = 0; j < r; ++j) {
            u64 wj = mul_m(v[j], norm, P);
            u64 wjs = mul_m(v[inverse_class[j]], norm, P);
            s = add_m(s, mul_m(mul_m(wj, wjs, P), inv_m(g.class_sizes[j] % P, P), P), P);
        }
        if (s == 0) throw EigenvectorFailure("degenerate norm sum");
        u64 dsq = mul_m(order % P, inv_m(s, P), P);
        u64 deg = 0;
        for (u64 d = 1; d <= max_deg; ++d) {
            if (mul_m(d, d, P) == dsq) {
                if (deg != 0) throw EigenvectorFailure("ambiguous degree candidate");
                deg = d;
            }
        }
        if (deg == 0) throw EigenvectorFailure("no degree candidate matches");
        degrees.add(Int(deg), 1);
    }

    if (degrees.class_count() != Int(r) || degrees.sum_of_squares() != Int(order))
        throw EigenvectorFailure("degree multiset fails the order identity");
    return degrees;
}

}  // namespace rzeta::oracle
