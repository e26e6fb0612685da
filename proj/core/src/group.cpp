#include "rzeta/oracle/group.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace rzeta::oracle {

namespace {

using Mat = std::vector<int>;  // n x n row-major, entries mod p

Mat identity_mat(int n) {
    Mat m(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m[i * n + i] = 1;
    return m;
}

void matmul(const int* a, const int* b, int* c, int n, int p) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int s = 0;
            for (int k = 0; k < n; ++k) s += a[i * n + k] * b[k * n + j];
            c[i * n + j] = s % p;
        }
}

// Gauss-Jordan inverse mod p; returns false when singular.
bool matinv(const int* a, int* inv, int n, int p) {
    std::array<int, 64> w;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            w[i * 2 * n + j] = a[i * n + j];
            w[i * 2 * n + n + j] = (i == j) ? 1 : 0;
        }
    auto inv_mod = [p](int x) {
        for (int y = 1; y < p; ++y)
            if (x * y % p == 1) return y;
        return 0;
    };
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (w[r * 2 * n + col] % p != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        if (piv != col)
            for (int j = 0; j < 2 * n; ++j) std::swap(w[piv * 2 * n + j], w[col * 2 * n + j]);
        int f = inv_mod(w[col * 2 * n + col] % p);
        for (int j = 0; j < 2 * n; ++j) w[col * 2 * n + j] = w[col * 2 * n + j] * f % p;
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            int g = w[r * 2 * n + col] % p;
            if (g == 0) continue;
            for (int j = 0; j < 2 * n; ++j)
                w[r * 2 * n + j] = (w[r * 2 * n + j] + (p - g) * w[col * 2 * n + j]) % p;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i * n + j] = w[i * 2 * n + n + j];
    return true;
}

bool invertible(const Mat& m, int n, int p) {
    std::array<int, 32> tmp;
    return matinv(m.data(), tmp.data(), n, p);
}

std::uint64_t encode_digits(const int* d, int len, int radix) {
    std::uint64_t code = 0;
    for (int i = len - 1; i >= 0; --i) code = code * radix + static_cast<unsigned>(d[i]);
    return code;
}

void decode_digits(std::uint64_t code, int* d, int len, int radix) {
    for (int i = 0; i < len; ++i) {
        d[i] = static_cast<int>(code % radix);
        code /= radix;
    }
}

std::uint64_t pow_u64(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Generating sets as explicit matrices. Transvections generate SL_n; one
// diagonal unit extends to GL_n. P_n and T_n stack translations on top of
// the embedded smaller group.
std::vector<Mat> gl_generator_mats(int n, int p) {
    std::vector<Mat> gens;
    if (n == 0) return gens;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Mat m = identity_mat(n);
            m[i * n + j] = 1;
            gens.push_back(std::move(m));
        }
    if (p > 2) {
        int g = 2;
        for (; g < p; ++g) {
            int x = g % p, ord = 1;
            while (x != 1) {
                x = x * g % p;
                ++ord;
            }
            if (ord == p - 1) break;
        }
        Mat m = identity_mat(n);
        m[0] = g;
        gens.push_back(std::move(m));
    }
    return gens;
}

std::vector<Mat> embed_corner(const std::vector<Mat>& inner, int n) {
    // (n-1)x(n-1) matrices placed in rows/columns 2..n of an n x n identity.
    std::vector<Mat> out;
    for (const auto& z : inner) {
        Mat m = identity_mat(n);
        for (int i = 0; i < n - 1; ++i)
            for (int j = 0; j < n - 1; ++j) m[(i + 1) * n + (j + 1)] = z[i * (n - 1) + j];
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<Mat> p_generator_mats(int n, int p) {
    std::vector<Mat> gens;
    for (int i = 1; i < n; ++i) {
        Mat m = identity_mat(n);
        m[i * n + 0] = 1;
        gens.push_back(std::move(m));
    }
    auto inner = embed_corner(gl_generator_mats(n - 1, p), n);
    gens.insert(gens.end(), inner.begin(), inner.end());
    return gens;
}

std::vector<Mat> t_generator_mats(int n, int p) {
    std::vector<Mat> gens;
    for (int j = 1; j < n; ++j) {
        Mat m = identity_mat(n);
        m[0 * n + j] = 1;
        gens.push_back(std::move(m));
    }
    if (n >= 3) {
        auto inner = embed_corner(p_generator_mats(n - 1, p), n);
        gens.insert(gens.end(), inner.begin(), inner.end());
    }
    return gens;
}

// Shape predicates for the matrix families.
bool p_shape(const Mat& m, int n) {
    for (int j = 0; j < n; ++j)
        if (m[j] != (j == 0 ? 1 : 0)) return false;
    return true;
}

bool t_shape(const Mat& m, int n) {
    for (int i = 0; i < n; ++i)
        if (m[i * n] != (i == 0 ? 1 : 0)) return false;
    for (int j = 0; j < n; ++j)
        if (m[1 * n + j] != (j == 1 ? 1 : 0)) return false;
    return true;
}

std::vector<Mat> enumerate_invertible(int n, int p,
                                      const std::function<bool(const Mat&)>& shape_ok) {
    std::vector<Mat> out;
    int len = n * n;
    std::uint64_t total = pow_u64(p, len);
    Mat m(len);
    for (std::uint64_t code = 0; code < total; ++code) {
        decode_digits(code, m.data(), len, p);
        if (shape_ok && !shape_ok(m)) continue;
        if (invertible(m, n, p)) out.push_back(m);
    }
    return out;
}

void sample_closure_check(const GroupTable& g) {
    if (g.order() < 2) return;
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    for (int i = 0; i < 256; ++i) {
        std::uint64_t c = g.mul_code(g.codes[pick(rng)], g.codes[pick(rng)]);
        if (!std::binary_search(g.codes.begin(), g.codes.end(), c))
            throw Error("closure check failed for " + g.label);
    }
}

}  // namespace

std::uint32_t GroupTable::index_of(std::uint64_t code) const {
    auto it = std::lower_bound(codes.begin(), codes.end(), code);
    if (it == codes.end() || *it != code) throw Error("element not in group " + label);
    return static_cast<std::uint32_t>(it - codes.begin());
}

std::uint32_t GroupTable::mul(std::uint32_t a, std::uint32_t b) const {
    return index_of(mul_code(codes[a], codes[b]));
}

std::uint32_t GroupTable::inverse(std::uint32_t a) const {
    std::uint32_t id = identity();
    if (a == id) return id;
    std::uint32_t y = a;
    for (std::size_t k = 2; k <= order(); ++k) {
        std::uint32_t z = mul(y, a);
        if (z == id) return y;
        y = z;
    }
    throw Error("element has no inverse below the group order");
}

std::uint64_t GroupTable::element_order(std::uint32_t a) const {
    std::uint32_t id = identity();
    std::uint64_t k = 1;
    std::uint32_t y = a;
    while (y != id) {
        y = mul(y, a);
        ++k;
        if (k > order()) throw Error("element order exceeds group order");
    }
    return k;
}

GroupTable build_group(const towers::FamilyId& f, const ResidueRing& ring,
                       std::uint64_t max_order) {
    f.validate();
    using towers::Family;
    const int p = ring.p();
    const int n = f.n;

    if (f.family == Family::G) {
        if (ring.ell() != f.ell) throw Error("ring length does not match family G parameter");
    } else if (ring.ell() != 1) {
        throw Error("families GL/P/T/SD live over the residue field (ell = 1)");
    }

    Int predicted_int = numerator(towers::order_poly(f).eval(p));
    if (predicted_int > max_order)
        throw OrderCapExceeded(predicted_int.convert_to<std::uint64_t>(), max_order);
    std::uint64_t predicted = predicted_int.convert_to<std::uint64_t>();

    GroupTable g;
    g.label = f.name() + " over " + (f.family == Family::G ? ring_kind_name(ring.kind()) : "field") +
              " p=" + std::to_string(p);
    g.p = p;
    g.kind = ring.kind();

    std::vector<Mat> gen_mats;
    if (f.family == Family::GL || f.family == Family::P || f.family == Family::T) {
        std::function<bool(const Mat&)> shape;
        if (f.family == Family::P)
            shape = [n](const Mat& m) { return p_shape(m, n); };
        else if (f.family == Family::T)
            shape = [n](const Mat& m) { return t_shape(m, n); };
        auto mats = enumerate_invertible(n, p, shape);
        int len = n * n;
        for (const auto& m : mats) g.codes.push_back(encode_digits(m.data(), len, p));
        g.identity_code = encode_digits(identity_mat(n).data(), len, p);
        g.mul_code = [n, p, len](std::uint64_t a, std::uint64_t b) {
            std::array<int, 32> ma, mb, mc;
            decode_digits(a, ma.data(), len, p);
            decode_digits(b, mb.data(), len, p);
            matmul(ma.data(), mb.data(), mc.data(), n, p);
            return encode_digits(mc.data(), len, p);
        };
        if (f.family == Family::GL)
            gen_mats = gl_generator_mats(n, p);
        else if (f.family == Family::P)
            gen_mats = p_generator_mats(n, p);
        else
            gen_mats = t_generator_mats(n, p);
        std::sort(g.codes.begin(), g.codes.end());
        for (const auto& m : gen_mats) {
            std::uint64_t c = encode_digits(m.data(), len, p);
            if (c != g.identity_code) g.generators.push_back(g.index_of(c));
        }
    } else if (f.family == Family::SD) {
        // (v, w, D) with multiplication
        // (v1,w1,D1)(v2,w2,D2) = (v1 + D1 v2, w1 + w2 D1^{-1}, D1 D2).
        auto gls = enumerate_invertible(n, p, nullptr);
        int mlen = n * n;
        int len = 2 * n + mlen;
        std::uint64_t vw = pow_u64(p, n);
        for (std::uint64_t v = 0; v < vw; ++v)
            for (std::uint64_t w = 0; w < vw; ++w)
                for (const auto& d : gls) {
                    std::array<int, 48> dig;
                    decode_digits(v, dig.data(), n, p);
                    decode_digits(w, dig.data() + n, n, p);
                    for (int i = 0; i < mlen; ++i) dig[2 * n + i] = d[i];
                    g.codes.push_back(encode_digits(dig.data(), len, p));
                }
        {
            std::array<int, 48> dig{};
            Mat id = identity_mat(n);
            for (int i = 0; i < mlen; ++i) dig[2 * n + i] = id[i];
            g.identity_code = encode_digits(dig.data(), len, p);
        }
        g.mul_code = [n, p, mlen, len](std::uint64_t a, std::uint64_t b) {
            std::array<int, 48> da, db, dc;
            std::array<int, 32> dinv;
            decode_digits(a, da.data(), len, p);
            decode_digits(b, db.data(), len, p);
            const int* v1 = da.data();
            const int* w1 = da.data() + n;
            const int* d1 = da.data() + 2 * n;
            const int* v2 = db.data();
            const int* w2 = db.data() + n;
            const int* d2 = db.data() + 2 * n;
            if (!matinv(d1, dinv.data(), n, p)) throw Error("singular block in SD element");
            for (int i = 0; i < n; ++i) {
                int s = v1[i];
                for (int k = 0; k < n; ++k) s += d1[i * n + k] * v2[k];
                dc[i] = s % p;
            }
            for (int j = 0; j < n; ++j) {
                int s = w1[j];
                for (int k = 0; k < n; ++k) s += w2[k] * dinv[k * n + j];
                dc[n + j] = s % p;
            }
            matmul(d1, d2, dc.data() + 2 * n, n, p);
            return encode_digits(dc.data(), len, p);
        };
        std::sort(g.codes.begin(), g.codes.end());
        auto push_gen = [&](const std::array<int, 48>& dig) {
            std::uint64_t c = encode_digits(dig.data(), len, p);
            if (c != g.identity_code) g.generators.push_back(g.index_of(c));
        };
        Mat id = identity_mat(n);
        for (int k = 0; k < 2 * n; ++k) {
            std::array<int, 48> dig{};
            for (int i = 0; i < mlen; ++i) dig[2 * n + i] = id[i];
            dig[k] = 1;
            push_gen(dig);
        }
        for (const auto& m : gl_generator_mats(n, p)) {
            std::array<int, 48> dig{};
            for (int i = 0; i < mlen; ++i) dig[2 * n + i] = m[i];
            push_gen(dig);
        }
    } else {
        // Family G: blocks (u, r, c, A) with u a unit of o_ell, r a row over
        // pi^{ell-1} o_ell stored as residue digits, c a column over the
        // residue field, A in GL_n. Composition, read off from the action on
        // columns (x; y) with x in o_ell, y in o_1^n:
        //   (u1,r1,c1,A1)(u2,r2,c2,A2)
        //     = (u1 u2 + r1.c2, u1 r2 + r1 A2, c1 ubar2 + A1 c2, A1 A2).
        auto gls = enumerate_invertible(n, p, nullptr);
        int mlen = n * n;
        int len = 1 + 2 * n + mlen;  // digit 0 = u (radix p^ell), rest radix p
        const int usize = ring.size();
        const int ell = ring.ell();

        auto encode_g = [&](int u, const int* rest) {
            std::uint64_t code = encode_digits(rest, len - 1, p);
            return code * usize + static_cast<unsigned>(u);
        };
        for (int u : ring.units())
            for (std::uint64_t rc = 0; rc < pow_u64(p, 2 * n); ++rc)
                for (const auto& a : gls) {
                    std::array<int, 48> dig;
                    decode_digits(rc, dig.data(), 2 * n, p);
                    for (int i = 0; i < mlen; ++i) dig[2 * n + i] = a[i];
                    g.codes.push_back(encode_g(u, dig.data()));
                }
        {
            std::array<int, 48> dig{};
            Mat id = identity_mat(n);
            for (int i = 0; i < mlen; ++i) dig[2 * n + i] = id[i];
            g.identity_code = encode_g(1, dig.data());
        }
        ResidueRing r = ring;  // copy with the tables; shared by the closure
        g.mul_code = [r, n, p, mlen, len, usize, ell](std::uint64_t a, std::uint64_t b) {
            std::array<int, 48> da, db, dc;
            int u1 = static_cast<int>(a % usize);
            int u2 = static_cast<int>(b % usize);
            decode_digits(a / usize, da.data(), len - 1, p);
            decode_digits(b / usize, db.data(), len - 1, p);
            const int* r1 = da.data();
            const int* c1 = da.data() + n;
            const int* a1 = da.data() + 2 * n;
            const int* r2 = db.data();
            const int* c2 = db.data() + n;
            const int* a2 = db.data() + 2 * n;
            int ubar1 = r.residue(u1), ubar2 = r.residue(u2);
            int dot = 0;
            for (int k = 0; k < n; ++k) dot += r1[k] * c2[k];
            int u = r.add(r.mul(u1, u2), r.pi_pow_times(dot % p, ell - 1));
            for (int j = 0; j < n; ++j) {
                int s = ubar1 * r2[j];
                for (int k = 0; k < n; ++k) s += r1[k] * a2[k * n + j];
                dc[j] = s % p;
            }
            for (int i = 0; i < n; ++i) {
                int s = c1[i] * ubar2;
                for (int k = 0; k < n; ++k) s += a1[i * n + k] * c2[k];
                dc[n + i] = s % p;
            }
            matmul(a1, a2, dc.data() + 2 * n, n, p);
            std::uint64_t code = encode_digits(dc.data(), len - 1, p);
            return code * usize + static_cast<unsigned>(u);
        };
        std::sort(g.codes.begin(), g.codes.end());
        auto push_gen = [&](int u, const std::array<int, 48>& dig) {
            std::uint64_t c = encode_g(u, dig.data());
            if (c != g.identity_code) g.generators.push_back(g.index_of(c));
        };
        Mat id = identity_mat(n);
        std::array<int, 48> base{};
        for (int i = 0; i < mlen; ++i) base[2 * n + i] = id[i];
        for (int u : ring.units()) push_gen(u, base);
        for (int k = 0; k < 2 * n; ++k) {
            auto dig = base;
            dig[k] = 1;
            push_gen(1, dig);
        }
        for (const auto& m : gl_generator_mats(n, p)) {
            std::array<int, 48> dig{};
            for (int i = 0; i < mlen; ++i) dig[2 * n + i] = m[i];
            push_gen(1, dig);
        }
    }

    if (g.codes.size() != predicted)
        throw Error("enumerated " + std::to_string(g.codes.size()) + " elements of " + g.label +
                    ", expected " + std::to_string(predicted));
    sample_closure_check(g);
    return g;
}

void conjugacy_classes(GroupTable& g) {
    const std::size_t n = g.order();
    g.class_of.assign(n, -1);
    g.class_reps.clear();
    g.class_sizes.clear();

    std::vector<std::uint32_t> gen_inv;
    gen_inv.reserve(g.generators.size());
    for (auto s : g.generators) gen_inv.push_back(g.inverse(s));

    std::vector<std::uint32_t> queue;
    for (std::uint32_t start = 0; start < n; ++start) {
        if (g.class_of[start] != -1) continue;
        auto cls = static_cast<std::int32_t>(g.class_reps.size());
        g.class_reps.push_back(start);
        g.class_of[start] = cls;
        std::uint32_t size = 1;
        queue.assign(1, start);
        while (!queue.empty()) {
            std::uint32_t y = queue.back();
            queue.pop_back();
            for (std::size_t i = 0; i < g.generators.size(); ++i) {
                std::uint32_t z = g.mul(g.mul(gen_inv[i], y), g.generators[i]);
                if (g.class_of[z] == -1) {
                    g.class_of[z] = cls;
                    ++size;
                    queue.push_back(z);
                }
            }
        }
        g.class_sizes.push_back(size);
    }

    for (auto s : g.class_sizes)
        if (n % s != 0) throw Error("class size does not divide group order in " + g.label);
}

}  // namespace rzeta::oracle
