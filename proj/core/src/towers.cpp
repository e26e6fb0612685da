#include "rzeta/towers.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "rzeta/greens.hpp"

namespace rzeta::towers {

namespace {

RationalPoly qpow(unsigned k) { return poly_pow(RationalPoly::var(), k); }

DimensionPoly dim_of(const RationalPoly& a) { return DimensionPoly::from(a); }

// Family zeta polynomials are reused heavily across the recursions; every
// family keeps an insert-once cache behind one mutex pattern.
template <class Key>
class Memo {
public:
    template <class F>
    const ZetaPoly& get(const Key& k, F&& compute) {
        {
            std::lock_guard lock(mtx_);
            auto it = cache_.find(k);
            if (it != cache_.end()) return it->second;
        }
        ZetaPoly z = compute();
        std::lock_guard lock(mtx_);
        return cache_.emplace(k, std::move(z)).first->second;
    }

private:
    std::map<Key, ZetaPoly> cache_;
    std::mutex mtx_;
};

}  // namespace

void FamilyId::validate() const {
    switch (family) {
        case Family::GL:
            if (n < 0) throw std::invalid_argument("GL requires n >= 0");
            return;
        case Family::P:
            if (n < 1) throw std::invalid_argument("P requires n >= 1");
            return;
        case Family::T:
            if (n < 2) throw std::invalid_argument("T requires n >= 2");
            return;
        case Family::SD:
            if (n < 2) throw std::invalid_argument("SD requires n >= 2");
            return;
        case Family::G:
            if (ell < 2 || n < 2)
                throw std::invalid_argument("G requires ell >= 2 and n >= 2");
            return;
    }
    throw std::invalid_argument("unknown family");
}

std::string FamilyId::name() const {
    switch (family) {
        case Family::GL: return "gl(" + std::to_string(n) + ")";
        case Family::P: return "p(" + std::to_string(n) + ")";
        case Family::T: return "t(" + std::to_string(n) + ")";
        case Family::SD: return "sd(" + std::to_string(n) + ")";
        case Family::G:
            return "g(" + std::to_string(ell) + "," + std::to_string(n) + ")";
    }
    return "?";
}

bool FamilyId::operator<(const FamilyId& o) const {
    return std::tie(family, ell, n) < std::tie(o.family, o.ell, o.n);
}

const ZetaPoly& p_zeta(int n) {
    FamilyId::p(n).validate();
    static Memo<int> memo;
    return memo.get(n, [n] {
        if (n == 1) return ZetaPoly::term(DimensionPoly(1), RationalPoly(1));
        ZetaPoly z = p_zeta(n - 1).subst(dim_of(qpow(n - 1) - 1));
        z += greens::gl_zeta(n - 1);
        return z;
    });
}

const ZetaPoly& t_zeta(int n) {
    FamilyId::t(n).validate();
    static Memo<int> memo;
    return memo.get(n, [n] {
        RationalPoly q = RationalPoly::var();
        if (n == 2) return ZetaPoly::term(DimensionPoly(1), q);
        ZetaPoly z = greens::gl_zeta(n - 2).subst(dim_of(qpow(n - 2))).scaled(q - 1);
        z += t_zeta(n - 1).subst(dim_of(qpow(n - 2) - 1));
        z += p_zeta(n - 1);
        return z;
    });
}

const ZetaPoly& sd_zeta(int n) {
    FamilyId::sd(n).validate();
    static Memo<int> memo;
    return memo.get(n, [n] {
        RationalPoly q = RationalPoly::var();
        ZetaPoly z = greens::gl_zeta(n);
        z += p_zeta(n).subst(dim_of(qpow(n) - 1)).scaled(RationalPoly(2));
        z += t_zeta(n).subst(dim_of((qpow(n) - 1) * (qpow(n - 1) - 1)));
        z += greens::gl_zeta(n - 1).subst(dim_of(qpow(n - 1) * (qpow(n) - 1))).scaled(q - 1);
        return z;
    });
}

const ZetaPoly& g_zeta(int ell, int n) {
    FamilyId::g(ell, n).validate();
    static Memo<std::pair<int, int>> memo;
    return memo.get({ell, n}, [ell, n] {
        RationalPoly q = RationalPoly::var();
        RationalPoly pre = qpow(ell - 2) * (q - 1);
        ZetaPoly z = greens::gl_zeta(n).subst(dim_of(qpow(n))).scaled(pre * (q - 1));
        z += sd_zeta(n).scaled(pre);
        return z;
    });
}

const ZetaPoly& family_zeta(const FamilyId& f) {
    f.validate();
    switch (f.family) {
        case Family::GL: return greens::gl_zeta(f.n);
        case Family::P: return p_zeta(f.n);
        case Family::T: return t_zeta(f.n);
        case Family::SD: return sd_zeta(f.n);
        case Family::G: return g_zeta(f.ell, f.n);
    }
    throw std::invalid_argument("unknown family");
}

RationalPoly gl_order(int n) {
    if (n < 0) throw std::invalid_argument("gl_order requires n >= 0");
    RationalPoly prod(1);
    for (int k = 0; k < n; ++k) prod *= qpow(n) - qpow(k);
    return prod;
}

RationalPoly order_poly(const FamilyId& f) {
    f.validate();
    RationalPoly q = RationalPoly::var();
    switch (f.family) {
        case Family::GL: return gl_order(f.n);
        case Family::P: return qpow(f.n - 1) * gl_order(f.n - 1);
        case Family::T: return qpow(2 * f.n - 3) * gl_order(f.n - 2);
        case Family::SD: return qpow(2 * f.n) * gl_order(f.n);
        case Family::G:
            return qpow(f.ell - 1) * (q - 1) * qpow(2 * f.n) * gl_order(f.n);
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace rzeta::towers
