#pragma once

#include <string>

#include "rzeta/zetapoly.hpp"

namespace rzeta::towers {

enum class Family { GL, P, T, SD, G };

/// Identifies one group in the supported families:
///   GL(n)  : GL_n over the residue field, n >= 0
///   P(n)   : stabiliser of the first coordinate functional, n >= 1
///   T(n)   : two-row stabiliser subgroup, n >= 2
///   SD(n)  : (o_1^n x o_1^n) semidirect GL_n, n >= 2
///   G(l,n) : automorphisms of o_l + o_1^n, l >= 2, n >= 2
struct FamilyId {
    Family family = Family::GL;
    int n = 0;
    int ell = 0;  // meaningful for G only

    static FamilyId gl(int n) { return {Family::GL, n, 0}; }
    static FamilyId p(int n) { return {Family::P, n, 0}; }
    static FamilyId t(int n) { return {Family::T, n, 0}; }
    static FamilyId sd(int n) { return {Family::SD, n, 0}; }
    static FamilyId g(int ell, int n) { return {Family::G, n, ell}; }

    void validate() const;  // throws std::invalid_argument out of range
    std::string name() const;

    bool operator==(const FamilyId&) const = default;
    bool operator<(const FamilyId& o) const;
};

/// Zeta polynomial of P_n: base P_1 = D, then
/// P_n = P_{n-1}(D^{q^{n-1}-1}) + GL_{n-1}(D).
const ZetaPoly& p_zeta(int n);

/// Zeta polynomial of T_n: base T_2 = qD, then
/// T_n = (q-1) GL_{n-2}(D^{q^{n-2}}) + T_{n-1}(D^{q^{n-2}-1}) + P_{n-1}(D).
const ZetaPoly& t_zeta(int n);

/// Zeta polynomial of (o_1^n x o_1^n) semidirect GL_n:
/// GL_n(D) + 2 P_n(D^{q^n-1}) + T_n(D^{(q^n-1)(q^{n-1}-1)})
///         + (q-1) GL_{n-1}(D^{q^{n-1}(q^n-1)}).
const ZetaPoly& sd_zeta(int n);

/// Zeta polynomial of G(l,n):
/// q^{l-2}(q-1)^2 GL_n(D^{q^n}) + q^{l-2}(q-1) SD_n(D).
const ZetaPoly& g_zeta(int ell, int n);

/// Dispatch on the family id.
const ZetaPoly& family_zeta(const FamilyId& f);

/// prod_{k=0}^{n-1} (q^n - q^k).
RationalPoly gl_order(int n);

/// Group order as an exact polynomial in q.
RationalPoly order_poly(const FamilyId& f);

}  // namespace rzeta::towers
