#include "rzeta/oracle/verify.hpp"

namespace rzeta::oracle {

VerifyReport compare_with_formula(const towers::FamilyId& f, int p, RingKind kind,
                                  std::uint64_t max_order) {
    f.validate();
    if (!is_prime(p)) throw InvalidPrime("p = " + std::to_string(p) + " is not prime");

    VerifyReport rep;
    rep.family = f;
    rep.p = p;
    rep.kind = kind;

    const int ell = f.family == towers::Family::G ? f.ell : 1;
    ResidueRing ring(p, ell, kind);

    GroupTable g = build_group(f, ring, max_order);
    conjugacy_classes(g);
    rep.group_order = g.order();
    rep.classes = g.class_count();
    rep.oracle_degrees = dixon_degrees(g);

    const ZetaPoly& zeta = towers::family_zeta(f);
    rep.formula_degrees = zeta.eval_at(p);
    rep.formula_order = numerator(towers::order_poly(f).eval(p));
    rep.formula_classes = numerator(zeta.count().eval(p));

    rep.degrees_match = rep.oracle_degrees == rep.formula_degrees;
    rep.order_match = Int(rep.group_order) == rep.formula_order;
    rep.class_count_match = Int(rep.classes) == rep.formula_classes;
    return rep;
}

}  // namespace rzeta::oracle
