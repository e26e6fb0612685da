#include "rzeta/zetapoly.hpp"

namespace rzeta {

void DimensionMultiset::add(const Int& dim, const Int& count) {
    if (count == 0) return;
    auto it = entries_.find(dim);
    if (it == entries_.end()) {
        entries_.emplace(dim, count);
    } else {
        it->second += count;
        if (it->second == 0) entries_.erase(it);
    }
}

Int DimensionMultiset::class_count() const {
    Int n = 0;
    for (const auto& [d, c] : entries_) n += c;
    return n;
}

Int DimensionMultiset::sum_of_squares() const {
    Int n = 0;
    for (const auto& [d, c] : entries_) n += c * d * d;
    return n;
}

ZetaPoly ZetaPoly::term(DimensionPoly dim, RationalPoly mult) {
    ZetaPoly z;
    z.add_term(dim, mult);
    return z;
}

void ZetaPoly::add_term(const DimensionPoly& dim, const RationalPoly& mult) {
    if (mult.is_zero()) return;
    auto it = terms_.find(dim);
    if (it == terms_.end()) {
        terms_.emplace(dim, mult);
    } else {
        it->second += mult;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ZetaPoly& ZetaPoly::operator+=(const ZetaPoly& o) {
    for (const auto& [d, m] : o.terms_) add_term(d, m);
    return *this;
}

ZetaPoly ZetaPoly::scaled(const RationalPoly& c) const {
    ZetaPoly out;
    if (c.is_zero()) return out;
    for (const auto& [d, m] : terms_) out.add_term(d, m * c);
    return out;
}

ZetaPoly ZetaPoly::subst(const DimensionPoly& e) const {
    if (e.is_zero()) throw ZeroExponent();
    ZetaPoly out;
    for (const auto& [d, m] : terms_) out.add_term(d * e, m);
    return out;
}

DimensionMultiset ZetaPoly::eval_at(const Int& q0) const {
    if (q0 < 2) throw Error("zeta polynomial evaluation requires q0 >= 2");
    DimensionMultiset ms;
    for (const auto& [d, m] : terms_) {
        Rational mv = m.eval(q0);
        if (denominator(mv) != 1 || mv < 0)
            throw NonIntegralMultiplicity("multiplicity " + m.to_string() + " at q=" +
                                          q0.str() + " is " + mv.str());
        if (mv == 0) continue;
        Int dv = d.eval(q0);
        if (dv <= 0)
            throw NonPositiveDimension("dimension " + d.to_string() + " at q=" + q0.str() +
                                       " is " + dv.str());
        ms.add(dv, numerator(mv));
    }
    return ms;
}

RationalPoly ZetaPoly::count() const {
    RationalPoly s;
    for (const auto& [d, m] : terms_) s += m;
    return s;
}

RationalPoly ZetaPoly::second_moment() const {
    RationalPoly s;
    for (const auto& [d, m] : terms_) {
        RationalPoly dr = d.to_rational();
        s += m * dr * dr;
    }
    return s;
}

}  // namespace rzeta
