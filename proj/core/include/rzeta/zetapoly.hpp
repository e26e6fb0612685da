#pragma once

#include <cstddef>
#include <map>

#include "rzeta/qpoly.hpp"

namespace rzeta {

/// Multiset of irreducible character degrees of one concrete finite group:
/// dimension -> number of irreducibles of that dimension.
class DimensionMultiset {
public:
    DimensionMultiset() = default;

    void add(const Int& dim, const Int& count);
    const std::map<Int, Int>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    Int class_count() const;   // sum of counts
    Int sum_of_squares() const;  // sum of count * dim^2 == |G|

    bool operator==(const DimensionMultiset&) const = default;

private:
    std::map<Int, Int> entries_;
};

/// Representation zeta polynomial with q-symbolic data: a finite sum of
/// terms m(q) * D^{d(q)}, stored as dimension polynomial -> multiplicity
/// polynomial. Terms are kept in the canonical dimension order and no term
/// has zero multiplicity.
class ZetaPoly {
public:
    using TermMap = std::map<DimensionPoly, RationalPoly, DimensionPolyLess>;

    ZetaPoly() = default;
    static ZetaPoly term(DimensionPoly dim, RationalPoly mult);

    /// Merge one term in; equal dimension keys add multiplicities and zero
    /// multiplicities drop out.
    void add_term(const DimensionPoly& dim, const RationalPoly& mult);

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    ZetaPoly& operator+=(const ZetaPoly& o);
    friend ZetaPoly operator+(ZetaPoly a, const ZetaPoly& b) { return a += b; }

    /// Every multiplicity scaled by c; zero c empties the polynomial.
    ZetaPoly scaled(const RationalPoly& c) const;

    /// D -> D^{e(q)}: every dimension key multiplied by e, colliding keys
    /// merged. Throws ZeroExponent when e == 0.
    ZetaPoly subst(const DimensionPoly& e) const;

    /// Evaluate at a concrete residue cardinality q0 >= 2. Dimensions that
    /// coincide numerically merge; multiplicities must come out nonnegative
    /// integers and dimensions positive integers.
    DimensionMultiset eval_at(const Int& q0) const;

    /// Sum of multiplicities: the conjugacy class count as a polynomial.
    RationalPoly count() const;

    /// Sum of multiplicity * dimension^2: the group order as a polynomial.
    RationalPoly second_moment() const;

    bool operator==(const ZetaPoly&) const = default;

private:
    TermMap terms_;
};

}  // namespace rzeta
