#pragma once

#include "rzeta/oracle/dixon.hpp"
#include "rzeta/oracle/group.hpp"

namespace rzeta::oracle {

/// Outcome of one formula-versus-brute-force comparison. A mismatch is a
/// result, not an error.
struct VerifyReport {
    towers::FamilyId family;
    int p = 0;
    RingKind kind = RingKind::IntegersMod;

    std::uint64_t group_order = 0;
    Int formula_order;
    std::size_t classes = 0;
    Int formula_classes;

    DimensionMultiset oracle_degrees;
    DimensionMultiset formula_degrees;

    bool degrees_match = false;
    bool class_count_match = false;
    bool order_match = false;

    bool match() const { return degrees_match && class_count_match && order_match; }
};

/// Build the group over the given ring kind, run the Dixon oracle, and
/// compare against the symbolic zeta polynomial evaluated at q = p.
VerifyReport compare_with_formula(const towers::FamilyId& f, int p, RingKind kind,
                                  std::uint64_t max_order = 500000);

}  // namespace rzeta::oracle
