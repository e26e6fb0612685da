#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rzeta/oracle/ring.hpp"
#include "rzeta/towers.hpp"

namespace rzeta::oracle {

/// Explicit finite group: the full element list (packed block codes, sorted
/// ascending), a composition rule on codes, and, once computed, the
/// conjugacy class partition.
struct GroupTable {
    std::string label;
    int p = 0;
    RingKind kind = RingKind::IntegersMod;

    std::vector<std::uint64_t> codes;  // sorted; element index = position
    std::uint64_t identity_code = 0;
    std::vector<std::uint32_t> generators;  // indices of a generating set
    std::function<std::uint64_t(std::uint64_t, std::uint64_t)> mul_code;

    // filled by conjugacy_classes()
    std::vector<std::int32_t> class_of;      // element index -> class index
    std::vector<std::uint32_t> class_reps;   // smallest element index per class
    std::vector<std::uint32_t> class_sizes;

    std::size_t order() const { return codes.size(); }
    std::size_t class_count() const { return class_reps.size(); }

    std::uint32_t index_of(std::uint64_t code) const;  // throws if absent
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t identity() const { return index_of(identity_code); }
    std::uint32_t inverse(std::uint32_t a) const;
    std::uint64_t element_order(std::uint32_t a) const;
};

/// Build the group by exhaustive block-wise enumeration. The ring must be
/// the residue field (ell = 1) for GL/P/T/SD and o_ell for family G. The
/// order is predicted from order_poly first; OrderCapExceeded if above cap.
GroupTable build_group(const towers::FamilyId& f, const ResidueRing& ring,
                       std::uint64_t max_order = 500000);

/// Partition into conjugacy classes by orbit sweeps of conjugation by the
/// generating set; classes ordered by smallest element index.
void conjugacy_classes(GroupTable& g);

}  // namespace rzeta::oracle
