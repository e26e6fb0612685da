#pragma once

#include <utility>
#include <vector>

#include "rzeta/zetapoly.hpp"

namespace rzeta::greens {

/// Partition of a natural number: weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    int size() const;
    bool operator==(const Partition&) const = default;
};

/// All partitions of n, each once, largest-first (reverse lexicographic):
/// (n), (n-1,1), ..., (1^n). partitions(0) is the single empty partition.
std::vector<Partition> partitions(int n);

struct PartitionStats {
    std::vector<int> hooks;  // hook lengths of all cells, descending
    int nstat;               // sum over rows of (i-1) * lambda_i
};
PartitionStats partition_stats(const Partition& p);

/// Number of size-d Frobenius orbits on characters of the multiplicative
/// group of the degree-d extension of the residue field:
/// (1/d) * sum over e | d of mu(d/e) (q^e - 1).
RationalPoly necklace_count(int d);

/// One family of irreducible characters of GL_n(F_q) sharing a polynomial
/// degree: a multiset of (Frobenius orbit degree, partition) pairs with
/// sum of d * |lambda| equal to n. Repeated pairs mean distinct orbits of
/// the same degree carrying equal partitions.
struct GLType {
    std::vector<std::pair<int, Partition>> orbits;  // canonically sorted

    int weight() const;
    bool operator==(const GLType&) const = default;
};

/// All types of weight n, each once, in a deterministic order.
std::vector<GLType> enumerate_types(int n);

/// Common character degree of the family: psi_n(q) * prod q^{d*n(lambda)}
/// divided by prod over cells (q^{d*h} - 1), with psi_n = prod_{k=1..n}
/// (q^k - 1). The quotient is an exact integer polynomial.
DimensionPoly type_degree(const GLType& t, int n);

/// Number of characters in the family: per orbit degree d, a falling
/// factorial of necklace_count(d) divided by the repetition factorials.
RationalPoly type_count(const GLType& t);

/// Representation zeta polynomial of GL_n(F_q), symbolic in q. Memoized;
/// gl_zeta(0) is the zeta polynomial of the trivial group.
const ZetaPoly& gl_zeta(int n);

}  // namespace rzeta::greens
