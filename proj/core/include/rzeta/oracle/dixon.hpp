#pragma once

#include "rzeta/oracle/group.hpp"
#include "rzeta/zetapoly.hpp"

namespace rzeta::oracle {

/// Irreducible character degrees of the group by the Burnside-Dixon
/// class-algebra method: common eigenvectors of the class multiplication
/// matrices over a prime field F_r with r = 1 mod exponent(G) and
/// r > 2 sqrt(|G|), degrees recovered from the second orthogonality
/// relation. Requires conjugacy_classes(g) to have run.
DimensionMultiset dixon_degrees(const GroupTable& g);

}  // namespace rzeta::oracle
