#pragma once

#include <string>

#include "rzeta/oracle/verify.hpp"
#include "rzeta/zetapoly.hpp"

namespace rzeta::io {

/// Coefficient list as a JSON array of "num/den" strings (den omitted when
/// 1), ascending exponent; q^2 - 1 becomes ["-1","0","1"].
std::string to_json(const RationalPoly& a);

/// {"terms":[{"dim":[ints...],"mult":["num/den",...]} ...]} with terms in
/// canonical order and coefficients ascending.
std::string to_json(const ZetaPoly& z);
ZetaPoly zeta_from_json(const std::string& text);

/// {"<dim>": count, ...} with dimensions ascending.
std::string to_json(const DimensionMultiset& ms);

/// "dimension,count" rows, ascending dimension.
std::string to_csv(const DimensionMultiset& ms);

/// Terms in canonical order; multiplicities with the rational content pulled
/// into a \frac and the q-power split off, e.g. \frac{1}{2}q(q-1)\mathcal{D}^{q-1}.
std::string to_latex(const ZetaPoly& z);

std::string to_json(const oracle::VerifyReport& rep);

}  // namespace rzeta::io
