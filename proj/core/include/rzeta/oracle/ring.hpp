#pragma once

#include <string>
#include <vector>

#include "rzeta/errors.hpp"

namespace rzeta::oracle {

enum class RingKind {
    IntegersMod,    // Z / p^l
    TruncatedPoly,  // F_p[t] / t^l
};

std::string ring_kind_name(RingKind k);

/// Truncated valuation ring o_l of size p^l with exact table arithmetic.
/// Elements are canonical codes 0..p^l-1: the residue itself for Z/p^l,
/// base-p digit strings (digit i = coefficient of t^i) for F_p[t]/t^l.
/// In both encodings the code of a * pi^k (0 <= a < p) is a * p^k.
class ResidueRing {
public:
    ResidueRing(int p, int ell, RingKind kind);

    int p() const { return p_; }
    int ell() const { return ell_; }
    RingKind kind() const { return kind_; }
    int size() const { return size_; }

    int add(int a, int b) const { return add_[a * size_ + b]; }
    int mul(int a, int b) const { return mul_[a * size_ + b]; }
    int neg(int a) const { return neg_[a]; }

    /// Reduction mod the maximal ideal, landing in 0..p-1.
    int residue(int a) const { return a % p_; }
    bool is_unit(int a) const { return residue(a) != 0; }
    const std::vector<int>& units() const { return units_; }
    int unit_inverse(int a) const;

    /// Code of a * pi^k for a residue digit 0 <= a < p.
    int pi_pow_times(int a, int k) const;

private:
    int p_, ell_, size_;
    RingKind kind_;
    std::vector<int> add_, mul_, neg_;
    std::vector<int> units_;
};

bool is_prime(int p);

}  // namespace rzeta::oracle
