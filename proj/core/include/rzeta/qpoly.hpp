#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "rzeta/errors.hpp"

namespace rzeta {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Univariate polynomial in the residue cardinality q with exact rational
/// coefficients. Canonical form: coefficients ascending by exponent, no
/// trailing zeros; the zero polynomial is the empty coefficient list.
class RationalPoly {
public:
    RationalPoly() = default;
    RationalPoly(int c) : RationalPoly(Rational(c)) {}
    RationalPoly(const Int& c) : RationalPoly(Rational(c)) {}
    RationalPoly(Rational c);
    explicit RationalPoly(std::vector<Rational> coeffs);

    static RationalPoly var();  // the polynomial q
    static RationalPoly monomial(unsigned k, const Rational& c = 1);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(unsigned k) const;
    Rational leading() const;
    bool is_integral() const;  // all coefficients in Z

    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator-=(const RationalPoly& o);
    RationalPoly& operator*=(const RationalPoly& o);
    RationalPoly operator-() const;

    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }

    bool operator==(const RationalPoly&) const = default;

    /// Exact evaluation at an integer point.
    Rational eval(const Int& q0) const;

    /// a(q) -> a(q^d), d >= 1.
    RationalPoly subst_power(unsigned d) const;

    std::string to_string() const;  // human-readable, descending powers

private:
    void canonicalize();
    std::vector<Rational> coeffs_;
};

/// Quotient c with b*c == a; throws NonExactDivision if the remainder is
/// nonzero, DivisionByZero if b == 0.
RationalPoly divexact(const RationalPoly& a, const RationalPoly& b);

/// m(m-1)...(m-k+1)/k!; counts unordered choices of k distinct objects out
/// of a polynomial-valued supply m.
RationalPoly binomial_multiset(const RationalPoly& m, unsigned k);

RationalPoly poly_pow(const RationalPoly& a, unsigned k);

/// Univariate polynomial over Z; the exponent of the formal dimension
/// variable in a zeta polynomial term. Same canonical form as RationalPoly.
class DimensionPoly {
public:
    DimensionPoly() = default;
    DimensionPoly(int c);
    explicit DimensionPoly(std::vector<Int> coeffs);

    static DimensionPoly var();
    /// Conversion from a rational polynomial; every coefficient must be an
    /// integer.
    static DimensionPoly from(const RationalPoly& a);

    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Int eval(const Int& q0) const;
    RationalPoly to_rational() const;

    DimensionPoly operator*(const DimensionPoly& o) const;

    bool operator==(const DimensionPoly&) const = default;

    /// Canonical total order: by degree, then coefficients compared from the
    /// highest exponent down. Returns <0, 0, >0.
    static int compare(const DimensionPoly& a, const DimensionPoly& b);

    std::string to_string() const;

private:
    void canonicalize();
    std::vector<Int> coeffs_;
};

struct DimensionPolyLess {
    bool operator()(const DimensionPoly& a, const DimensionPoly& b) const {
        return DimensionPoly::compare(a, b) < 0;
    }
};

}  // namespace rzeta
