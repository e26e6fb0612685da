#include "rzeta/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace rzeta {

RationalPoly::RationalPoly(Rational c) {
    if (c != 0) coeffs_.push_back(std::move(c));
}

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    canonicalize();
}

void RationalPoly::canonicalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPoly RationalPoly::var() { return monomial(1); }

RationalPoly RationalPoly::monomial(unsigned k, const Rational& c) {
    if (c == 0) return {};
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return RationalPoly(std::move(v));
}

Rational RationalPoly::coeff(unsigned k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational RationalPoly::leading() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

bool RationalPoly::is_integral() const {
    for (const auto& c : coeffs_)
        if (denominator(c) != 1) return false;
    return true;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    canonicalize();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    canonicalize();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    canonicalize();
    return *this;
}

RationalPoly RationalPoly::operator-() const {
    RationalPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Rational RationalPoly::eval(const Int& q0) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q0 + *it;
    return acc;
}

RationalPoly RationalPoly::subst_power(unsigned d) const {
    if (d == 0) throw Error("subst_power requires d >= 1");
    if (is_zero() || d == 1) return *this;
    std::vector<Rational> out(static_cast<std::size_t>(degree()) * d + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * d] = coeffs_[i];
    return RationalPoly(std::move(out));
}

RationalPoly divexact(const RationalPoly& a, const RationalPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return {};
    if (a.degree() < b.degree())
        throw NonExactDivision("degree of dividend below divisor: (" + a.to_string() +
                               ") / (" + b.to_string() + ")");
    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> quot(a.degree() - b.degree() + 1, Rational(0));
    const auto& bc = b.coeffs();
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        Rational f = rem[k + b.degree()] / bc.back();
        quot[k] = f;
        if (f == 0) continue;
        for (std::size_t i = 0; i < bc.size(); ++i) rem[k + i] -= f * bc[i];
    }
    for (const auto& c : rem)
        if (c != 0)
            throw NonExactDivision("nonzero remainder: (" + a.to_string() + ") / (" +
                                   b.to_string() + ")");
    return RationalPoly(std::move(quot));
}

RationalPoly binomial_multiset(const RationalPoly& m, unsigned k) {
    RationalPoly prod(1);
    Int fact = 1;
    for (unsigned i = 0; i < k; ++i) {
        prod *= m - RationalPoly(static_cast<int>(i));
        fact *= i + 1;
    }
    return prod * RationalPoly(Rational(1, fact));
}

RationalPoly poly_pow(const RationalPoly& a, unsigned k) {
    RationalPoly r(1);
    for (unsigned i = 0; i < k; ++i) r *= a;
    return r;
}

std::string RationalPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeffs_[k];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (a != 1 || k == 0) os << a.str();
        if (k >= 1) {
            if (a != 1) os << "*";
            os << "q";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

DimensionPoly::DimensionPoly(int c) {
    if (c != 0) coeffs_.push_back(Int(c));
}

DimensionPoly::DimensionPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    canonicalize();
}

void DimensionPoly::canonicalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

DimensionPoly DimensionPoly::var() { return DimensionPoly(std::vector<Int>{0, 1}); }

DimensionPoly DimensionPoly::from(const RationalPoly& a) {
    std::vector<Int> out;
    out.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) {
        if (denominator(c) != 1)
            throw NonExactDivision("non-integral coefficient in dimension polynomial: " +
                                   a.to_string());
        out.push_back(numerator(c));
    }
    return DimensionPoly(std::move(out));
}

Int DimensionPoly::eval(const Int& q0) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q0 + *it;
    return acc;
}

RationalPoly DimensionPoly::to_rational() const {
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.emplace_back(c);
    return RationalPoly(std::move(out));
}

DimensionPoly DimensionPoly::operator*(const DimensionPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return DimensionPoly(std::move(out));
}

int DimensionPoly::compare(const DimensionPoly& a, const DimensionPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int k = a.degree(); k >= 0; --k) {
        if (a.coeffs_[k] != b.coeffs_[k]) return a.coeffs_[k] < b.coeffs_[k] ? -1 : 1;
    }
    return 0;
}

std::string DimensionPoly::to_string() const { return to_rational().to_string(); }

}  // namespace rzeta
