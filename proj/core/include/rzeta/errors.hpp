#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rzeta {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("polynomial division by zero") {}
};

struct NonExactDivision : Error {
    explicit NonExactDivision(const std::string& what) : Error(what) {}
};

struct ZeroExponent : Error {
    ZeroExponent() : Error("substitution exponent polynomial is zero") {}
};

struct NonIntegralMultiplicity : Error {
    explicit NonIntegralMultiplicity(const std::string& what) : Error(what) {}
};

struct NonPositiveDimension : Error {
    explicit NonPositiveDimension(const std::string& what) : Error(what) {}
};

struct InvalidPrime : Error {
    explicit InvalidPrime(const std::string& what) : Error(what) {}
};

struct OrderCapExceeded : Error {
    std::uint64_t order;
    OrderCapExceeded(std::uint64_t order_, std::uint64_t cap)
        : Error("group order " + std::to_string(order_) + " exceeds cap " +
                std::to_string(cap)),
          order(order_) {}
};

struct NoSuitablePrime : Error {
    explicit NoSuitablePrime(const std::string& what) : Error(what) {}
};

struct EigenvectorFailure : Error {
    explicit EigenvectorFailure(const std::string& what) : Error(what) {}
};

}  // namespace rzeta
