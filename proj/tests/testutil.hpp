#pragma once

#include <random>
#include <vector>

#include "rzeta/qpoly.hpp"
#include "rzeta/zetapoly.hpp"

namespace testutil {

inline rzeta::RationalPoly random_poly(std::mt19937& rng, int max_deg = 8, int max_num = 50,
                                       int max_den = 10) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    std::vector<rzeta::Rational> coeffs(deg(rng) + 1);
    for (auto& c : coeffs) c = rzeta::Rational(num(rng), den(rng));
    return rzeta::RationalPoly(std::move(coeffs));
}

// Dimension polynomial with nonnegative coefficients and positive constant
// term, so it evaluates positive at every q >= 2.
inline rzeta::DimensionPoly random_dim(std::mt19937& rng, int max_deg = 3) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coef(0, 4);
    std::vector<rzeta::Int> coeffs(deg(rng) + 1);
    for (auto& c : coeffs) c = coef(rng);
    coeffs[0] = coef(rng) + 1;
    return rzeta::DimensionPoly(std::move(coeffs));
}

// Zeta polynomial whose multiplicities have nonnegative integer
// coefficients, valid for evaluation at any q >= 2.
inline rzeta::ZetaPoly random_zeta(std::mt19937& rng, int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coef(0, 3);
    std::uniform_int_distribution<int> deg(0, 2);
    rzeta::ZetaPoly z;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        std::vector<rzeta::Rational> mc(deg(rng) + 1);
        for (auto& c : mc) c = coef(rng);
        z.add_term(random_dim(rng), rzeta::RationalPoly(std::move(mc)));
    }
    return z;
}

}  // namespace testutil
