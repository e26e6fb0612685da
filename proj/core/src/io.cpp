#include "rzeta/io.hpp"

#include <json.hpp>

#include <sstream>

namespace rzeta::io {

using json = nlohmann::ordered_json;

namespace {

std::string rational_str(const Rational& c) {
    if (denominator(c) == 1) return numerator(c).str();
    return numerator(c).str() + "/" + denominator(c).str();
}

Rational rational_from_str(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

json poly_json(const RationalPoly& a) {
    json arr = json::array();
    for (const auto& c : a.coeffs()) arr.push_back(rational_str(c));
    return arr;
}

json dim_json(const DimensionPoly& d) {
    json arr = json::array();
    for (const auto& c : d.coeffs()) arr.push_back(c.convert_to<long long>());
    return arr;
}

json multiset_json(const DimensionMultiset& ms) {
    json obj = json::object();
    for (const auto& [dim, count] : ms.entries()) obj[dim.str()] = count.convert_to<long long>();
    return obj;
}

std::string family_str(towers::Family f) {
    switch (f) {
        case towers::Family::GL: return "gl";
        case towers::Family::P: return "p";
        case towers::Family::T: return "t";
        case towers::Family::SD: return "sd";
        case towers::Family::G: return "g";
    }
    return "?";
}

// Expanded integer-coefficient polynomial in LaTeX, descending powers:
// q^{3}-q^{2}-q+1.
std::string latex_int_poly(const RationalPoly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = a.degree(); k >= 0; --k) {
        Rational c = a.coeff(k);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? "-" : "+");
        }
        Rational m = abs(c);
        if (m != 1 || k == 0) os << numerator(m).str();
        if (k == 1)
            os << "q";
        else if (k > 1)
            os << "q^{" << k << "}";
        first = false;
    }
    return os.str();
}

struct LatexTerm {
    bool negative = false;
    std::string body;
};

LatexTerm latex_term(const DimensionPoly& dim, const RationalPoly& mult) {
    // Split the multiplicity as content * q^k * core with core having
    // coprime integer coefficients, nonzero constant term and positive
    // leading coefficient.
    unsigned k = 0;
    while (mult.coeff(k) == 0) ++k;
    std::vector<Rational> shifted(mult.coeffs().begin() + k, mult.coeffs().end());

    Int num_gcd = 0, den_lcm = 1;
    for (const auto& c : shifted) {
        num_gcd = gcd(num_gcd, numerator(c));
        den_lcm = lcm(den_lcm, denominator(c));
    }
    Rational content(abs(num_gcd), den_lcm);
    bool negative = shifted.back() < 0;
    if (negative) content = -content;
    for (auto& c : shifted) c /= content;
    RationalPoly core{std::vector<Rational>(shifted)};
    content = abs(content);

    std::ostringstream os;
    if (denominator(content) != 1)
        os << "\\frac{" << numerator(content).str() << "}{" << denominator(content).str() << "}";
    else if (content != 1)
        os << numerator(content).str();
    if (k == 1)
        os << "q";
    else if (k > 1)
        os << "q^{" << k << "}";
    if (core != RationalPoly(1)) os << "(" << latex_int_poly(core) << ")";

    if (dim == DimensionPoly(1))
        os << "\\mathcal{D}";
    else
        os << "\\mathcal{D}^{" << latex_int_poly(dim.to_rational()) << "}";
    return {negative, os.str()};
}

}  // namespace

std::string to_json(const RationalPoly& a) { return poly_json(a).dump(); }

std::string to_json(const ZetaPoly& z) {
    json terms = json::array();
    for (const auto& [d, m] : z.terms())
        terms.push_back(json{{"dim", dim_json(d)}, {"mult", poly_json(m)}});
    return json{{"terms", terms}}.dump();
}

ZetaPoly zeta_from_json(const std::string& text) {
    json doc = json::parse(text);
    ZetaPoly z;
    for (const auto& t : doc.at("terms")) {
        std::vector<Int> dim;
        for (const auto& c : t.at("dim")) dim.emplace_back(c.get<long long>());
        std::vector<Rational> mult;
        for (const auto& c : t.at("mult")) mult.push_back(rational_from_str(c.get<std::string>()));
        z.add_term(DimensionPoly(std::move(dim)), RationalPoly(std::move(mult)));
    }
    return z;
}

std::string to_json(const DimensionMultiset& ms) { return multiset_json(ms).dump(); }

std::string to_csv(const DimensionMultiset& ms) {
    std::ostringstream os;
    for (const auto& [dim, count] : ms.entries()) os << dim.str() << "," << count.str() << "\n";
    return os.str();
}

std::string to_latex(const ZetaPoly& z) {
    if (z.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, m] : z.terms()) {
        LatexTerm t = latex_term(d, m);
        if (first)
            os << (t.negative ? "-" : "");
        else
            os << (t.negative ? " - " : " + ");
        os << t.body;
        first = false;
    }
    return os.str();
}

std::string to_json(const oracle::VerifyReport& rep) {
    json params = json::object();
    if (rep.family.family == towers::Family::G) params["ell"] = rep.family.ell;
    params["n"] = rep.family.n;
    json doc{{"family", family_str(rep.family.family)},
             {"params", params},
             {"p", rep.p},
             {"kind", oracle::ring_kind_name(rep.kind)},
             {"order", rep.group_order},
             {"classes", rep.classes},
             {"degrees", multiset_json(rep.oracle_degrees)},
             {"formula_degrees", multiset_json(rep.formula_degrees)},
             {"order_match", rep.order_match},
             {"class_count_match", rep.class_count_match},
             {"degrees_match", rep.degrees_match},
             {"match", rep.match()}};
    return doc.dump();
}

}  // namespace rzeta::io
