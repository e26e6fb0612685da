// Acceptance suite: every check below guards one release criterion and
// prints exactly one PASS/FAIL line. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <map>
#include <string>
#include <vector>

#include "rzeta/greens.hpp"
#include "rzeta/oracle/verify.hpp"
#include "rzeta/towers.hpp"

using namespace rzeta;
using namespace rzeta::towers;
using oracle::RingKind;
using oracle::VerifyReport;

namespace {

const RationalPoly q = RationalPoly::var();

DimensionPoly dim(const RationalPoly& a) { return DimensionPoly::from(a); }

RationalPoly half(const RationalPoly& a) { return a * RationalPoly(Rational(1, 2)); }

int failures = 0;

void criterion(int number, const std::string& what, double limit_seconds,
               const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && secs >= limit_seconds) {
        ok = false;
        error = "time limit exceeded";
    }
    if (!ok) ++failures;
    std::printf("%s  criterion %d (%6.2fs): %s%s%s\n", ok ? "PASS" : "FAIL", number, secs,
                what.c_str(), error.empty() ? "" : " -- ", error.c_str());
    std::fflush(stdout);
}

ZetaPoly gl2_expected() {
    ZetaPoly z;
    z.add_term(dim(RationalPoly(1)), q - 1);
    z.add_term(dim(q - 1), half(q * (q - 1)));
    z.add_term(dim(q), q - 1);
    z.add_term(dim(q + 1), half((q - 1) * (q - 2)));
    return z;
}

ZetaPoly g32_expected() {
    RationalPoly q2 = q * q, q3 = q * q * q;
    RationalPoly w = q * (q - 1) * (q - 1);
    ZetaPoly z;
    z.add_term(dim(RationalPoly(1)), w);
    z.add_term(dim(q - 1), half(q * w));
    z.add_term(dim(q), w);
    z.add_term(dim(q + 1), half(w * (q - 2)));
    z.add_term(dim((q - 1) * (q + 1)), w * 2);
    z.add_term(dim(q2), w * (q - 1));
    z.add_term(dim((q - 1) * (q - 1) * (q + 1)), q * (q - 1) * (q + 2));
    z.add_term(dim(q2 * (q - 1)), half(q * w * (q - 1)));
    z.add_term(dim(q * (q - 1) * (q + 1)), w * (q - 1));
    z.add_term(dim(q3), w * (q - 1));
    z.add_term(dim(q2 * (q + 1)), half(w * (q - 1) * (q - 2)));
    return z;
}

DimensionMultiset ms_of(std::initializer_list<std::pair<int, int>> entries) {
    DimensionMultiset ms;
    for (auto [d, c] : entries) ms.add(d, c);
    return ms;
}

struct OracleCase {
    FamilyId family;
    int p;
    RingKind kind;
};

bool operator<(const OracleCase& a, const OracleCase& b) {
    if (!(a.family == b.family)) return a.family < b.family;
    if (a.p != b.p) return a.p < b.p;
    return a.kind < b.kind;
}

}  // namespace

int main() {
    criterion(1, "gl_zeta(2) equals the four-term closed form", 1.0, [] {
        return greens::gl_zeta(2) == gl2_expected();
    });

    criterion(2, "g_zeta(3,2) equals the eleven-term closed form", 1.0, [] {
        return g_zeta(3, 2) == g32_expected();
    });

    criterion(3, "g_zeta(2,3) has 24 terms with dimension degree at most 6", 5.0, [] {
        const ZetaPoly& z = g_zeta(2, 3);
        if (z.size() != 24) return false;
        for (const auto& [d, m] : z.terms())
            if (d.degree() > 6) return false;
        return true;
    });

    criterion(4, "second moments equal order polynomials across all families", 60.0, [] {
        for (int n = 0; n <= 6; ++n)
            if (greens::gl_zeta(n).second_moment() != order_poly(FamilyId::gl(n))) return false;
        for (int n = 1; n <= 6; ++n)
            if (p_zeta(n).second_moment() != order_poly(FamilyId::p(n))) return false;
        for (int n = 2; n <= 6; ++n)
            if (t_zeta(n).second_moment() != order_poly(FamilyId::t(n))) return false;
        for (int n = 2; n <= 5; ++n)
            if (sd_zeta(n).second_moment() != order_poly(FamilyId::sd(n))) return false;
        for (int ell = 2; ell <= 6; ++ell)
            for (int n = 2; n <= 5; ++n)
                if (g_zeta(ell, n).second_moment() != order_poly(FamilyId::g(ell, n)))
                    return false;
        return true;
    });

    criterion(5, "g_zeta(ell+1,n) = q * g_zeta(ell,n)", 0, [] {
        for (int ell = 2; ell <= 5; ++ell)
            for (int n = 2; n <= 3; ++n)
                if (!(g_zeta(ell + 1, n) == g_zeta(ell, n).scaled(q))) return false;
        return true;
    });

    criterion(6, "integrality of every family at q in {2,3,4,5,7,8,9}", 60.0, [] {
        // eval_at throws unless every multiplicity is a nonnegative integer
        // and every dimension a positive integer
        for (int qv : {2, 3, 4, 5, 7, 8, 9}) {
            for (int n = 0; n <= 6; ++n) greens::gl_zeta(n).eval_at(qv);
            for (int n = 1; n <= 6; ++n) p_zeta(n).eval_at(qv);
            for (int n = 2; n <= 6; ++n) t_zeta(n).eval_at(qv);
            for (int n = 2; n <= 5; ++n) sd_zeta(n).eval_at(qv);
            for (int ell = 2; ell <= 6; ++ell)
                for (int n = 2; n <= 5; ++n) g_zeta(ell, n).eval_at(qv);
        }
        return true;
    });

    // Oracle-backed criteria share one table of brute-force runs.
    std::vector<OracleCase> cases = {
        {FamilyId::gl(2), 2, RingKind::IntegersMod},
        {FamilyId::gl(2), 3, RingKind::IntegersMod},
        {FamilyId::gl(3), 2, RingKind::IntegersMod},
        {FamilyId::p(2), 2, RingKind::IntegersMod},
        {FamilyId::p(2), 3, RingKind::IntegersMod},
        {FamilyId::p(3), 2, RingKind::IntegersMod},
        {FamilyId::t(2), 2, RingKind::IntegersMod},
        {FamilyId::t(2), 3, RingKind::IntegersMod},
        {FamilyId::t(3), 2, RingKind::IntegersMod},
        {FamilyId::t(3), 3, RingKind::IntegersMod},
        {FamilyId::sd(2), 2, RingKind::IntegersMod},
        {FamilyId::g(2, 2), 2, RingKind::IntegersMod},
        {FamilyId::g(2, 2), 3, RingKind::IntegersMod},
        {FamilyId::g(3, 2), 2, RingKind::IntegersMod},
        {FamilyId::g(2, 2), 2, RingKind::TruncatedPoly},
        {FamilyId::g(2, 2), 3, RingKind::TruncatedPoly},
        {FamilyId::g(3, 2), 2, RingKind::TruncatedPoly},
    };
    std::map<OracleCase, VerifyReport> reports;

    criterion(7, "formula degrees equal Burnside-Dixon degrees on all listed groups", 600.0,
              [&] {
                  std::vector<std::future<VerifyReport>> futs;
                  futs.reserve(cases.size());
                  for (const auto& c : cases)
                      futs.push_back(std::async(std::launch::async, [c] {
                          return oracle::compare_with_formula(c.family, c.p, c.kind);
                      }));
                  for (std::size_t i = 0; i < cases.size(); ++i)
                      reports.emplace(cases[i], futs[i].get());
                  for (std::size_t i = 0; i < 14; ++i) {  // the zmod cases
                      const VerifyReport& r = reports.at(cases[i]);
                      if (!r.match()) return false;
                  }
                  return true;
              });

    criterion(8, "Z/p^l and F_p[t]/t^l groups have identical degree multisets", 600.0, [&] {
        std::vector<std::pair<int, int>> params = {{2, 2}, {2, 3}, {3, 2}};  // (ell, p)
        for (auto [ell, p] : params) {
            const auto& a = reports.at({FamilyId::g(ell, 2), p, RingKind::IntegersMod});
            const auto& b = reports.at({FamilyId::g(ell, 2), p, RingKind::TruncatedPoly});
            if (!(a.oracle_degrees == b.oracle_degrees)) return false;
        }
        return true;
    });

    criterion(9, "g_zeta(3,2) at q=2 reproduces the oracle multiset of the order-384 group", 0,
              [&] {
                  DimensionMultiset expect = ms_of({{1, 4}, {2, 2}, {3, 12}, {4, 4}, {6, 2}, {8, 2}});
                  const auto& oracle_run = reports.at({FamilyId::g(3, 2), 2, RingKind::IntegersMod});
                  if (!(oracle_run.oracle_degrees == expect)) return false;
                  if (!(g_zeta(3, 2).eval_at(2) == expect)) return false;
                  return expect.sum_of_squares() == 384;
              });

    std::printf("%s: %d criteria failed\n", failures == 0 ? "OK" : "FAILURES", failures);
    return failures;
}
