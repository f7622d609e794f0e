#include <doctest.h>

#include "spinlf/identity.hpp"
#include "spinlf/params.hpp"
#include "spinlf/report.hpp"

using namespace spinlf;

TEST_CASE("smallest odd case with explicit parameters") {
  IdentityCase c(IdentityFamily::AOdd, 1, 1);
  UnramifiedData pi{Rational(9), {Rational(2)}, {}, {}, {}};
  UnramifiedData tau{Rational(1), {Rational(5)}, {}, {}, {}};
  auto rep = verify_unramified_identity(c, pi, tau, 6);
  CHECK(rep.pass);
  CHECK(rep.kind == "identity");
  CHECK(rep.primary == "second-kind factor times zeta vs rankin-selberg");
  REQUIRE(rep.whittaker_consistent.has_value());
  CHECK(*rep.whittaker_consistent);
  REQUIRE(rep.comparisons.size() == 1);
  CHECK(rep.comparisons[0].coefficients.size() == 7);
  for (const auto& row : rep.comparisons[0].coefficients) CHECK(row.equal);
}

TEST_CASE("all parameters one gives the square of the geometric series") {
  IdentityCase c(IdentityFamily::AOdd, 1, 1);
  UnramifiedData pi{Rational(1), {Rational(1)}, {}, {}, {}};
  UnramifiedData tau{Rational(1), {Rational(1)}, {}, {}, {}};
  auto rep = verify_unramified_identity(c, pi, tau, 5);
  CHECK(rep.pass);
  for (const auto& row : rep.comparisons[0].coefficients)
    CHECK(row.lhs == Rational(row.index + 1));
}

TEST_CASE("even split case with explicit parameters") {
  IdentityCase c(IdentityFamily::AEvenSplit, 1, 2);
  UnramifiedData pi{Rational(4), {Rational(2), Rational(3)}, {}, {}, {}};
  UnramifiedData tau{Rational(1), {Rational(1, 7)}, {}, {}, {}};
  auto rep = verify_unramified_identity(c, pi, tau, 6);
  CHECK(rep.pass);
  REQUIRE(rep.whittaker_consistent.has_value());
  CHECK(*rep.whittaker_consistent);
}

TEST_CASE("quasi-split verdict tracks the reduced branch and documents the full one") {
  IdentityCase c(IdentityFamily::AEvenQuasiSplit, 1, 2);
  UnramifiedData pi;
  pi.chi = {Rational(2)};
  pi.a = Rational(5);
  pi.alpha = Rational(3);
  pi.beta = Rational(1);
  pi.chi0 = Rational(4);
  UnramifiedData tau{Rational(1), {Rational(3)}, {}, {}, {}};
  auto rep = verify_unramified_identity(c, pi, tau, 6);

  CHECK(rep.pass);
  CHECK(rep.primary == "reduced parameter in GSp_{2(m-1)}");
  REQUIRE(rep.comparisons.size() == 2);
  CHECK(rep.comparisons[0].label == "reduced parameter in GSp_{2(m-1)}");
  CHECK(rep.comparisons[0].pass);
  CHECK(rep.comparisons[0].strata.empty());

  const auto& full = rep.comparisons[1];
  CHECK(full.label == "full matrix with galois block");
  CHECK_FALSE(full.pass);
  // the failure is localized: strata rows are filled and at least one
  // pinpoints a degree where the full matrix overshoots
  CHECK_FALSE(full.strata.empty());
  bool some_unequal = false;
  for (const auto& row : full.strata) some_unequal = some_unequal || !row.equal;
  CHECK(some_unequal);
  REQUIRE(rep.whittaker_consistent.has_value());
  CHECK(*rep.whittaker_consistent);
  CHECK_FALSE(rep.notes.empty());
}

TEST_CASE("quasi-split failure rows are reproducible from the same input") {
  IdentityCase c(IdentityFamily::AEvenQuasiSplit, 1, 2);
  auto inst = random_identity_instance(c, 42);
  auto a = verify_unramified_identity(c, inst.pi, inst.tau, 6, MuExponent::HalfTrace, 42);
  auto b = verify_unramified_identity(c, inst.pi, inst.tau, 6, MuExponent::HalfTrace, 42);
  CHECK(render_json(a) == render_json(b));
}

TEST_CASE("full-trace exponent breaks the odd identity") {
  IdentityCase c(IdentityFamily::AOdd, 1, 1);
  auto inst = random_identity_instance(c, 3);
  auto rep = verify_unramified_identity(c, inst.pi, inst.tau, 6, MuExponent::FullTrace, 3);
  CHECK_FALSE(rep.pass);
  CHECK(rep.mu_exponent == "tr(delta)");
}

TEST_CASE("random instances pass across the a-family grid") {
  for (auto family : {IdentityFamily::AOdd, IdentityFamily::AEvenSplit,
                      IdentityFamily::AEvenQuasiSplit}) {
    int n = 1, m = 2;
    IdentityCase c(family, n, m);
    for (unsigned long long seed = 1; seed <= 3; ++seed) {
      auto inst = random_identity_instance(c, seed);
      auto rep = verify_unramified_identity(c, inst.pi, inst.tau, 8, MuExponent::HalfTrace, seed);
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("symmetric algebra check resolves the half-trace exponent") {
  SymAlgInstance inst(SimilitudeFamily::GSp, {Rational(2)}, Rational(9), {Rational(5)}, 2);
  auto rep = verify_symalg(inst);
  CHECK(rep.pass);
  CHECK(rep.kind == "symalg");
  CHECK(rep.primary == "mu exponent tr(delta)/2");
  REQUIRE(rep.validated_exponents.size() == 1);
  CHECK(rep.validated_exponents[0] == "tr(delta)/2");
  REQUIRE(rep.comparisons.size() == 2);
  CHECK(rep.comparisons[0].pass);
  CHECK_FALSE(rep.comparisons[1].pass);
}

TEST_CASE("symmetric algebra instances validate the stable range") {
  CHECK_THROWS_AS(SymAlgInstance(SimilitudeFamily::GSp, {Rational(2)}, Rational(3),
                                 {Rational(5), Rational(7)}, 2),
                  CaseMismatch);  // n > m
  CHECK_THROWS_AS(SymAlgInstance(SimilitudeFamily::GSO, {Rational(2)}, Rational(3), {Rational(5)}, 2),
                  CaseMismatch);  // GSO needs n < m
  CHECK_THROWS_AS(SymAlgInstance(SimilitudeFamily::GSp, {Rational(0)}, Rational(3), {Rational(5)}, 2),
                  ZeroCharacterValue);
  CHECK_THROWS_AS(SymAlgInstance(SimilitudeFamily::GSp, {Rational(2)}, Rational(0), {Rational(5)}, 2),
                  ZeroSimilitude);
}

TEST_CASE("seeded symalg runs validate exactly the half-trace exponent in both families") {
  for (int seed = 1; seed <= 3; ++seed) {
    auto gsp = verify_symalg(
        random_symalg_instance(SimilitudeFamily::GSp, 2, 2, 3, static_cast<unsigned>(seed)),
        static_cast<unsigned>(seed));
    CHECK(gsp.pass);
    REQUIRE(gsp.validated_exponents.size() == 1);
    CHECK(gsp.validated_exponents[0] == "tr(delta)/2");
    auto gso = verify_symalg(
        random_symalg_instance(SimilitudeFamily::GSO, 2, 1, 3, static_cast<unsigned>(seed)),
        static_cast<unsigned>(seed));
    CHECK(gso.pass);
    REQUIRE(gso.validated_exponents.size() == 1);
    CHECK(gso.validated_exponents[0] == "tr(delta)/2");
  }
}

TEST_CASE("case b factorization on the worked example") {
  // sigma = (2) with central twist 6 induces the parameter diag(2, 3)
  IdentityCase c(IdentityFamily::BOdd, 1, 2);
  UnramifiedData sigma{Rational(6), {Rational(2)}, {}, {}, {}};
  UnramifiedData tau{Rational(1), {Rational(5), Rational(7)}, {}, {}, {}};
  auto rep = verify_case_b_factorization(c, sigma, tau, 6);
  CHECK(rep.pass);
  CHECK(rep.kind == "case-b-factorization");
  CHECK(rep.primary == "siegel-levi factorization into GL factors");
  REQUIRE(rep.extra_series.size() == 1);
  CHECK(rep.extra_series[0].first == "quotient by the second-kind factor");
  CHECK(rep.extra_series[0].second[0] == Rational(1));
}

TEST_CASE("case b covers both parities and rejects the rest") {
  IdentityCase even(IdentityFamily::BEvenSplit, 1, 1);
  UnramifiedData sigma{Rational(6), {Rational(2)}, {}, {}, {}};
  UnramifiedData tau{Rational(1), {Rational(3)}, {}, {}, {}};
  CHECK(verify_case_b_factorization(even, sigma, tau, 6).pass);

  IdentityCase a_case(IdentityFamily::AOdd, 1, 1);
  CHECK_THROWS_AS(verify_case_b_factorization(a_case, sigma, tau, 6), CaseMismatch);
  IdentityCase qs(IdentityFamily::BEvenQuasiSplit, 1, 1);
  CHECK_THROWS_AS(verify_case_b_factorization(qs, sigma, tau, 6), CaseMismatch);
}

TEST_CASE("seeded case b instances pass") {
  for (auto [family, n, m] : {std::tuple{IdentityFamily::BOdd, 1, 2},
                              std::tuple{IdentityFamily::BEvenSplit, 2, 2}}) {
    IdentityCase c(family, n, m);
    for (unsigned long long seed = 1; seed <= 3; ++seed) {
      auto inst = random_case_b_instance(c, seed);
      CHECK(verify_case_b_factorization(c, inst.sigma, inst.tau, 8, seed).pass);
    }
  }
}

TEST_CASE("reports echo parameters and the exponent") {
  IdentityCase c(IdentityFamily::AOdd, 1, 1);
  auto inst = random_identity_instance(c, 11);
  auto rep = verify_unramified_identity(c, inst.pi, inst.tau, 4, MuExponent::HalfTrace, 11);
  CHECK(rep.mu_exponent == "tr(delta)/2");
  bool has_chi0 = false, has_tau = false;
  for (const auto& [key, value] : rep.parameters) {
    if (key == "chi0") {
      has_chi0 = true;
      CHECK(value == inst.pi.chi0.str());
    }
    if (key == "tau_1") has_tau = true;
  }
  CHECK(has_chi0);
  CHECK(has_tau);
  REQUIRE(rep.seed.has_value());
  CHECK(*rep.seed == 11);
}
