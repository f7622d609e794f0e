#include <doctest.h>

#include <random>

#include "spinlf/root_data.hpp"

using namespace spinlf;

namespace {

LatticeVector random_vector(LatticeSide side, int rank, std::mt19937_64& rng) {
  LatticeVector v = LatticeVector::zero(side, rank);
  for (int i = 0; i <= rank; ++i) v.c[i] = static_cast<int>(rng() % 9) - 4;
  return v;
}

}  // namespace

TEST_CASE("root counts match the classical systems") {
  CHECK(build_root_datum({GroupFamily::GSpinOdd, 2, {}}).positive_count() == 4);    // B2
  CHECK(build_root_datum({GroupFamily::GSpinOdd, 3, {}}).positive_count() == 9);    // B3
  CHECK(build_root_datum({GroupFamily::GSpinEvenSplit, 3, {}}).positive_count() == 6);  // D3
  CHECK(build_root_datum({GroupFamily::GL, 4, {}}).positive_count() == 6);          // A3
  CHECK(build_root_datum({GroupFamily::GSpinOdd, 2, {}}).simple.size() == 2);
  CHECK(build_root_datum({GroupFamily::GL, 4, {}}).simple.size() == 3);
}

TEST_CASE("pairing of each simple root with its coroot is 2") {
  std::vector<GroupKind> kinds = {
      {GroupFamily::GSpinOdd, 3, {}},
      {GroupFamily::GSpinEvenSplit, 3, {}},
      {GroupFamily::GSpinEvenQuasiSplit, 3, Rational(5)},
      {GroupFamily::GL, 3, {}},
  };
  for (const auto& kind : kinds) {
    RootDatum d = build_root_datum(kind);
    for (int idx : d.simple) {
      const auto& root = d.roots[static_cast<size_t>(idx)];
      CHECK(pairing(root, coroot_of(d, root)) == 2);
    }
  }
}

TEST_CASE("simple reflections preserve the pairing") {
  std::mt19937_64 rng(7);
  std::vector<GroupKind> kinds = {
      {GroupFamily::GSpinOdd, 2, {}},
      {GroupFamily::GSpinOdd, 3, {}},
      {GroupFamily::GSpinEvenSplit, 3, {}},
      {GroupFamily::GL, 3, {}},
  };
  for (const auto& kind : kinds) {
    RootDatum d = build_root_datum(kind);
    for (size_t i = 0; i < d.simple.size(); ++i) {
      WeylElement w = simple_reflection(d, static_cast<int>(i));
      for (int trial = 0; trial < 10; ++trial) {
        LatticeVector x = random_vector(LatticeSide::Char, kind.rank, rng);
        LatticeVector y = random_vector(LatticeSide::Cochar, kind.rank, rng);
        CHECK(pairing(weyl_act(d, w, x), weyl_act(d, w, y)) == pairing(x, y));
      }
    }
  }
}

TEST_CASE("simple reflections permute the root set") {
  RootDatum d = build_root_datum({GroupFamily::GSpinOdd, 3, {}});
  for (size_t i = 0; i < d.simple.size(); ++i) {
    WeylElement w = simple_reflection(d, static_cast<int>(i));
    for (const auto& root : d.roots) {
      LatticeVector image = weyl_act(d, w, root);
      CHECK_NOTHROW(coroot_of(d, image));
    }
  }
}

TEST_CASE("galois action is an involution preserving the pairing") {
  std::mt19937_64 rng(11);
  RootDatum d = build_root_datum({GroupFamily::GSpinEvenQuasiSplit, 3, Rational(5)});
  for (int trial = 0; trial < 20; ++trial) {
    LatticeVector x = random_vector(LatticeSide::Char, 3, rng);
    LatticeVector y = random_vector(LatticeSide::Cochar, 3, rng);
    CHECK(galois_act(d, galois_act(d, x)) == x);
    CHECK(galois_act(d, galois_act(d, y)) == y);
    CHECK(pairing(galois_act(d, x), galois_act(d, y)) == pairing(x, y));
  }
  // swaps the last two simple roots e_2-e_3 and e_2+e_3
  const auto& last_diff = d.roots[static_cast<size_t>(d.simple[1])];
  const auto& plus = d.roots[static_cast<size_t>(d.simple[2])];
  CHECK(galois_act(d, last_diff) == plus);
  CHECK(galois_act(d, plus) == last_diff);
  RootDatum split = build_root_datum({GroupFamily::GSpinEvenSplit, 3, {}});
  CHECK_THROWS_AS(galois_act(split, LatticeVector::zero(LatticeSide::Char, 3)), NotQuasiSplit);
}

TEST_CASE("closed-form modulus exponents match the pairing against 2 rho") {
  std::vector<IdentityCase> cases;
  for (int n = 1; n <= 4; ++n)
    for (int m = n; m <= 4; ++m) {
      cases.emplace_back(IdentityFamily::AOdd, n, m);
      if (m > n) {
        cases.emplace_back(IdentityFamily::AEvenSplit, n, m);
        cases.emplace_back(IdentityFamily::AEvenQuasiSplit, n, m);
      }
    }
  for (const auto& c : cases) {
    for (ModulusRole role : {ModulusRole::DeltaG, ModulusRole::DeltaH, ModulusRole::DeltaGL}) {
      RootDatum d = build_root_datum(modulus_group(role, c));
      for (int j = 0; j <= 4; ++j) {
        for (const auto& delta : enumerate_dominant(d.kind.rank, j)) {
          CHECK(modulus_exponent(role, c, delta).value ==
                modulus_exponent_from_datum(d, delta).value);
        }
      }
    }
  }
}

TEST_CASE("modulus exponents satisfy the cancellation relation of the term rewrite") {
  // e_G = e_H / 2 + e_GL / 2 + (u - l) tr(delta) for every delta with at
  // most n parts; this is what makes every q-exponent vanish termwise.
  for (const auto& c : {IdentityCase(IdentityFamily::AOdd, 2, 3),
                        IdentityCase(IdentityFamily::AEvenSplit, 2, 3),
                        IdentityCase(IdentityFamily::AEvenQuasiSplit, 2, 4)}) {
    for (int j = 0; j <= 5; ++j) {
      for (const auto& delta : enumerate_dominant(c.n(), j)) {
        Rational eg = modulus_exponent(ModulusRole::DeltaG, c, delta).value;
        Rational eh = modulus_exponent(ModulusRole::DeltaH, c, delta).value;
        Rational egl = modulus_exponent(ModulusRole::DeltaGL, c, delta).value;
        Rational shift = (c.shift_u() - Rational(c.shift_ell())) * Rational(delta.total());
        CHECK(eg == eh / Rational(2) + egl / Rational(2) + shift);
      }
    }
  }
}

TEST_CASE("kind validation") {
  CHECK_THROWS_AS(build_root_datum({GroupFamily::GL, 0, {}}), InvalidRank);
  CHECK_THROWS_AS(build_root_datum({GroupFamily::GSpinEvenQuasiSplit, 2, {}}), InvalidRank);
  CHECK(build_root_datum({GroupFamily::GSpinEvenQuasiSplit, 2, Rational(3)}).kind.str() ==
        "gspin(4,a=3)");
}
