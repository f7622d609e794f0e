#include <doctest.h>

#include "spinlf/satake.hpp"

using namespace spinlf;

namespace {

UnramifiedData split_data() {
  UnramifiedData d;
  d.chi0 = Rational(6);
  d.chi = {Rational(2), Rational(3)};
  return d;
}

}  // namespace

TEST_CASE("gl parameter is the plain diagonal") {
  auto p = satake_gl({Rational(2), Rational(1, 3)});
  CHECK(p.dim() == 2);
  CHECK(p.mu == Rational(1));
  CHECK(p.kind.family == GroupFamily::GL);
  CHECK(p.matrix(0, 0) == Rational(2));
  CHECK(p.matrix(1, 1) == Rational(1, 3));
  REQUIRE(p.diag_eigenvalues.has_value());
  CHECK((*p.diag_eigenvalues)[0] == Rational(2));
  CHECK_THROWS_AS(satake_gl({Rational(0)}), ZeroCharacterValue);
}

TEST_CASE("odd parameter pairs chi with chi0/chi in reverse order") {
  auto p = satake_gspin_odd(split_data());
  CHECK(p.dim() == 4);
  CHECK(p.mu == Rational(6));
  CHECK(p.kind.family == GroupFamily::GSpinOdd);
  CHECK(p.kind.rank == 2);
  std::vector<Rational> expect = {Rational(2), Rational(3), Rational(2), Rational(3)};
  REQUIRE(p.diag_eigenvalues.has_value());
  CHECK(*p.diag_eigenvalues == expect);
  for (int i = 0; i < 4; ++i) CHECK(p.matrix(i, i) == expect[static_cast<size_t>(i)]);
  CHECK(satisfies_similitude(p.matrix, symplectic_gram(2), p.mu));
}

TEST_CASE("even split parameter lands in the orthogonal similitude group") {
  auto p = satake_gspin_even_split(split_data());
  CHECK(p.dim() == 4);
  CHECK(p.kind.family == GroupFamily::GSpinEvenSplit);
  CHECK(satisfies_similitude(p.matrix, orthogonal_gram(2), p.mu));
  // the symplectic check must fail for a generic diagonal
  UnramifiedData d;
  d.chi0 = Rational(10);
  d.chi = {Rational(2), Rational(7)};
  auto q = satake_gspin_even_split(d);
  CHECK_FALSE(satisfies_similitude(q.matrix, symplectic_gram(2), Rational(3)));
}

TEST_CASE("gram matrices have the stated antidiagonal shape") {
  auto js = symplectic_gram(2);
  CHECK(js(0, 3) == Rational(1));
  CHECK(js(1, 2) == Rational(1));
  CHECK(js(2, 1) == Rational(-1));
  CHECK(js(3, 0) == Rational(-1));
  RationalMatrix jst = js.transpose();
  RationalMatrix njs = -js;
  CHECK(jst == njs);
  auto jo = orthogonal_gram(2);
  RationalMatrix jot = jo.transpose();
  CHECK(jo == jot);
  for (int i = 0; i < 4; ++i) CHECK(jo(i, 3 - i) == Rational(1));
}

TEST_CASE("quasi-split parameter carries the norm-form block") {
  UnramifiedData d;
  d.chi = {Rational(2), Rational(3)};
  d.a = Rational(5);
  d.alpha = Rational(3);
  d.beta = Rational(1);
  d.chi0 = Rational(4);  // alpha^2 - a beta^2
  auto [full, reduced] = satake_quasisplit(d);

  CHECK(full.dim() == 6);
  CHECK(full.kind.family == GroupFamily::GSpinEvenQuasiSplit);
  CHECK(full.kind.rank == 3);
  REQUIRE(full.kind.square_class.has_value());
  CHECK(*full.kind.square_class == Rational(5));
  CHECK_FALSE(full.diag_eigenvalues.has_value());
  // outer diagonal chi_i / chi0 over chi_i, middle block [[alpha, beta a], [beta, alpha]]
  CHECK(full.matrix(0, 0) == Rational(2));
  CHECK(full.matrix(1, 1) == Rational(3));
  CHECK(full.matrix(4, 4) == Rational(4, 3));
  CHECK(full.matrix(5, 5) == Rational(2));
  CHECK(full.matrix(2, 2) == Rational(3));
  CHECK(full.matrix(2, 3) == Rational(5));
  CHECK(full.matrix(3, 2) == Rational(1));
  CHECK(full.matrix(3, 3) == Rational(3));

  // membership in the a-twisted orthogonal similitude group
  RationalMatrix gram = orthogonal_gram(3);
  gram(2, 3) = Rational(0);
  gram(3, 2) = Rational(0);
  gram(2, 2) = Rational(1);
  gram(3, 3) = Rational(-5);
  CHECK(satisfies_similitude(full.matrix, gram, Rational(4)));
  CHECK(exact_det(full.matrix) == Rational(64));

  CHECK(reduced.dim() == 4);
  CHECK(reduced.kind.family == GroupFamily::GSpinOdd);
  CHECK(reduced.kind.rank == 2);
  CHECK(reduced.mu == Rational(4));
  std::vector<Rational> expect = {Rational(2), Rational(3), Rational(4, 3), Rational(2)};
  REQUIRE(reduced.diag_eigenvalues.has_value());
  CHECK(*reduced.diag_eigenvalues == expect);
  CHECK(satisfies_similitude(reduced.matrix, symplectic_gram(2), reduced.mu));
}

TEST_CASE("quasi-split norm consistency is enforced") {
  UnramifiedData d;
  d.chi = {Rational(2)};
  d.a = Rational(5);
  d.alpha = Rational(3);
  d.beta = Rational(1);
  d.chi0 = Rational(7);  // != 9 - 5
  CHECK_THROWS_AS(satake_quasisplit(d), NormMismatch);
  d.chi0 = Rational(4);
  d.beta.reset();
  CHECK_THROWS_AS(satake_quasisplit(d), Error);
}
