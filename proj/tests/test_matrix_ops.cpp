#include <doctest.h>

#include "spinlf/matrix_ops.hpp"

using namespace spinlf;

namespace {

RationalMatrix diag(std::vector<Rational> d) {
  RationalMatrix m = RationalMatrix::Zero(static_cast<Eigen::Index>(d.size()),
                                          static_cast<Eigen::Index>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
  return m;
}

}  // namespace

TEST_CASE("kronecker product of diagonals multiplies eigenvalues pairwise") {
  RationalMatrix t = tensor_matrix<Rational>(diag({Rational(2), Rational(3)}),
                                             diag({Rational(5), Rational(7)}));
  CHECK(t.rows() == 4);
  CHECK(t(0, 0) == Rational(10));
  CHECK(t(1, 1) == Rational(14));
  CHECK(t(2, 2) == Rational(15));
  CHECK(t(3, 3) == Rational(21));
}

TEST_CASE("exterior square of a diagonal is the diagonal of pair products") {
  RationalMatrix w = wedge2_matrix<Rational>(diag({Rational(2), Rational(3), Rational(5)}));
  CHECK(w.rows() == 3);
  CHECK(w(0, 0) == Rational(6));
  CHECK(w(1, 1) == Rational(10));
  CHECK(w(2, 2) == Rational(15));
  // dimension formula on a non-diagonal input, and the determinant identity
  // det(wedge2(A)) = det(A)^{d-1} for d = 3
  RationalMatrix a(3, 3);
  a << Rational(1), Rational(2), Rational(0), Rational(0), Rational(1), Rational(3), Rational(1),
      Rational(0), Rational(1);
  CHECK(exact_det<Rational>(wedge2_matrix<Rational>(a)) ==
        pow(exact_det<Rational>(a), 2));
}

TEST_CASE("symmetric square of a diagonal lists products with repetition") {
  RationalMatrix s = sym2_matrix<Rational>(diag({Rational(2), Rational(3)}));
  CHECK(s.rows() == 3);
  CHECK(s(0, 0) == Rational(4));
  CHECK(s(1, 1) == Rational(6));
  CHECK(s(2, 2) == Rational(9));
  // functoriality spot check: sym2(AB) = sym2(A) sym2(B)
  RationalMatrix a(2, 2), b(2, 2);
  a << Rational(1), Rational(2), Rational(3), Rational(4);
  b << Rational(0), Rational(1), Rational(1), Rational(1);
  RationalMatrix lhs = sym2_matrix<Rational>((a * b).eval());
  RationalMatrix rhs = sym2_matrix<Rational>(a) * sym2_matrix<Rational>(b);
  CHECK(lhs == rhs);
}

TEST_CASE("power traces and the newton conversions") {
  RationalMatrix m = diag({Rational(2), Rational(3), Rational(5)});
  auto p = power_traces<Rational>(m, 3);
  CHECK(p[0] == Rational(3));
  CHECK(p[1] == Rational(10));
  CHECK(p[2] == Rational(38));
  CHECK(p[3] == Rational(160));
  auto e = elementary_from_power_sums<Rational>(p, 3);
  CHECK(e[1] == Rational(10));
  CHECK(e[2] == Rational(31));
  CHECK(e[3] == Rational(30));
  auto h = complete_homogeneous_from_power_sums<Rational>(p, 3);
  CHECK(h[1] == Rational(10));
  CHECK(h[2] == Rational(69));   // h_2(2,3,5)
  CHECK(h[3] == Rational(410));  // h_3(2,3,5)
  CHECK(sym_power_trace<Rational>(2, diag({Rational(2), Rational(3)})) == Rational(19));
}

TEST_CASE("exact determinants") {
  RationalMatrix a(2, 2);
  a << Rational(1), Rational(2), Rational(3), Rational(4);
  CHECK(exact_det<Rational>(a) == Rational(-2));
  RationalMatrix sing(2, 2);
  sing << Rational(1), Rational(2), Rational(2), Rational(4);
  CHECK(exact_det<Rational>(sing) == Rational(0));
  // row swap flips the sign
  RationalMatrix perm = RationalMatrix::Zero(3, 3);
  perm(0, 1) = Rational(1);
  perm(1, 0) = Rational(1);
  perm(2, 2) = Rational(1);
  CHECK(exact_det<Rational>(perm) == Rational(-1));
}
