#include "spinlf/satake.hpp"

#include <string>

#include "spinlf/errors.hpp"

namespace spinlf {

namespace {

void require_nonzero(const Rational& v, const std::string& name) {
  if (v.is_zero()) throw ZeroCharacterValue(name + " must be nonzero");
}

std::vector<Rational> paired_diagonal(const UnramifiedData& data) {
  require_nonzero(data.chi0, "chi0");
  const auto n = data.chi.size();
  std::vector<Rational> d;
  d.reserve(2 * n);
  for (size_t i = 0; i < n; ++i) {
    require_nonzero(data.chi[i], "chi_" + std::to_string(i + 1));
    d.push_back(data.chi[i]);
  }
  for (size_t i = n; i-- > 0;) d.push_back(data.chi0 / data.chi[i]);
  return d;
}

RationalMatrix diagonal_matrix(const std::vector<Rational>& d) {
  const auto k = static_cast<Eigen::Index>(d.size());
  RationalMatrix m = RationalMatrix::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) m(i, i) = d[static_cast<size_t>(i)];
  return m;
}

void check_membership(const RationalMatrix& m, const RationalMatrix& j, const Rational& mu,
                      const char* what) {
  if (!satisfies_similitude(m, j, mu))
    throw MembershipViolation(std::string("constructed parameter fails tMJM = muJ for ") + what);
}

}  // namespace

RationalMatrix symplectic_gram(int k) {
  const Eigen::Index d = 2 * static_cast<Eigen::Index>(k);
  RationalMatrix j = RationalMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) j(i, d - 1 - i) = i < k ? Rational(1) : Rational(-1);
  return j;
}

RationalMatrix orthogonal_gram(int k) {
  const Eigen::Index d = 2 * static_cast<Eigen::Index>(k);
  RationalMatrix j = RationalMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) j(i, d - 1 - i) = Rational(1);
  return j;
}

bool satisfies_similitude(const RationalMatrix& m, const RationalMatrix& j, const Rational& mu) {
  RationalMatrix lhs = m.transpose() * j * m;
  RationalMatrix rhs = mu * j;
  return lhs == rhs;
}

SatakeParameter satake_gl(const std::vector<Rational>& chi) {
  for (size_t i = 0; i < chi.size(); ++i)
    require_nonzero(chi[i], "chi_" + std::to_string(i + 1));
  SatakeParameter p{diagonal_matrix(chi), Rational(1),
                    GroupKind{GroupFamily::GL, static_cast<int>(chi.size()), std::nullopt}, chi};
  return p;
}

SatakeParameter satake_gspin_odd(const UnramifiedData& data) {
  auto d = paired_diagonal(data);
  const int n = static_cast<int>(data.chi.size());
  SatakeParameter p{diagonal_matrix(d), data.chi0, GroupKind{GroupFamily::GSpinOdd, n, std::nullopt},
                    d};
  check_membership(p.matrix, symplectic_gram(n), p.mu, "GSp");
  return p;
}

SatakeParameter satake_gspin_even_split(const UnramifiedData& data) {
  auto d = paired_diagonal(data);
  const int n = static_cast<int>(data.chi.size());
  SatakeParameter p{diagonal_matrix(d), data.chi0,
                    GroupKind{GroupFamily::GSpinEvenSplit, n, std::nullopt}, d};
  check_membership(p.matrix, orthogonal_gram(n), p.mu, "GSO");
  return p;
}

std::pair<SatakeParameter, SatakeParameter> satake_quasisplit(const UnramifiedData& data) {
  if (!data.a || !data.alpha || !data.beta)
    throw Error("quasi-split parameter needs the (a, alpha, beta) datum");
  require_nonzero(data.chi0, "chi0");
  const Rational& a = *data.a;
  const Rational& alpha = *data.alpha;
  const Rational& beta = *data.beta;
  require_nonzero(a, "a");
  Rational norm = alpha * alpha - a * beta * beta;
  if (norm != data.chi0)
    throw NormMismatch("alpha^2 - a beta^2 = " + norm.str() + " but chi0 = " + data.chi0.str());

  const int n = static_cast<int>(data.chi.size()) + 1;
  const Eigen::Index dim = 2 * static_cast<Eigen::Index>(n);
  RationalMatrix full = RationalMatrix::Zero(dim, dim);
  for (int i = 0; i < n - 1; ++i) {
    require_nonzero(data.chi[static_cast<size_t>(i)], "chi_" + std::to_string(i + 1));
    full(i, i) = data.chi[static_cast<size_t>(i)];
    full(dim - 1 - i, dim - 1 - i) = data.chi0 / data.chi[static_cast<size_t>(i)];
  }
  full(n - 1, n - 1) = alpha;
  full(n - 1, n) = beta * a;
  full(n, n - 1) = beta;
  full(n, n) = alpha;

  GroupKind qs{GroupFamily::GSpinEvenQuasiSplit, n, a};
  SatakeParameter full_p{full, data.chi0, qs, std::nullopt};

  // The full matrix preserves the orthogonal form whose middle 2x2 block is
  // replaced by diag(1, -a); this and det = chi0^n pin the construction.
  RationalMatrix gram = orthogonal_gram(n);
  gram(n - 1, n) = Rational(0);
  gram(n, n - 1) = Rational(0);
  gram(n - 1, n - 1) = Rational(1);
  gram(n, n) = -a;
  check_membership(full, gram, data.chi0, "quasi-split GSO");
  if (exact_det(full) != pow(data.chi0, n))
    throw MembershipViolation("quasi-split determinant is not chi0^n");

  UnramifiedData reduced_data{data.chi0, data.chi, std::nullopt, std::nullopt, std::nullopt};
  auto d = paired_diagonal(reduced_data);
  SatakeParameter reduced{diagonal_matrix(d), data.chi0,
                          GroupKind{GroupFamily::GSpinOdd, n - 1, std::nullopt}, d};
  if (n > 1) check_membership(reduced.matrix, symplectic_gram(n - 1), reduced.mu, "reduced GSp");
  return {full_p, reduced};
}

}  // namespace spinlf
