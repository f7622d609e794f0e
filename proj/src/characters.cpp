#include "spinlf/characters.hpp"

#include "spinlf/errors.hpp"
#include "spinlf/freudenthal.hpp"
#include "spinlf/matrix_ops.hpp"

namespace spinlf {

namespace {

void require_nonzero(const std::vector<Rational>& x, const char* who) {
  for (const auto& v : x)
    if (v.is_zero()) throw SingularAlternant(std::string(who) + " needs nonzero coordinates");
}

// Ratio of two k x k alternants whose (i, j) entry is
//   x_i^{top[j]} + sign * x_i^{-top[j]}   over the same with bot[j].
// sign = -1 gives the symplectic formula, +1 the even orthogonal one.
Rational alternant_ratio(const std::vector<Rational>& x, const std::vector<long long>& top,
                         const std::vector<long long>& bot, int sign) {
  const auto k = static_cast<Eigen::Index>(x.size());
  RationalMatrix num(k, k), den(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      const auto& xi = x[static_cast<size_t>(i)];
      auto entry = [&](long long e) {
        Rational v = pow(xi, e);
        Rational w = pow(xi, -e);
        return sign < 0 ? v - w : v + w;
      };
      num(i, j) = entry(top[static_cast<size_t>(j)]);
      den(i, j) = entry(bot[static_cast<size_t>(j)]);
    }
  }
  Rational d = exact_det(den);
  if (d.is_zero()) throw SingularAlternant("alternant denominator vanishes at this point");
  return exact_det(num) / d;
}

}  // namespace

Rational schur_gl(const DominantWeight& delta, const std::vector<Rational>& x) {
  const int n = static_cast<int>(x.size());
  if (delta.parts() != n) throw RankMismatch("schur_gl: weight has " + std::to_string(delta.parts()) +
                                             " parts, point has " + std::to_string(n));
  RationalMatrix num(n, n), den(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      num(i, j) = pow(x[static_cast<size_t>(i)], delta[j] + n - 1 - j);
      den(i, j) = pow(x[static_cast<size_t>(i)], n - 1 - j);
    }
  }
  Rational d = exact_det(den);
  if (d.is_zero()) throw SingularAlternant("schur_gl needs pairwise distinct coordinates");
  return exact_det(num) / d;
}

Rational char_sp(const DominantWeight& delta_bar, const std::vector<Rational>& x) {
  const int k = static_cast<int>(x.size());
  require_nonzero(x, "char_sp");
  DominantWeight w = delta_bar.padded(k);
  std::vector<long long> top(static_cast<size_t>(k)), bot(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) {
    top[static_cast<size_t>(j)] = w[j] + k - j;  // k_j + k - j + 1 in 1-based indexing
    bot[static_cast<size_t>(j)] = k - j;
  }
  return alternant_ratio(x, top, bot, -1);
}

Rational char_so_even(const DominantWeight& delta_bar, const std::vector<Rational>& x) {
  const int k = static_cast<int>(x.size());
  require_nonzero(x, "char_so_even");
  DominantWeight w = delta_bar.padded(k);
  if (w[k - 1] != 0)
    throw NonzeroLastPart("char_so_even requires the last part to be zero, got " + w.str());
  std::vector<long long> top(static_cast<size_t>(k)), bot(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) {
    top[static_cast<size_t>(j)] = w[j] + k - 1 - j;
    bot[static_cast<size_t>(j)] = k - 1 - j;
  }
  return alternant_ratio(x, top, bot, +1);
}

Rational similitude_char(SimilitudeFamily family, const DominantWeight& delta_bar,
                         const std::vector<Rational>& t, const Rational& mu,
                         MuExponent exponent) {
  if (mu.is_zero()) throw ZeroSimilitude("similitude value must be nonzero");
  const int k = static_cast<int>(t.size());
  require_nonzero(t, "similitude_char");
  DominantWeight w = delta_bar.padded(k);
  if (family == SimilitudeFamily::GSO && w[k - 1] != 0)
    throw NonzeroLastPart("GSO similitude character requires the last part to be zero, got " +
                          w.str());
  const long long deg = w.total();

  // Half-trace value first.  When mu = u^2 and the rescaled point t/u is
  // regular, the alternant ratio is fastest: u^{tr w} chi(t/u) expands to
  // the same weight-wise sum because only even powers of u survive.
  Rational half(0);
  bool have = false;
  if (auto u = exact_sqrt(mu)) {
    std::vector<Rational> y(t.size());
    for (size_t i = 0; i < t.size(); ++i) y[i] = t[i] / *u;
    try {
      Rational classical =
          family == SimilitudeFamily::GSp ? char_sp(w, y) : char_so_even(w, y);
      half = pow(*u, deg) * classical;
      have = true;
    } catch (const SingularAlternant&) {
      // fall through to the weight table
    }
  }
  if (!have) {
    auto fam = family == SimilitudeFamily::GSp ? ClassicalFamily::Sp : ClassicalFamily::SOeven;
    for (const auto& [wt, mult] : freudenthal_weight_table(fam, w)) {
      long long wsum = 0;
      Rational term(mult);
      for (size_t i = 0; i < wt.size(); ++i) {
        term *= pow(t[i], wt[i]);
        wsum += wt[i];
      }
      half += term * pow(mu, (deg - wsum) / 2);
    }
  }

  if (exponent == MuExponent::HalfTrace) return half;
  if (deg % 2 == 0) return half * pow(mu, deg / 2);
  if (auto u = exact_sqrt(mu)) return half * pow(*u, deg);
  if (half.is_zero()) return half;
  throw IrrationalValue("full-trace exponent needs mu^{1/2} but the similitude is not a square");
}

}  // namespace spinlf
