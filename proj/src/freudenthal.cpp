#include "spinlf/freudenthal.hpp"

#include <algorithm>
#include <map>

#include "spinlf/errors.hpp"

namespace spinlf {

namespace {

using Coord = std::vector<int>;

long long dot(const Coord& a, const Coord& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

std::vector<Coord> positive_roots(ClassicalFamily family, int k) {
  std::vector<Coord> roots;
  auto vec = [&](int i, int ci, int j, int cj) {
    Coord v(static_cast<size_t>(k), 0);
    v[static_cast<size_t>(i)] = ci;
    if (j >= 0) v[static_cast<size_t>(j)] = cj;
    return v;
  };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) roots.push_back(vec(i, 1, j, -1));
  if (family == ClassicalFamily::Sp || family == ClassicalFamily::SOeven) {
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) roots.push_back(vec(i, 1, j, 1));
  }
  if (family == ClassicalFamily::Sp) {
    for (int i = 0; i < k; ++i) roots.push_back(vec(i, 2, -1, 0));
  }
  return roots;
}

Coord weyl_vector(ClassicalFamily family, int k) {
  // Any vector with <rho, alpha_i> > 0 works; for GL the usual half-sum is
  // shifted to stay integral, which is harmless because all weights of one
  // representation share their coordinate sum.
  Coord rho(static_cast<size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    switch (family) {
      case ClassicalFamily::GL: rho[static_cast<size_t>(i)] = k - 1 - i; break;
      case ClassicalFamily::Sp: rho[static_cast<size_t>(i)] = k - i; break;
      case ClassicalFamily::SOeven: rho[static_cast<size_t>(i)] = k - 1 - i; break;
    }
  }
  return rho;
}

void check_budget(const DominantWeight& lambda) {
  if (lambda.parts() > 4 || lambda.total() > 8)
    throw OracleBudgetExceeded("freudenthal oracle limited to rank <= 4, |weight| <= 8, got rank " +
                               std::to_string(lambda.parts()) + ", |weight| " +
                               std::to_string(lambda.total()));
}

// All candidate weights: congruent to lambda modulo the root lattice and
// inside the bounding box of the weight polytope.
std::vector<Coord> candidate_weights(ClassicalFamily family, const DominantWeight& lambda) {
  const int k = lambda.parts();
  const int hi = lambda.parts() == 0 ? 0 : lambda[0];
  const int lo = family == ClassicalFamily::GL ? 0 : -hi;
  const int total = lambda.total();

  std::vector<Coord> out;
  Coord cur(static_cast<size_t>(k), 0);
  // Depth-first over the box, filtering by the congruence condition.
  auto rec = [&](auto&& self, int pos, int sum) -> void {
    if (pos == k) {
      bool keep = family == ClassicalFamily::GL ? sum == total : ((sum - total) % 2 == 0);
      if (keep) out.push_back(cur);
      return;
    }
    for (int v = lo; v <= hi; ++v) {
      cur[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, sum + v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace

std::vector<WeightMultiplicity> freudenthal_weight_table(ClassicalFamily family,
                                                         const DominantWeight& lambda) {
  check_budget(lambda);
  const int k = lambda.parts();
  if (k < 1) throw Error("freudenthal needs at least one part");
  if (family == ClassicalFamily::SOeven && k < 2)
    throw Error("even orthogonal family needs rank >= 2");

  const Coord lam = lambda.coords();
  const auto roots = positive_roots(family, k);
  const Coord rho = weyl_vector(family, k);
  const int hi = lam[0];

  Coord lam_rho = lam;
  for (int i = 0; i < k; ++i) lam_rho[static_cast<size_t>(i)] += rho[static_cast<size_t>(i)];
  const long long top_norm = dot(lam_rho, lam_rho);

  auto cands = candidate_weights(family, lambda);
  // Process in decreasing <mu, rho>: every mu + j*alpha (alpha > 0) comes
  // earlier, so its multiplicity is already known.
  std::stable_sort(cands.begin(), cands.end(), [&](const Coord& a, const Coord& b) {
    long long ra = dot(a, rho), rb = dot(b, rho);
    if (ra != rb) return ra > rb;
    return a > b;
  });

  std::map<Coord, long long> mult;
  for (const Coord& mu : cands) {
    if (mu == lam) {
      mult[mu] = 1;
      continue;
    }
    Coord mu_rho = mu;
    for (int i = 0; i < k; ++i) mu_rho[static_cast<size_t>(i)] += rho[static_cast<size_t>(i)];
    long long denom = top_norm - dot(mu_rho, mu_rho);
    if (denom <= 0) continue;  // not a weight of the representation

    long long rhs = 0;
    for (const Coord& alpha : roots) {
      Coord shifted = mu;
      for (;;) {
        bool inside = true;
        for (int i = 0; i < k; ++i) {
          shifted[static_cast<size_t>(i)] += alpha[static_cast<size_t>(i)];
          if (shifted[static_cast<size_t>(i)] > hi || shifted[static_cast<size_t>(i)] < -hi)
            inside = false;
        }
        if (!inside) break;  // coordinates move monotonically along alpha
        auto it = mult.find(shifted);
        if (it != mult.end()) rhs += it->second * dot(shifted, alpha);
      }
    }
    if (rhs != 0) mult[mu] = 2 * rhs / denom;
  }

  std::vector<WeightMultiplicity> table;
  table.reserve(mult.size());
  for (const auto& [w, m] : mult)
    if (m != 0) table.push_back({w, m});
  return table;
}

Rational freudenthal_char(ClassicalFamily family, const DominantWeight& lambda,
                          const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != lambda.parts())
    throw RankMismatch("point size does not match weight rank");
  for (const auto& xi : x)
    if (xi.is_zero()) throw SingularAlternant("character evaluation needs nonzero coordinates");

  Rational sum(0);
  for (const auto& [w, m] : freudenthal_weight_table(family, lambda)) {
    Rational term(m);
    for (size_t i = 0; i < w.size(); ++i) term *= pow(x[i], w[i]);
    sum += term;
  }
  return sum;
}

long long freudenthal_dim(ClassicalFamily family, const DominantWeight& lambda) {
  long long d = 0;
  for (const auto& entry : freudenthal_weight_table(family, lambda)) d += entry.mult;
  return d;
}

}  // namespace spinlf
