#include "spinlf/params.hpp"

#include <random>
#include <vector>

#include "spinlf/errors.hpp"

namespace spinlf {

namespace {

constexpr int kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                           43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
constexpr size_t kPrimeCount = sizeof(kPrimes) / sizeof(kPrimes[0]);

class UnitDrawer {
 public:
  explicit UnitDrawer(std::uint64_t seed) : rng_(seed) {}

  // A fresh prime of the run, to the power +1 or -1.
  Rational draw() {
    if (drawn_ >= kPrimeCount) throw Error("prime pool exhausted");
    for (;;) {
      size_t i = static_cast<size_t>(rng_() % kPrimeCount);
      if (used_[i]) continue;
      ++drawn_;
      used_[i] = true;
      Rational p(kPrimes[i]);
      return rng_() % 2 == 0 ? p : Rational(1) / p;
    }
  }

  std::vector<Rational> draw_many(size_t count) {
    std::vector<Rational> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) out.push_back(draw());
    return out;
  }

 private:
  std::mt19937_64 rng_;
  bool used_[kPrimeCount] = {};
  size_t drawn_ = 0;
};

}  // namespace

IdentityInstance random_identity_instance(const IdentityCase& c, std::uint64_t seed) {
  UnitDrawer draw(seed);
  const size_t chi_count = c.is_quasisplit() ? static_cast<size_t>(c.m() - 1)
                                             : static_cast<size_t>(c.m());
  Rational u = draw.draw();
  UnramifiedData pi;
  pi.chi0 = u * u;
  pi.chi = draw.draw_many(chi_count);
  if (c.is_quasisplit()) {
    Rational beta = draw.draw();
    for (;;) {
      Rational alpha = draw.draw();
      Rational a = (alpha * alpha - pi.chi0) / (beta * beta);
      if (is_square(a)) continue;  // keep the form anisotropic over the rationals
      pi.a = a;
      pi.alpha = alpha;
      pi.beta = beta;
      break;
    }
  }
  UnramifiedData tau;
  tau.chi0 = Rational(1);
  tau.chi = draw.draw_many(static_cast<size_t>(c.n()));
  return {pi, tau};
}

SymAlgInstance random_symalg_instance(SimilitudeFamily family, int m, int n, int r,
                                      std::uint64_t seed) {
  UnitDrawer draw(seed);
  Rational u = draw.draw();
  auto t = draw.draw_many(static_cast<size_t>(m));
  auto g2 = draw.draw_many(static_cast<size_t>(n));
  return SymAlgInstance(family, std::move(t), u * u, std::move(g2), r);
}

CaseBInstance random_case_b_instance(const IdentityCase& c, std::uint64_t seed) {
  UnitDrawer draw(seed);
  UnramifiedData sigma;
  sigma.chi0 = draw.draw();
  sigma.chi = draw.draw_many(static_cast<size_t>(c.n()));
  UnramifiedData tau;
  tau.chi0 = Rational(1);
  tau.chi = draw.draw_many(static_cast<size_t>(c.m()));
  return {sigma, tau};
}

}  // namespace spinlf
