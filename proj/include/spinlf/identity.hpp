#pragma once

#include <optional>
#include <vector>

#include "spinlf/lfactors.hpp"
#include "spinlf/report.hpp"
#include "spinlf/satake.hpp"

namespace spinlf {

// One instance of the symmetric-algebra distribution identity
// tr Sym^r(g1 (x) g2) = sum over 2i + j = r of the second-kind trace,
// the similitude power and the paired character sum.  g1 is the similitude
// element given by its torus block t and multiplier mu (the matrix is
// diag(t_1, ..., t_m, mu/t_m, ..., mu/t_1)); g2 is a diagonal GL_n element.
struct SymAlgInstance {
  SimilitudeFamily family;
  std::vector<Rational> t;
  Rational mu;
  std::vector<Rational> g2;
  int r;

  // Validates the stable-range shape (n <= m for GSp, n < m for GSO),
  // nonzero data, and membership of g1 in the similitude group.
  SymAlgInstance(SimilitudeFamily family, std::vector<Rational> t, Rational mu,
                 std::vector<Rational> g2, int r);

  int m() const { return static_cast<int>(t.size()); }
  int n() const { return static_cast<int>(g2.size()); }
  RationalMatrix g1_matrix() const;
  RationalMatrix g2_matrix() const;
};

// Case A: checks L(2s, tau, R (x) omega) * zeta == L(s, pi x tau)
// coefficientwise up to T^order.  For the quasi-split case the right side
// is computed twice, from the reduced parameter t' in GSp_{2(m-1)} and from
// the full 2m matrix with the Galois block; the verdict tracks the reduced
// branch and the full branch is reported alongside, with any mismatch
// localized per delta-stratum.  Mismatches are report data, never thrown.
VerificationReport verify_unramified_identity(const IdentityCase& c, const UnramifiedData& pi,
                                              const UnramifiedData& tau, int order,
                                              MuExponent exponent = MuExponent::HalfTrace,
                                              std::optional<unsigned long long> seed = {});

// Tries both normalization exponents mu^{tr delta} and mu^{tr delta / 2}
// on every degree r' <= r and records which of the two validates.
VerificationReport verify_symalg(const SymAlgInstance& inst,
                                 std::optional<unsigned long long> seed = {});

// Case B: pi is induced from the Siegel Levi with GL_n datum sigma and
// central twist omega = sigma.chi0, so its parameter has eigenvalue
// multiset {sigma_i} u {omega / sigma_i}, while tau lives on GL_m; checks
// L(s, pi x tau) == L(s, sigma x tau) * L(s, sigma-hat omega x tau)
// and also emits the implied quotient by the second-kind factor.
VerificationReport verify_case_b_factorization(const IdentityCase& c, const UnramifiedData& sigma,
                                               const UnramifiedData& tau, int order,
                                               std::optional<unsigned long long> seed = {});

}  // namespace spinlf
