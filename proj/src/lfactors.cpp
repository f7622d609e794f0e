#include "spinlf/lfactors.hpp"

#include <algorithm>
#include <string>

#include "spinlf/errors.hpp"
#include "spinlf/matrix_ops.hpp"
#include "spinlf/root_data.hpp"

namespace spinlf {

namespace {

struct ZetaShape {
  SimilitudeFamily family;
  int block_rank;  // rank of the classical block the weight pads to
  std::vector<Rational> t;
  std::vector<Rational> tau;
  Rational mu;
};

ZetaShape zeta_shape(const IdentityCase& c, const SatakeParameter& pi_block,
                     const SatakeParameter& t_tau) {
  if (!c.is_family_a()) throw CaseMismatch("zeta series is defined for the A-family cases only");
  const int expected = c.is_quasisplit() ? c.m() - 1 : c.m();
  if (pi_block.dim() != 2 * expected)
    throw RankMismatch("case " + c.name() + " needs a " + std::to_string(2 * expected) +
                       "-dimensional block parameter, got " + std::to_string(pi_block.dim()));
  if (!pi_block.diag_eigenvalues)
    throw Error("zeta series needs the diagonal (split or reduced) parameter");
  if (t_tau.dim() != c.n())
    throw RankMismatch("tau parameter must have dimension n = " + std::to_string(c.n()));
  if (!t_tau.diag_eigenvalues) throw Error("zeta series needs a diagonal GL parameter");

  ZetaShape shape;
  shape.family = c.family() == IdentityFamily::AEvenSplit ? SimilitudeFamily::GSO
                                                          : SimilitudeFamily::GSp;
  shape.block_rank = expected;
  const auto& diag = *pi_block.diag_eigenvalues;
  shape.t.assign(diag.begin(), diag.begin() + expected);
  shape.tau = *t_tau.diag_eigenvalues;
  shape.mu = pi_block.mu;
  return shape;
}

}  // namespace

Series det_one_minus_mt(const RationalMatrix& m, int order) {
  if (order < 0) throw Error("series order must be non-negative");
  const int dim = static_cast<int>(m.rows());
  const int deg = std::min(order, dim);
  auto p = power_traces(m, deg);
  auto e = elementary_from_power_sums(p, deg);
  Series out(order);
  for (int j = 0; j <= deg; ++j)
    out.set(j, j % 2 == 0 ? e[static_cast<size_t>(j)] : -e[static_cast<size_t>(j)]);
  return out;
}

Series rankin_selberg_l(const SatakeParameter& t_pi, const SatakeParameter& t_tau, int order) {
  RationalMatrix prod = tensor_matrix<Rational>(t_pi.matrix, t_tau.matrix);
  return det_one_minus_mt(prod, order).inverse();
}

Series second_l(const SatakeParameter& t_tau, const Rational& omega, SecondKind which, int order) {
  RationalMatrix r = which == SecondKind::Wedge2 ? wedge2_matrix<Rational>(t_tau.matrix)
                                                 : sym2_matrix<Rational>(t_tau.matrix);
  RationalMatrix twisted = omega * r;
  return det_one_minus_mt(twisted, order).substitute_square().inverse();
}

Series zeta_series(const IdentityCase& c, const SatakeParameter& pi_block,
                   const SatakeParameter& t_tau, int order, MuExponent exponent) {
  auto shape = zeta_shape(c, pi_block, t_tau);
  Series out(order);
  for (int j = 0; j <= order; ++j) {
    Rational coeff(0);
    for (const auto& delta : enumerate_dominant(c.n(), j)) {
      coeff += similitude_char(shape.family, delta.padded(shape.block_rank), shape.t, shape.mu,
                               exponent) *
               schur_gl(delta, shape.tau);
    }
    out.set(j, coeff);
  }
  return out;
}

Series zeta_from_whittaker(const IdentityCase& c, const SatakeParameter& pi_block,
                           const SatakeParameter& t_tau, int order, MuExponent exponent) {
  auto shape = zeta_shape(c, pi_block, t_tau);
  RootDatum datum_g = build_root_datum(modulus_group(ModulusRole::DeltaG, c));
  RootDatum datum_h = build_root_datum(modulus_group(ModulusRole::DeltaH, c));
  RootDatum datum_gl = build_root_datum(modulus_group(ModulusRole::DeltaGL, c));
  const Rational shift = c.shift_u() - Rational(c.shift_ell());

  Series out(order);
  for (int j = 0; j <= order; ++j) {
    Rational coeff(0);
    for (const auto& delta : enumerate_dominant(c.n(), j)) {
      // q-exponents: W0 values contribute delta_B^{1/2} (exponent -e/2),
      // the integrand's delta_G^{-1} contributes +e_G, the shift q^{-(u-l)j}
      // contributes -(u-l)j.  The total must cancel exactly.
      Rational e_h = modulus_exponent_from_datum(datum_h, delta).value;
      Rational e_gl = modulus_exponent_from_datum(datum_gl, delta).value;
      Rational e_g = modulus_exponent_from_datum(datum_g, delta).value;
      Rational q_exp = e_g - e_h / 2 - e_gl / 2 - shift * Rational(j);
      if (!q_exp.is_zero())
        throw NonCancellingQExponent("residual q-exponent " + q_exp.str() + " at delta = " +
                                     delta.str() + " in case " + c.name());
      coeff += similitude_char(shape.family, delta.padded(shape.block_rank), shape.t, shape.mu,
                               exponent) *
               schur_gl(delta, shape.tau);
    }
    out.set(j, coeff);
  }
  return out;
}

}  // namespace spinlf
