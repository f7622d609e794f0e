#pragma once

#include "spinlf/cases.hpp"
#include "spinlf/characters.hpp"
#include "spinlf/satake.hpp"
#include "spinlf/series.hpp"

namespace spinlf {

// det(I - M*T) as a truncated series: the reciprocal characteristic
// polynomial, degree <= dim(M), from power traces via Newton's identities.
Series det_one_minus_mt(const RationalMatrix& m, int order);

// L(s, pi x tau) = det(I - (t_pi (x) t_tau) T)^{-1}; works verbatim for the
// quasi-split full matrix since only the Kronecker product is needed.
Series rankin_selberg_l(const SatakeParameter& t_pi, const SatakeParameter& t_tau, int order);

// Twisted second-kind factor at 2s: det(I - omega * R(t_tau) * T)^{-1} with
// T -> T^2, R = wedge or symmetric square per `which`.
Series second_l(const SatakeParameter& t_tau, const Rational& omega, SecondKind which, int order);

// The closed-form zeta series: sum over dominant delta with <= n parts and
// tr(delta) <= order of chi^{similitude}_{delta-bar}(pi) s_delta(t_tau)
// T^{tr delta}.  pi_block is the split parameter (2m diagonal) for the odd
// and even split cases, and the reduced parameter t' in GSp_{2(m-1)} for
// the quasi-split case; delta-bar pads to the corresponding rank.
Series zeta_series(const IdentityCase& c, const SatakeParameter& pi_block,
                   const SatakeParameter& t_tau, int order,
                   MuExponent exponent = MuExponent::HalfTrace);

// The same sum computed the long way around: each term as
// W0_pi(w^delta-bar) W0_tau(w^delta) delta_G^{-1}(w^delta) q^{-(u-l)tr delta}
// with the Casselman-Shalika values delta^{1/2} chi and all modulus
// exponents taken from the root data by pairing against 2*rho.  The
// residual q-exponent of every term must vanish exactly
// (NonCancellingQExponent otherwise); what remains is the zeta series.
Series zeta_from_whittaker(const IdentityCase& c, const SatakeParameter& pi_block,
                           const SatakeParameter& t_tau, int order,
                           MuExponent exponent = MuExponent::HalfTrace);

}  // namespace spinlf
