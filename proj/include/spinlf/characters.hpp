#pragma once

#include <vector>

#include "spinlf/rational.hpp"
#include "spinlf/weights.hpp"

namespace spinlf {

// Similitude families for the dual groups GSp_{2k} and GSO_{2k}.
enum class SimilitudeFamily { GSp, GSO };

// Normalization exponent for the similitude twist mu^{e(delta)}.
// HalfTrace is the degree-homogeneous choice (degree tr(delta) in the
// entries of the similitude element) and is the frozen default; FullTrace
// is kept so the symmetric-algebra oracle can try both and record which
// one validates.
enum class MuExponent { HalfTrace, FullTrace };

// Schur polynomial s_delta(x) via the bialternant ratio
// det(x_i^{k_j + n - j}) / det(x_i^{n - j}).  Needs pairwise distinct x.
Rational schur_gl(const DominantWeight& delta, const std::vector<Rational>& x);

// Character of Sp_{2k}(C) with highest weight delta_bar, evaluated at the
// torus point (x, x^{-1}).  Weyl character formula with minus-alternants,
// l_j = k_j + k - j + 1 and m_j = k - j + 1.
Rational char_sp(const DominantWeight& delta_bar, const std::vector<Rational>& x);

// Character of SO_{2k}(C) with highest weight delta_bar, last part zero
// (NonzeroLastPart otherwise).  With k_k = 0 the odd alternant vanishes and
// the value is the ratio of plus-alternants with l_j = k_j + k - j,
// m_j = k - j.
Rational char_so_even(const DominantWeight& delta_bar, const std::vector<Rational>& x);

// mu^{e(delta)} * chi_{delta_bar}(t * mu^{-1/2}) computed without square
// roots: each weight monomial x^w contributes t^w mu^{(tr delta - |w|)/2},
// an integer exponent since |w| = tr delta mod 2 for Sp/SO weights.  With
// HalfTrace this is the honest trace of the similitude element with paired
// eigenvalues (t_1, ..., t_k, mu/t_k, ..., mu/t_1).  FullTrace multiplies
// a further mu^{tr delta / 2}, which is irrational when mu is not a square
// and tr delta is odd (IrrationalValue).
Rational similitude_char(SimilitudeFamily family, const DominantWeight& delta_bar,
                         const std::vector<Rational>& t, const Rational& mu,
                         MuExponent exponent = MuExponent::HalfTrace);

}  // namespace spinlf
