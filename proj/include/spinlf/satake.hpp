#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spinlf/matrix_ops.hpp"
#include "spinlf/rational.hpp"
#include "spinlf/root_data.hpp"

namespace spinlf {

// Values at the uniformizer of an unramified character tuple:
// chi0 is the central value, chi the torus values chi_1, ..., chi_n.
// The quasi-split form carries the norm-form datum (a, alpha, beta) with
// alpha^2 - a*beta^2 = chi0.
struct UnramifiedData {
  Rational chi0;
  std::vector<Rational> chi;
  std::optional<Rational> a;
  std::optional<Rational> alpha;
  std::optional<Rational> beta;
};

struct SatakeParameter {
  RationalMatrix matrix;
  Rational mu;
  GroupKind kind;
  // present when the matrix is diagonal
  std::optional<std::vector<Rational>> diag_eigenvalues;

  int dim() const { return static_cast<int>(matrix.rows()); }
};

// 2k x 2k antidiagonal Gram matrices: +1 on the upper antidiagonal half and
// -1 on the lower half (symplectic), or +1 throughout (orthogonal).
RationalMatrix symplectic_gram(int k);
RationalMatrix orthogonal_gram(int k);

// Exact check of tM * J * M = mu * J.
bool satisfies_similitude(const RationalMatrix& m, const RationalMatrix& j, const Rational& mu);

// diag(chi_1, ..., chi_m) in GL_m(C); mu is unset (1).
SatakeParameter satake_gl(const std::vector<Rational>& chi);

// diag(chi_1, ..., chi_n, chi0/chi_n, ..., chi0/chi_1) in GSp_{2n}(C),
// the dual-side parameter for the odd group of rank n.
SatakeParameter satake_gspin_odd(const UnramifiedData& data);

// Same shape in GSO_{2n}(C) for the split even group of rank n.
SatakeParameter satake_gspin_even_split(const UnramifiedData& data);

// Quasi-split even form of rank n = |chi| + 1.  Returns the full 2n x 2n
// parameter with the central 2x2 block [[alpha, beta*a], [beta, alpha]]
// (similitude group of the form with anisotropic kernel x^2 - a y^2) and
// the reduced parameter t' = diag(chi_1, ..., chi_{n-1}, chi0/chi_{n-1},
// ..., chi0/chi_1) in GSp_{2(n-1)}, both with mu = chi0.
std::pair<SatakeParameter, SatakeParameter> satake_quasisplit(const UnramifiedData& data);

}  // namespace spinlf
