#pragma once

// Based root data for GSpin_{2n+1}, split GSpin_{2n}, quasi-split
// GSpin_{2n}^a and GL_n, on the character/cocharacter lattices generated by
// e_0, e_1, ..., e_n (respectively the dual starred generators).  Index 0 is
// always the e_0 / e_0^* slot; for GL it is carried along unused so that all
// lattice vectors of a fixed rank have one shape.

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "spinlf/cases.hpp"
#include "spinlf/errors.hpp"
#include "spinlf/rational.hpp"
#include "spinlf/weights.hpp"

namespace spinlf {

enum class GroupFamily { GSpinOdd, GSpinEvenSplit, GSpinEvenQuasiSplit, GL };

struct GroupKind {
  GroupFamily family;
  int rank;  // semisimple rank n: GSpin_{2n+1} / GSpin_{2n}; matrix size for GL
  std::optional<Rational> square_class;  // the datum a of a quasi-split form

  std::string str() const;
};

enum class LatticeSide { Char, Cochar };

struct LatticeVector {
  LatticeSide side;
  Eigen::VectorXi c;  // length rank+1, slot i = coefficient of e_i / e_i^*

  int rank() const { return static_cast<int>(c.size()) - 1; }

  static LatticeVector zero(LatticeSide side, int rank);
  static LatticeVector basis(LatticeSide side, int rank, int i);

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.side == b.side && a.c == b.c;
  }

  LatticeVector operator+(const LatticeVector& o) const;
  LatticeVector operator-(const LatticeVector& o) const;
  LatticeVector operator-() const;

  std::string str() const;
};

// Signed permutation (p, eps) acting on indices 1..n; for the even families
// the product of signs must be +1, and for GL all signs must be +1.
struct WeylElement {
  std::vector<int> perm;  // images p(1..n), 1-based values
  std::vector<int> sign;  // eps_1..eps_n, entries +1 or -1
};

struct RootDatum {
  GroupKind kind;
  std::vector<LatticeVector> roots;    // character side; negatives follow positives
  std::vector<LatticeVector> coroots;  // parallel to roots
  std::vector<int> simple;             // indices into roots, in the fixed order

  int positive_count() const { return static_cast<int>(roots.size()) / 2; }
};

RootDatum build_root_datum(const GroupKind& kind);

// The coroot attached to a root of the datum.
LatticeVector coroot_of(const RootDatum& datum, const LatticeVector& root);

// Standard pairing <char, cochar> = sum of slotwise products.
int pairing(const LatticeVector& x, const LatticeVector& y);

LatticeVector weyl_act(const RootDatum& datum, const WeylElement& w, const LatticeVector& v);

// The nontrivial Galois action of a quasi-split even datum.
LatticeVector galois_act(const RootDatum& datum, const LatticeVector& v);

// Reflection in the i-th simple root, expressed as a signed permutation.
WeylElement simple_reflection(const RootDatum& datum, int i);

enum class ModulusRole { DeltaG, DeltaH, DeltaGL };

struct ModulusExponent {
  Rational value;  // modulus value at t = pi^delta is q^{-value}
};

// Closed-form exponent of the Borel modulus character at the coweight delta,
// for the group the role designates within the given case.
ModulusExponent modulus_exponent(ModulusRole role, const IdentityCase& c, const DominantWeight& delta);

// Same exponent computed as <2 rho, delta> from the root datum.
ModulusExponent modulus_exponent_from_datum(const RootDatum& datum, const DominantWeight& delta);

// The group a modulus role refers to within a case.
GroupKind modulus_group(ModulusRole role, const IdentityCase& c);

}  // namespace spinlf
