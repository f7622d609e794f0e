#pragma once

// Brute-force weight multiplicities by Freudenthal's recursion, independent
// of the alternant character formulas.  Deliberately small-scale: the point
// is cross-checking, not performance.

#include <vector>

#include "spinlf/rational.hpp"
#include "spinlf/weights.hpp"

namespace spinlf {

enum class ClassicalFamily { GL, Sp, SOeven };

struct WeightMultiplicity {
  std::vector<int> weight;
  long long mult;
};

// Full weight table of the irreducible representation with highest weight
// lambda (lambda.parts() is the classical rank).  Budget: rank <= 4 and
// |lambda| <= 8, else OracleBudgetExceeded.
std::vector<WeightMultiplicity> freudenthal_weight_table(ClassicalFamily family,
                                                         const DominantWeight& lambda);

// Character value sum_w mult(w) x^w at a point with nonzero coordinates.
Rational freudenthal_char(ClassicalFamily family, const DominantWeight& lambda,
                          const std::vector<Rational>& x);

// Representation dimension from the weight table (for sanity checks).
long long freudenthal_dim(ClassicalFamily family, const DominantWeight& lambda);

}  // namespace spinlf
