#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinlf/characters.hpp"
#include "spinlf/rational.hpp"

namespace spinlf {

struct CoefficientRow {
  int index;
  Rational lhs;
  Rational rhs;
  bool equal;
};

// One stratum of the zeta sum (all delta with tr delta = stratum): the
// computed value against the value implied by dividing the other side of
// the identity by the second-kind factor.  Used to localize mismatches.
struct StratumRow {
  int stratum;
  Rational zeta;
  Rational implied;
  bool equal;
};

struct Comparison {
  std::string label;
  std::vector<CoefficientRow> coefficients;
  std::vector<StratumRow> strata;  // filled only when the comparison fails
  bool pass = false;
};

struct VerificationReport {
  std::string kind;       // "identity", "symalg", "case-b-factorization"
  std::string case_name;  // identity case or similitude family
  int n = 0;
  int m = 0;
  int r = 0;  // symalg degree bound; unused otherwise
  int order = 0;
  std::optional<unsigned long long> seed;
  std::vector<std::pair<std::string, std::string>> parameters;  // exact "p/q" echoes
  std::string mu_exponent;  // "tr(delta)/2" or "tr(delta)"
  std::vector<Comparison> comparisons;
  std::string primary;  // label of the comparison the verdict tracks
  bool pass = false;
  std::optional<bool> whittaker_consistent;
  std::vector<std::string> validated_exponents;  // symalg outcome
  std::vector<std::pair<std::string, std::vector<Rational>>> extra_series;
  std::vector<std::string> notes;
};

std::string exponent_name(MuExponent e);

// Deterministic JSON rendering: fixed key order, rationals as "p/q"
// strings, no timestamps or environment echoes.  Identical inputs give
// byte-identical output.
std::string render_json(const VerificationReport& report);

std::string render_text(const VerificationReport& report);

// Aggregate for sweeps; runs are sorted by key before rendering.
struct SweepReport {
  std::vector<std::pair<std::string, VerificationReport>> runs;
  bool all_pass = false;
};

std::string render_json(const SweepReport& report);
std::string render_text(const SweepReport& report);

}  // namespace spinlf
