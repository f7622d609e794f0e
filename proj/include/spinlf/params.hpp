#pragma once

#include <cstdint>

#include "spinlf/identity.hpp"
#include "spinlf/satake.hpp"

namespace spinlf {

// Seeded parameter generation for verification runs.  All values are
// distinct small primes raised to +-1, which keeps every evaluation point
// regular by construction and coefficient sizes bounded; chi0 is always
// supplied as the square of such a unit so that similitude characters can
// take the alternant fast path.  Draws use explicit modulo reduction of
// mt19937_64 words, never distribution objects, so identical seeds produce
// identical parameters on every platform.

struct IdentityInstance {
  UnramifiedData pi;
  UnramifiedData tau;
};

IdentityInstance random_identity_instance(const IdentityCase& c, std::uint64_t seed);

SymAlgInstance random_symalg_instance(SimilitudeFamily family, int m, int n, int r,
                                      std::uint64_t seed);

struct CaseBInstance {
  UnramifiedData sigma;
  UnramifiedData tau;
};

CaseBInstance random_case_b_instance(const IdentityCase& c, std::uint64_t seed);

}  // namespace spinlf
