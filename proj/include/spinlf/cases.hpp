#pragma once

// The six parity/splitness cases of the unramified identities, with their
// rank constraints, normalization shifts, and the representation entering
// the second L-factor.
//
// Family A pairs tau on GL_n with pi on a GSpin group of rank m
// (odd: GSpin_{2m+1}, even: GSpin_{2m}); family B pairs pi induced from
// GL_n Siegel-Levi data with tau on GL_m.

#include <string>

#include "spinlf/errors.hpp"
#include "spinlf/rational.hpp"

namespace spinlf {

enum class IdentityFamily {
  AOdd,
  AEvenSplit,
  AEvenQuasiSplit,
  BOdd,
  BEvenSplit,
  BEvenQuasiSplit,
};

enum class SecondKind { Wedge2, Sym2 };

inline bool is_odd_case(IdentityFamily f) {
  return f == IdentityFamily::AOdd || f == IdentityFamily::BOdd;
}

inline bool is_quasisplit_case(IdentityFamily f) {
  return f == IdentityFamily::AEvenQuasiSplit || f == IdentityFamily::BEvenQuasiSplit;
}

class IdentityCase {
 public:
  IdentityCase(IdentityFamily family, int n, int m) : family_(family), n_(n), m_(m) {
    if (n < 1 || m < 1) throw InvalidRank("case ranks must be positive");
    switch (family) {
      case IdentityFamily::AOdd:
      case IdentityFamily::BEvenSplit:
      case IdentityFamily::BEvenQuasiSplit:
        if (m < n) throw CaseMismatch(name() + " needs m >= n");
        break;
      case IdentityFamily::AEvenSplit:
      case IdentityFamily::AEvenQuasiSplit:
      case IdentityFamily::BOdd:
        if (m <= n) throw CaseMismatch(name() + " needs m > n");
        break;
    }
  }

  IdentityFamily family() const { return family_; }
  int n() const { return n_; }
  int m() const { return m_; }

  bool is_family_a() const {
    return family_ == IdentityFamily::AOdd || family_ == IdentityFamily::AEvenSplit ||
           family_ == IdentityFamily::AEvenQuasiSplit;
  }
  bool is_odd() const { return is_odd_case(family_); }
  bool is_quasisplit() const { return is_quasisplit_case(family_); }

  // Exponent shift in the normalized induction variable.
  Rational shift_u() const {
    return is_odd() ? Rational(n_ - 2, 2) : Rational(n_ - 1, 2);
  }

  // Truncation shift between the two sides of the integral expansion.
  int shift_ell() const { return is_odd() ? m_ - n_ : m_ - n_ - 1; }

  // Representation of GL in the second L-factor.
  SecondKind second_kind() const {
    return family_ == IdentityFamily::AEvenSplit || family_ == IdentityFamily::BEvenSplit
               ? SecondKind::Sym2
               : SecondKind::Wedge2;
  }

  std::string name() const {
    switch (family_) {
      case IdentityFamily::AOdd: return "a-odd";
      case IdentityFamily::AEvenSplit: return "a-even-split";
      case IdentityFamily::AEvenQuasiSplit: return "a-even-quasisplit";
      case IdentityFamily::BOdd: return "b-odd";
      case IdentityFamily::BEvenSplit: return "b-even-split";
      case IdentityFamily::BEvenQuasiSplit: return "b-even-quasisplit";
    }
    return "?";
  }

  friend bool operator==(const IdentityCase& a, const IdentityCase& b) {
    return a.family_ == b.family_ && a.n_ == b.n_ && a.m_ == b.m_;
  }

 private:
  IdentityFamily family_;
  int n_;
  int m_;
};

IdentityFamily identity_family_from_string(const std::string& s);

}  // namespace spinlf
