#pragma once

// Exact rational scalar used throughout the library, plus dense Eigen types
// over it.  The representation wraps boost::multiprecision::cpp_rational in a
// plain value class with a closed constructor set: the raw multiprecision
// type advertises generic container constructors whose trait machinery does
// not survive being probed with Eigen expression types, so it cannot serve as
// an Eigen scalar directly.

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "spinlf/errors.hpp"

namespace spinlf {

using Int = boost::multiprecision::cpp_int;

class Rational {
 public:
  using Rep = boost::multiprecision::cpp_rational;

  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                  // NOLINT: implicit on purpose
  Rational(long n) : v_(n) {}                 // NOLINT
  Rational(long long n) : v_(n) {}            // NOLINT
  Rational(long long num, long long den) : v_(Rep(num, den)) {}
  explicit Rational(const Int& n) : v_(n) {}
  explicit Rational(const Int& num, const Int& den) : v_(Rep(num, den)) {}
  explicit Rational(Rep v) : v_(std::move(v)) {}

  const Rep& rep() const { return v_; }
  Int num() const { return boost::multiprecision::numerator(v_); }
  Int den() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(Rep(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  // "p/q" with the "/q" omitted for integers; never a float.
  std::string str() const {
    std::ostringstream os;
    os << v_;
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
  }

 private:
  Rep v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// x^e for integer e of either sign; 0^0 = 1, negative powers of 0 throw.
inline Rational pow(const Rational& x, long long e) {
  if (e == 0) return Rational(1);
  if (x.is_zero()) {
    if (e > 0) return Rational(0);
    throw Error("negative power of zero");
  }
  Rational base = e > 0 ? x : Rational(1) / x;
  unsigned long long k = e > 0 ? static_cast<unsigned long long>(e)
                               : static_cast<unsigned long long>(-e);
  Rational acc(1);
  while (k != 0) {
    if (k & 1ULL) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

// Parses "p", "-p", or "p/q" (q > 0 after normalization).
inline Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den.is_zero()) throw ParseError("zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw ParseError("bad rational literal '" + s + "': " + e.what());
  }
}

inline std::optional<Int> exact_int_sqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  Int r = boost::multiprecision::sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

// Exact square root when the value is a square in Q, otherwise nullopt.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  auto n = exact_int_sqrt(r.num());
  if (!n) return std::nullopt;
  auto d = exact_int_sqrt(r.den());
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

inline bool is_square(const Rational& r) { return exact_sqrt(r).has_value(); }

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

}  // namespace spinlf

namespace Eigen {

template <>
struct NumTraits<spinlf::Rational> : GenericNumTraits<spinlf::Rational> {
  typedef spinlf::Rational Real;
  typedef spinlf::Rational NonInteger;
  typedef spinlf::Rational Nested;
  typedef spinlf::Rational Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40
  };
  static inline Real epsilon() { return spinlf::Rational(0); }
  static inline Real dummy_precision() { return spinlf::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
