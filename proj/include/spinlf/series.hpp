#pragma once

// Formal power series in T truncated at a fixed order, with exact
// coefficients.  T stands for q^{-s}; all identity checks in this library are
// coefficientwise statements about such series.

#include <string>
#include <vector>

#include "spinlf/errors.hpp"
#include "spinlf/rational.hpp"

namespace spinlf {

template <class Scalar>
class TruncatedSeries {
 public:
  // Zero series of the given truncation order (coefficients 0..order).
  explicit TruncatedSeries(int order) : c_(static_cast<size_t>(order) + 1, Scalar(0)) {
    if (order < 0) throw Error("negative truncation order");
  }

  TruncatedSeries(int order, std::vector<Scalar> coeffs) : TruncatedSeries(order) {
    if (coeffs.size() > c_.size()) throw Error("more coefficients than truncation order allows");
    for (size_t i = 0; i < coeffs.size(); ++i) c_[i] = coeffs[i];
  }

  static TruncatedSeries one(int order) {
    TruncatedSeries s(order);
    s.c_[0] = Scalar(1);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  const Scalar& operator[](int r) const {
    check_index(r);
    return c_[static_cast<size_t>(r)];
  }
  void set(int r, Scalar v) {
    check_index(r);
    c_[static_cast<size_t>(r)] = std::move(v);
  }
  void add(int r, const Scalar& v) {
    check_index(r);
    c_[static_cast<size_t>(r)] += v;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check_same_order(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check_same_order(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_same_order(b);
    TruncatedSeries p(a.order());
    for (int i = 0; i <= a.order(); ++i) {
      if (a.c_[static_cast<size_t>(i)] == Scalar(0)) continue;
      for (int j = 0; i + j <= a.order(); ++j)
        p.c_[static_cast<size_t>(i + j)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
    }
    return p;
  }

  friend TruncatedSeries operator*(const Scalar& s, TruncatedSeries a) {
    for (auto& c : a.c_) c = s * c;
    return a;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
    return !(a == b);
  }

  // Multiplicative inverse; the constant term must be a unit.
  TruncatedSeries inverse() const {
    if (c_[0] == Scalar(0))
      throw NonUnitConstantTerm("series has no inverse: constant term is zero");
    TruncatedSeries q(order());
    q.c_[0] = Scalar(1) / c_[0];
    for (int r = 1; r <= order(); ++r) {
      Scalar acc(0);
      for (int i = 1; i <= r; ++i)
        acc += c_[static_cast<size_t>(i)] * q.c_[static_cast<size_t>(r - i)];
      q.c_[static_cast<size_t>(r)] = -acc / c_[0];
    }
    return q;
  }

  // p(T) -> p(T^2), truncated at the same order.
  TruncatedSeries substitute_square() const {
    TruncatedSeries s(order());
    for (int r = 0; 2 * r <= order(); ++r) s.c_[static_cast<size_t>(2 * r)] = c_[static_cast<size_t>(r)];
    return s;
  }

  std::string str() const {
    std::string out;
    bool first = true;
    for (int r = 0; r <= order(); ++r) {
      const Scalar& c = c_[static_cast<size_t>(r)];
      if (c == Scalar(0) && !(r == 0 && order() == 0)) continue;
      std::string term = c.str();
      if (r > 0) term += "*T^" + std::to_string(r);
      if (!first) out += " + ";
      out += term;
      first = false;
    }
    if (first) out = "0";
    return out + " + O(T^" + std::to_string(order() + 1) + ")";
  }

 private:
  void check_index(int r) const {
    if (r < 0 || r > order()) throw Error("series coefficient index out of range");
  }
  void check_same_order(const TruncatedSeries& o) const {
    if (order() != o.order()) throw Error("series truncation orders differ");
  }

  std::vector<Scalar> c_;
};

using Series = TruncatedSeries<Rational>;

}  // namespace spinlf
