#pragma once

// Dominant weights for the classical groups in coordinates: weakly
// decreasing non-negative integer tuples.  Padding with trailing zeros
// re-targets a weight at a larger classical rank.

#include <string>
#include <vector>

#include "spinlf/errors.hpp"

namespace spinlf {

class DominantWeight {
 public:
  explicit DominantWeight(std::vector<int> parts) : k_(std::move(parts)) {
    for (size_t i = 0; i < k_.size(); ++i) {
      if (k_[i] < 0) throw Error("dominant weight parts must be non-negative");
      if (i > 0 && k_[i] > k_[i - 1])
        throw Error("dominant weight parts must be weakly decreasing");
    }
  }

  static DominantWeight zero(int parts) {
    return DominantWeight(std::vector<int>(static_cast<size_t>(parts), 0));
  }

  int parts() const { return static_cast<int>(k_.size()); }
  int operator[](int i) const { return k_[static_cast<size_t>(i)]; }
  const std::vector<int>& coords() const { return k_; }

  int total() const {
    int t = 0;
    for (int k : k_) t += k;
    return t;
  }

  bool last_part_zero() const { return k_.empty() || k_.back() == 0; }

  // Right-pad with zeros to the given rank.
  DominantWeight padded(int rank) const {
    if (rank < parts())
      throw RankMismatch("cannot pad a weight with " + std::to_string(parts()) +
                         " parts to rank " + std::to_string(rank));
    std::vector<int> p = k_;
    p.resize(static_cast<size_t>(rank), 0);
    return DominantWeight(std::move(p));
  }

  friend bool operator==(const DominantWeight& a, const DominantWeight& b) {
    return a.k_ == b.k_;
  }
  friend bool operator<(const DominantWeight& a, const DominantWeight& b) {
    return a.k_ < b.k_;
  }

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < k_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(k_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> k_;
};

// All weakly decreasing non-negative n-tuples summing to j (partitions of j
// into at most n parts), in lexicographic-descending order.
std::vector<DominantWeight> enumerate_dominant(int n, int j);

// Partition count p(j, <= k parts) by the classical recursion; used to
// cross-check enumerate_dominant.
long long partition_count(int j, int k);

}  // namespace spinlf
