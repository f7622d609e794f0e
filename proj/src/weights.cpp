#include "spinlf/weights.hpp"

namespace spinlf {

namespace {

void emit(int remaining, int slots, int cap, std::vector<int>& acc,
          std::vector<DominantWeight>& out) {
  if (slots == 0) {
    if (remaining == 0) out.emplace_back(acc);
    return;
  }
  int hi = remaining < cap ? remaining : cap;
  for (int k = hi; k >= 0; --k) {
    // Prune: the remaining slots can hold at most slots*k more.
    if (static_cast<long long>(k) * slots < remaining) break;
    acc.push_back(k);
    emit(remaining - k, slots - 1, k, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<DominantWeight> enumerate_dominant(int n, int j) {
  if (n < 1) throw Error("enumerate_dominant needs n >= 1");
  if (j < 0) throw Error("enumerate_dominant needs j >= 0");
  std::vector<DominantWeight> out;
  std::vector<int> acc;
  acc.reserve(static_cast<size_t>(n));
  emit(j, n, j, acc, out);
  return out;
}

long long partition_count(int j, int k) {
  if (j < 0 || k < 0) return 0;
  if (j == 0) return 1;
  if (k == 0) return 0;
  // p(j, k) = p(j-k, k) + p(j, k-1): split on whether all k part slots are used.
  return partition_count(j - k, k) + partition_count(j, k - 1);
}

}  // namespace spinlf
