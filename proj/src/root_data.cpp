#include "spinlf/root_data.hpp"

#include <algorithm>

namespace spinlf {

std::string GroupKind::str() const {
  switch (family) {
    case GroupFamily::GSpinOdd:
      return "gspin(" + std::to_string(2 * rank + 1) + ")";
    case GroupFamily::GSpinEvenSplit:
      return "gspin(" + std::to_string(2 * rank) + ")";
    case GroupFamily::GSpinEvenQuasiSplit:
      return "gspin(" + std::to_string(2 * rank) + ",a=" +
             (square_class ? square_class->str() : std::string("?")) + ")";
    case GroupFamily::GL:
      return "gl(" + std::to_string(rank) + ")";
  }
  return "?";
}

LatticeVector LatticeVector::zero(LatticeSide side, int rank) {
  LatticeVector v;
  v.side = side;
  v.c = Eigen::VectorXi::Zero(rank + 1);
  return v;
}

LatticeVector LatticeVector::basis(LatticeSide side, int rank, int i) {
  if (i < 0 || i > rank) throw RankMismatch("basis index out of range");
  LatticeVector v = zero(side, rank);
  v.c[i] = 1;
  return v;
}

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
  if (side != o.side || c.size() != o.c.size())
    throw RankMismatch("lattice vectors not addable");
  LatticeVector v = *this;
  v.c += o.c;
  return v;
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
  if (side != o.side || c.size() != o.c.size())
    throw RankMismatch("lattice vectors not subtractable");
  LatticeVector v = *this;
  v.c -= o.c;
  return v;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector v = *this;
  v.c = -v.c;
  return v;
}

std::string LatticeVector::str() const {
  const char* base = side == LatticeSide::Char ? "e" : "e*";
  std::string out;
  for (int i = 0; i < c.size(); ++i) {
    int k = c[i];
    if (k == 0) continue;
    std::string term;
    if (k == 1)
      term = "";
    else if (k == -1)
      term = "-";
    else
      term = std::to_string(k) + "*";
    term += base + std::to_string(i);
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

void validate_kind(const GroupKind& kind) {
  if (kind.rank < 1) throw InvalidRank("rank must be >= 1");
  if (kind.family == GroupFamily::GSpinEvenQuasiSplit) {
    if (!kind.square_class || kind.square_class->is_zero())
      throw InvalidRank("quasi-split kind needs a nonzero square-class datum");
  }
}

void push_root(RootDatum& d, const LatticeVector& root, const LatticeVector& coroot) {
  d.roots.push_back(root);
  d.coroots.push_back(coroot);
}

}  // namespace

RootDatum build_root_datum(const GroupKind& kind) {
  validate_kind(kind);
  const int n = kind.rank;
  RootDatum d;
  d.kind = kind;

  auto e = [&](int i) { return LatticeVector::basis(LatticeSide::Char, n, i); };
  auto f = [&](int i) { return LatticeVector::basis(LatticeSide::Cochar, n, i); };

  const bool odd = kind.family == GroupFamily::GSpinOdd;
  const bool even = kind.family == GroupFamily::GSpinEvenSplit ||
                    kind.family == GroupFamily::GSpinEvenQuasiSplit;

  std::vector<int> simple_pos;  // positions among the positive roots

  if (odd || even) {
    // Positive roots: e_i - e_j, then e_i + e_j (i < j), then (odd only) e_i.
    std::vector<std::pair<LatticeVector, LatticeVector>> pos;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) pos.emplace_back(e(i) - e(j), f(i) - f(j));
    int plus_base = static_cast<int>(pos.size());
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        pos.emplace_back(e(i) + e(j), f(i) + f(j) - f(0));
    if (odd) {
      for (int i = 1; i <= n; ++i) pos.emplace_back(e(i), f(i) + f(i) - f(0));
    }
    for (auto& [r, cr] : pos) push_root(d, r, cr);
    for (auto& [r, cr] : pos) push_root(d, -r, -cr);

    // Simple system: e_1-e_2, ..., e_{n-1}-e_n, then e_n (odd) or
    // e_{n-1}+e_n (even, rank >= 2).  Pair (i,j) with i<j sits at position
    // sum_{a<i}(n-a) + (j-i-1) within its block.
    auto diff_pos = [&](int i) {
      int idx = 0;
      for (int a = 1; a < i; ++a) idx += n - a;
      return idx;  // pair (i, i+1) leads row i
    };
    const int pair_count = (n * (n - 1)) / 2;
    for (int i = 1; i < n; ++i) simple_pos.push_back(diff_pos(i));
    if (odd) {
      simple_pos.push_back(2 * pair_count + (n - 1));  // short root e_n
    } else if (n >= 2) {
      simple_pos.push_back(plus_base + pair_count - 1);  // e_{n-1}+e_n
    }
  } else {
    // GL_n: roots e_i - e_j for i != j; positives i < j.
    std::vector<std::pair<LatticeVector, LatticeVector>> pos;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) pos.emplace_back(e(i) - e(j), f(i) - f(j));
    for (auto& [r, cr] : pos) push_root(d, r, cr);
    for (auto& [r, cr] : pos) push_root(d, -r, -cr);
    auto diff_pos = [&](int i) {
      int idx = 0;
      for (int a = 1; a < i; ++a) idx += n - a;
      return idx;
    };
    for (int i = 1; i < n; ++i) simple_pos.push_back(diff_pos(i));
  }

  d.simple = std::move(simple_pos);
  return d;
}

LatticeVector coroot_of(const RootDatum& datum, const LatticeVector& root) {
  for (size_t i = 0; i < datum.roots.size(); ++i)
    if (datum.roots[i] == root) return datum.coroots[i];
  throw NotARoot("not a root of " + datum.kind.str() + ": " + root.str());
}

int pairing(const LatticeVector& x, const LatticeVector& y) {
  if (x.side != LatticeSide::Char || y.side != LatticeSide::Cochar)
    throw RankMismatch("pairing takes a character and a cocharacter, in that order");
  if (x.c.size() != y.c.size()) throw RankMismatch("pairing of different ranks");
  return x.c.dot(y.c);
}

namespace {

void validate_weyl(const RootDatum& datum, const WeylElement& w) {
  const int n = datum.kind.rank;
  if (static_cast<int>(w.perm.size()) != n || static_cast<int>(w.sign.size()) != n)
    throw RankMismatch("weyl element size does not match rank");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  int prod = 1;
  for (int i = 0; i < n; ++i) {
    int p = w.perm[static_cast<size_t>(i)];
    if (p < 1 || p > n || seen[static_cast<size_t>(p - 1)])
      throw Error("weyl element permutation is not a permutation of 1..n");
    seen[static_cast<size_t>(p - 1)] = true;
    int s = w.sign[static_cast<size_t>(i)];
    if (s != 1 && s != -1) throw Error("weyl element signs must be +1 or -1");
    prod *= s;
  }
  switch (datum.kind.family) {
    case GroupFamily::GSpinEvenSplit:
    case GroupFamily::GSpinEvenQuasiSplit:
      if (prod != 1) throw Error("even-family weyl element needs an even number of sign flips");
      break;
    case GroupFamily::GL:
      for (int s : w.sign)
        if (s != 1) throw Error("GL weyl elements carry no sign flips");
      break;
    case GroupFamily::GSpinOdd:
      break;
  }
}

}  // namespace

LatticeVector weyl_act(const RootDatum& datum, const WeylElement& w, const LatticeVector& v) {
  const int n = datum.kind.rank;
  if (v.rank() != n) throw RankMismatch("vector rank does not match datum");
  validate_weyl(datum, w);

  LatticeVector out = LatticeVector::zero(v.side, n);
  auto sign_at = [&](int idx) { return w.sign[static_cast<size_t>(idx - 1)]; };

  if (v.side == LatticeSide::Char) {
    // e_i -> eps_{p(i)} e_{p(i)};  e_0 -> e_0 + sum over flipped slots.
    out.c[0] = v.c[0];
    for (int i = 1; i <= n; ++i) {
      int pi = w.perm[static_cast<size_t>(i - 1)];
      out.c[pi] += sign_at(pi) * v.c[i];
    }
    for (int j = 1; j <= n; ++j)
      if (sign_at(j) == -1) out.c[j] += v.c[0];
  } else {
    // e_i* -> e_{p(i)}* or e_0* - e_{p(i)}*;  e_0* -> e_0*.
    out.c[0] = v.c[0];
    for (int i = 1; i <= n; ++i) {
      int pi = w.perm[static_cast<size_t>(i - 1)];
      if (sign_at(pi) == 1) {
        out.c[pi] += v.c[i];
      } else {
        out.c[0] += v.c[i];
        out.c[pi] -= v.c[i];
      }
    }
  }
  return out;
}

LatticeVector galois_act(const RootDatum& datum, const LatticeVector& v) {
  if (datum.kind.family != GroupFamily::GSpinEvenQuasiSplit)
    throw NotQuasiSplit("galois action only defined for quasi-split even data");
  const int n = datum.kind.rank;
  if (v.rank() != n) throw RankMismatch("vector rank does not match datum");

  LatticeVector out = v;
  if (v.side == LatticeSide::Char) {
    // e_0 -> e_0 + e_n, e_n -> -e_n, others fixed.
    out.c[n] = -v.c[n] + v.c[0];
  } else {
    // e_0* -> e_0*, e_n* -> e_0* - e_n*, others fixed.
    out.c[n] = -v.c[n];
    out.c[0] = v.c[0] + v.c[n];
  }
  return out;
}

WeylElement simple_reflection(const RootDatum& datum, int i) {
  const int n = datum.kind.rank;
  const int count = static_cast<int>(datum.simple.size());
  if (count == 0) throw InvalidRank("datum has no simple roots");
  if (i < 0 || i >= count) throw RankMismatch("simple root index out of range");

  WeylElement w;
  w.perm.resize(static_cast<size_t>(n));
  w.sign.assign(static_cast<size_t>(n), 1);
  for (int k = 1; k <= n; ++k) w.perm[static_cast<size_t>(k - 1)] = k;

  const bool odd = datum.kind.family == GroupFamily::GSpinOdd;
  const int diffs = n - 1;  // count of e_i - e_{i+1} generators

  if (i < diffs) {
    std::swap(w.perm[static_cast<size_t>(i)], w.perm[static_cast<size_t>(i + 1)]);
  } else if (odd) {
    w.sign[static_cast<size_t>(n - 1)] = -1;  // reflection in e_n
  } else {
    // reflection in e_{n-1}+e_n: swap the last two slots and flip both signs
    std::swap(w.perm[static_cast<size_t>(n - 2)], w.perm[static_cast<size_t>(n - 1)]);
    w.sign[static_cast<size_t>(n - 2)] = -1;
    w.sign[static_cast<size_t>(n - 1)] = -1;
  }
  return w;
}

GroupKind modulus_group(ModulusRole role, const IdentityCase& c) {
  if (!c.is_family_a())
    throw CaseMismatch("modulus exponents are tabulated for the A-family cases only");
  switch (role) {
    case ModulusRole::DeltaG:
      return c.is_odd() ? GroupKind{GroupFamily::GSpinEvenSplit, c.n(), std::nullopt}
                        : GroupKind{GroupFamily::GSpinOdd, c.n(), std::nullopt};
    case ModulusRole::DeltaH:
      return c.is_odd() ? GroupKind{GroupFamily::GSpinOdd, c.m(), std::nullopt}
                        : GroupKind{GroupFamily::GSpinEvenSplit, c.m(), std::nullopt};
    case ModulusRole::DeltaGL:
      return GroupKind{GroupFamily::GL, c.n(), std::nullopt};
  }
  throw CaseMismatch("unknown modulus role");
}

ModulusExponent modulus_exponent(ModulusRole role, const IdentityCase& c,
                                 const DominantWeight& delta) {
  GroupKind g = modulus_group(role, c);
  if (delta.parts() > g.rank)
    throw RankMismatch("coweight has more parts than the group's rank");

  Rational e(0);
  const int k = g.rank;
  for (int i = 1; i <= delta.parts(); ++i) {
    int ki = delta[i - 1];
    switch (g.family) {
      case GroupFamily::GSpinOdd:
        e += Rational(2 * k - 2 * i + 1) * Rational(ki);
        break;
      case GroupFamily::GSpinEvenSplit:
      case GroupFamily::GSpinEvenQuasiSplit:
        e += Rational(2 * k - 2 * i) * Rational(ki);
        break;
      case GroupFamily::GL:
        e += Rational(k - 2 * i + 1) * Rational(ki);
        break;
    }
  }
  return ModulusExponent{e};
}

ModulusExponent modulus_exponent_from_datum(const RootDatum& datum, const DominantWeight& delta) {
  const int n = datum.kind.rank;
  if (delta.parts() > n) throw RankMismatch("coweight has more parts than the rank");

  LatticeVector cow = LatticeVector::zero(LatticeSide::Cochar, n);
  for (int i = 0; i < delta.parts(); ++i) cow.c[i + 1] = delta[i];

  Rational e(0);
  for (int i = 0; i < datum.positive_count(); ++i)
    e += Rational(pairing(datum.roots[static_cast<size_t>(i)], cow));
  return ModulusExponent{e};
}

IdentityFamily identity_family_from_string(const std::string& s) {
  if (s == "a-odd") return IdentityFamily::AOdd;
  if (s == "a-even-split") return IdentityFamily::AEvenSplit;
  if (s == "a-even-quasisplit") return IdentityFamily::AEvenQuasiSplit;
  if (s == "b-odd") return IdentityFamily::BOdd;
  if (s == "b-even-split") return IdentityFamily::BEvenSplit;
  if (s == "b-even-quasisplit") return IdentityFamily::BEvenQuasiSplit;
  throw ParseError("unknown case '" + s +
                   "' (expected a-odd, a-even-split, a-even-quasisplit, b-odd, "
                   "b-even-split, or b-even-quasisplit)");
}

}  // namespace spinlf
