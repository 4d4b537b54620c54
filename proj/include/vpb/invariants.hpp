#pragma once

// Abelianization and linking data for braid words.
//
// The exponent vector sends a word to the signed count of each generator;
// it is additive under multiplication and kills commutators and conjugation.
// The linking matrix is the homotopy invariant Link(a,b), normalized so that
// the generator l(i,j) has Link(i,j) = -1: each letter l(i,j)^e contributes
// one classical crossing of strand i over strand j with sign -e.

#include <map>
#include <string>
#include <utility>

#include "vpb/braid_word.hpp"

namespace vpb {

using IndexPair = std::pair<int, int>;

// Sparse integer vector indexed by ordered strand pairs; absent entries are
// zero.  std::map keeps the (first, second) ordering deterministic.
struct ExponentVector {
  std::map<IndexPair, int> entries;

  int at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }

  bool is_zero() const { return entries.empty(); }

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.entries == b.entries;
  }
  friend bool operator!=(const ExponentVector& a, const ExponentVector& b) {
    return !(a == b);
  }
};

struct LinkingMatrix {
  std::map<IndexPair, int> entries;

  int at(int a, int b) const {
    auto it = entries.find({a, b});
    return it == entries.end() ? 0 : it->second;
  }

  bool is_zero() const { return entries.empty(); }

  friend bool operator==(const LinkingMatrix& a, const LinkingMatrix& b) {
    return a.entries == b.entries;
  }
  friend bool operator!=(const LinkingMatrix& a, const LinkingMatrix& b) {
    return !(a == b);
  }
};

// Sign of a classical crossing.  Calibrated so that the single crossing of
// the generator l(i,j) (strand i over strand j, exponent +1) has sign -1,
// which makes per-pair crossing-sign sums over a diagram agree with
// linking_matrix.
struct CrossingSign {
  int value = -1;  // +1 or -1
};

inline CrossingSign crossing_sign_for_exponent(int exp) {
  return CrossingSign{-exp};
}

inline ExponentVector exponent_vector(const BraidWord& w) {
  ExponentVector v;
  for (const Lambda& g : w.letters()) {
    int& e = v.entries[{g.over, g.under}];
    e += g.exp;
    if (e == 0) v.entries.erase({g.over, g.under});
  }
  return v;
}

inline LinkingMatrix linking_matrix(const BraidWord& w) {
  LinkingMatrix m;
  for (const auto& [pair, e] : exponent_vector(w).entries)
    m.entries[pair] = -e;
  return m;
}

// Necessary condition for membership in the identity-homotopic subgroup;
// never sufficient on its own.
inline bool is_possibly_identity_homotopic(const BraidWord& w) {
  return linking_matrix(w).is_zero();
}

// Structured-text export: one line per nonzero entry, ordered by
// (first index, second index).
inline std::string render_exponent_vector(const ExponentVector& v) {
  std::string out;
  for (const auto& [pair, e] : v.entries)
    out += "exp " + std::to_string(pair.first) + " " +
           std::to_string(pair.second) + " " + std::to_string(e) + "\n";
  return out;
}

inline std::string render_linking_matrix(const LinkingMatrix& m) {
  std::string out;
  for (const auto& [pair, e] : m.entries)
    out += "link " + std::to_string(pair.first) + " " +
           std::to_string(pair.second) + " " + std::to_string(e) + "\n";
  return out;
}

}  // namespace vpb
