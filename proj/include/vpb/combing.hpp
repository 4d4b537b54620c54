#pragma once

// The combing normal form b = w_2 w_3 ... w_n and kernel conjugate forms.
//
// Deleting the top strand splits VP_n as a semidirect product: the kernel
// part is w_n = c^-1 b with c the deleted image embedded back, and the
// construction recurses on c.  Multiplying the parts back in order and
// freely reducing reproduces free_reduce(b) exactly; no relation search is
// involved in the decomposition itself.
//
// A kernel word w over strand n factors by scanning: with the letters
// touching strand n as a_1 ... a_k and the gaps u_1 ... u_{k+1},
//   w = (v_1 a_1 v_1^-1)(v_2 a_2 v_2^-1) ... (v_k a_k v_k^-1) * residual,
// where v_t = u_1 ... u_t and residual = u_1 ... u_{k+1}.  k is the kernel
// length of w.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "vpb/braid_word.hpp"
#include "vpb/equivalence.hpp"
#include "vpb/invariants.hpp"

namespace vpb {

inline bool touches_strand(const Lambda& g, int n) {
  return g.over == n || g.under == n;
}

// A generator with exactly one index on the distinguished strand.
struct VnLetter {
  Lambda letter;
  int strand;

  VnLetter(const Lambda& g, int n) : letter(g), strand(n) {
    if ((g.over == n) == (g.under == n))
      throw std::invalid_argument("VnLetter: exactly one index must equal n");
  }
};

struct ConjugateFactor {
  BraidWord conjugator;  // strand-n-free prefix, embedded in the full word
  VnLetter letter;
};

struct ConjugateProduct {
  int strand_count = 1;
  int strand = 1;  // the distinguished strand n
  std::vector<ConjugateFactor> factors;
  BraidWord residual;

  int length() const { return static_cast<int>(factors.size()); }
};

// Multiplies the factors and residual back out (unreduced beyond the
// factor words themselves); freely reduces to the source kernel word.
inline BraidWord multiply_out(const ConjugateProduct& p) {
  BraidWord r(p.strand_count);
  for (const ConjugateFactor& f : p.factors) {
    BraidWord one(p.strand_count);
    one.push_back(f.letter.letter);
    r.append(conjugate(f.conjugator, one));
  }
  r.append(p.residual);
  return r;
}

inline int kernel_length(const BraidWord& w, int n) {
  if (n < 1 || n > w.strands())
    throw std::invalid_argument("kernel_length: strand index out of range");
  if (!exponent_vector(delete_strand(w, n)).is_zero())
    throw std::invalid_argument(
        "kernel form: projection off strand " + std::to_string(n) +
        " has nonzero exponent vector");
  int k = 0;
  for (const Lambda& g : w.letters())
    if (touches_strand(g, n)) ++k;
  return k;
}

inline ConjugateProduct kernel_conjugate_form(const BraidWord& w, int n) {
  kernel_length(w, n);  // validates the projection precondition
  ConjugateProduct p;
  p.strand_count = w.strands();
  p.strand = n;
  BraidWord prefix(w.strands());
  for (const Lambda& g : w.letters()) {
    if (touches_strand(g, n)) {
      p.factors.push_back(ConjugateFactor{prefix, VnLetter(g, n)});
    } else {
      prefix.push_back(g);
    }
  }
  p.residual = prefix;
  return p;
}

struct KernelPart {
  int strand = 2;  // the j of w_j
  BraidWord word;  // embedded in the decomposition's strand count
  ConjugateProduct form;
};

struct KernelDecomposition {
  int strand_count = 2;
  std::vector<KernelPart> parts;  // w_2 first, w_n last
};

// Product of the parts in order, on the full strand count.
inline BraidWord parts_product(const KernelDecomposition& d) {
  BraidWord r(d.strand_count);
  for (const KernelPart& part : d.parts) r.append(part.word);
  return r;
}

inline KernelDecomposition comb(const BraidWord& b) {
  if (b.strands() < 2)
    throw std::invalid_argument("comb: need at least 2 strands");
  int n = b.strands();
  KernelDecomposition d;
  d.strand_count = n;

  std::vector<BraidWord> parts;  // collected top strand first
  BraidWord cur = b;
  for (int j = n; j >= 3; --j) {
    BraidWord c = embed(delete_strand(cur, j), j);
    parts.push_back(free_reduce(multiply(invert(c), cur)));
    cur = delete_strand(cur, j);
  }
  parts.push_back(cur);  // w_2

  for (int t = static_cast<int>(parts.size()) - 1; t >= 0; --t) {
    KernelPart part;
    part.strand = n - t;  // parts[0] is w_n
    part.word = embed(parts[t], n);
    part.form = kernel_conjugate_form(part.word, part.strand);
    d.parts.push_back(std::move(part));
  }
  return d;
}

// Greedy budgeted reduction of the kernel length: repeatedly deletes a pair
// of mutually inverse strand-n letters whose removal leaves a word the
// bounded relation search can prove equivalent.  The result never has a
// larger kernel length; no minimality is claimed.
inline BraidWord heuristic_length_reduction(const BraidWord& w, int n,
                                            const SearchBudget& budget = {}) {
  kernel_length(w, n);  // validates the projection precondition
  BraidWord cur = free_reduce(w);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::size_t> touching;
    for (std::size_t t = 0; t < cur.size(); ++t)
      if (touches_strand(cur[t], n)) touching.push_back(t);
    for (std::size_t a = 0; a < touching.size() && !changed; ++a)
      for (std::size_t b = a + 1; b < touching.size() && !changed; ++b) {
        std::size_t p = touching[a], q = touching[b];
        if (cur[q] != cur[p].inverse()) continue;  // keeps the exponent vector
        std::vector<Lambda> letters;
        letters.reserve(cur.size() - 2);
        for (std::size_t t = 0; t < cur.size(); ++t)
          if (t != p && t != q) letters.push_back(cur[t]);
        BraidWord cand = free_reduce(BraidWord(cur.strands(), std::move(letters)));
        if (equivalent_bounded(cur, cand, budget).status ==
            EquivalenceStatus::equivalent) {
          cur = cand;
          changed = true;
        }
      }
  }
  return cur;
}

// Decomposition report: one block per part.
inline std::string format_decomposition(const KernelDecomposition& d) {
  std::string out;
  for (const KernelPart& part : d.parts) {
    if (!out.empty()) out += "\n";
    out += "part " + std::to_string(part.strand) + "\n";
    out += "word " + format_word(part.word) + "\n";
    out += "k " + std::to_string(part.form.length()) + "\n";
    for (const ConjugateFactor& f : part.form.factors) {
      out += "factor conj " + format_word(f.conjugator) + "\n";
      BraidWord one(part.form.strand_count);
      one.push_back(f.letter.letter);
      out += "factor letter " + format_word(one) + "\n";
    }
    out += "residual " + format_word(part.form.residual) + "\n";
  }
  return out;
}

inline std::string format_conjugate_product(const ConjugateProduct& p) {
  std::string out = "k " + std::to_string(p.length()) + "\n";
  for (const ConjugateFactor& f : p.factors) {
    out += "factor conj " + format_word(f.conjugator) + "\n";
    BraidWord one(p.strand_count);
    one.push_back(f.letter.letter);
    out += "factor letter " + format_word(one) + "\n";
  }
  out += "residual " + format_word(p.residual) + "\n";
  return out;
}

}  // namespace vpb
