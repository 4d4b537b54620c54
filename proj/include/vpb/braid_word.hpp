#pragma once

// Words over the lambda generators of the pure virtual braid group VP_n.
//
// A generator l(i,j) has one classical crossing in which strand i passes
// over strand j (i != j, both 1-based).  A braid word is a finite sequence
// of signed generators together with the strand count n; the empty sequence
// is the n-strand identity braid.  Words are kept unreduced: free reduction
// is an explicit operation, so move certificates replay against verbatim
// letter positions.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vpb {

// One signed generator occurrence.
struct Lambda {
  int over = 0;
  int under = 0;
  int exp = 1;  // +1 or -1

  Lambda() = default;
  Lambda(int o, int u, int e) : over(o), under(u), exp(e) {}

  Lambda inverse() const { return Lambda(over, under, -exp); }

  friend bool operator==(const Lambda& a, const Lambda& b) {
    return a.over == b.over && a.under == b.under && a.exp == b.exp;
  }
  friend bool operator!=(const Lambda& a, const Lambda& b) { return !(a == b); }

  // Canonical generator order: (over, under, exp).
  friend bool operator<(const Lambda& a, const Lambda& b) {
    if (a.over != b.over) return a.over < b.over;
    if (a.under != b.under) return a.under < b.under;
    return a.exp < b.exp;
  }
};

// Thrown by parse_word; `position` is the byte offset into the input text.
struct parse_error : std::runtime_error {
  std::size_t position;
  parse_error(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
};

namespace detail {
inline void check_letter(const Lambda& g, int strands) {
  if (g.exp != 1 && g.exp != -1)
    throw std::invalid_argument("generator exponent must be +1 or -1");
  if (g.over == g.under)
    throw std::invalid_argument("generator indices must differ");
  if (g.over < 1 || g.over > strands || g.under < 1 || g.under > strands)
    throw std::invalid_argument("generator index out of range 1.." +
                                std::to_string(strands));
}
}  // namespace detail

class BraidWord {
 public:
  BraidWord() = default;

  explicit BraidWord(int strands) : strands_(strands) {
    if (strands < 1) throw std::invalid_argument("strand count must be >= 1");
  }

  BraidWord(int strands, std::vector<Lambda> letters)
      : strands_(strands), letters_(std::move(letters)) {
    if (strands < 1) throw std::invalid_argument("strand count must be >= 1");
    for (const Lambda& g : letters_) detail::check_letter(g, strands_);
  }

  int strands() const { return strands_; }
  const std::vector<Lambda>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Lambda& operator[](std::size_t i) const { return letters_[i]; }

  // True when the word came from parse_word input containing s(i,j) sugar;
  // the original text is then not recoverable from the letters alone.
  bool from_sigma() const { return from_sigma_; }
  void set_from_sigma(bool f) { from_sigma_ = f; }

  void push_back(const Lambda& g) {
    detail::check_letter(g, strands_);
    letters_.push_back(g);
  }

  void append(const BraidWord& w) {
    if (w.strands_ != strands_)
      throw std::invalid_argument("strand counts differ: " +
                                  std::to_string(strands_) + " vs " +
                                  std::to_string(w.strands_));
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
  }

  // Equality ignores the sigma-sugar flag; it is provenance, not content.
  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands_ == b.strands_ && a.letters_ == b.letters_;
  }
  friend bool operator!=(const BraidWord& a, const BraidWord& b) {
    return !(a == b);
  }

 private:
  int strands_ = 1;
  std::vector<Lambda> letters_;
  bool from_sigma_ = false;
};

// Shortlex on words with the (over, under, exp) letter order.
inline bool shortlex_less(const BraidWord& a, const BraidWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.letters().begin(), a.letters().end(),
                                      b.letters().begin(), b.letters().end());
}

inline BraidWord multiply(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw std::invalid_argument("multiply: strand counts differ");
  BraidWord r = a;
  r.set_from_sigma(false);
  r.append(b);
  return r;
}

inline BraidWord invert(const BraidWord& w) {
  std::vector<Lambda> letters(w.letters().rbegin(), w.letters().rend());
  for (Lambda& g : letters) g.exp = -g.exp;
  return BraidWord(w.strands(), std::move(letters));
}

inline BraidWord free_reduce(const BraidWord& w) {
  std::vector<Lambda> stack;
  stack.reserve(w.size());
  for (const Lambda& g : w.letters()) {
    if (!stack.empty() && stack.back() == g.inverse())
      stack.pop_back();
    else
      stack.push_back(g);
  }
  return BraidWord(w.strands(), std::move(stack));
}

// g * w * g^-1, unreduced.
inline BraidWord conjugate(const BraidWord& g, const BraidWord& w) {
  if (g.strands() != w.strands())
    throw std::invalid_argument("conjugate: strand counts differ");
  BraidWord r = g;
  r.append(w);
  r.append(invert(g));
  return r;
}

// x * y * x^-1 * y^-1, unreduced.
inline BraidWord commutator(const BraidWord& x, const BraidWord& y) {
  if (x.strands() != y.strands())
    throw std::invalid_argument("commutator: strand counts differ");
  BraidWord r = x;
  r.append(y);
  r.append(invert(x));
  r.append(invert(y));
  return r;
}

// Removes strand i: letters touching i are dropped, indices above i shift
// down, and the result lives on one strand fewer.  Letterwise, so it is a
// group homomorphism VP_n -> VP_{n-1}.
inline BraidWord delete_strand(const BraidWord& w, int i) {
  if (w.strands() < 2)
    throw std::invalid_argument("delete_strand: need at least 2 strands");
  if (i < 1 || i > w.strands())
    throw std::invalid_argument("delete_strand: strand index out of range");
  std::vector<Lambda> letters;
  letters.reserve(w.size());
  for (const Lambda& g : w.letters()) {
    if (g.over == i || g.under == i) continue;
    Lambda h = g;
    if (h.over > i) --h.over;
    if (h.under > i) --h.under;
    letters.push_back(h);
  }
  return BraidWord(w.strands() - 1, std::move(letters));
}

// Index-preserving embedding onto a larger strand count.
inline BraidWord embed(const BraidWord& w, int strands) {
  if (strands < w.strands())
    throw std::invalid_argument("embed: target strand count too small");
  return BraidWord(strands, w.letters());
}

// Classical generator sigma_ij (1 <= i < j <= n) as a lambda word:
//   g * (l(i,j) l(j,i)^-1) * g^-1   with   g = l(i,i+1) l(i,i+2) ... l(i,j-1).
// The prefix g is empty when j = i+1.
inline BraidWord expand_sigma(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n))
    throw std::invalid_argument("expand_sigma: need 1 <= i < j <= n");
  BraidWord r(n);
  for (int k = i + 1; k < j; ++k) r.push_back(Lambda(i, k, 1));
  r.push_back(Lambda(i, j, 1));
  r.push_back(Lambda(j, i, -1));
  for (int k = j - 1; k > i; --k) r.push_back(Lambda(i, k, -1));
  return r;
}

namespace detail {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_space() {
    while (!done()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      } else if (text[pos] == '#') {
        while (!done() && text[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  void expect(char c, const char* what) {
    if (done() || text[pos] != c)
      throw parse_error(std::string("expected '") + c + "' " + what, pos);
    ++pos;
  }

  int integer(const char* what) {
    std::size_t start = pos;
    if (!done() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == digits) throw parse_error(std::string("expected ") + what, pos);
    try {
      return std::stoi(text.substr(start, pos - start));
    } catch (const std::out_of_range&) {
      throw parse_error(std::string(what) + " out of range", start);
    }
  }
};

}  // namespace detail

// Parses the word text format:
//   n=<int>; then whitespace-separated tokens l(i,j) / s(i,j),
//   each with an optional ^-1 suffix; '#' starts a line comment.
// s(i,j) is sugar expanded through expand_sigma; the word is flagged so
// format_word can refuse the lossy round trip.
inline BraidWord parse_word(const std::string& text) {
  detail::Cursor c{text};
  c.skip_space();
  c.expect('n', "to start the strand-count header");
  c.expect('=', "after 'n'");
  std::size_t npos = c.pos;
  int n = c.integer("strand count");
  c.expect(';', "after the strand count");
  if (n < 1) throw parse_error("strand count must be >= 1", npos);

  BraidWord w(n);
  bool saw_sigma = false;
  for (c.skip_space(); !c.done(); c.skip_space()) {
    std::size_t tok = c.pos;
    char kind = c.peek();
    if (kind != 'l' && kind != 's')
      throw parse_error("expected token 'l(i,j)' or 's(i,j)'", tok);
    ++c.pos;
    c.expect('(', "after token name");
    std::size_t ipos = c.pos;
    int i = c.integer("strand index");
    c.expect(',', "between strand indices");
    std::size_t jpos = c.pos;
    int j = c.integer("strand index");
    c.expect(')', "after strand indices");
    int exp = 1;
    if (!c.done() && c.peek() == '^') {
      ++c.pos;
      c.expect('-', "in exponent (only ^-1 is supported)");
      c.expect('1', "in exponent (only ^-1 is supported)");
      exp = -1;
    }
    if (i < 1 || i > n) throw parse_error("strand index out of range", ipos);
    if (j < 1 || j > n) throw parse_error("strand index out of range", jpos);
    if (i == j) throw parse_error("strand indices must differ", tok);
    if (kind == 'l') {
      w.push_back(Lambda(i, j, exp));
    } else {
      if (i > j) throw parse_error("s(i,j) requires i < j", tok);
      saw_sigma = true;
      BraidWord s = expand_sigma(i, j, n);
      if (exp == -1) s = invert(s);
      w.append(s);
    }
  }
  w.set_from_sigma(saw_sigma);
  return w;
}

enum class SugarPolicy { allow, reject };

// Inverse of parse_word on plain lambda words: "n=<n>;" followed by one
// token per letter.  With SugarPolicy::reject, words that were parsed from
// s(i,j) sugar are refused, since their original text is lost.
inline std::string format_word(const BraidWord& w,
                               SugarPolicy policy = SugarPolicy::allow) {
  if (policy == SugarPolicy::reject && w.from_sigma())
    throw std::invalid_argument(
        "format_word: word was parsed from s(i,j) sugar; round trip is lossy");
  std::string out = "n=" + std::to_string(w.strands()) + ";";
  for (const Lambda& g : w.letters()) {
    out += " l(" + std::to_string(g.over) + "," + std::to_string(g.under) +
           ")";
    if (g.exp == -1) out += "^-1";
  }
  return out;
}

}  // namespace vpb
