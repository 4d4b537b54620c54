#pragma once

// The defining relations of VP_n as position-indexed rewriting moves.
//
// Two relation families act on words:
//   commute:  l(j,k)^e l(i,n)^f = l(i,n)^f l(j,k)^e   for distinct i,j,k,n
//   mixed:    l(k,i)^s(ki) l(k,j)^s(kj) l(i,j)^s(ij)
//               = l(i,j)^s(ij) l(k,j)^s(kj) l(k,i)^s(ki)
// where s(ij) = +1 if i < j and -1 otherwise.  The mixed relation also acts
// through its inverse (both sides inverted), and free insertion/deletion of
// canceling pairs round out the move set.
//
// The published source for the mixed relation carries s(ij) instead of
// s(kj) on the middle right-hand factor; that form does not balance
// exponent sums, so the corrected form above is the default.  The printed
// form stays available behind RelationConvention::printed for auditing, and
// validate_relation_set reports exactly where it fails.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vpb/braid_word.hpp"
#include "vpb/invariants.hpp"

namespace vpb {

inline int sign_s(int i, int j) {
  if (i == j) throw std::invalid_argument("sign_s: indices must differ");
  return i < j ? 1 : -1;
}

enum class MoveKind { commute = 0, mixed = 1, free_insert = 2, free_delete = 3 };
enum class MixedVariant { plain = 0, inverted = 1 };
enum class MoveDirection { lr = 0, rl = 1 };
enum class RelationConvention { corrected, printed };

struct RelationMove {
  MoveKind kind = MoveKind::commute;
  std::size_t position = 0;

  // commute / free_delete: the two letters involved, in word order.
  // free_insert: `first` is the inserted letter (its inverse follows it).
  Lambda first{};
  Lambda second{};

  // mixed only.
  int i = 0, j = 0, k = 0;
  MixedVariant variant = MixedVariant::plain;
  MoveDirection direction = MoveDirection::lr;
  RelationConvention convention = RelationConvention::corrected;

  friend bool operator==(const RelationMove& a, const RelationMove& b) {
    return a.kind == b.kind && a.position == b.position && a.first == b.first &&
           a.second == b.second && a.i == b.i && a.j == b.j && a.k == b.k &&
           a.variant == b.variant && a.direction == b.direction &&
           a.convention == b.convention;
  }

  // (kind, position, parameters): the deterministic enumeration order.
  friend bool operator<(const RelationMove& a, const RelationMove& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    if (a.position != b.position) return a.position < b.position;
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    if (a.k != b.k) return a.k < b.k;
    if (a.variant != b.variant)
      return static_cast<int>(a.variant) < static_cast<int>(b.variant);
    if (a.direction != b.direction)
      return static_cast<int>(a.direction) < static_cast<int>(b.direction);
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  }
};

namespace detail {

inline std::array<Lambda, 3> invert3(std::array<Lambda, 3> s) {
  std::swap(s[0], s[2]);
  for (Lambda& g : s) g.exp = -g.exp;
  return s;
}

// Left side of the mixed relation for (i,j,k).
inline std::array<Lambda, 3> mixed_lhs(int i, int j, int k) {
  return {Lambda(k, i, sign_s(k, i)), Lambda(k, j, sign_s(k, j)),
          Lambda(i, j, sign_s(i, j))};
}

inline std::array<Lambda, 3> mixed_rhs(int i, int j, int k,
                                       RelationConvention conv) {
  int mid = conv == RelationConvention::corrected ? sign_s(k, j) : sign_s(i, j);
  return {Lambda(i, j, sign_s(i, j)), Lambda(k, j, mid),
          Lambda(k, i, sign_s(k, i))};
}

inline std::array<Lambda, 3> mixed_from(const RelationMove& m) {
  auto side = m.direction == MoveDirection::lr
                  ? mixed_lhs(m.i, m.j, m.k)
                  : mixed_rhs(m.i, m.j, m.k, m.convention);
  return m.variant == MixedVariant::inverted ? invert3(side) : side;
}

inline std::array<Lambda, 3> mixed_to(const RelationMove& m) {
  auto side = m.direction == MoveDirection::lr
                  ? mixed_rhs(m.i, m.j, m.k, m.convention)
                  : mixed_lhs(m.i, m.j, m.k);
  return m.variant == MixedVariant::inverted ? invert3(side) : side;
}

inline bool distinct3(int a, int b, int c) {
  return a != b && b != c && a != c;
}

// Candidate (i,j,k) for a mixed match at position p, read off the letters
// the from-side template would place there.  Verification against the full
// template happens in the caller.
inline std::optional<std::array<int, 3>> mixed_candidate(
    const BraidWord& w, std::size_t p, MixedVariant var, MoveDirection dir) {
  const Lambda& a = w[p];
  const Lambda& b = w[p + 1];
  bool lhs_shape = (var == MixedVariant::plain) == (dir == MoveDirection::lr);
  if (lhs_shape) {
    // [l(k,i), l(k,j), l(i,j)] up to signs
    return std::array<int, 3>{a.under, b.under, a.over};
  }
  // [l(i,j), l(k,j), l(k,i)] up to signs
  return std::array<int, 3>{a.over, a.under, b.over};
}

}  // namespace detail

// Disjoint-index commutation applies to letters with any exponents: the
// relation on generators extends to their inverses in the group.
inline bool commute_applicable(const Lambda& a, const Lambda& b) {
  return a.over != b.over && a.over != b.under && a.under != b.over &&
         a.under != b.under;
}

inline std::optional<RelationMove> match_mixed(
    const BraidWord& w, std::size_t p, MixedVariant var, MoveDirection dir,
    RelationConvention conv = RelationConvention::corrected) {
  if (p + 3 > w.size()) return std::nullopt;
  auto cand = detail::mixed_candidate(w, p, var, dir);
  if (!cand) return std::nullopt;
  auto [i, j, k] = *cand;
  if (!detail::distinct3(i, j, k)) return std::nullopt;
  RelationMove m;
  m.kind = MoveKind::mixed;
  m.position = p;
  m.i = i;
  m.j = j;
  m.k = k;
  m.variant = var;
  m.direction = dir;
  m.convention = conv;
  auto from = detail::mixed_from(m);
  for (int t = 0; t < 3; ++t)
    if (w[p + t] != from[t]) return std::nullopt;
  return m;
}

// Every move legal on `w`: commutes, mixed matches (all variants and
// directions) and free deletions, sorted by (kind, position, parameters).
// Free insertions are unbounded and only enumerated by the budgeted
// overload below.
inline std::vector<RelationMove> applicable_moves(
    const BraidWord& w, RelationConvention conv = RelationConvention::corrected) {
  std::vector<RelationMove> moves;
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    if (commute_applicable(w[p], w[p + 1])) {
      RelationMove m;
      m.kind = MoveKind::commute;
      m.position = p;
      m.first = w[p];
      m.second = w[p + 1];
      moves.push_back(m);
    }
    if (w[p + 1] == w[p].inverse()) {
      RelationMove m;
      m.kind = MoveKind::free_delete;
      m.position = p;
      m.first = w[p];
      m.second = w[p + 1];
      moves.push_back(m);
    }
  }
  for (std::size_t p = 0; p + 2 < w.size(); ++p)
    for (MixedVariant var : {MixedVariant::plain, MixedVariant::inverted})
      for (MoveDirection dir : {MoveDirection::lr, MoveDirection::rl})
        if (auto m = match_mixed(w, p, var, dir, conv)) moves.push_back(*m);
  std::sort(moves.begin(), moves.end());
  return moves;
}

struct SearchBudget {
  int max_depth = 6;
  int max_states = 100000;
  int max_word_length = 40;
};

inline std::vector<RelationMove> applicable_moves(
    const BraidWord& w, const SearchBudget& budget,
    RelationConvention conv = RelationConvention::corrected) {
  std::vector<RelationMove> moves = applicable_moves(w, conv);
  if (static_cast<int>(w.size()) + 2 <= budget.max_word_length) {
    int n = w.strands();
    for (std::size_t p = 0; p <= w.size(); ++p)
      for (int over = 1; over <= n; ++over)
        for (int under = 1; under <= n; ++under) {
          if (over == under) continue;
          for (int exp : {-1, 1}) {
            RelationMove m;
            m.kind = MoveKind::free_insert;
            m.position = p;
            m.first = Lambda(over, under, exp);
            m.second = m.first.inverse();
            moves.push_back(m);
          }
        }
    std::sort(moves.begin(), moves.end());
  }
  return moves;
}

inline BraidWord apply_move(const BraidWord& w, const RelationMove& m) {
  std::vector<Lambda> letters = w.letters();
  switch (m.kind) {
    case MoveKind::commute: {
      if (m.position + 2 > letters.size() || letters[m.position] != m.first ||
          letters[m.position + 1] != m.second ||
          !commute_applicable(m.first, m.second))
        throw std::invalid_argument("apply_move: illegal commute");
      std::swap(letters[m.position], letters[m.position + 1]);
      break;
    }
    case MoveKind::mixed: {
      if (m.position + 3 > letters.size())
        throw std::invalid_argument("apply_move: mixed move out of range");
      if (!detail::distinct3(m.i, m.j, m.k))
        throw std::invalid_argument("apply_move: mixed indices not distinct");
      auto from = detail::mixed_from(m);
      for (int t = 0; t < 3; ++t)
        if (letters[m.position + t] != from[t])
          throw std::invalid_argument("apply_move: mixed pattern mismatch");
      auto to = detail::mixed_to(m);
      for (int t = 0; t < 3; ++t) letters[m.position + t] = to[t];
      break;
    }
    case MoveKind::free_insert: {
      if (m.position > letters.size())
        throw std::invalid_argument("apply_move: insert position out of range");
      if (m.second != m.first.inverse())
        throw std::invalid_argument("apply_move: insert pair must cancel");
      letters.insert(letters.begin() + m.position,
                     {m.first, m.first.inverse()});
      break;
    }
    case MoveKind::free_delete: {
      if (m.position + 2 > letters.size() || letters[m.position] != m.first ||
          letters[m.position + 1] != m.second ||
          m.second != m.first.inverse())
        throw std::invalid_argument("apply_move: illegal free_delete");
      letters.erase(letters.begin() + m.position,
                    letters.begin() + m.position + 2);
      break;
    }
  }
  return BraidWord(w.strands(), std::move(letters));
}

// The move undoing `m` at the same position.
inline RelationMove inverse_move(const RelationMove& m) {
  RelationMove r = m;
  switch (m.kind) {
    case MoveKind::commute:
      std::swap(r.first, r.second);
      break;
    case MoveKind::mixed:
      r.direction = m.direction == MoveDirection::lr ? MoveDirection::rl
                                                     : MoveDirection::lr;
      break;
    case MoveKind::free_insert:
      r.kind = MoveKind::free_delete;
      r.second = m.first.inverse();
      break;
    case MoveKind::free_delete:
      r.kind = MoveKind::free_insert;
      r.second = m.first.inverse();
      break;
  }
  return r;
}

// Fully free-reduces `w`, returning the leftmost-first deletion steps; each
// step's position refers to the word at the moment it is applied, so the
// sequence replays verbatim.
inline std::vector<RelationMove> reduction_steps(BraidWord& w) {
  std::vector<RelationMove> steps;
  std::vector<Lambda> letters = w.letters();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < letters.size(); ++p) {
      if (letters[p + 1] == letters[p].inverse()) {
        RelationMove m;
        m.kind = MoveKind::free_delete;
        m.position = p;
        m.first = letters[p];
        m.second = letters[p + 1];
        steps.push_back(m);
        letters.erase(letters.begin() + p, letters.begin() + p + 2);
        changed = true;
        break;
      }
    }
  }
  w = BraidWord(w.strands(), std::move(letters));
  return steps;
}

struct MoveCertificate {
  BraidWord start;
  std::vector<RelationMove> steps;
  BraidWord end;
};

inline BraidWord replay(const MoveCertificate& cert) {
  BraidWord w = cert.start;
  for (const RelationMove& m : cert.steps) w = apply_move(w, m);
  return w;
}

inline bool verify_certificate(const MoveCertificate& cert) {
  try {
    return replay(cert) == cert.end;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

inline std::string format_letter(const Lambda& g) {
  std::string s = "l(" + std::to_string(g.over) + "," +
                  std::to_string(g.under) + ")";
  if (g.exp == -1) s += "^-1";
  return s;
}

inline std::string format_move(const RelationMove& m) {
  std::string at = "@" + std::to_string(m.position);
  switch (m.kind) {
    case MoveKind::commute:
      return "commute " + at + " " + format_letter(m.first) + " " +
             format_letter(m.second);
    case MoveKind::mixed: {
      std::string s = "mixed " + at + " i=" + std::to_string(m.i) +
                      " j=" + std::to_string(m.j) + " k=" + std::to_string(m.k);
      s += m.variant == MixedVariant::plain ? " plain" : " inverted";
      s += m.direction == MoveDirection::lr ? " lr" : " rl";
      if (m.convention == RelationConvention::printed) s += " printed";
      return s;
    }
    case MoveKind::free_insert:
      return "free_insert " + at + " " + format_letter(m.first);
    case MoveKind::free_delete:
      return "free_delete " + at + " " + format_letter(m.first) + " " +
             format_letter(m.second);
  }
  return {};
}

// One move per line between the start and end words.
inline std::string format_certificate(const MoveCertificate& cert) {
  std::string out = format_word(cert.start) + "\n";
  for (const RelationMove& m : cert.steps) out += format_move(m) + "\n";
  out += format_word(cert.end) + "\n";
  return out;
}

struct RelationViolation {
  std::string relation;
  int i = 0, j = 0, k = 0, l = 0;  // l only for the commute relation
  IndexPair coordinate{};          // first exponent coordinate that differs
  int lhs_sum = 0;
  int rhs_sum = 0;
};

struct RelationValidationReport {
  int instances_checked = 0;
  std::vector<RelationViolation> corrected_violations;
  std::vector<RelationViolation> printed_violations;

  bool corrected_ok() const { return corrected_violations.empty(); }
  bool printed_flagged(int i, int j, int k) const {
    for (const auto& v : printed_violations)
      if (v.i == i && v.j == j && v.k == k) return true;
    return false;
  }
};

namespace detail {

inline std::optional<RelationViolation> exponent_imbalance(
    const BraidWord& lhs, const BraidWord& rhs) {
  ExponentVector a = exponent_vector(lhs);
  ExponentVector b = exponent_vector(rhs);
  if (a == b) return std::nullopt;
  for (const auto& [pair, e] : a.entries) {
    if (b.at(pair.first, pair.second) != e) {
      RelationViolation v;
      v.coordinate = pair;
      v.lhs_sum = e;
      v.rhs_sum = b.at(pair.first, pair.second);
      return v;
    }
  }
  for (const auto& [pair, e] : b.entries) {
    if (a.at(pair.first, pair.second) != e) {
      RelationViolation v;
      v.coordinate = pair;
      v.lhs_sum = a.at(pair.first, pair.second);
      v.rhs_sum = e;
      return v;
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Abelianization audit of the relation set: every relation instance over
// indices up to max_n must balance exponent sums.  The corrected set is
// expected to pass; the printed mixed form is checked alongside and its
// failures are reported, not treated as errors here.
inline RelationValidationReport validate_relation_set(int max_n = 6) {
  RelationValidationReport report;
  // commute relation, all distinct quadruples
  for (int i = 1; i <= max_n; ++i)
    for (int j = 1; j <= max_n; ++j)
      for (int k = 1; k <= max_n; ++k)
        for (int l = 1; l <= max_n; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l)
            continue;
          BraidWord lhs(max_n, {Lambda(j, k, 1), Lambda(i, l, 1)});
          BraidWord rhs(max_n, {Lambda(i, l, 1), Lambda(j, k, 1)});
          ++report.instances_checked;
          if (auto v = detail::exponent_imbalance(lhs, rhs)) {
            v->relation = "commute";
            v->i = i;
            v->j = j;
            v->k = k;
            v->l = l;
            report.corrected_violations.push_back(*v);
          }
        }
  // mixed relation, corrected and printed, all distinct triples
  for (int i = 1; i <= max_n; ++i)
    for (int j = 1; j <= max_n; ++j)
      for (int k = 1; k <= max_n; ++k) {
        if (!detail::distinct3(i, j, k)) continue;
        auto lhs3 = detail::mixed_lhs(i, j, k);
        BraidWord lhs(max_n, {lhs3[0], lhs3[1], lhs3[2]});
        for (RelationConvention conv :
             {RelationConvention::corrected, RelationConvention::printed}) {
          auto rhs3 = detail::mixed_rhs(i, j, k, conv);
          BraidWord rhs(max_n, {rhs3[0], rhs3[1], rhs3[2]});
          ++report.instances_checked;
          if (auto v = detail::exponent_imbalance(lhs, rhs)) {
            v->i = i;
            v->j = j;
            v->k = k;
            if (conv == RelationConvention::corrected) {
              v->relation = "mixed";
              report.corrected_violations.push_back(*v);
            } else {
              v->relation = "mixed-printed";
              report.printed_violations.push_back(*v);
            }
          }
        }
      }
  return report;
}

inline std::string format_validation_report(
    const RelationValidationReport& report) {
  std::string out =
      "checked " + std::to_string(report.instances_checked) + " instances\n";
  auto dump = [&out](const char* label, const std::vector<RelationViolation>& vs) {
    out += std::string(label) + " violations: " + std::to_string(vs.size()) +
           "\n";
    for (const auto& v : vs) {
      out += "  " + v.relation + " i=" + std::to_string(v.i) +
             " j=" + std::to_string(v.j) + " k=" + std::to_string(v.k);
      if (v.relation == "commute") out += " l=" + std::to_string(v.l);
      out += " coord=(" + std::to_string(v.coordinate.first) + "," +
             std::to_string(v.coordinate.second) + ")" +
             " lhs=" + std::to_string(v.lhs_sum) +
             " rhs=" + std::to_string(v.rhs_sum) + "\n";
    }
  };
  dump("corrected", report.corrected_violations);
  dump("printed", report.printed_violations);
  return out;
}

}  // namespace vpb
