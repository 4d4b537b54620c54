#pragma once

// Bounded word-equivalence search over the relation move graph.
//
// States are freely reduced words.  One search edge is a relation move
// (commute or mixed), optionally preceded by a free insertion, followed by
// full free reduction; every primitive step is recorded so certificates
// replay verbatim.  The search runs breadth-first from both endpoints and
// meets in the middle.
//
// Budget semantics: max_depth bounds the total number of edges on the
// reported path, max_word_length caps insertions, and max_states is a
// deterministic work cap counting generated successors and probed
// insertion candidates.  An exhausted budget yields `unknown`, never a
// wrong verdict.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vpb/braid_word.hpp"
#include "vpb/invariants.hpp"
#include "vpb/moves.hpp"

namespace vpb {

enum class EquivalenceStatus { equivalent, distinct, unknown };

struct DistinctWitness {
  IndexPair coordinate{};
  int left_value = 0;
  int right_value = 0;
};

struct EquivalenceVerdict {
  EquivalenceStatus status = EquivalenceStatus::unknown;
  std::optional<MoveCertificate> certificate;  // when equivalent
  std::optional<DistinctWitness> witness;      // when distinct
};

namespace detail {

inline std::string word_key(const BraidWord& w) {
  std::string key;
  key.reserve(w.size() * 3 + 1);
  key.push_back(static_cast<char>(w.strands()));
  for (const Lambda& g : w.letters()) {
    key.push_back(static_cast<char>(g.over));
    key.push_back(static_cast<char>(g.under));
    key.push_back(static_cast<char>(g.exp + 2));
  }
  return key;
}

struct SearchEdge {
  BraidWord word;                    // freely reduced successor
  std::vector<RelationMove> steps;   // primitive steps, replayable
};

inline std::vector<RelationMove> relation_moves_only(
    const BraidWord& w, RelationConvention conv) {
  std::vector<RelationMove> out;
  for (RelationMove& m : applicable_moves(w, conv))
    if (m.kind == MoveKind::commute || m.kind == MoveKind::mixed)
      out.push_back(m);
  return out;
}

// Relation moves on `w` whose window overlaps positions [p, p+1]; used to
// probe what a freshly inserted canceling pair enables.
inline std::vector<RelationMove> overlapping_moves(const BraidWord& w,
                                                   std::size_t p,
                                                   RelationConvention conv) {
  std::vector<RelationMove> out;
  std::size_t lo = p >= 1 ? p - 1 : 0;
  for (std::size_t q = lo; q <= p + 1 && q + 1 < w.size(); ++q) {
    if (commute_applicable(w[q], w[q + 1])) {
      RelationMove m;
      m.kind = MoveKind::commute;
      m.position = q;
      m.first = w[q];
      m.second = w[q + 1];
      out.push_back(m);
    }
  }
  lo = p >= 2 ? p - 2 : 0;
  for (std::size_t q = lo; q <= p + 1 && q + 2 < w.size(); ++q)
    for (MixedVariant var : {MixedVariant::plain, MixedVariant::inverted})
      for (MoveDirection dir : {MoveDirection::lr, MoveDirection::rl})
        if (auto m = match_mixed(w, q, var, dir, conv)) out.push_back(*m);
  std::sort(out.begin(), out.end());
  return out;
}

// Successor edges of a reduced state, in deterministic order: direct
// relation moves first, then insertion-enabled composites.  `work` grows by
// one per generated edge and per probed insertion candidate.
inline std::vector<SearchEdge> successors(const BraidWord& w,
                                          const SearchBudget& budget,
                                          RelationConvention conv,
                                          long long& work) {
  std::vector<SearchEdge> edges;
  for (const RelationMove& m : relation_moves_only(w, conv)) {
    ++work;
    SearchEdge e;
    e.word = apply_move(w, m);
    e.steps.push_back(m);
    auto deletions = reduction_steps(e.word);
    e.steps.insert(e.steps.end(), deletions.begin(), deletions.end());
    edges.push_back(std::move(e));
  }
  if (static_cast<int>(w.size()) + 2 <= budget.max_word_length) {
    int n = w.strands();
    for (std::size_t p = 0; p <= w.size(); ++p)
      for (int over = 1; over <= n; ++over)
        for (int under = 1; under <= n; ++under) {
          if (over == under) continue;
          for (int exp : {-1, 1}) {
            ++work;
            RelationMove ins;
            ins.kind = MoveKind::free_insert;
            ins.position = p;
            ins.first = Lambda(over, under, exp);
            ins.second = ins.first.inverse();
            BraidWord w2 = apply_move(w, ins);
            for (const RelationMove& m2 : overlapping_moves(w2, p, conv)) {
              SearchEdge e;
              e.word = apply_move(w2, m2);
              e.steps.push_back(ins);
              e.steps.push_back(m2);
              auto deletions = reduction_steps(e.word);
              e.steps.insert(e.steps.end(), deletions.begin(),
                             deletions.end());
              // A composite that immediately cancels back adds nothing.
              if (e.word == w) continue;
              ++work;
              edges.push_back(std::move(e));
            }
          }
        }
  }
  return edges;
}

struct SearchNode {
  BraidWord word;
  int parent = -1;
  std::vector<RelationMove> edge_steps;
  int depth = 0;
};

struct SearchSide {
  std::vector<SearchNode> nodes;
  std::unordered_map<std::string, int> visited;
  std::vector<int> frontier;
  int depth = 0;
};

inline std::vector<RelationMove> path_steps(const SearchSide& side, int node) {
  std::vector<std::vector<RelationMove>> chunks;
  for (int at = node; at >= 0; at = side.nodes[at].parent)
    chunks.push_back(side.nodes[at].edge_steps);
  std::vector<RelationMove> steps;
  for (auto it = chunks.rbegin(); it != chunks.rend(); ++it)
    steps.insert(steps.end(), it->begin(), it->end());
  return steps;
}

inline std::vector<RelationMove> undo_steps(
    const std::vector<RelationMove>& steps) {
  std::vector<RelationMove> out;
  out.reserve(steps.size());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    out.push_back(inverse_move(*it));
  return out;
}

}  // namespace detail

// Decides instances of equality in VP_n within a budget.  Returns
// `equivalent` with a replayable certificate, `distinct` with an exponent
// coordinate that separates the words, or `unknown` when the budget runs
// out.  Deterministic for fixed inputs and budget.
inline EquivalenceVerdict equivalent_bounded(
    const BraidWord& a, const BraidWord& b, const SearchBudget& budget = {},
    RelationConvention conv = RelationConvention::corrected) {
  if (a.strands() != b.strands())
    throw std::invalid_argument("equivalent_bounded: strand counts differ");

  EquivalenceVerdict verdict;
  if (a == b) {
    verdict.status = EquivalenceStatus::equivalent;
    verdict.certificate = MoveCertificate{a, {}, b};
    return verdict;
  }

  ExponentVector ea = exponent_vector(a);
  ExponentVector eb = exponent_vector(b);
  if (ea != eb) {
    verdict.status = EquivalenceStatus::distinct;
    DistinctWitness w;
    for (const auto& [pair, e] : ea.entries)
      if (eb.at(pair.first, pair.second) != e) {
        w.coordinate = pair;
        w.left_value = e;
        w.right_value = eb.at(pair.first, pair.second);
        verdict.witness = w;
        return verdict;
      }
    for (const auto& [pair, e] : eb.entries)
      if (ea.at(pair.first, pair.second) != e) {
        w.coordinate = pair;
        w.left_value = ea.at(pair.first, pair.second);
        w.right_value = e;
        verdict.witness = w;
        return verdict;
      }
  }

  BraidWord ra = a;
  std::vector<RelationMove> bridge_a = reduction_steps(ra);
  BraidWord rb = b;
  std::vector<RelationMove> bridge_b = reduction_steps(rb);

  auto finish = [&](std::vector<RelationMove> mid) {
    std::vector<RelationMove> steps = bridge_a;
    steps.insert(steps.end(), mid.begin(), mid.end());
    auto back = detail::undo_steps(bridge_b);
    steps.insert(steps.end(), back.begin(), back.end());
    verdict.status = EquivalenceStatus::equivalent;
    verdict.certificate = MoveCertificate{a, std::move(steps), b};
    return verdict;
  };

  if (ra == rb) return finish({});

  detail::SearchSide fwd, bwd;
  fwd.nodes.push_back({ra, -1, {}, 0});
  fwd.visited.emplace(detail::word_key(ra), 0);
  fwd.frontier.push_back(0);
  bwd.nodes.push_back({rb, -1, {}, 0});
  bwd.visited.emplace(detail::word_key(rb), 0);
  bwd.frontier.push_back(0);

  long long work = 0;
  auto build_mid = [&](int fwd_node, int bwd_node) {
    std::vector<RelationMove> mid = detail::path_steps(fwd, fwd_node);
    auto back = detail::undo_steps(detail::path_steps(bwd, bwd_node));
    mid.insert(mid.end(), back.begin(), back.end());
    return mid;
  };

  while (fwd.depth + bwd.depth < budget.max_depth &&
         work < budget.max_states &&
         (!fwd.frontier.empty() || !bwd.frontier.empty())) {
    bool expand_fwd;
    if (fwd.frontier.empty())
      expand_fwd = false;
    else if (bwd.frontier.empty())
      expand_fwd = true;
    else
      expand_fwd = fwd.frontier.size() <= bwd.frontier.size();
    detail::SearchSide& self = expand_fwd ? fwd : bwd;
    detail::SearchSide& other = expand_fwd ? bwd : fwd;

    std::vector<std::pair<int, int>> meetings;  // (self node, other node)
    std::vector<int> next_frontier;
    for (int idx : self.frontier) {
      if (work >= budget.max_states) break;
      auto edges =
          detail::successors(self.nodes[idx].word, budget, conv, work);
      for (auto& e : edges) {
        std::string key = detail::word_key(e.word);
        if (self.visited.count(key)) continue;
        int node = static_cast<int>(self.nodes.size());
        self.nodes.push_back(
            {std::move(e.word), idx, std::move(e.steps), self.depth + 1});
        self.visited.emplace(std::move(key), node);
        next_frontier.push_back(node);
        auto hit = other.visited.find(
            detail::word_key(self.nodes[node].word));
        if (hit != other.visited.end()) meetings.emplace_back(node, hit->second);
      }
    }
    self.frontier = std::move(next_frontier);
    ++self.depth;

    if (!meetings.empty()) {
      // Deterministic final selection: fewest primitive steps, then the
      // lexicographically least serialized form.
      std::optional<std::vector<RelationMove>> best;
      std::string best_text;
      for (auto [self_node, other_node] : meetings) {
        int f = expand_fwd ? self_node : other_node;
        int g = expand_fwd ? other_node : self_node;
        std::vector<RelationMove> mid = build_mid(f, g);
        std::string text;
        for (const RelationMove& m : mid) text += format_move(m) + "\n";
        if (!best || mid.size() < best->size() ||
            (mid.size() == best->size() && text < best_text)) {
          best = std::move(mid);
          best_text = std::move(text);
        }
      }
      return finish(std::move(*best));
    }
  }

  verdict.status = EquivalenceStatus::unknown;
  return verdict;
}

inline std::string format_verdict(const EquivalenceVerdict& v) {
  switch (v.status) {
    case EquivalenceStatus::equivalent: {
      std::string out = "equivalent\n";
      if (v.certificate) out += format_certificate(*v.certificate);
      return out;
    }
    case EquivalenceStatus::distinct: {
      std::string out = "distinct";
      if (v.witness)
        out += " exp " + std::to_string(v.witness->coordinate.first) + " " +
               std::to_string(v.witness->coordinate.second) + " " +
               std::to_string(v.witness->left_value) + " " +
               std::to_string(v.witness->right_value);
      return out + "\n";
    }
    case EquivalenceStatus::unknown:
      return "unknown\n";
  }
  return {};
}

}  // namespace vpb
