// k-cuts, the staircase predicates, and the staged reduction to left
// reduced form.
#pragma once

#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "coh/arrows.hpp"

namespace coh {

struct CutNode {
  int position;      // numbered right to left from 0
  int token;         // index in the in-order sequence
  int level;
  int parent_level;
};

/// Nodes at level >= k hanging from a node at level < k, right to left.
inline std::vector<CutNode> k_cut(const Tree& t, int k) {
  require_valid(t);
  if (implicit_leaves(t.family))
    throw DomainError("cuts need explicit leaf levels");
  int maxLevel = static_cast<int>(t.seq.size()) - 1;
  if (k < 1 || k > maxLevel) throw DomainError("cut level out of range");
  Shape s = build_shape(t);
  std::vector<CutNode> out;
  for (int i = static_cast<int>(t.seq.size()) - 1; i >= 0; --i) {
    if (t.seq[i].level < k) continue;
    int p = s.parent[i];
    if (p == kNone || t.seq[p].level >= k) continue;
    out.push_back({static_cast<int>(out.size()), i, t.seq[i].level,
                   t.seq[p].level});
  }
  return out;
}

namespace detail {

inline std::vector<int> level_to_token(const Tree& t) {
  std::vector<int> at(t.seq.size(), kNone);
  for (int i = 0; i < static_cast<int>(t.seq.size()); ++i)
    at[t.seq[i].level] = i;
  return at;
}

}  // namespace detail

/// Levels 1..l-1 are branches stacked down the left spine, and the staircase
/// does not continue past l. Boundary levels are vacuously fine.
inline bool is_l_left_reduced(const Tree& t, int l) {
  auto at = detail::level_to_token(t);
  Shape s = build_shape(t);
  int maxLevel = static_cast<int>(t.seq.size()) - 1;
  for (int i = 1; i < l; ++i) {
    if (i > maxLevel) break;
    int tok = at[i];
    if (t.seq[tok].kind != NodeKind::Internal) return false;
    int p = s.parent[tok];
    if (p == kNone || t.seq[p].level != i - 1 || s.left[p] != tok) return false;
  }
  if (l >= 0 && l <= maxLevel) {
    int tok = at[l];
    if (t.seq[tok].kind == NodeKind::Internal) {
      int lc = s.left[tok];
      if (lc >= 0 && t.seq[lc].kind == NodeKind::Internal &&
          t.seq[lc].level == l + 1)
        return false;
    }
  }
  return true;
}

/// The unique largest l for which the tree is l-left reduced.
inline int largest_reduced_level(const Tree& t) {
  for (int l = static_cast<int>(t.seq.size()) - 1; l >= 1; --l)
    if (is_l_left_reduced(t, l)) return l;
  return 0;
}

inline bool is_left_reduced(const Tree& t) {
  return is_l_left_reduced(t, tree_length(t) - 1);
}

struct ReductionStep {
  std::string label;  // algorithm step the arrow enacts
  Arrow arrow;
};

struct ReductionTrace {
  Tree input;
  std::vector<ReductionStep> steps;
  Tree output;
  int bound = 0;          // (5n-1)(n-2)/2
  bool over_bound = false;
};

namespace detail {

inline const std::vector<Arrow>& arrows_cached(const Tree& t) {
  static std::map<std::string, std::vector<Arrow>> cache;
  std::string key = std::string(family_name(t.family)) + ":" + canonical(t);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, enumerate_arrows(t)).first;
  return it->second;
}

/// Deterministic breadth-first search for the nearest tree that is l'-left
/// reduced for some l' > l.
inline std::vector<Arrow> stage_path(const Tree& start, int l) {
  std::map<std::string, std::pair<std::string, Arrow>> prev;
  std::set<std::string> seen{canonical(start)};
  std::deque<Tree> queue{start};
  while (!queue.empty()) {
    Tree cur = queue.front();
    queue.pop_front();
    std::string curKey = canonical(cur);
    for (const Arrow& a : arrows_cached(cur)) {
      std::string key = canonical(a.target);
      if (!seen.insert(key).second) continue;
      prev.emplace(key, std::pair(curKey, a));
      if (largest_reduced_level(a.target) > l) {
        std::vector<Arrow> path;
        for (std::string k = key; k != canonical(start);) {
          auto& [pk, pa] = prev.at(k);
          path.push_back(pa);
          k = pk;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(a.target);
    }
  }
  throw DomainError("no more reduced tree is reachable");
}

struct StageContext {
  int l = 0;
  int r = -1;  // level whose terminate is the node at level l+1
  int b = -1;  // branch holding the lowest levelled cut branch node
};

inline StageContext stage_context(const Tree& t, int l) {
  StageContext ctx;
  ctx.l = l;
  auto at = level_to_token(t);
  Shape s = build_shape(t);
  int maxLevel = static_cast<int>(t.seq.size()) - 1;
  if (l + 1 <= maxLevel) {
    int p = s.parent[at[l + 1]];
    if (p != kNone) ctx.r = t.seq[p].level;
  }
  if (l >= 1) {
    int best = kNone;
    for (const CutNode& c : k_cut(t, l))
      if (t.seq[c.token].kind == NodeKind::Internal &&
          (best == kNone || c.level < t.seq[best].level))
        best = c.token;
    if (best != kNone && s.parent[best] != kNone)
      ctx.b = t.seq[s.parent[best]].level;
  }
  return ctx;
}

inline std::string classify_step(const Arrow& a, const StageContext& ctx) {
  bool hasRB = ctx.r >= 0 && ctx.b >= 0;
  if (a.kind == ArrowKind::Interchange) {
    if (a.pivot == ctx.l) {
      for (int m : a.moved)
        if (m == ctx.l + 1) return "ii";
      return "v";
    }
    return hasRB && ctx.r > ctx.b ? "vi" : "iv";
  }
  if (a.kind == ArrowKind::Reattach) {
    if (hasRB && ctx.r < ctx.b) return "iv";
    if (hasRB && ctx.r > ctx.b) return "vi";
    if (a.exponent == -1) return a.pivot == ctx.l ? "vii" : "ix";
    return "viii";
  }
  return "?";
}

}  // namespace detail

/// Rewrites an explicit-leaf tree into left reduced form, one staircase level
/// at a time, recording the applied arrows with algorithm step labels.
inline ReductionTrace left_reduce(const Tree& t) {
  require_valid(t);
  int n = tree_length(t);
  ReductionTrace trace;
  trace.input = t;
  trace.bound = (5 * n - 1) * (n - 2) / 2;
  Tree cur = t;
  while (!is_left_reduced(cur)) {
    int l = largest_reduced_level(cur);
    auto ctx = detail::stage_context(cur, l);
    for (const Arrow& a : detail::stage_path(cur, l)) {
      trace.steps.push_back({detail::classify_step(a, ctx), a});
      cur = a.target;
    }
  }
  trace.output = cur;
  trace.over_bound = static_cast<int>(trace.steps.size()) > trace.bound;
  return trace;
}

}  // namespace coh
