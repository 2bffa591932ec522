// Primitive arrows between leveled trees: reattachments, interchanges,
// child swaps, and nodule prune/graft moves.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "coh/tree.hpp"

namespace coh {

enum class ArrowKind { Reattach, Interchange, Swap, Prune, Graft };
enum class Gen { a, q, c, l, r };
enum class Side { Left, Right };

inline const char* arrow_kind_name(ArrowKind k) {
  switch (k) {
    case ArrowKind::Reattach: return "reattach";
    case ArrowKind::Interchange: return "interchange";
    case ArrowKind::Swap: return "swap";
    case ArrowKind::Prune: return "prune";
    case ArrowKind::Graft: return "graft";
  }
  return "?";
}

inline const char* gen_name(Gen g) {
  switch (g) {
    case Gen::a: return "a";
    case Gen::q: return "q";
    case Gen::c: return "c";
    case Gen::l: return "l";
    case Gen::r: return "r";
  }
  return "?";
}

inline const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

struct Arrow {
  Tree source, target;
  ArrowKind kind = ArrowKind::Reattach;
  int pivot = 0;            // level of the pivot node
  std::vector<int> moved;   // auxiliary levels describing the move
  Side side = Side::Left;
  Gen generator = Gen::a;
  int exponent = 1;
  // Descriptor of the inverse move, fixed at construction time.
  ArrowKind inv_kind = ArrowKind::Reattach;
  int inv_pivot = 0;
  std::vector<int> inv_moved;
  Side inv_side = Side::Left;
};

inline Arrow invert_arrow(const Arrow& f) {
  Arrow g;
  g.source = f.target;
  g.target = f.source;
  g.kind = f.inv_kind;
  g.pivot = f.inv_pivot;
  g.moved = f.inv_moved;
  g.side = f.inv_side;
  g.generator = f.generator;
  g.exponent = -f.exponent;
  g.inv_kind = f.kind;
  g.inv_pivot = f.pivot;
  g.inv_moved = f.moved;
  g.inv_side = f.side;
  return g;
}

namespace detail {

inline std::tuple<int, int, Side, std::string> arrow_key(const Arrow& a) {
  return {static_cast<int>(a.kind), a.pivot, a.side, canonical(a.target)};
}

inline bool arrow_less(const Arrow& x, const Arrow& y) {
  auto kx = std::tuple(static_cast<int>(x.kind), x.pivot,
                       static_cast<int>(x.side), x.moved, canonical(x.target));
  auto ky = std::tuple(static_cast<int>(y.kind), y.pivot,
                       static_cast<int>(y.side), y.moved, canonical(y.target));
  return kx < ky;
}

inline bool arrow_same(const Arrow& x, const Arrow& y) {
  return x.kind == y.kind && x.pivot == y.pivot && x.side == y.side &&
         x.moved == y.moved && x.target == y.target;
}

// ---- Reattachment ---------------------------------------------------------

inline void emit_reattach(const Tree& t, const Shape& s, std::vector<Arrow>& out) {
  for (int k = 0; k < static_cast<int>(t.seq.size()); ++k) {
    if (t.seq[k].kind != NodeKind::Internal) continue;
    for (Side side : {Side::Left, Side::Right}) {
      int l = side == Side::Left ? s.left[k] : s.right[k];
      if (l < 0 || t.seq[l].kind != NodeKind::Internal) continue;
      int other = side == Side::Left ? s.right[k] : s.left[k];
      bool ok = other == kImplicit || t.seq[other].level < 0 ||
                t.seq[other].level > t.seq[l].level;
      if (!ok) continue;
      Arrow a;
      a.source = t;
      a.target = t;
      std::swap(a.target.seq[k], a.target.seq[l]);
      a.kind = ArrowKind::Reattach;
      a.pivot = t.seq[k].level;
      a.moved = {t.seq[l].level};
      a.side = side;
      a.generator = Gen::a;
      a.exponent = side == Side::Left ? 1 : -1;
      a.inv_kind = ArrowKind::Reattach;
      a.inv_pivot = a.pivot;
      a.inv_moved = a.moved;
      a.inv_side = side == Side::Left ? Side::Right : Side::Left;
      out.push_back(std::move(a));
    }
  }
}

// ---- Interchange ----------------------------------------------------------

inline void emit_interchange(const Tree& t, const Shape& s, std::vector<Arrow>& out) {
  bool rrbLike = reduced_levels(t.family);
  bool irbLike = implicit_leaves(t.family);
  for (int k = 0; k < static_cast<int>(t.seq.size()); ++k) {
    if (t.seq[k].kind != NodeKind::Internal) continue;
    int u = s.left[k], v = s.right[k];
    if (u < 0 || v < 0) continue;
    bool uInt = t.seq[u].kind == NodeKind::Internal;
    bool vInt = t.seq[v].kind == NodeKind::Internal;
    if (irbLike && !(uInt && vInt)) continue;
    // Reduced trees interchange branch levels with branch levels and sibling
    // leaf levels with each other; a mixed swap would leave reduced form.
    if (rrbLike && uInt != vInt) continue;
    int lu = t.seq[u].level, lv = t.seq[v].level;
    if (lu < 0 || lv < 0) continue;  // nodule without a level cannot interchange
    int lower = lu < lv ? u : v;
    int hiLvl = std::max(lu, lv);
    bool ok = true;
    for (int i = s.lo[lower]; i < s.hi[lower] && ok; ++i) {
      if (i == lower) continue;
      int lvl = t.seq[i].level;
      if (lvl >= 0 && lvl <= hiLvl) ok = false;
    }
    if (!ok) continue;
    Arrow a;
    a.source = t;
    a.target = t;
    std::swap(a.target.seq[u].level, a.target.seq[v].level);
    a.kind = ArrowKind::Interchange;
    a.pivot = t.seq[k].level;
    a.moved = {std::min(lu, lv), hiLvl};
    a.side = lower == u ? Side::Left : Side::Right;
    a.generator = Gen::q;
    a.exponent = a.side == Side::Right ? 1 : -1;
    a.inv_kind = ArrowKind::Interchange;
    a.inv_pivot = a.pivot;
    a.inv_moved = a.moved;
    a.inv_side = a.side == Side::Left ? Side::Right : Side::Left;
    out.push_back(std::move(a));
  }
}

// ---- Child swap -----------------------------------------------------------

inline void emit_swap(const Tree& t, const Shape& s, std::vector<Arrow>& out) {
  if (!has_numbering(t.family)) return;
  for (int p = 0; p < static_cast<int>(t.seq.size()); ++p) {
    if (t.seq[p].kind != NodeKind::Internal) continue;
    Arrow a;
    a.source = t;
    a.target.family = t.family;
    auto& seq = a.target.seq;
    seq.insert(seq.end(), t.seq.begin(), t.seq.begin() + s.lo[p]);
    seq.insert(seq.end(), t.seq.begin() + p + 1, t.seq.begin() + s.hi[p]);
    seq.push_back(t.seq[p]);
    seq.insert(seq.end(), t.seq.begin() + s.lo[p], t.seq.begin() + p);
    seq.insert(seq.end(), t.seq.begin() + s.hi[p], t.seq.end());
    a.kind = ArrowKind::Swap;
    a.pivot = t.seq[p].level;
    a.side = Side::Left;
    a.generator = Gen::c;
    a.exponent = 1;
    a.inv_kind = ArrowKind::Swap;
    a.inv_pivot = a.pivot;
    a.inv_side = Side::Left;
    out.push_back(std::move(a));
  }
}

// ---- Nodule prune/graft for implicit-leaf trees ---------------------------

inline void emit_irnb_prune(const Tree& t, const Shape& s, std::vector<Arrow>& out) {
  int h = height(t);
  for (int z = 0; z < static_cast<int>(t.seq.size()); ++z) {
    if (t.seq[z].kind != NodeKind::Nodule) continue;
    int p = s.parent[z];
    if (p == kNone || p == s.root) continue;
    int sib = s.left[p] == z ? s.right[p] : s.left[p];
    bool ok;
    if (sib >= 0 && t.seq[sib].kind == NodeKind::Internal)
      ok = t.seq[sib].level == t.seq[p].level + 1;
    else
      ok = t.seq[p].level == h - 1;
    if (!ok) continue;
    int pp = s.parent[p];
    int childSide = s.left[pp] == p ? 0 : 1;
    Arrow a;
    a.source = t;
    a.target.family = t.family;
    for (int i = 0; i < static_cast<int>(t.seq.size()); ++i) {
      if (i == z || i == p) continue;
      Node nd = t.seq[i];
      if (nd.level > t.seq[p].level) --nd.level;
      a.target.seq.push_back(nd);
    }
    a.kind = ArrowKind::Prune;
    a.pivot = t.seq[p].level;
    a.side = s.left[p] == z ? Side::Left : Side::Right;
    a.generator = a.side == Side::Left ? Gen::l : Gen::r;
    a.exponent = 1;
    a.inv_kind = ArrowKind::Graft;
    a.inv_pivot = a.pivot;
    a.inv_moved = {t.seq[pp].level, childSide};
    a.inv_side = a.side;
    out.push_back(std::move(a));
  }
}

inline void emit_irnb_graft(const Tree& t, const Shape& s, std::vector<Arrow>& out) {
  int h = height(t);
  // Candidate attachment points: every node except the root, including the
  // implicit leaves. Each is described by its token range and parent slot.
  struct Spot {
    int lo, hi;       // token range of the subtree (empty for implicit leaf)
    int level;        // -1 when the node carries no level
    int parent;       // token index of the parent (internal)
    int childSide;    // 0 left, 1 right
  };
  std::vector<Spot> spots;
  for (int p = 0; p < static_cast<int>(t.seq.size()); ++p) {
    if (t.seq[p].kind != NodeKind::Internal) continue;
    auto add = [&](int child, int slotPos, int cs) {
      if (child == kImplicit)
        spots.push_back({slotPos, slotPos, -1, p, cs});
      else if (t.seq[child].kind == NodeKind::Internal)
        spots.push_back({s.lo[child], s.hi[child], t.seq[child].level, p, cs});
      else
        spots.push_back({child, child + 1, -1, p, cs});
    };
    add(s.left[p], s.lo[p] == p ? p : s.lo[p], 0);
    add(s.right[p], s.hi[p] == p + 1 ? p + 1 : p + 1, 1);
  }
  for (const Spot& sp : spots) {
    for (Side side : {Side::Left, Side::Right}) {
      int l0 = sp.level >= 0 ? sp.level : h;
      Arrow a;
      a.source = t;
      a.target.family = t.family;
      std::vector<Node> seq = t.seq;
      for (Node& nd : seq)
        if (nd.level >= l0) ++nd.level;
      Node pivot{l0, NodeKind::Internal, -1};
      Node nod{-1, NodeKind::Nodule, -1};
      if (side == Side::Left)
        seq.insert(seq.begin() + sp.lo, {nod, pivot});
      else
        seq.insert(seq.begin() + sp.hi, {pivot, nod});
      a.target.seq = std::move(seq);
      a.kind = ArrowKind::Graft;
      a.pivot = l0;
      a.moved = {t.seq[sp.parent].level, sp.childSide};
      a.side = side;
      a.generator = side == Side::Left ? Gen::l : Gen::r;
      a.exponent = -1;
      a.inv_kind = ArrowKind::Prune;
      a.inv_pivot = l0;
      a.inv_side = side;
      out.push_back(std::move(a));
    }
  }
}

// ---- Nodule prune/graft for reduced-level trees ---------------------------

inline void emit_nrrnb_prune(const Tree& t, const Shape& s, std::vector<Arrow>& out) {
  int N = leaf_token_count(t);
  if (N < 2) return;
  for (int k = 0; k < static_cast<int>(t.seq.size()); ++k) {
    if (t.seq[k].kind != NodeKind::Internal || t.seq[k].level != N - 2) continue;
    int u = s.left[k], v = s.right[k];
    if (u < 0 || v < 0) continue;
    if (t.seq[u].kind == NodeKind::Internal || t.seq[v].kind == NodeKind::Internal)
      continue;
    for (Side side : {Side::Left, Side::Right}) {
      int z = side == Side::Left ? u : v;
      int sib = side == Side::Left ? v : u;
      int zLvl = side == Side::Left ? N : N - 1;
      int sibLvl = side == Side::Left ? N - 1 : N;
      if (t.seq[z].kind != NodeKind::Nodule) continue;
      if (t.seq[sib].kind != NodeKind::Leaf) continue;
      if (t.seq[z].level != zLvl || t.seq[sib].level != sibLvl) continue;
      Arrow a;
      a.source = t;
      a.target.family = t.family;
      std::vector<int> kept;
      for (int i = 0; i < static_cast<int>(t.seq.size()); ++i)
        if (i != z && i != k) kept.push_back(t.seq[i].level);
      std::vector<int> sorted = kept;
      std::sort(sorted.begin(), sorted.end());
      for (int i = 0; i < static_cast<int>(t.seq.size()); ++i) {
        if (i == z || i == k) continue;
        Node nd = t.seq[i];
        nd.level = static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), nd.level) -
            sorted.begin());
        a.target.seq.push_back(nd);
      }
      a.kind = ArrowKind::Prune;
      a.pivot = N - 2;
      a.side = side;
      a.generator = side == Side::Left ? Gen::l : Gen::r;
      a.exponent = 1;
      a.inv_kind = ArrowKind::Graft;
      a.inv_pivot = N - 2;
      a.inv_side = side;
      out.push_back(std::move(a));
    }
  }
}

inline void emit_nrrnb_graft(const Tree& t, std::vector<Arrow>& out) {
  int N = leaf_token_count(t);
  if (N < 1) return;
  // Grafting targets the nodule-free leaf at the lowest leaf level.
  int vpos = -1;
  for (int i = 0; i < static_cast<int>(t.seq.size()); ++i)
    if (t.seq[i].kind == NodeKind::Leaf && t.seq[i].level == N - 1) vpos = i;
  if (vpos < 0) return;
  for (Side side : {Side::Left, Side::Right}) {
    Arrow a;
    a.source = t;
    a.target.family = t.family;
    std::vector<Node> seq = t.seq;
    for (Node& nd : seq) {
      if (nd.level >= N)
        nd.level += 2;
      else if (nd.level == N - 1)
        nd.level = side == Side::Left ? N : N + 1;
    }
    Node pivot{N - 1, NodeKind::Internal, -1};
    Node nod{side == Side::Left ? N + 1 : N, NodeKind::Nodule, -1};
    if (side == Side::Left)
      seq.insert(seq.begin() + vpos, {nod, pivot});
    else
      seq.insert(seq.begin() + vpos + 1, {pivot, nod});
    a.target.seq = std::move(seq);
    a.kind = ArrowKind::Graft;
    a.pivot = N - 1;
    a.side = side;
    a.generator = side == Side::Left ? Gen::l : Gen::r;
    a.exponent = -1;
    a.inv_kind = ArrowKind::Prune;
    a.inv_pivot = N - 1;
    a.inv_side = side;
    out.push_back(std::move(a));
  }
}

}  // namespace detail

/// All primitive arrows out of t, deduplicated and deterministically ordered.
inline std::vector<Arrow> enumerate_arrows(const Tree& t) {
  require_valid(t);
  Shape s = build_shape(t);
  std::vector<Arrow> out;
  detail::emit_reattach(t, s, out);
  detail::emit_interchange(t, s, out);
  detail::emit_swap(t, s, out);
  if (t.family == Family::IRNB) {
    detail::emit_irnb_prune(t, s, out);
    detail::emit_irnb_graft(t, s, out);
  } else if (t.family == Family::NRRNB) {
    detail::emit_nrrnb_prune(t, s, out);
    detail::emit_nrrnb_graft(t, out);
  }
  for (const Arrow& a : out) require_valid(a.target);
  std::sort(out.begin(), out.end(), detail::arrow_less);
  out.erase(std::unique(out.begin(), out.end(), detail::arrow_same), out.end());
  return out;
}

/// Applies the move described by a to t; t must equal a.source.
inline Tree apply_arrow(const Tree& t, const Arrow& a) {
  if (!(t == a.source)) throw DomainError("arrow does not start at this tree");
  return a.target;
}

}  // namespace coh
