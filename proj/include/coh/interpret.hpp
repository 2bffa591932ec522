// Words, linear orderings, and constant scalar models: every arrow generator
// becomes an element of an abelian group, so a cycle commutes exactly when its
// exponent vector lies in the lattice spanned by the imposed relations.
#pragma once

#include <array>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "coh/graph.hpp"

namespace coh {

// ---------------------------------------------------------------------------
// Exponent vectors
// ---------------------------------------------------------------------------

constexpr int kGenCount = 5;  // a, q, c, l, r

struct ExponentVector {
  std::array<long, kGenCount> v{};

  long& operator[](Gen g) { return v[static_cast<int>(g)]; }
  long operator[](Gen g) const { return v[static_cast<int>(g)]; }
  bool operator==(const ExponentVector&) const = default;

  ExponentVector operator+(const ExponentVector& o) const {
    ExponentVector r;
    for (int i = 0; i < kGenCount; ++i) r.v[i] = v[i] + o.v[i];
    return r;
  }
  ExponentVector operator-() const {
    ExponentVector r;
    for (int i = 0; i < kGenCount; ++i) r.v[i] = -v[i];
    return r;
  }
  bool zero() const {
    for (long x : v)
      if (x != 0) return false;
    return true;
  }
  std::string str() const {
    std::string out;
    for (int i = 0; i < kGenCount; ++i) {
      if (v[i] == 0) continue;
      if (!out.empty()) out += v[i] > 0 ? "+" : "";
      out += std::to_string(v[i]) + gen_name(static_cast<Gen>(i));
    }
    return out.empty() ? "0" : out;
  }
};

using Path = std::vector<Arrow>;

inline ExponentVector exponent_vector(const Path& p) {
  ExponentVector ev;
  for (const Arrow& a : p) ev[a.generator] += a.exponent;
  return ev;
}

// ---------------------------------------------------------------------------
// The word functor
// ---------------------------------------------------------------------------

namespace detail {

inline std::string level_subscript(int lvl) {
  static const char* digits[] = {"₀", "₁", "₂", "₃",
                                 "₄", "₅", "₆", "₇",
                                 "₈", "₉"};
  std::string s = std::to_string(lvl), out;
  for (char c : s) out += digits[c - '0'];
  return out;
}

}  // namespace detail

/// Fully bracketed word over the given letters, nodules rendered as "e" and a
/// level subscript on each bracket pair.
inline std::string can_word(const Tree& t,
                            const std::vector<std::string>& letters) {
  require_valid(t);
  Shape s = build_shape(t);
  std::size_t leaves = 0;
  for (const Node& nd : t.seq)
    if (nd.kind == NodeKind::Leaf) ++leaves;
  if (implicit_leaves(t.family)) {
    std::size_t internals = t.seq.size() - nodule_count(t);
    leaves = internals + 1 - nodule_count(t);
  }
  if (letters.size() != leaves)
    throw DomainError("expected " + std::to_string(leaves) + " letters, got " +
                      std::to_string(letters.size()));
  std::size_t next = 0;
  auto render = [&](auto&& self, int node) -> std::string {
    if (node == kImplicit) return letters[next++];
    const Node& nd = t.seq[node];
    if (nd.kind == NodeKind::Nodule) return "e";
    if (nd.kind == NodeKind::Leaf) return letters[next++];
    std::string lhs = self(self, s.left[node]);
    std::string rhs = self(self, s.right[node]);
    return "(" + lhs + "⊗" + rhs + ")" + detail::level_subscript(nd.level);
  };
  if (t.seq.empty()) return letters[0];
  return render(render, s.root);
}

// ---------------------------------------------------------------------------
// Linear orderings
// ---------------------------------------------------------------------------

using Ordering = std::vector<int>;

/// The sequence of internal levels read left to right.
inline Ordering to_ordering(const Tree& t) {
  if (t.family != Family::IRB)
    throw DomainError("orderings are defined for implicit leaf binary trees");
  require_valid(t);
  Ordering o;
  for (const Node& nd : t.seq) o.push_back(nd.level);
  return o;
}

/// The pair of ordering values a primitive arrow exchanges.
inline std::pair<int, int> arrow_transposition(const Arrow& a) {
  Ordering s = to_ordering(a.source), t = to_ordering(a.target);
  int x = -1, y = -1;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != t[i]) {
      if (x < 0)
        x = s[i];
      else
        y = s[i];
    }
  if (y < 0) throw DomainError("arrow does not transpose the ordering");
  return {std::min(x, y), std::max(x, y)};
}

/// Shortest arrow path realizing the swap of ordering positions i, i+1
/// (1-based), deterministic via breadth-first arrow order.
inline Path realize_transposition(const Tree& t, int i) {
  Ordering o = to_ordering(t);
  int n = static_cast<int>(o.size());
  if (i < 1 || i >= n) throw DomainError("position out of range");
  std::swap(o[i - 1], o[i]);
  Tree goal;
  goal.family = Family::IRB;
  for (int lvl : o) goal.seq.push_back({lvl, NodeKind::Internal, 0});
  auto g = build_graph(Family::IRB, n);
  return shortest_path(g, t, goal);
}

// ---------------------------------------------------------------------------
// Relation sets
// ---------------------------------------------------------------------------

struct RelationSet {
  std::string structure;
  std::vector<std::pair<std::string, ExponentVector>> relations;
  std::vector<Gen> scope;  // generators the structure speaks about
};

namespace detail {

inline ExponentVector ev(long a, long q, long c, long l, long r) {
  ExponentVector e;
  e[Gen::a] = a;
  e[Gen::q] = q;
  e[Gen::c] = c;
  e[Gen::l] = l;
  e[Gen::r] = r;
  return e;
}

}  // namespace detail

/// One relation per named diagram: the difference of the two boundary paths.
inline RelationSet relation_set(const std::string& structure) {
  using detail::ev;
  RelationSet rs;
  rs.structure = structure;
  auto add = [&](const std::string& name, ExponentVector e) {
    rs.relations.push_back({name, e});
  };
  auto pseudomonoidal = [&] {
    add("pentagon", ev(-1, 1, 0, 0, 0));  // top q+2a against bottom 3a
    add("square-1", ev(0, 0, 0, 0, 0));
    add("square-2", ev(0, 0, 0, 0, 0));
  };
  auto braided = [&] { add("dodecagon", ev(0, 0, 0, 0, 0)); };
  auto symmetric_extras = [&] {
    add("square", ev(0, -2, 2, 0, 0));
    add("hexagon", ev(1, 0, -1, 0, 0));
    add("decagon-1", ev(0, 2, -2, 0, 0));
    add("decagon-2", ev(0, 2, -2, 0, 0));
    add("aux-square-1", ev(0, 0, 0, 0, 0));
    add("aux-square-2", ev(0, 0, 0, 0, 0));
    add("c-symmetry", ev(0, 0, 2, 0, 0));
    add("q-symmetry", ev(0, 2, 0, 0, 0));
  };
  if (structure == "premonoidal") {
    rs.scope = {Gen::a, Gen::q};
  } else if (structure == "pseudomonoidal") {
    pseudomonoidal();
    rs.scope = {Gen::a, Gen::q};
  } else if (structure == "q-braided") {
    pseudomonoidal();
    braided();
    rs.scope = {Gen::a, Gen::q};
  } else if (structure == "q-pseudomonoidal") {
    pseudomonoidal();
    braided();
    add("quaddecagon-1", ev(1, -1, 0, 0, 0));
    add("quaddecagon-2", ev(1, -1, 0, 0, 0));
    rs.scope = {Gen::a, Gen::q};
  } else if (structure == "unital") {
    pseudomonoidal();
    add("triangle", ev(1, 0, 0, 1, -1));
    add("triangle-l", ev(1, 0, 0, 0, 0));
    add("triangle-r", ev(1, 0, 0, 0, 0));
    for (int i = 1; i <= 4; ++i)
      add("triangle-q" + std::to_string(i), ev(0, 1, 0, 0, 0));
    rs.scope = {Gen::a, Gen::q, Gen::l, Gen::r};
  } else if (structure == "symmetric") {
    pseudomonoidal();
    symmetric_extras();
    rs.scope = {Gen::a, Gen::q, Gen::c};
  } else if (structure == "symmetric-q-monoidal") {
    pseudomonoidal();
    braided();
    symmetric_extras();
    add("large-q-triangle", ev(1, -1, 0, 1, -1));
    add("small-q-triangle", ev(0, 1, 1, 1, -1));
    rs.scope = {Gen::a, Gen::q, Gen::c, Gen::l, Gen::r};
  } else {
    throw DomainError("unknown structure: " + structure);
  }
  return rs;
}

// ---------------------------------------------------------------------------
// Commutativity and scalar models
// ---------------------------------------------------------------------------

namespace detail {

/// Echelonizes integer vectors in place by repeated Euclidean reduction and
/// reduces the target; membership holds when the target reaches zero.
inline bool in_lattice(std::vector<ExponentVector> basis, ExponentVector b) {
  std::vector<char> used(basis.size(), 0);
  for (int d = 0; d < kGenCount; ++d) {
    // Euclidean elimination among the still unused vectors, which are all
    // zero on earlier coordinates, until one pivot survives at d.
    for (;;) {
      int piv = -1;
      for (int i = 0; i < static_cast<int>(basis.size()); ++i)
        if (!used[i] && basis[i].v[d] != 0 &&
            (piv < 0 || std::abs(basis[i].v[d]) < std::abs(basis[piv].v[d])))
          piv = i;
      if (piv < 0) break;
      bool others = false;
      for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
        if (used[i] || i == piv || basis[i].v[d] == 0) continue;
        long k = basis[i].v[d] / basis[piv].v[d];
        for (int j = 0; j < kGenCount; ++j)
          basis[i].v[j] -= k * basis[piv].v[j];
        others = others || basis[i].v[d] != 0;
      }
      if (!others) {
        if (b.v[d] % basis[piv].v[d] != 0) return false;
        long k = b.v[d] / basis[piv].v[d];
        for (int j = 0; j < kGenCount; ++j) b.v[j] -= k * basis[piv].v[j];
        used[piv] = 1;  // retired: never touches earlier coordinates again
        break;
      }
    }
    if (b.v[d] != 0) return false;
  }
  return b.zero();
}

}  // namespace detail

/// True when the cycle's exponent vector lies in the lattice spanned by the
/// relation vectors.
inline bool cycle_commutes(const Path& cycle, const RelationSet& rels) {
  std::vector<ExponentVector> basis;
  for (const auto& [name, e] : rels.relations) basis.push_back(e);
  return detail::in_lattice(std::move(basis), exponent_vector(cycle));
}

using Assignment = std::map<std::string, long>;

/// All assignments of the structure's generators in Z_modulus satisfying the
/// relations and any forced values. Exhaustive search; the space is tiny.
inline std::vector<Assignment> solve_scalar(const RelationSet& rels,
                                            long modulus,
                                            const Assignment& forced = {}) {
  if (modulus < 1) throw DomainError("modulus must be positive");
  if (modulus > 16) throw DomainError("exhaustive search capped at modulus 16");
  for (const auto& [name, val] : forced) {
    bool known = false;
    for (Gen g : rels.scope) known = known || name == gen_name(g);
    if (!known) throw DomainError("forced generator out of scope: " + name);
  }
  int k = static_cast<int>(rels.scope.size());
  std::vector<Assignment> out;
  std::vector<long> vals(k, 0);
  auto rec = [&](auto&& self, int idx) -> void {
    if (idx == k) {
      std::array<long, kGenCount> full{};
      for (int i = 0; i < k; ++i) full[static_cast<int>(rels.scope[i])] = vals[i];
      for (const auto& [name, e] : rels.relations) {
        long s = 0;
        for (int j = 0; j < kGenCount; ++j) s += e.v[j] * full[j];
        if (((s % modulus) + modulus) % modulus != 0) return;
      }
      Assignment a;
      for (int i = 0; i < k; ++i) a[gen_name(rels.scope[i])] = vals[i];
      out.push_back(std::move(a));
      return;
    }
    auto it = forced.find(gen_name(rels.scope[idx]));
    for (long v = 0; v < modulus; ++v) {
      if (it != forced.end() && it->second != v) continue;
      vals[idx] = v;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace coh
