// Exhaustive enumeration and exact counting of the tree families.
#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "coh/bigint.hpp"
#include "coh/tree.hpp"

namespace coh {

/// Zigzag number Z(k) via the Seidel boustrophedon triangle.
inline Nat zigzag(int k) {
  std::vector<Nat> row{Nat(1)};
  for (int i = 1; i <= k; ++i) {
    std::vector<Nat> next(i + 1);
    next[0] = Nat(0);
    for (int j = 1; j <= i; ++j) next[j] = next[j - 1] + row[i - j];
    row = std::move(next);
  }
  return row.back();
}

/// Tangent number: the count of length-n leveled binary trees.
inline Nat tangent_number(int n) { return n == 0 ? Nat(1) : zigzag(2 * n - 1); }

namespace detail {

inline std::vector<std::vector<int>> permutations(int lo, int hi) {
  std::vector<int> base(hi - lo);
  std::iota(base.begin(), base.end(), lo);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

inline std::vector<std::vector<int>> subsets(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n - (m - static_cast<int>(cur.size())); ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline bool rb_levels_ok(const std::vector<int>& lv) {
  for (std::size_t i = 1; i < lv.size(); i += 2)
    if (!(lv[i] < lv[i - 1] && lv[i] < lv[i + 1])) return false;
  return true;
}

}  // namespace detail

inline std::vector<Tree> enumerate_irb(int n) {
  std::vector<Tree> out;
  for (const auto& p : detail::permutations(0, n)) {
    Tree t;
    t.family = Family::IRB;
    for (int v : p) t.seq.push_back({v, NodeKind::Internal, -1});
    out.push_back(std::move(t));
  }
  return out;
}

inline std::vector<Tree> enumerate_rb(int n) {
  std::vector<Tree> out;
  for (const auto& p : detail::permutations(0, 2 * n - 1)) {
    if (!detail::rb_levels_ok(p)) continue;
    Tree t;
    t.family = Family::RB;
    for (std::size_t i = 0; i < p.size(); ++i)
      t.seq.push_back({p[i], i % 2 ? NodeKind::Internal : NodeKind::Leaf, -1});
    out.push_back(std::move(t));
  }
  return out;
}

inline std::vector<Tree> enumerate_rrb(int n) {
  std::vector<Tree> out;
  for (const auto& b : detail::permutations(0, n - 1))
    for (const auto& l : detail::permutations(n - 1, 2 * n - 1)) {
      Tree t;
      t.family = Family::RRB;
      for (int i = 0; i < n; ++i) {
        t.seq.push_back({l[i], NodeKind::Leaf, -1});
        if (i + 1 < n) t.seq.push_back({b[i], NodeKind::Internal, -1});
      }
      out.push_back(std::move(t));
    }
  return out;
}

inline std::vector<Tree> enumerate_nrb(int n) {
  std::vector<Tree> out;
  for (const Tree& rb : enumerate_rb(n))
    for (const auto& nums : detail::permutations(1, n + 1)) {
      Tree t = rb;
      t.family = Family::NRB;
      int k = 0;
      for (Node& nd : t.seq)
        if (nd.kind == NodeKind::Leaf) nd.number = nums[k++];
      out.push_back(std::move(t));
    }
  return out;
}

/// All nodule trees of height n with exactly m nodules.
inline std::vector<Tree> enumerate_irnb(int n, int m) {
  std::vector<Tree> out;
  auto gaps = detail::subsets(n + 1, m);
  for (const Tree& irb : enumerate_irb(n))
    for (const auto& g : gaps) {
      Tree t = irb;
      t.family = Family::IRNB;
      for (auto it = g.rbegin(); it != g.rend(); ++it)
        t.seq.insert(t.seq.begin() + *it, {-1, NodeKind::Nodule, -1});
      out.push_back(std::move(t));
    }
  return out;
}

/// All numbered reduced nodule trees with n numbered leaves and m nodules.
inline std::vector<Tree> enumerate_nrrnb(int n, int m) {
  int N = n + m;
  std::vector<Tree> out;
  auto marks = detail::subsets(N, m);
  auto nums = detail::permutations(1, n + 1);
  for (const Tree& rrb : enumerate_rrb(N))
    for (const auto& mk : marks)
      for (const auto& nm : nums) {
        Tree t = rrb;
        t.family = Family::NRRNB;
        int leaf = 0, k = 0;
        for (Node& nd : t.seq) {
          if (nd.kind != NodeKind::Leaf) continue;
          if (std::binary_search(mk.begin(), mk.end(), leaf))
            nd.kind = NodeKind::Nodule;
          else
            nd.number = nm[k++];
          ++leaf;
        }
        out.push_back(std::move(t));
      }
  return out;
}

inline std::vector<Tree> enumerate_trees(Family f, int n, int m = 0) {
  switch (f) {
    case Family::IRB: return enumerate_irb(n);
    case Family::RB: return enumerate_rb(n);
    case Family::RRB: return enumerate_rrb(n);
    case Family::NRB: return enumerate_nrb(n);
    case Family::IRNB: return enumerate_irnb(n, m);
    case Family::NRRNB: return enumerate_nrrnb(n, m);
  }
  throw DomainError("unknown family");
}

/// Exact count by closed formula; agrees with enumerate_trees everywhere the
/// latter is feasible.
inline Nat count_trees(Family f, int n, int m = 0) {
  switch (f) {
    case Family::IRB: return factorial(n);
    case Family::RB: return tangent_number(n);
    case Family::RRB: return factorial(n) * factorial(n - 1);
    case Family::NRB: return factorial(n) * tangent_number(n);
    case Family::IRNB: return binomial(n + 1, m) * factorial(n);
    case Family::NRRNB:
      return factorial(n + m) * factorial(n + m - 1) * binomial(n + m, m) *
             factorial(n);
  }
  throw DomainError("unknown family");
}

/// Literal closed form printed in the source text for the numbered reduced
/// nodule family; disagrees with direct enumeration for m >= 1, n >= 2.
inline Nat nrrnb_printed_count(int n, int m) {
  return Nat(2) * factorial(n + m) * factorial(n + m - 1) * factorial(n);
}

/// Independent count of down-up alternating permutations of 1..2n-1.
inline Nat updown_oracle(int n) {
  if (2 * n - 1 > 9) throw DomainError("updown oracle budget exceeded");
  std::vector<int> p(2 * n - 1);
  std::iota(p.begin(), p.end(), 1);
  Nat count(0);
  do {
    bool ok = true;
    for (std::size_t i = 1; i < p.size() && ok; i += 2)
      if (!(p[i] < p[i - 1] && p[i] < p[i + 1])) ok = false;
    if (ok) count += Nat(1);
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace coh
