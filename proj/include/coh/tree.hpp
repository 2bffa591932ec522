// Leveled binary tree families, canonical level-sequence encodings, parsing.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coh {

enum class Family { IRB, RB, RRB, NRB, IRNB, NRRNB };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::IRB: return "irb";
    case Family::RB: return "rb";
    case Family::RRB: return "rrb";
    case Family::NRB: return "nrb";
    case Family::IRNB: return "irnb";
    case Family::NRRNB: return "nrrnb";
  }
  return "?";
}

inline std::optional<Family> family_from_name(const std::string& s) {
  for (Family f : {Family::IRB, Family::RB, Family::RRB, Family::NRB,
                   Family::IRNB, Family::NRRNB})
    if (s == family_name(f)) return f;
  return std::nullopt;
}

/// True for the families whose ordinary leaves are implicit (unleveled).
inline bool implicit_leaves(Family f) {
  return f == Family::IRB || f == Family::IRNB;
}
inline bool has_nodules(Family f) {
  return f == Family::IRNB || f == Family::NRRNB;
}
inline bool has_numbering(Family f) {
  return f == Family::NRB || f == Family::NRRNB;
}
inline bool reduced_levels(Family f) {
  return f == Family::RRB || f == Family::NRRNB;
}

enum class NodeKind { Internal, Leaf, Nodule };

struct Node {
  int level = -1;  // -1 for nodules of implicit-leaf families
  NodeKind kind = NodeKind::Internal;
  int number = -1;  // leaf number where the family numbers leaves

  friend bool operator==(const Node& a, const Node& b) {
    return a.level == b.level && a.kind == b.kind && a.number == b.number;
  }
};

/// Immutable value: a tree is its in-order node sequence plus a family tag.
struct Tree {
  Family family = Family::IRB;
  std::vector<Node> seq;

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.family == b.family && a.seq == b.seq;
  }
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int height(const Tree& t) {
  int h = 0;
  for (const Node& n : t.seq) h += n.kind == NodeKind::Internal;
  return h;
}

inline int nodule_count(const Tree& t) {
  int m = 0;
  for (const Node& n : t.seq) m += n.kind == NodeKind::Nodule;
  return m;
}

/// Number of nodule-free leaves.
inline int tree_length(const Tree& t) {
  if (implicit_leaves(t.family)) return height(t) + 1 - nodule_count(t);
  int n = 0;
  for (const Node& n0 : t.seq) n += n0.kind == NodeKind::Leaf;
  return n;
}

inline int leaf_token_count(const Tree& t) {
  int n = 0;
  for (const Node& n0 : t.seq) n += n0.kind != NodeKind::Internal;
  return n;
}

// ---------------------------------------------------------------------------
// Shape: cartesian-tree reconstruction over the in-order sequence.
// ---------------------------------------------------------------------------

/// Child slot value for an implicit leaf (only in IRB/IRNB shapes).
constexpr int kImplicit = -1;
constexpr int kNone = -2;

struct Shape {
  bool ok = false;
  std::string error;
  int root = kNone;                 // token index, or kNone for the empty tree
  std::vector<int> parent;          // per token; root has kNone
  std::vector<int> left, right;     // per token; internal only, else kNone
  std::vector<int> lo, hi;          // subtree token range [lo,hi) per token
};

inline int shape_build(Shape& s, const Tree& t, int lo, int hi, int parent) {
  int r = kNone;
  for (int i = lo; i < hi; ++i)
    if (t.seq[i].kind == NodeKind::Internal &&
        (r == kNone || t.seq[i].level < t.seq[r].level))
      r = i;
  if (r == kNone) {
    if (hi - lo == 0) {
      if (!implicit_leaves(t.family)) {
        s.ok = false;
        s.error = "missing leaf between internal nodes near position " +
                  std::to_string(lo);
      }
      return kImplicit;
    }
    if (hi - lo == 1) {
      s.parent[lo] = parent;
      s.lo[lo] = lo;
      s.hi[lo] = hi;
      return lo;
    }
    s.ok = false;
    s.error = "adjacent leaves without a joining branch at position " +
              std::to_string(lo);
    return kNone;
  }
  s.parent[r] = parent;
  s.lo[r] = lo;
  s.hi[r] = hi;
  s.left[r] = shape_build(s, t, lo, r, r);
  s.right[r] = shape_build(s, t, r + 1, hi, r);
  return r;
}

inline Shape build_shape(const Tree& t) {
  Shape s;
  s.ok = true;
  int n = static_cast<int>(t.seq.size());
  s.parent.assign(n, kNone);
  s.left.assign(n, kNone);
  s.right.assign(n, kNone);
  s.lo.assign(n, 0);
  s.hi.assign(n, 0);
  s.root = n ? shape_build(s, t, 0, n, kNone) : kNone;
  return s;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

inline std::vector<std::string> validate_tree(const Tree& t) {
  std::vector<std::string> out;
  auto bad = [&](const std::string& m) { out.push_back(m); };
  int n = static_cast<int>(t.seq.size());

  for (int i = 0; i < n; ++i) {
    const Node& nd = t.seq[i];
    if (nd.kind == NodeKind::Nodule && !has_nodules(t.family))
      bad("nodule not allowed in this family at position " + std::to_string(i));
    if (nd.kind == NodeKind::Leaf && implicit_leaves(t.family))
      bad("explicit leaf in implicit-leaf family at position " + std::to_string(i));
    if (nd.number != -1 &&
        !(has_numbering(t.family) && nd.kind == NodeKind::Leaf))
      bad("unexpected leaf number at position " + std::to_string(i));
  }
  if (!out.empty()) return out;

  if (implicit_leaves(t.family)) {
    std::vector<int> lv;
    for (const Node& nd : t.seq)
      if (nd.kind == NodeKind::Internal) lv.push_back(nd.level);
    std::vector<int> sorted = lv;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
      if (sorted[i] != i) {
        bad("internal levels are not a bijection with 0..h-1");
        break;
      }
  } else {
    if (n == 0 || n % 2 == 0) {
      bad("level sequence must have odd length 2n-1");
      return out;
    }
    for (int i = 0; i < n; ++i) {
      bool internal = t.seq[i].kind == NodeKind::Internal;
      if (internal != (i % 2 == 1)) {
        bad("leaves and branches must alternate; offending position " +
            std::to_string(i));
        return out;
      }
    }
    std::vector<int> sorted;
    for (const Node& nd : t.seq) sorted.push_back(nd.level);
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
      if (sorted[i] != i) {
        bad("levels are not a bijection with 0..2n-2");
        break;
      }
    for (int i = 1; i < n; i += 2)
      if (!(t.seq[i].level < t.seq[i - 1].level &&
            t.seq[i].level < t.seq[i + 1].level))
        bad("local-minimum violation at index " + std::to_string(i));
    if (reduced_levels(t.family)) {
      int leaves = (n + 1) / 2;
      for (int i = 0; i < n; ++i) {
        bool isLeaf = i % 2 == 0;
        if (isLeaf && t.seq[i].level < leaves - 1)
          bad("leaf level below the branch range at index " + std::to_string(i));
        if (!isLeaf && t.seq[i].level > leaves - 2)
          bad("branch level above the leaf range at index " + std::to_string(i));
      }
    }
    if (has_numbering(t.family)) {
      std::vector<int> nums;
      for (const Node& nd : t.seq)
        if (nd.kind == NodeKind::Leaf) nums.push_back(nd.number);
      std::vector<int> ns = nums;
      std::sort(ns.begin(), ns.end());
      for (int i = 0; i < static_cast<int>(ns.size()); ++i)
        if (ns[i] != i + 1) {
          bad("leaf numbers are not a bijection with 1..n");
          break;
        }
    }
  }
  if (out.empty()) {
    Shape s = build_shape(t);
    if (!s.ok) bad(s.error);
  }
  return out;
}

inline void require_valid(const Tree& t) {
  auto v = validate_tree(t);
  if (!v.empty()) throw DomainError("invalid tree: " + v.front());
}

// ---------------------------------------------------------------------------
// Formatting
// ---------------------------------------------------------------------------

inline std::string level_str(int lvl) {
  if (lvl >= 0 && lvl <= 9) return std::string(1, static_cast<char>('0' + lvl));
  return "(" + std::to_string(lvl) + ")";
}

enum class Style { Compact, Csv, Pair };

inline std::string format_tree(const Tree& t, Style style = Style::Compact) {
  auto numbers_suffix = [&](char sep) {
    if (!has_numbering(t.family)) return std::string();
    std::string s = "#";
    bool first = true;
    for (const Node& nd : t.seq)
      if (nd.kind == NodeKind::Leaf) {
        if (!first && sep) s += sep;
        first = false;
        s += sep ? std::to_string(nd.number) : level_str(nd.number);
      }
    return s;
  };

  if (style == Style::Pair || (style == Style::Compact && reduced_levels(t.family))) {
    if (!reduced_levels(t.family))
      throw DomainError("pair form is defined only for rrb/nrrnb trees");
    int leaves = leaf_token_count(t);
    std::string a, b;
    for (const Node& nd : t.seq) {
      if (nd.kind == NodeKind::Internal)
        a += level_str(nd.level);
      else {
        if (nd.kind == NodeKind::Nodule) b += '*';
        b += level_str(nd.level - leaves + 2);
      }
    }
    return "(" + a + "," + b + ")" + numbers_suffix('\0');
  }
  if (style == Style::Compact) {
    std::string s;
    for (const Node& nd : t.seq)
      s += nd.kind == NodeKind::Nodule && nd.level < 0 ? std::string("*")
           : (nd.kind == NodeKind::Nodule ? "*" : "") + level_str(nd.level);
    return s + numbers_suffix('\0');
  }
  // csv
  std::string s;
  for (std::size_t i = 0; i < t.seq.size(); ++i) {
    if (i) s += ',';
    const Node& nd = t.seq[i];
    if (nd.kind == NodeKind::Nodule) s += '*';
    if (nd.level >= 0) s += std::to_string(nd.level);
  }
  std::string nums = numbers_suffix(',');
  if (!nums.empty()) s += ";" + nums.substr(1);
  return s;
}

inline std::string canonical(const Tree& t) { return format_tree(t); }

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

struct ParseCursor {
  const std::string& s;
  std::size_t i = 0;
  bool done() const { return i >= s.size(); }
  char peek() const { return s[i]; }
  [[noreturn]] void fail(const std::string& m) const {
    throw DomainError("syntax error at position " + std::to_string(i) + ": " + m);
  }
};

inline int parse_level(ParseCursor& c) {
  if (c.done()) c.fail("expected a level");
  if (c.peek() == '(') {
    ++c.i;
    int v = 0;
    bool any = false;
    while (!c.done() && c.peek() >= '0' && c.peek() <= '9') {
      v = v * 10 + (c.peek() - '0');
      ++c.i;
      any = true;
    }
    if (!any || c.done() || c.peek() != ')') c.fail("malformed (level)");
    ++c.i;
    return v;
  }
  if (c.peek() < '0' || c.peek() > '9') c.fail("expected a digit");
  return c.s[c.i++] - '0';
}

/// Reads a compact run of {'*'? level} tokens until a terminator character.
inline std::vector<std::pair<bool, int>> parse_compact_run(ParseCursor& c,
                                                           const std::string& stops) {
  std::vector<std::pair<bool, int>> toks;
  while (!c.done() && stops.find(c.peek()) == std::string::npos) {
    bool star = false;
    if (c.peek() == '*') {
      star = true;
      ++c.i;
      if (c.done() || stops.find(c.peek()) != std::string::npos ||
          c.peek() == '*') {
        toks.push_back({true, -1});  // bare nodule mark
        continue;
      }
    }
    toks.push_back({star, parse_level(c)});
  }
  return toks;
}

inline int parse_decimal(ParseCursor& c) {
  if (c.done() || c.peek() < '0' || c.peek() > '9') c.fail("expected a number");
  int v = 0;
  while (!c.done() && c.peek() >= '0' && c.peek() <= '9') {
    v = v * 10 + (c.peek() - '0');
    ++c.i;
  }
  return v;
}

inline std::vector<int> parse_number_run(ParseCursor& c, bool csv) {
  std::vector<int> nums;
  while (!c.done()) {
    if (c.peek() == ',') {
      ++c.i;
      continue;
    }
    nums.push_back(csv ? parse_decimal(c) : parse_level(c));
  }
  return nums;
}

inline Tree assemble_numbered(Tree t, const std::vector<int>& nums) {
  std::size_t k = 0;
  for (Node& nd : t.seq)
    if (nd.kind == NodeKind::Leaf) {
      if (k >= nums.size()) throw DomainError("too few leaf numbers");
      nd.number = nums[k++];
    }
  if (k != nums.size()) throw DomainError("too many leaf numbers");
  return t;
}

inline Tree parse_tree(const std::string& text, Family family) {
  ParseCursor c{text};
  Tree t;
  t.family = family;
  bool csv = !reduced_levels(family) && (text.find(',') != std::string::npos ||
                                         text.find(';') != std::string::npos);

  if (reduced_levels(family)) {
    if (c.done() || c.peek() != '(') c.fail("pair form '(branches,leaves)' expected");
    ++c.i;
    auto branches = parse_compact_run(c, ",");
    if (c.done() || c.peek() != ',') c.fail("expected ','");
    ++c.i;
    auto leaves = parse_compact_run(c, ")");
    if (c.done() || c.peek() != ')') c.fail("expected ')'");
    ++c.i;
    int n = static_cast<int>(leaves.size());
    if (static_cast<int>(branches.size()) != n - 1)
      throw DomainError("pair form needs one more leaf than branches");
    for (int i = 0; i < n; ++i) {
      auto [star, entry] = leaves[i];
      if (entry < 0) throw DomainError("leaf entry missing a level");
      Node leaf;
      leaf.kind = star ? NodeKind::Nodule : NodeKind::Leaf;
      leaf.level = entry + n - 2;
      t.seq.push_back(leaf);
      if (i + 1 < n) {
        auto [bstar, blvl] = branches[i];
        if (bstar || blvl < 0) throw DomainError("branch entry must be a plain level");
        t.seq.push_back({blvl, NodeKind::Internal, -1});
      }
    }
  } else {
    std::vector<std::pair<bool, int>> toks;
    if (csv) {
      while (!c.done() && c.peek() != ';' && c.peek() != '#') {
        if (c.peek() == ',') {
          ++c.i;
          continue;
        }
        bool star = false;
        if (c.peek() == '*') {
          star = true;
          ++c.i;
        }
        if (c.done() || c.peek() == ',' || c.peek() == ';') {
          toks.push_back({star, -1});
          continue;
        }
        toks.push_back({star, parse_decimal(c)});
      }
    } else {
      toks = parse_compact_run(c, "#;");
    }
    int idx = 0;
    for (auto [star, lvl] : toks) {
      Node nd;
      if (implicit_leaves(family)) {
        if (star && lvl < 0) {
          nd.kind = NodeKind::Nodule;
        } else if (star) {
          // '*' marks a nodule leaf immediately preceding this internal node
          t.seq.push_back({-1, NodeKind::Nodule, -1});
          nd.kind = NodeKind::Internal;
          nd.level = lvl;
        } else {
          nd.kind = NodeKind::Internal;
          nd.level = lvl;
        }
      } else {
        if (lvl < 0) c.fail("missing level");
        nd.kind = star ? NodeKind::Nodule
                       : (idx % 2 == 0 ? NodeKind::Leaf : NodeKind::Internal);
        nd.level = lvl;
      }
      t.seq.push_back(nd);
      ++idx;
    }
  }

  if (!c.done() && (c.peek() == '#' || c.peek() == ';')) {
    ++c.i;
    if (!has_numbering(family)) c.fail("numbering not allowed for this family");
    t = assemble_numbered(std::move(t), parse_number_run(c, csv));
  }
  if (!c.done()) c.fail("trailing input");

  require_valid(t);
  return t;
}

// ---------------------------------------------------------------------------
// Derived views
// ---------------------------------------------------------------------------

/// Forgets leaf levels and compresses internal levels to 0..n-2.
inline Tree underlying_irb(const Tree& t) {
  if (t.family != Family::RB && t.family != Family::RRB)
    throw DomainError("underlying_irb expects an rb or rrb tree");
  std::vector<int> lv;
  for (const Node& nd : t.seq)
    if (nd.kind == NodeKind::Internal) lv.push_back(nd.level);
  std::vector<int> sorted = lv;
  std::sort(sorted.begin(), sorted.end());
  Tree r;
  r.family = Family::IRB;
  for (int v : lv) {
    int rank = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                                sorted.begin());
    r.seq.push_back({rank, NodeKind::Internal, -1});
  }
  return r;
}

/// Splits the level sequence into (leaf row, internal row).
inline std::pair<std::vector<int>, std::vector<int>> exploded_form(const Tree& t) {
  if (implicit_leaves(t.family))
    throw DomainError("exploded_form expects an explicit-leaf family");
  std::pair<std::vector<int>, std::vector<int>> rows;
  for (std::size_t i = 0; i < t.seq.size(); ++i)
    (i % 2 == 0 ? rows.first : rows.second).push_back(t.seq[i].level);
  return rows;
}

}  // namespace coh
