// Groupoid graphs: vertices are trees of a family, undirected edges are the
// primitive arrows, stored once per unordered pair.
#pragma once

#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coh/arrows.hpp"
#include "coh/enumerate.hpp"

namespace coh {

inline long default_budget() {
  if (const char* env = std::getenv("COHERENCE_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 100000;
}

struct GraphEdge {
  int u = 0, v = 0;  // vertex indices; the stored arrow runs u -> v
  Arrow arrow;
};

struct GroupoidGraph {
  Family family = Family::IRB;
  int n = 0, m = 0;
  std::vector<Tree> trees;
  std::vector<std::string> verts;           // canonical strings, same order
  std::map<std::string, int> index;
  std::vector<GraphEdge> edges;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, edge id)
};

namespace detail {

// Key identifying an undirected edge independently of traversal direction.
inline std::tuple<int, int, int, int, std::vector<int>, int> edge_key(
    int u, int v, const Arrow& a) {
  int lo = std::min(u, v), hi = std::max(u, v);
  ArrowKind k = a.kind == ArrowKind::Graft ? ArrowKind::Prune : a.kind;
  bool prunish = k == ArrowKind::Prune;
  std::vector<int> moved = prunish ? std::vector<int>{} : a.moved;
  int side = prunish ? static_cast<int>(a.side) : 0;
  return {lo, hi, static_cast<int>(k), a.pivot, moved, side};
}

inline std::vector<Tree> graph_vertices(Family f, int n, int m) {
  std::vector<Tree> verts;
  auto keep = [&](std::vector<Tree> ts) {
    for (Tree& t : ts)
      if (height(t) > 0) verts.push_back(std::move(t));
  };
  switch (f) {
    case Family::IRB: keep(enumerate_irb(n)); break;
    case Family::RB: keep(enumerate_rb(n)); break;
    case Family::RRB: keep(enumerate_rrb(n)); break;
    case Family::NRB: keep(enumerate_nrb(n)); break;
    case Family::IRNB:
      for (int k = 0; k <= m && k <= n; ++k) keep(enumerate_irnb(n - k, m - k));
      break;
    case Family::NRRNB:
      for (int mm = m; mm >= 0; --mm) keep(enumerate_nrrnb(n, mm));
      break;
  }
  if (verts.empty()) throw DomainError("graph would have no vertices");
  return verts;
}

}  // namespace detail

inline GroupoidGraph build_graph(Family f, int n, int m = 0,
                                 long budget = default_budget()) {
  GroupoidGraph g;
  g.family = f;
  g.n = n;
  g.m = m;
  g.trees = detail::graph_vertices(f, n, m);
  if (static_cast<long>(g.trees.size()) > budget)
    throw DomainError("vertex budget exceeded: " +
                      std::to_string(g.trees.size()) + " > " +
                      std::to_string(budget));
  for (const Tree& t : g.trees) {
    g.verts.push_back(canonical(t));
    g.index[g.verts.back()] = static_cast<int>(g.verts.size()) - 1;
  }
  g.adj.resize(g.trees.size());
  std::set<std::tuple<int, int, int, int, std::vector<int>, int>> seen;
  for (int u = 0; u < static_cast<int>(g.trees.size()); ++u) {
    for (const Arrow& a : enumerate_arrows(g.trees[u])) {
      auto it = g.index.find(canonical(a.target));
      if (it == g.index.end()) continue;  // leaves the vertex set
      int v = it->second;
      if (!seen.insert(detail::edge_key(u, v, a)).second) continue;
      int id = static_cast<int>(g.edges.size());
      g.edges.push_back({u, v, a});
      g.adj[u].push_back({v, id});
      g.adj[v].push_back({u, id});
    }
  }
  return g;
}

/// The arrow along edge id leaving vertex `from`.
inline Arrow edge_arrow_from(const GroupoidGraph& g, int id, int from) {
  const GraphEdge& e = g.edges[id];
  return e.u == from ? e.arrow : invert_arrow(e.arrow);
}

inline bool is_connected(const GroupoidGraph& g) {
  if (g.trees.empty()) return true;
  std::vector<char> seen(g.trees.size(), 0);
  std::deque<int> q{0};
  seen[0] = 1;
  std::size_t cnt = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (auto [v, id] : g.adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++cnt;
        q.push_back(v);
      }
  }
  return cnt == g.trees.size();
}

/// Deterministic breadth-first shortest path, returned as oriented arrows.
inline std::vector<Arrow> shortest_path(const GroupoidGraph& g,
                                        const Tree& from, const Tree& to) {
  auto fi = g.index.find(canonical(from));
  auto ti = g.index.find(canonical(to));
  if (fi == g.index.end() || ti == g.index.end())
    throw DomainError("endpoint not in graph");
  int src = fi->second, dst = ti->second;
  std::vector<int> prevEdge(g.trees.size(), -1), prevVert(g.trees.size(), -1);
  std::vector<char> seen(g.trees.size(), 0);
  seen[src] = 1;
  std::deque<int> q{src};
  while (!q.empty() && !seen[dst]) {
    int u = q.front();
    q.pop_front();
    for (auto [v, id] : g.adj[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      prevEdge[v] = id;
      prevVert[v] = u;
      if (v == dst) break;
      q.push_back(v);
    }
  }
  if (!seen[dst]) throw DomainError("no path between the given trees");
  std::vector<Arrow> path;
  for (int v = dst; v != src; v = prevVert[v])
    path.push_back(edge_arrow_from(g, prevEdge[v], prevVert[v]));
  std::reverse(path.begin(), path.end());
  return path;
}

/// Out-degree histogram over the full arrow sets of the vertices.
inline std::map<int, int> degree_stats(const GroupoidGraph& g) {
  std::map<int, int> hist;
  for (const Tree& t : g.trees)
    ++hist[static_cast<int>(enumerate_arrows(t).size())];
  return hist;
}

/// Fundamental cycles from a spanning forest: one per non-tree edge, each a
/// closed arrow path starting and ending at the same vertex.
inline std::vector<std::vector<Arrow>> cycle_basis(const GroupoidGraph& g) {
  int V = static_cast<int>(g.trees.size());
  std::vector<int> parentEdge(V, -1), parentVert(V, -1), root(V, -1);
  std::vector<char> inTree(g.edges.size(), 0);
  for (int s = 0; s < V; ++s) {
    if (root[s] >= 0) continue;
    root[s] = s;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (auto [v, id] : g.adj[u])
        if (root[v] < 0) {
          root[v] = s;
          parentEdge[v] = id;
          parentVert[v] = u;
          inTree[id] = 1;
          q.push_back(v);
        }
    }
  }
  auto path_to_root = [&](int v) {
    std::vector<int> verts;
    for (; v >= 0; v = parentVert[v]) verts.push_back(v);
    return verts;  // v, parent(v), ..., root
  };
  std::vector<std::vector<Arrow>> cycles;
  for (int id = 0; id < static_cast<int>(g.edges.size()); ++id) {
    if (inTree[id]) continue;
    int u = g.edges[id].u, v = g.edges[id].v;
    auto pu = path_to_root(u), pv = path_to_root(v);
    // Trim the common tail to the lowest common ancestor.
    while (pu.size() > 1 && pv.size() > 1 &&
           pu[pu.size() - 2] == pv[pv.size() - 2]) {
      pu.pop_back();
      pv.pop_back();
    }
    std::vector<Arrow> cyc;
    cyc.push_back(edge_arrow_from(g, id, u));  // chord u -> v
    for (std::size_t i = 0; i + 1 < pv.size(); ++i)  // v down to lca
      cyc.push_back(edge_arrow_from(g, parentEdge[pv[i]], pv[i]));
    for (std::size_t i = pu.size() - 1; i-- > 0;)  // lca back up to u
      cyc.push_back(edge_arrow_from(g, parentEdge[pu[i]], pu[i + 1]));
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

using json = nlohmann::ordered_json;

inline json arrow_to_json(const Arrow& a) {
  json j;
  j["kind"] = arrow_kind_name(a.kind);
  j["pivot"] = a.pivot;
  j["side"] = side_name(a.side);
  j["generator"] = gen_name(a.generator);
  j["exponent"] = a.exponent;
  j["source"] = canonical(a.source);
  j["target"] = canonical(a.target);
  return j;
}

inline json graph_to_json(const GroupoidGraph& g) {
  json j;
  j["family"] = family_name(g.family);
  j["n"] = g.n;
  j["m"] = g.m;
  j["vertices"] = g.verts;
  j["edges"] = json::array();
  for (const GraphEdge& e : g.edges) j["edges"].push_back(arrow_to_json(e.arrow));
  return j;
}

inline GroupoidGraph graph_from_json(const json& j) {
  Family f = family_from_name(j.at("family").get<std::string>())
                 .value_or(Family::IRB);
  GroupoidGraph g;
  g.family = f;
  g.n = j.at("n").get<int>();
  g.m = j.at("m").get<int>();
  for (const auto& v : j.at("vertices")) {
    g.trees.push_back(parse_tree(v.get<std::string>(), f));
    g.verts.push_back(canonical(g.trees.back()));
    g.index[g.verts.back()] = static_cast<int>(g.verts.size()) - 1;
  }
  g.adj.resize(g.trees.size());
  for (const auto& ej : j.at("edges")) {
    int u = g.index.at(ej.at("source").get<std::string>());
    int v = g.index.at(ej.at("target").get<std::string>());
    // Recover the full arrow by matching the stored descriptor.
    Arrow found;
    bool ok = false;
    for (const Arrow& a : enumerate_arrows(g.trees[u]))
      if (std::string(arrow_kind_name(a.kind)) == ej.at("kind") &&
          a.pivot == ej.at("pivot").get<int>() &&
          std::string(side_name(a.side)) == ej.at("side") &&
          canonical(a.target) == g.verts[v]) {
        found = a;
        ok = true;
        break;
      }
    if (!ok) throw DomainError("edge does not match any primitive arrow");
    int id = static_cast<int>(g.edges.size());
    g.edges.push_back({u, v, found});
    g.adj[u].push_back({v, id});
    g.adj[v].push_back({u, id});
  }
  return g;
}

inline std::string graph_to_dot(const GroupoidGraph& g) {
  std::string out = "graph coherence {\n";
  for (const std::string& v : g.verts) out += "  \"" + v + "\";\n";
  for (const GraphEdge& e : g.edges) {
    const Arrow& a = e.arrow;
    out += "  \"" + g.verts[e.u] + "\" -- \"" + g.verts[e.v] + "\" [label=\"" +
           gen_name(a.generator) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace coh
