// Command line front end. Every subcommand delegates to one library
// operation and prints deterministic text or stable-ordered JSON.
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coh/interpret.hpp"
#include "coh/reduce.hpp"

using namespace coh;

namespace {

Family need_family(const std::string& name) {
  auto f = family_from_name(name);
  if (!f) throw DomainError("unknown family: " + name);
  return *f;
}

json step_json(const ReductionStep& s) {
  json j;
  j["label"] = s.label;
  j["arrow"] = arrow_to_json(s.arrow);
  return j;
}

void print_arrow_line(const Arrow& a) {
  std::printf("%s pivot=%d side=%s %s^%+d -> %s\n", arrow_kind_name(a.kind),
              a.pivot, side_name(a.side), gen_name(a.generator), a.exponent,
              canonical(a.target).c_str());
}

json assignment_json(const Assignment& a) {
  json j;
  for (const auto& [k, v] : a) j[k] = v;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"coherence groupoids of leveled binary trees"};
  app.require_subcommand(1);

  std::string familyName = "irb", structure = "pseudomonoidal";
  std::string format = "text", treeText, fromText, toText;
  int n = 0, m = 0, k = 1;
  long modulus = 2, budget = default_budget();
  std::vector<std::string> forced;

  auto addFamily = [&](CLI::App* c) {
    c->add_option("--family", familyName, "irb, rb, rrb, nrb, irnb or nrrnb");
  };
  auto addFormat = [&](CLI::App* c) {
    c->add_option("--format", format, "text, json or dot");
  };

  auto* cParse = app.add_subcommand("parse", "validate and echo a tree");
  cParse->add_option("tree", treeText)->required();
  addFamily(cParse);
  addFormat(cParse);

  auto* cCount = app.add_subcommand("count", "closed form tree count");
  addFamily(cCount);
  cCount->add_option("--n", n)->required();
  cCount->add_option("--m", m);
  addFormat(cCount);

  auto* cEnum = app.add_subcommand("enum", "enumerate the trees");
  addFamily(cEnum);
  cEnum->add_option("--n", n)->required();
  cEnum->add_option("--m", m);
  addFormat(cEnum);

  auto* cArrows = app.add_subcommand("arrows", "primitive arrows at a tree");
  cArrows->add_option("tree", treeText)->required();
  addFamily(cArrows);
  addFormat(cArrows);

  auto* cReduce = app.add_subcommand("reduce", "rewrite to left reduced form");
  cReduce->add_option("tree", treeText)->required();
  addFamily(cReduce);
  addFormat(cReduce);

  auto* cPath = app.add_subcommand("path", "shortest arrow path");
  cPath->add_option("from", fromText)->required();
  cPath->add_option("to", toText)->required();
  addFamily(cPath);
  cPath->add_option("--n", n);
  cPath->add_option("--m", m);
  cPath->add_option("--budget", budget);
  addFormat(cPath);

  auto* cGraph = app.add_subcommand("graph", "assemble the groupoid graph");
  addFamily(cGraph);
  cGraph->add_option("--n", n)->required();
  cGraph->add_option("--m", m);
  cGraph->add_option("--budget", budget);
  addFormat(cGraph);

  auto* cCut = app.add_subcommand("cut", "nodes severed at a level");
  cCut->add_option("tree", treeText)->required();
  addFamily(cCut);
  cCut->add_option("--k", k)->required();
  addFormat(cCut);

  auto* cCheck = app.add_subcommand("check", "staircase diagnostics");
  cCheck->add_option("tree", treeText)->required();
  addFamily(cCheck);
  addFormat(cCheck);

  auto* cAudit = app.add_subcommand("audit", "commutativity of basis cycles");
  addFamily(cAudit);
  cAudit->add_option("--n", n)->required();
  cAudit->add_option("--m", m);
  cAudit->add_option("--structure", structure)->required();
  cAudit->add_option("--budget", budget);

  auto* cSolve = app.add_subcommand("solve", "scalar models of a structure");
  cSolve->add_option("--structure", structure)->required();
  cSolve->add_option("--modulus", modulus);
  cSolve->add_option("--force", forced, "generator=value constraints");
  addFormat(cSolve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  bool js = format == "json";

  if (cParse->parsed()) {
    Tree t = parse_tree(treeText, need_family(familyName));
    if (js) {
      json j;
      j["family"] = family_name(t.family);
      j["tree"] = canonical(t);
      j["length"] = tree_length(t);
      j["height"] = height(t);
      j["nodules"] = nodule_count(t);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << canonical(t) << "\n";
    }
  } else if (cCount->parsed()) {
    Family f = need_family(familyName);
    Nat c = count_trees(f, n, m);
    if (js) {
      json j;
      j["family"] = family_name(f);
      j["n"] = n;
      j["m"] = m;
      j["count"] = c.str();
      if (f == Family::NRRNB) j["printed_count"] = nrrnb_printed_count(n, m).str();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << c.str() << "\n";
      if (f == Family::NRRNB)
        std::cout << "printed formula: " << nrrnb_printed_count(n, m).str()
                  << "\n";
    }
  } else if (cEnum->parsed()) {
    auto trees = enumerate_trees(need_family(familyName), n, m);
    if (js) {
      json j = json::array();
      for (const Tree& t : trees) j.push_back(canonical(t));
      std::cout << j.dump(2) << "\n";
    } else {
      for (const Tree& t : trees) std::cout << canonical(t) << "\n";
    }
  } else if (cArrows->parsed()) {
    Tree t = parse_tree(treeText, need_family(familyName));
    auto as = enumerate_arrows(t);
    if (js) {
      json j = json::array();
      for (const Arrow& a : as) j.push_back(arrow_to_json(a));
      std::cout << j.dump(2) << "\n";
    } else {
      for (const Arrow& a : as) print_arrow_line(a);
    }
  } else if (cReduce->parsed()) {
    Tree t = parse_tree(treeText, need_family(familyName));
    auto trace = left_reduce(t);
    if (js) {
      json j;
      j["input"] = canonical(trace.input);
      j["steps"] = json::array();
      for (const ReductionStep& s : trace.steps)
        j["steps"].push_back(step_json(s));
      j["output"] = canonical(trace.output);
      j["bound"] = trace.bound;
      j["over_bound"] = trace.over_bound;
      std::cout << j.dump(2) << "\n";
    } else {
      for (const ReductionStep& s : trace.steps) {
        std::printf("(%s) ", s.label.c_str());
        print_arrow_line(s.arrow);
      }
      std::cout << canonical(trace.output) << "\n";
    }
  } else if (cPath->parsed()) {
    Family f = need_family(familyName);
    Tree from = parse_tree(fromText, f), to = parse_tree(toText, f);
    int gn = n > 0 ? n
             : implicit_leaves(f) ? std::max(height(from), height(to))
                                  : std::max(tree_length(from), tree_length(to));
    int gm = cPath->count("--m") ? m
                                 : std::max(nodule_count(from),
                                            nodule_count(to));
    auto g = build_graph(f, gn, gm, budget);
    auto p = shortest_path(g, from, to);
    if (js) {
      json j = json::array();
      for (const Arrow& a : p) j.push_back(arrow_to_json(a));
      std::cout << j.dump(2) << "\n";
    } else {
      for (const Arrow& a : p) print_arrow_line(a);
    }
  } else if (cGraph->parsed()) {
    auto g = build_graph(need_family(familyName), n, m, budget);
    if (format == "dot")
      std::cout << graph_to_dot(g);
    else
      std::cout << graph_to_json(g).dump(2) << "\n";
  } else if (cCut->parsed()) {
    Tree t = parse_tree(treeText, need_family(familyName));
    auto cut = k_cut(t, k);
    if (js) {
      json j = json::array();
      for (const CutNode& c : cut) {
        json e;
        e["position"] = c.position;
        e["token"] = c.token;
        e["level"] = c.level;
        e["parent_level"] = c.parent_level;
        j.push_back(e);
      }
      std::cout << j.dump(2) << "\n";
    } else {
      for (const CutNode& c : cut)
        std::printf("%d: token %d level %d parent %d\n", c.position, c.token,
                    c.level, c.parent_level);
    }
  } else if (cCheck->parsed()) {
    Tree t = parse_tree(treeText, need_family(familyName));
    if (js) {
      json j;
      j["tree"] = canonical(t);
      j["left_reduced"] = is_left_reduced(t);
      j["largest_reduced_level"] = largest_reduced_level(t);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << (is_left_reduced(t) ? "reduced" : "not reduced")
                << " largest=" << largest_reduced_level(t) << "\n";
    }
  } else if (cAudit->parsed()) {
    auto g = build_graph(need_family(familyName), n, m, budget);
    auto rels = relation_set(structure);
    json j;
    j["family"] = familyName;
    j["n"] = n;
    j["m"] = m;
    j["structure"] = structure;
    auto cycles = cycle_basis(g);
    j["cycles_checked"] = cycles.size();
    j["failures"] = json::array();
    for (const auto& cyc : cycles)
      if (!cycle_commutes(cyc, rels)) {
        json f;
        f["start"] = canonical(cyc.front().source);
        f["length"] = cyc.size();
        f["vector"] = exponent_vector(cyc).str();
        j["failures"].push_back(f);
      }
    std::cout << j.dump(2) << "\n";
    return j["failures"].empty() ? 0 : 1;
  } else if (cSolve->parsed()) {
    Assignment force;
    for (const std::string& s : forced) {
      auto eq = s.find('=');
      if (eq == std::string::npos)
        throw DomainError("expected generator=value, got " + s);
      force[s.substr(0, eq)] = std::stol(s.substr(eq + 1));
    }
    auto sols = solve_scalar(relation_set(structure), modulus, force);
    if (js) {
      json j = json::array();
      for (const Assignment& a : sols) j.push_back(assignment_json(a));
      std::cout << j.dump(2) << "\n";
    } else {
      for (const Assignment& a : sols) {
        std::string line;
        for (const auto& [kk, v] : a)
          line += (line.empty() ? "" : " ") + kk + "=" + std::to_string(v);
        std::cout << line << "\n";
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
}
