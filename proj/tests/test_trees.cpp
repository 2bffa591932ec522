#include <catch2/catch_amalgamated.hpp>

#include "coh/tree.hpp"

using namespace coh;

TEST_CASE("irb parse and round trip") {
  Tree t = parse_tree("03421", Family::IRB);
  REQUIRE(height(t) == 5);
  REQUIRE(tree_length(t) == 6);
  REQUIRE(format_tree(t) == "03421");
  REQUIRE(format_tree(t, Style::Csv) == "0,3,4,2,1");
  REQUIRE(parse_tree("0,3,4,2,1", Family::IRB) == t);
}

TEST_CASE("irb empty and tiny trees") {
  Tree empty = parse_tree("", Family::IRB);
  REQUIRE(empty.seq.empty());
  REQUIRE(height(empty) == 0);
  Tree one = parse_tree("0", Family::IRB);
  REQUIRE(height(one) == 1);
  REQUIRE(tree_length(one) == 2);
}

TEST_CASE("rb parse with multi digit level") {
  Tree t = parse_tree("6480327591(10)", Family::RB);
  REQUIRE(t.seq.size() == 11);
  REQUIRE(tree_length(t) == 6);
  auto [top, bottom] = exploded_form(t);
  REQUIRE(top == std::vector<int>{6, 8, 3, 7, 9, 10});
  REQUIRE(bottom == std::vector<int>{4, 0, 2, 5, 1});
  REQUIRE(format_tree(t) == "6480327591(10)");
  REQUIRE(format_tree(t, Style::Csv) == "6,4,8,0,3,2,7,5,9,1,10");
  REQUIRE(parse_tree("6,4,8,0,3,2,7,5,9,1,10", Family::RB) == t);
}

TEST_CASE("rb single leaf") {
  Tree t = parse_tree("0", Family::RB);
  REQUIRE(t.seq.size() == 1);
  REQUIRE(t.seq[0].kind == NodeKind::Leaf);
  Shape s = build_shape(t);
  REQUIRE(s.ok);
  REQUIRE(s.root == 0);
}

TEST_CASE("rb underlying irb compresses internal levels") {
  Tree t = parse_tree("6480327591(10)", Family::RB);
  Tree u = underlying_irb(t);
  REQUIRE(u.family == Family::IRB);
  REQUIRE(format_tree(u) == "30241");
}

TEST_CASE("rrb pair form") {
  Tree t = parse_tree("(2310,14235)", Family::RRB);
  REQUIRE(tree_length(t) == 5);
  std::vector<int> leafLevels;
  for (const Node& n : t.seq)
    if (n.kind == NodeKind::Leaf) leafLevels.push_back(n.level);
  REQUIRE(leafLevels == std::vector<int>{4, 7, 5, 6, 8});
  REQUIRE(format_tree(t) == "(2310,14235)");
  REQUIRE(format_tree(t, Style::Pair) == "(2310,14235)");
  REQUIRE(parse_tree(format_tree(t), Family::RRB) == t);
  REQUIRE(format_tree(underlying_irb(t)) == "2310");
}

TEST_CASE("irnb nodule placement") {
  Tree t = parse_tree("*04*3*21", Family::IRNB);
  REQUIRE(height(t) == 5);
  REQUIRE(nodule_count(t) == 3);
  REQUIRE(tree_length(t) == 3);
  std::vector<NodeKind> kinds;
  for (const Node& n : t.seq) kinds.push_back(n.kind);
  REQUIRE(kinds == std::vector<NodeKind>{
                       NodeKind::Nodule, NodeKind::Internal, NodeKind::Internal,
                       NodeKind::Nodule, NodeKind::Internal, NodeKind::Nodule,
                       NodeKind::Internal, NodeKind::Internal});
  REQUIRE(format_tree(t) == "*04*3*21");
  REQUIRE(parse_tree(format_tree(t, Style::Csv), Family::IRNB) == t);
}

TEST_CASE("irnb trailing nodule") {
  Tree t = parse_tree("0*", Family::IRNB);
  REQUIRE(t.seq.size() == 2);
  REQUIRE(t.seq[1].kind == NodeKind::Nodule);
  REQUIRE(format_tree(t) == "0*");
}

TEST_CASE("nrb numbering") {
  Tree t = parse_tree("20314#312", Family::NRB);
  std::vector<int> nums;
  for (const Node& n : t.seq)
    if (n.kind == NodeKind::Leaf) nums.push_back(n.number);
  REQUIRE(nums == std::vector<int>{3, 1, 2});
  REQUIRE(format_tree(t) == "20314#312");
  REQUIRE(format_tree(t, Style::Csv) == "2,0,3,1,4;3,1,2");
  REQUIRE(parse_tree("2,0,3,1,4;3,1,2", Family::NRB) == t);
}

TEST_CASE("nrrnb pair with nodule and numbering") {
  Tree t = parse_tree("(0,*12)#1", Family::NRRNB);
  REQUIRE(t.seq.size() == 3);
  REQUIRE(t.seq[0].kind == NodeKind::Nodule);
  REQUIRE(t.seq[0].level == 1);
  REQUIRE(t.seq[2].number == 1);
  REQUIRE(format_tree(t) == "(0,*12)#1");
  REQUIRE(parse_tree(format_tree(t), Family::NRRNB) == t);
}

TEST_CASE("validation rejects bad trees") {
  REQUIRE_THROWS_AS(parse_tree("011", Family::IRB), DomainError);
  REQUIRE_THROWS_AS(parse_tree("012", Family::RB), DomainError);
  REQUIRE_THROWS_AS(parse_tree("0123", Family::RB), DomainError);
  REQUIRE_THROWS_AS(parse_tree("10*", Family::IRB), DomainError);
  REQUIRE_THROWS_AS(parse_tree("20314#311", Family::NRB), DomainError);
  REQUIRE_THROWS_AS(parse_tree("(20,123)", Family::RRB), DomainError);
  REQUIRE_THROWS_AS(parse_tree("(1,123)", Family::RRB), DomainError);
}

TEST_CASE("validate_tree reports violations without throwing") {
  Tree t;
  t.family = Family::IRB;
  t.seq.push_back({0, NodeKind::Internal, -1});
  t.seq.push_back({0, NodeKind::Internal, -1});
  auto v = validate_tree(t);
  REQUIRE_FALSE(v.empty());
}

TEST_CASE("shape reconstruction") {
  Tree t = parse_tree("03421", Family::IRB);
  Shape s = build_shape(t);
  REQUIRE(s.ok);
  REQUIRE(s.root == 0);            // token index of level 0
  REQUIRE(s.left[0] == kImplicit);
  REQUIRE(s.right[0] == 4);        // level 1 at index 4
  REQUIRE(s.left[4] == 3);         // level 2
  REQUIRE(s.left[3] == 1);         // level 3
  REQUIRE(s.right[1] == 2);        // level 4
  REQUIRE(s.parent[2] == 1);
}
