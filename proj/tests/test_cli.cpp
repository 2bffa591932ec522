#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(COHCLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), p))
    out.append(buf.data(), got);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("count matches the frozen table") {
  auto r = run("count --family rb --n 6");
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "353792\n");
}

TEST_CASE("count reports both formulas for marked reflective trees") {
  auto r = run("count --family nrrnb --n 2 --m 1 --format json");
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("\"count\": \"72\"") != std::string::npos);
  REQUIRE(r.out.find("\"printed_count\": \"48\"") != std::string::npos);
}

TEST_CASE("single arrow of the smallest rotation") {
  auto r = run("arrows 10 --family irb");
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "reattach pivot=0 side=left a^+1 -> 01\n");
}

TEST_CASE("parse round trips and rejects") {
  REQUIRE(run("parse 03421 --family irb").out == "03421\n");
  REQUIRE(run("parse \"(2310,14235)\" --family rrb").out == "(2310,14235)\n");
  REQUIRE(run("parse 011 --family irb").code == 1);
  REQUIRE(run("").code == 2);
  REQUIRE(run("frobnicate").code == 2);
}

TEST_CASE("enumeration is deterministic") {
  auto a = run("enum --family rb --n 3"), b = run("enum --family rb --n 3");
  REQUIRE(a.code == 0);
  REQUIRE(a.out == b.out);
  int lines = 0;
  for (char c : a.out) lines += c == '\n';
  REQUIRE(lines == 16);
}

TEST_CASE("reduce emits labeled steps and the reduced tree") {
  auto r = run("reduce 20314 --family rb");
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("21304") != std::string::npos);
  REQUIRE(r.out[0] == '(');  // step label prefix
}

TEST_CASE("audit passes on the pentagon groupoid and fails premonoidally") {
  auto good = run("audit --family irb --n 4 --structure pseudomonoidal");
  REQUIRE(good.code == 0);
  REQUIRE(good.out.find("\"failures\": []") != std::string::npos);
  auto bad = run("audit --family irb --n 3 --structure premonoidal");
  REQUIRE(bad.code == 1);
  REQUIRE(bad.out.find("\"vector\"") != std::string::npos);
}

TEST_CASE("solve lists the two-element models") {
  auto r = run("solve --structure pseudomonoidal --modulus 2");
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "a=0 q=0\na=1 q=1\n");
  auto empty = run("solve --structure unital --modulus 2 --force q=1");
  REQUIRE(empty.code == 0);
  REQUIRE(empty.out.empty());
}

TEST_CASE("graph export formats") {
  auto dot = run("graph --family irb --n 3 --format dot");
  REQUIRE(dot.code == 0);
  REQUIRE(dot.out.rfind("graph coherence {", 0) == 0);
  auto j1 = run("graph --family irb --n 3 --format json");
  auto j2 = run("graph --family irb --n 3 --format json");
  REQUIRE(j1.out == j2.out);
  REQUIRE(j1.out.find("\"vertices\"") != std::string::npos);
  auto over = run("graph --family rb --n 5 --budget 100");
  REQUIRE(over.code == 1);
}

TEST_CASE("path and cut") {
  auto p = run("path 012 102 --family irb");
  REQUIRE(p.code == 0);
  REQUIRE(p.out == "reattach pivot=0 side=right a^-1 -> 102\n");
  auto c = run("cut 6480327591\\(10\\) --family rb --k 6");
  REQUIRE(c.code == 0);
  int lines = 0;
  for (char ch : c.out) lines += ch == '\n';
  REQUIRE(lines == 5);
}

TEST_CASE("check reports the staircase level") {
  auto r = run("check 21304 --family rb");
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "reduced largest=2\n");
}
