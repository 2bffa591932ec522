// Reduces one tree to left reduced form and prints the labeled arrow trace.
#include <cstdio>

#include "coh/reduce.hpp"

using namespace coh;

int main(int argc, char** argv) {
  const char* text = argc > 1 ? argv[1] : "6480327591(10)";
  Tree t = parse_tree(text, Family::RB);
  auto trace = left_reduce(t);
  std::printf("%s\n", canonical(trace.input).c_str());
  for (const ReductionStep& s : trace.steps)
    std::printf("  (%s) %s^%+d -> %s\n", s.label.c_str(),
                gen_name(s.arrow.generator), s.arrow.exponent,
                canonical(s.arrow.target).c_str());
  std::printf("%s in %zu steps (bound %d)\n", canonical(trace.output).c_str(),
              trace.steps.size(), trace.bound);
  return 0;
}
