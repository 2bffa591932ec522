// Builds the height three graph, prints it as DOT and audits its one cycle.
#include <cstdio>

#include "coh/interpret.hpp"

using namespace coh;

int main() {
  auto g = build_graph(Family::IRB, 3);
  std::printf("%s", graph_to_dot(g).c_str());
  auto cycles = cycle_basis(g);
  for (const auto& cyc : cycles) {
    ExponentVector ev = exponent_vector(cyc);
    std::printf("cycle of length %zu, net %s\n", cyc.size(), ev.str().c_str());
    std::printf("  commutes with pentagon imposed: %s\n",
                cycle_commutes(cyc, relation_set("pseudomonoidal")) ? "yes"
                                                                    : "no");
    std::printf("  commutes with nothing imposed:  %s\n",
                cycle_commutes(cyc, relation_set("premonoidal")) ? "yes"
                                                                 : "no");
  }
  return 0;
}
