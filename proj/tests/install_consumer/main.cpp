#include <cstdio>
#include <vector>

#include "recourse/bmatch.hpp"
#include "recourse/oracle.hpp"
#include "recourse/shortest_path.hpp"

int main() {
  recourse::ShortestPathOrienter sp;
  sp.process(0, 1);
  sp.process(1, 2);
  const std::vector<recourse::Edge> triangle{{0, 1}, {1, 2}, {2, 0}};
  recourse::OnlineBMatcher m(recourse::BMatchConfig{1, 2});
  const std::vector<recourse::NodeId> nbrs{3};
  m.process_arrival(nbrs);
  const bool ok = sp.view().max_in_degree() <= 2 && recourse::arboricity(triangle).value.str() == "3/2" &&
                  m.load(3) == 1;
  std::puts(ok ? "consumer ok" : "consumer mismatch");
  return ok ? 0 : 1;
}
