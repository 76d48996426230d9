#include "lsplus/graph.hpp"
#include "lsplus/polytope.hpp"
#include "lsplus/certify.hpp"
#include "lsplus/synthesize.hpp"
#include "lsplus/rankbounds.hpp"
#include "lsplus/search.hpp"
#include <cassert>
#include <iostream>
using namespace lsplus;
int main() {
  Graph k3 = Graph::complete(3);
  assert(graph6_encode(k3) == "Bw");
  assert(graph6_decode("?").n() == 0);
  assert(stability_number(k3) == 1);
  std::cout << "smoke ok\n";
}
