// Randomized structural identities over Conway-built diagrams and diagrams
// reconstructed from random signed plane graphs.

#include <random>

#include "amphichiral/build.hpp"
#include "amphichiral/io.hpp"
#include "doctest.h"
#include "property_checks.hpp"
#include "support.hpp"

using namespace amphi;

namespace {

void check_diagram(const Diagram& d) {
  const auto bad = props::failures(d);
  CHECK_MESSAGE(bad.empty(), (bad.empty() ? std::string() : bad.front()) << " fails for " << pd_to_text(d));
}

}  // namespace

TEST_CASE("structural identities on fixtures and random diagrams") {
  int checked = 0;
  for (const auto& s : fixtures::all()) check_diagram(build(s)), ++checked;

  std::mt19937 rng(2024);
  for (int i = 0; i < 1200; ++i) check_diagram(gen::random_diagram(rng, 14)), ++checked;

  // Graph-first: random signed plane graphs often have loops and bridges,
  // so their diagrams exercise reduce on non-reduced input.
  int non_reduced = 0;
  for (int i = 0; i < 600; ++i) {
    const PlaneGraph g = gen::random_graph(rng, 1 + i % 12, true);
    const Diagram d = reconstruct(g);
    CHECK(iso(graph_of(d, true), g, GraphIsoMode::Embedded).has_value());
    non_reduced += !is_reduced(d);
    check_diagram(d), ++checked;
  }
  CHECK(non_reduced > 100);
  MESSAGE("property instances: " << checked);
}

TEST_CASE("the unknot") {
  const Diagram u = Diagram::unknot();
  CHECK(props::failures(u).empty());
  const PlaneGraph g = graph_of(u, true);
  CHECK(g.edge_count() == 0);
  CHECK(reduce(u).is_unknot());
  CHECK(reconstruct(g).is_unknot());
}
