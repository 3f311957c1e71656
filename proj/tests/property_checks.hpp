#pragma once

#include <string>
#include <vector>

#include "amphichiral/checkerboard.hpp"
#include "amphichiral/diagram.hpp"

namespace props {

// Names of the structural identities that fail for `d`; empty when all hold.
inline std::vector<std::string> failures(const amphi::Diagram& d) {
  using namespace amphi;
  std::vector<std::string> bad;
  const PlaneGraph g = graph_of(d, true);
  const PlaneGraph gd = dual(g);
  if (!iso(dual(gd), g, GraphIsoMode::Embedded)) bad.push_back("dual of dual");
  if (!iso(graph_of(mirror(d), true), gd, GraphIsoMode::EmbeddedWithReflection)) bad.push_back("G(mirror) ~ G*");
  if (g.edge_count() != d.crossing_count()) bad.push_back("|E| = crossings");
  if (g.vertex_count() + gd.vertex_count() != d.crossing_count() + 2) bad.push_back("|V| + |V*| = n + 2");
  const Diagram r = reduce(d);
  if (!is_reduced(r) || canonical_code(reduce(r), {}) != canonical_code(r, {}) ||
      r.crossing_count() != d.crossing_count() - static_cast<int>(nugatory_crossings(d).size()))
    bad.push_back("reduce idempotent");
  if (!sphere_iso(reconstruct(g), d, {})) bad.push_back("reconstruct round trip");
  return bad;
}

}  // namespace props
