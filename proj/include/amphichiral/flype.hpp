#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "amphichiral/diagram.hpp"
#include "amphichiral/error.hpp"

namespace amphi {

// Crossing `crossing` sits next to the tangle T (a set of crossings cut off
// by four edges). Its darts d0 and d3 = ccw_prev(d0) run into T at T's ends
// `nw` and `sw`; `ne` and `se` are T's remaining ends, `ne` lying on the
// same face as the corner d0.
struct FlypeSite {
  int crossing = -1;
  std::vector<int> tangle;  // sorted crossing ids
  int d0 = -1;
  int nw = -1, sw = -1, ne = -1, se = -1;

  bool operator==(const FlypeSite&) const = default;
};

// Every crossing set cut off from the rest by exactly four edges, with
// both sides connected and nonempty. Sorted, both sides listed.
std::vector<std::vector<int>> four_edge_tangles(const Diagram& d);

// Same set found by trying every crossing subset; for tests.
std::vector<std::vector<int>> four_edge_tangles_brute_force(const Diagram& d);

// Sites whose flype changes the diagram (trivial flypes, whose result is
// isomorphic on the sphere to `d` without reflection, are dropped).
// Requires a reduced alternating prime diagram.
std::vector<FlypeSite> find_flypes(const Diagram& d);

// All geometric sites, trivial ones included.
std::vector<FlypeSite> all_flype_sites(const Diagram& d);

Diagram apply_flype(const Diagram& d, const FlypeSite& site);

struct OrbitEntry {
  Diagram diagram;
  DiagramCode code;
  int parent = -1;         // index into the orbit, -1 for the root
  FlypeSite via;           // site applied to the parent
  std::vector<int> path;   // entry indices from the root to this entry
  int shape = -1;          // index into Orbit::shapes
};

// Orbit members with the same projection (see projection_code). These are
// the distinct minimal diagrams as drawings; a shape may carry several
// labelled diagrams that differ by where the flype left the crossings.
struct OrbitShape {
  DiagramCode code;
  int representative = -1;  // first entry found with this shape
  std::vector<int> members; // entry indices, ascending
  std::vector<int> path;    // shape indices from the root shape
};

struct Orbit {
  std::vector<OrbitEntry> entries;  // entries[0] is the starting diagram
  std::vector<OrbitShape> shapes;   // shapes[0] holds the starting diagram
  bool complete = true;

  int find(const DiagramCode& code) const;  // entry index or -1
  bool contains(const Diagram& d) const;     // orientation-preserving match
  int shape_of(const Diagram& d) const;      // shape index or -1
};

class OrbitOverflowError : public Error {
 public:
  OrbitOverflowError(const std::string& what, Orbit partial)
      : Error(ErrorKind::OrbitOverflow, what), partial_(std::move(partial)) {}

  const Orbit& partial() const noexcept { return partial_; }

 private:
  Orbit partial_;
};

struct OrbitOptions {
  int max_size = 4096;
  int threads = 1;
};

// Breadth-first closure under flypes, deduplicated by orientation-preserving
// canonical code, then grouped into shapes. Throws OrbitOverflowError (carrying the partial orbit)
// when more than max_size diagrams are found.
Orbit flype_orbit(const Diagram& d, const OrbitOptions& options = {});

// Throws unless `d` is reduced, alternating and prime, naming the failed check.
void require_flype_preconditions(const Diagram& d);

}  // namespace amphi
