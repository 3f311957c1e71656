#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amphichiral/diagram.hpp"

namespace amphi {

// Embedded multigraph as a rotation system on half-edges. Edge e owns
// half-edges 2e and 2e+1; `sigma` sends a half-edge to the next one
// counterclockwise around its vertex. A graph with no edges has a single
// isolated vertex.
class PlaneGraph {
 public:
  PlaneGraph() = default;
  // `sign` is empty (unsigned) or holds +1/-1 per edge. `outer` is a
  // half-edge h such that the corner between h and sigma(h) lies in the
  // outer face, or -1.
  PlaneGraph(std::vector<int> sigma, std::vector<int> sign = {}, int outer = -1);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(sigma_.size()) / 2; }
  int half_edge_count() const { return static_cast<int>(sigma_.size()); }
  int face_count() const;

  int next(int h) const { return sigma_[h]; }
  int vertex_of(int h) const { return vertex_of_[h]; }
  int source(int e) const { return vertex_of_[2 * e]; }
  int target(int e) const { return vertex_of_[2 * e + 1]; }
  bool is_loop(int e) const { return source(e) == target(e); }
  bool is_signed() const { return !sign_.empty(); }
  int sign(int e) const { return sign_.empty() ? 0 : sign_[e]; }
  int outer() const { return outer_; }

  const std::vector<int>& rotation() const { return sigma_; }
  const std::vector<int>& signs() const { return sign_; }

  // Half-edges around vertex v in counterclockwise order.
  std::vector<int> around(int v) const;
  // Face of each corner (h, sigma h), indexed by h.
  std::vector<int> face_of_corner() const;

  bool operator==(const PlaneGraph&) const = default;

 private:
  std::vector<int> sigma_;
  std::vector<int> sign_;
  std::vector<int> vertex_of_;
  int vertex_count_ = 1;
  int outer_ = -1;
};

struct Shading {
  FaceTrace faces;
  std::vector<int> color;  // per face; 1 = shaded, the outer face is 0
};

Shading shade(const Diagram& d);

// Checkerboard graph on the shaded regions. A crossing whose A-corners are
// shaded gets sign +1.
PlaneGraph graph_of(const Diagram& d, bool with_signs = false);
// The same construction on the unshaded regions.
PlaneGraph graph_of_unshaded(const Diagram& d, bool with_signs = false);

// Planar dual on the same half-edge labels; signs are negated so that the
// dual reconstructs the same diagram with the opposite shading.
PlaneGraph dual(const PlaneGraph& g);

// Medial construction: crossing e sits on edge e, and a positive edge puts
// the A-corners on the vertex side.
Diagram reconstruct(const PlaneGraph& g);

enum class GraphIsoMode { Abstract, Embedded, EmbeddedWithReflection };

const char* to_string(GraphIsoMode mode);
std::optional<GraphIsoMode> parse_iso_mode(const std::string& text);

struct GraphIsomorphism {
  std::vector<int> vertex_map;
  std::vector<int> half_edge_map;  // empty in abstract mode
  bool reflected = false;
};

// Edge signs are ignored in every mode.
std::optional<GraphIsomorphism> iso(const PlaneGraph& g, const PlaneGraph& h, GraphIsoMode mode);

// Multigraph isomorphism by exhaustive search over vertex permutations;
// meant for small graphs in tests.
bool abstract_iso_brute_force(const PlaneGraph& g, const PlaneGraph& h);

std::string to_dot(const PlaneGraph& g, const std::string& name);
std::string to_json(const PlaneGraph& g);

}  // namespace amphi
