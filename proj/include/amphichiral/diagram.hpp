#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "amphichiral/map_code.hpp"

namespace amphi {

// Dart arithmetic. Crossing c owns darts 4c..4c+3 in counterclockwise
// order; darts k and k+2 lie on the same strand. Corner k of a crossing is
// the sector between dart k and its counterclockwise successor, so corners
// share ids with darts.
namespace dart {
constexpr int crossing(int d) { return d >> 2; }
constexpr int slot(int d) { return d & 3; }
constexpr int make(int c, int s) { return 4 * c + (s & 3); }
constexpr int ccw_next(int d) { return (d & ~3) | ((d + 1) & 3); }
constexpr int ccw_prev(int d) { return (d & ~3) | ((d + 3) & 3); }
constexpr int opposite(int d) { return d ^ 2; }
}  // namespace dart

struct ReflectionPolicy {
  bool allow_reflection = false;
};

// A link diagram as a connected 4-valent combinatorial map on the sphere.
// The 0-crossing diagram is the unknot (one circle, two faces).
//
// `over[c]` is 0 when darts {0,2} of c carry the over strand, 1 when {1,3}
// do. The A-corners of a crossing are then corners over[c] and over[c]+2.
// `outer` names a corner lying in the face treated as unbounded when the
// diagram is drawn in the plane.
class Diagram {
 public:
  Diagram() = default;
  Diagram(std::vector<int> link, std::vector<std::uint8_t> over, int outer = 0);

  static Diagram unknot() { return Diagram(); }

  int crossing_count() const { return static_cast<int>(over_.size()); }
  int dart_count() const { return static_cast<int>(link_.size()); }
  bool is_unknot() const { return over_.empty(); }

  int partner(int d) const { return link_[d]; }
  int over_parity(int c) const { return over_[c]; }
  bool is_over(int d) const { return (dart::slot(d) & 1) == over_[dart::crossing(d)]; }
  bool is_a_corner(int corner) const { return is_over(corner); }
  int outer_corner() const { return outer_; }

  const std::vector<int>& links() const { return link_; }
  const std::vector<std::uint8_t>& markers() const { return over_; }

  bool operator==(const Diagram&) const = default;

 private:
  std::vector<int> link_;
  std::vector<std::uint8_t> over_;
  int outer_ = -1;
};

struct FaceTrace {
  std::vector<int> face_of_corner;  // indexed by corner id
  int face_count = 0;
};

// Faces are the orbits of d -> ccw_next(partner(d)).
FaceTrace trace_faces(const Diagram& d);

// Proper two-colouring of faces with the outer face coloured 0 (unshaded).
std::vector<int> face_colors(const Diagram& d, const FaceTrace& faces);

// Each component as the ordered list of darts through which it leaves
// crossings; components are discovered from the lowest unused dart.
std::vector<std::vector<int>> components(const Diagram& d);
int component_count(const Diagram& d);

bool is_alternating(const Diagram& d);
std::vector<int> nugatory_crossings(const Diagram& d);
bool is_reduced(const Diagram& d);
bool is_prime(const Diagram& d);

// Switches every crossing. The outer corner moves to the adjacent corner so
// that an alternating diagram keeps its outer face outside the A-regions.
Diagram mirror(const Diagram& d);

// The same link seen from the other side of the projection plane: rotation
// reversed and every crossing switched.
Diagram view_from_behind(const Diagram& d);

// Removes nugatory crossings until none remain.
Diagram reduce(const Diagram& d);

// Connected sum along the edges leaving dart 0 of each summand.
Diagram connected_sum(const Diagram& a, const Diagram& b);

// Renames crossings by `crossing_perm` and rotates each crossing's dart
// labels by `rotation[c]` steps. The result is the same labelled map.
Diagram relabel(const Diagram& d, const std::vector<int>& crossing_perm,
                const std::vector<int>& rotation);

// First corner lying outside every A-region; valid outer choice for an
// alternating diagram.
int first_b_corner(const Diagram& d);

RotationMap rotation_map(const Diagram& d);

struct DiagramCode {
  std::vector<int> code;
  auto operator<=>(const DiagramCode&) const = default;
};

DiagramCode canonical_code(const Diagram& d, ReflectionPolicy policy);

// Code of the underlying projection: markers ignored, reflection allowed.
// Two diagrams share it iff they are the same curve on the unoriented
// sphere, possibly with different crossing data.
DiagramCode projection_code(const Diagram& d);

struct DiagramIsomorphism {
  std::vector<int> dart_map;  // darts of the first diagram -> second
  bool reflected = false;
};

std::optional<DiagramIsomorphism> sphere_iso(const Diagram& a, const Diagram& b,
                                             ReflectionPolicy policy);

}  // namespace amphi
