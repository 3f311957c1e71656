#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace amphi {

// A connected combinatorial map given by two permutations on darts:
// `sigma` is the counterclockwise rotation around a vertex and `alpha` is the
// fixed-point-free edge involution. `label` carries per-dart decorations
// (over/under markers, edge signs) that an isomorphism must preserve.
struct RotationMap {
  std::vector<int> sigma;
  std::vector<int> alpha;
  std::vector<int> label;

  int dart_count() const { return static_cast<int>(sigma.size()); }
};

using MapCode = std::vector<int>;

// Breadth-first encoding of the map rooted at `start`. With `reflected` the
// rotation is read clockwise, which encodes the mirror-image embedding.
// If `order` is given it receives the darts in discovery order.
MapCode encode_map(const RotationMap& map, int start, bool reflected,
                   std::vector<int>* order = nullptr);

struct CanonicalForm {
  MapCode code;
  int start = -1;
  bool reflected = false;
};

// Lexicographically least encoding over all roots (and both orientations
// when `allow_reflection` is set). Equal codes iff isomorphic maps.
CanonicalForm canonical_form(const RotationMap& map, bool allow_reflection);

// Dart bijection a -> b preserving rotation (reversed globally when the
// returned flag says so), involution and labels.
struct MapIsomorphism {
  std::vector<int> dart_map;
  bool reflected = false;
};

std::optional<MapIsomorphism> map_isomorphism(const RotationMap& a,
                                              const RotationMap& b,
                                              bool allow_reflection);

bool is_connected(const RotationMap& map);

}  // namespace amphi
