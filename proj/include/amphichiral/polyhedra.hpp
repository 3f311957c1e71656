#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace amphi {

// A basic polyhedron: a 4-valent plane map whose vertices receive tangles.
// Vertex i takes slot i; its four edge labels are listed counterclockwise
// starting at the position of the inserted tangle's NE end.
struct Polyhedron {
  std::string name;
  std::vector<std::array<int, 4>> vertices;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
};

// Looks up the built-in table (loaded from the bundled data file) plus any
// polyhedra registered at run time. Returns nullptr if unknown.
const Polyhedron* find_polyhedron(std::string_view name);

// Adds or replaces entries from a JSON document of the bundled format.
void register_polyhedra(std::string_view json_text);

std::vector<std::string> polyhedron_names();

}  // namespace amphi
