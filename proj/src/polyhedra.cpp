#include "amphichiral/polyhedra.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "amphichiral/error.hpp"
#include "embedded_data.hpp"
#include "json.hpp"

namespace amphi {

namespace {

struct Table {
  std::mutex mutex;
  // Entries are never erased, so handed-out pointers stay valid.
  std::map<std::string, std::unique_ptr<Polyhedron>, std::less<>> entries;
};

void load_into(Table& table, std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("polyhedron table: ") + e.what());
  }
  if (!doc.contains("polyhedra") || !doc["polyhedra"].is_array())
    throw Error(ErrorKind::InvalidArgument, "polyhedron table: missing 'polyhedra' array");
  for (const auto& entry : doc["polyhedra"]) {
    auto poly = std::make_unique<Polyhedron>();
    poly->name = entry.at("name").get<std::string>();
    std::map<int, int> uses;
    for (const auto& v : entry.at("vertices")) {
      std::array<int, 4> labels{};
      if (v.size() != 4) throw Error(ErrorKind::InvalidArgument, "polyhedron vertex needs 4 edge labels");
      for (int i = 0; i < 4; ++i) {
        labels[i] = v[i].get<int>();
        ++uses[labels[i]];
      }
      poly->vertices.push_back(labels);
    }
    for (const auto& [label, count] : uses)
      if (count != 2)
        throw Error(ErrorKind::InvalidArgument,
                    "polyhedron " + poly->name + ": edge label " + std::to_string(label) +
                        " must occur exactly twice");
    std::lock_guard lock(table.mutex);
    auto it = table.entries.find(poly->name);
    if (it == table.entries.end())
      table.entries.emplace(poly->name, std::move(poly));
    else
      *it->second = std::move(*poly);
  }
}

Table& table() {
  static Table* t = [] {
    auto* fresh = new Table;
    load_into(*fresh, embedded::polyhedra_json());
    return fresh;
  }();
  return *t;
}

}  // namespace

const Polyhedron* find_polyhedron(std::string_view name) {
  Table& t = table();
  std::lock_guard lock(t.mutex);
  auto it = t.entries.find(name);
  return it == t.entries.end() ? nullptr : it->second.get();
}

void register_polyhedra(std::string_view json_text) { load_into(table(), json_text); }

std::vector<std::string> polyhedron_names() {
  Table& t = table();
  std::lock_guard lock(t.mutex);
  std::vector<std::string> out;
  for (const auto& [name, _] : t.entries) out.push_back(name);
  return out;
}

}  // namespace amphi
