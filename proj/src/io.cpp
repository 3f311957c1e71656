#include "amphichiral/io.hpp"

#include <array>
#include <map>
#include <regex>

#include "amphichiral/error.hpp"
#include "json.hpp"

namespace amphi {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json ast_node(const TangleExpr& e) {
  ordered_json j;
  switch (e.kind) {
    case TangleExpr::Kind::Integer:
      j["type"] = "integer";
      j["value"] = e.value;
      break;
    case TangleExpr::Kind::Sum:
    case TangleExpr::Kind::Product:
      j["type"] = e.kind == TangleExpr::Kind::Sum ? "sum" : "product";
      j["left"] = ast_node(e.children[0]);
      j["right"] = ast_node(e.children[1]);
      break;
    case TangleExpr::Kind::Ramification:
      j["type"] = "ramification";
      j["parts"] = ordered_json::array();
      for (const auto& c : e.children) j["parts"].push_back(ast_node(c));
      break;
    case TangleExpr::Kind::Polyhedron:
      j["type"] = "polyhedron";
      j["name"] = e.polyhedron;
      j["slots"] = ordered_json::array();
      for (const auto& c : e.children) j["slots"].push_back(ast_node(c));
      break;
  }
  return j;
}

TangleExpr ast_from(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "integer") return TangleExpr::integer(j.at("value").get<long>());
  if (type == "sum") return TangleExpr::sum(ast_from(j.at("left")), ast_from(j.at("right")));
  if (type == "product") return TangleExpr::product(ast_from(j.at("left")), ast_from(j.at("right")));
  std::vector<TangleExpr> parts;
  if (type == "ramification") {
    for (const auto& p : j.at("parts")) parts.push_back(ast_from(p));
    return TangleExpr::ramification(std::move(parts));
  }
  if (type == "polyhedron") {
    for (const auto& p : j.at("slots")) parts.push_back(ast_from(p));
    return TangleExpr::poly(j.at("name").get<std::string>(), std::move(parts));
  }
  throw Error(ErrorKind::Parse, "unknown AST node type '" + type + "'");
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
}

// Edge labels from 1 along the components; outgoing[x] marks darts through
// which the traversal leaves a crossing.
std::vector<int> edge_labels(const Diagram& d, std::vector<char>* outgoing) {
  std::vector<int> label(d.dart_count(), 0);
  if (outgoing) outgoing->assign(d.dart_count(), 0);
  if (d.is_unknot()) return label;
  int next = 1;
  for (const auto& comp : components(d))
    for (int x : comp) {
      label[x] = label[d.partner(x)] = next++;
      if (outgoing) (*outgoing)[x] = 1;
    }
  return label;
}

struct PdCrossing {
  std::array<long, 4> labels;
  int over;
};

Diagram from_crossings(const std::vector<PdCrossing>& xs) {
  if (xs.empty()) return Diagram::unknot();
  const int n = static_cast<int>(xs.size());
  std::map<long, std::vector<int>> ends;
  std::vector<std::uint8_t> over(n);
  for (int c = 0; c < n; ++c) {
    if (xs[c].over != 0 && xs[c].over != 1) throw Error(ErrorKind::InvalidArgument, "over marker must be 0 or 1");
    over[c] = static_cast<std::uint8_t>(xs[c].over);
    for (int k = 0; k < 4; ++k) ends[xs[c].labels[k]].push_back(dart::make(c, k));
  }
  std::vector<int> link(4 * n, -1);
  for (const auto& [label, darts] : ends) {
    if (darts.size() != 2)
      throw Error(ErrorKind::InvalidArgument,
                  "edge label " + std::to_string(label) + " occurs " + std::to_string(darts.size()) + " times");
    link[darts[0]] = darts[1];
    link[darts[1]] = darts[0];
  }
  Diagram d(std::move(link), over, 0);
  return Diagram(d.links(), d.markers(), first_b_corner(d));
}

}  // namespace

std::string ast_to_json(const TangleExpr& expr) { return ast_node(expr).dump(); }

TangleExpr ast_from_json(std::string_view json_text) {
  try {
    return ast_from(parse_json(json_text));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed AST: ") + e.what());
  }
}

std::string pd_to_json(const Diagram& d) {
  const std::vector<int> label = edge_labels(d, nullptr);
  ordered_json j;
  j["crossings"] = d.crossing_count();
  j["components"] = component_count(d);
  j["pd"] = ordered_json::array();
  for (int c = 0; c < d.crossing_count(); ++c) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < 4; ++k) row.push_back(label[dart::make(c, k)]);
    row.push_back(d.over_parity(c));
    j["pd"].push_back(std::move(row));
  }
  return j.dump();
}

Diagram pd_from_json(std::string_view json_text) {
  const json doc = parse_json(json_text);
  std::vector<PdCrossing> xs;
  try {
    const bool bare = doc.is_array();
    const json& rows = bare ? doc : doc.at("pd");
    for (const auto& row : rows) {
      if (row.size() != (bare ? 4u : 5u))
        throw Error(ErrorKind::InvalidArgument, bare ? "standard PD crossings have 4 labels"
                                                     : "PD rows are [a,b,c,d,over]");
      PdCrossing x{};
      for (int k = 0; k < 4; ++k) x.labels[k] = row[k].get<long>();
      x.over = bare ? 1 : row[4].get<int>();
      xs.push_back(x);
    }
    Diagram d = from_crossings(xs);
    if (!bare) {
      if (doc.contains("crossings") && doc["crossings"].get<int>() != d.crossing_count())
        throw Error(ErrorKind::InvalidArgument, "crossing count does not match the PD rows");
      if (doc.contains("components") && doc["components"].get<int>() != component_count(d))
        throw Error(ErrorKind::InvalidArgument, "component count does not match the PD rows");
    }
    return d;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed PD document: ") + e.what());
  }
}

std::string pd_to_text(const Diagram& d) {
  std::vector<char> outgoing;
  const std::vector<int> label = edge_labels(d, &outgoing);
  std::string out = "PD[";
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int o = d.over_parity(c);
    const int in_under = outgoing[dart::make(c, o + 1)] ? o + 3 : o + 1;
    out += c ? ", X[" : "X[";
    for (int k = 0; k < 4; ++k) {
      if (k) out += ',';
      out += std::to_string(label[dart::make(c, in_under + k)]);
    }
    out += ']';
  }
  return out + "]";
}

Diagram pd_from_text(std::string_view text) {
  static const std::regex cross(R"(X\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\])");
  const std::string s(text);
  std::vector<PdCrossing> xs;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), cross); it != std::sregex_iterator(); ++it) {
    PdCrossing x{};
    for (int k = 0; k < 4; ++k) x.labels[k] = std::stol((*it)[k + 1].str());
    x.over = 1;
    xs.push_back(x);
  }
  if (xs.empty() && s.find("X") != std::string::npos) throw Error(ErrorKind::Parse, "unreadable PD text");
  return from_crossings(xs);
}

}  // namespace amphi
