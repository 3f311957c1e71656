#include "amphichiral/checkerboard.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "amphichiral/error.hpp"
#include "amphichiral/map_code.hpp"
#include "json.hpp"

namespace amphi {

PlaneGraph::PlaneGraph(std::vector<int> sigma, std::vector<int> sign, int outer)
    : sigma_(std::move(sigma)), sign_(std::move(sign)), outer_(outer) {
  const int m = half_edge_count();
  if (m % 2) throw Error(ErrorKind::InvalidArgument, "odd number of half-edges");
  if (!sign_.empty() && static_cast<int>(sign_.size()) != m / 2)
    throw Error(ErrorKind::InvalidArgument, "one sign per edge expected");
  for (int s : sign_)
    if (s != 1 && s != -1) throw Error(ErrorKind::InvalidArgument, "edge signs must be +1 or -1");
  std::vector<char> hit(m, 0);
  for (int h : sigma_) {
    if (h < 0 || h >= m || hit[h]) throw Error(ErrorKind::InvalidArgument, "rotation is not a permutation");
    hit[h] = 1;
  }
  if (outer_ < -1 || outer_ >= m) throw Error(ErrorKind::InvalidArgument, "outer half-edge out of range");
  vertex_of_.assign(m, -1);
  vertex_count_ = m == 0 ? 1 : 0;
  for (int h = 0; h < m; ++h) {
    if (vertex_of_[h] >= 0) continue;
    int x = h;
    do {
      vertex_of_[x] = vertex_count_;
      x = sigma_[x];
    } while (x != h);
    ++vertex_count_;
  }
}

std::vector<int> PlaneGraph::around(int v) const {
  std::vector<int> out;
  for (int h = 0; h < half_edge_count(); ++h) {
    if (vertex_of_[h] != v) continue;
    int x = h;
    do {
      out.push_back(x);
      x = sigma_[x];
    } while (x != h);
    break;
  }
  return out;
}

std::vector<int> PlaneGraph::face_of_corner() const {
  const int m = half_edge_count();
  std::vector<int> face(m, -1);
  int count = 0;
  for (int h = 0; h < m; ++h) {
    if (face[h] >= 0) continue;
    int x = h;
    do {
      face[x] = count;
      x = sigma_[x] ^ 1;
    } while (x != h);
    ++count;
  }
  return face;
}

int PlaneGraph::face_count() const {
  if (half_edge_count() == 0) return 1;
  const auto f = face_of_corner();
  return *std::max_element(f.begin(), f.end()) + 1;
}

Shading shade(const Diagram& d) {
  Shading s;
  s.faces = trace_faces(d);
  s.color = face_colors(d, s.faces);
  return s;
}

namespace {

// Medial coordinates of a crossing sitting on edge e = (u, v): slot 0 points
// NE, 1 NW, 2 SW, 3 SE, with u to the west and v to the east. Half-edge 2e
// leaves u, 2e+1 leaves v.
int next_slot(int h) { return h & 1 ? 3 : 1; }  // corner (h, sigma h)
int prev_slot(int h) { return h & 1 ? 0 : 2; }  // corner (sigma^-1 h, h)

PlaneGraph region_graph(const Diagram& d, int region_color, bool with_signs) {
  if (d.is_unknot()) return PlaneGraph();
  const Shading sh = shade(d);
  const int n = d.crossing_count();
  // base[c]: slot of c playing medial slot 0, chosen so that the corners
  // of the selected colour land on medial corners 1 and 3.
  std::vector<int> base(n);
  for (int c = 0; c < n; ++c) {
    const int k = sh.color[sh.faces.face_of_corner[dart::make(c, 1)]] == region_color ? 1 : 0;
    base[c] = k == 1 ? 0 : 3;
  }
  auto medial = [&](int x) { return (dart::slot(x) - base[dart::crossing(x)] + 4) & 3; };
  std::vector<int> sigma(2 * n), sign;
  for (int c = 0; c < n; ++c)
    for (int end = 0; end < 2; ++end) {
      const int h = 2 * c + end;
      const int x = dart::make(c, base[c] + next_slot(h));
      const int y = d.partner(x);
      const int m = medial(y);
      if (m != 0 && m != 2) throw Error(ErrorKind::InvalidArgument, "inconsistent region colouring");
      sigma[h] = 2 * dart::crossing(y) + (m == 2 ? 0 : 1);
    }
  if (with_signs) {
    sign.resize(n);
    for (int c = 0; c < n; ++c)
      sign[c] = d.is_a_corner(dart::make(c, base[c] + 1)) ? 1 : -1;
  }
  int outer = -1;
  const int oc = d.outer_corner();
  if (sh.color[sh.faces.face_of_corner[oc]] != region_color) {
    const int m = medial(oc);
    outer = 2 * dart::crossing(oc) + (m == 0 ? 0 : 1);
  }
  return PlaneGraph(std::move(sigma), std::move(sign), outer);
}

}  // namespace

PlaneGraph graph_of(const Diagram& d, bool with_signs) { return region_graph(d, 1, with_signs); }

PlaneGraph graph_of_unshaded(const Diagram& d, bool with_signs) {
  return region_graph(d, 0, with_signs);
}

PlaneGraph dual(const PlaneGraph& g) {
  const int m = g.half_edge_count();
  // Around a face the corners follow h -> sigma(h)^1 clockwise; the dual
  // rotation is its inverse.
  std::vector<int> sigma(m);
  for (int h = 0; h < m; ++h) sigma[g.next(h) ^ 1] = h;
  std::vector<int> sign = g.signs();
  for (int& s : sign) s = -s;
  return PlaneGraph(std::move(sigma), std::move(sign), -1);
}

Diagram reconstruct(const PlaneGraph& g) {
  const int n = g.edge_count();
  if (n == 0) return Diagram::unknot();
  if (!g.is_signed()) throw Error(ErrorKind::InvalidArgument, "reconstruction needs edge signs");
  std::vector<int> link(4 * n);
  for (int h = 0; h < 2 * n; ++h) {
    const int s = g.next(h);
    const int x = dart::make(h / 2, next_slot(h));
    const int y = dart::make(s / 2, prev_slot(s));
    link[x] = y;
    link[y] = x;
  }
  std::vector<std::uint8_t> over(n);
  for (int e = 0; e < n; ++e) over[e] = g.sign(e) > 0 ? 1 : 0;
  int outer = dart::make(0, 0);
  if (g.outer() >= 0) outer = dart::make(g.outer() / 2, g.outer() & 1 ? 2 : 0);
  return Diagram(std::move(link), std::move(over), outer);
}

const char* to_string(GraphIsoMode mode) {
  switch (mode) {
    case GraphIsoMode::Abstract:
      return "abstract";
    case GraphIsoMode::Embedded:
      return "embedded";
    case GraphIsoMode::EmbeddedWithReflection:
      return "embedded-reflection";
  }
  return "?";
}

std::optional<GraphIsoMode> parse_iso_mode(const std::string& text) {
  if (text == "abstract") return GraphIsoMode::Abstract;
  if (text == "embedded") return GraphIsoMode::Embedded;
  if (text == "embedded-reflection") return GraphIsoMode::EmbeddedWithReflection;
  return std::nullopt;
}

namespace {

using Matrix = std::vector<std::vector<int>>;

// mult[u][v] counts edges between u and v; loops are counted once on the
// diagonal.
Matrix multiplicities(const PlaneGraph& g) {
  Matrix mult(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
  for (int e = 0; e < g.edge_count(); ++e) {
    const int u = g.source(e), v = g.target(e);
    ++mult[u][v];
    if (u != v) ++mult[v][u];
  }
  return mult;
}

// Colour refinement on the multiplicity matrix, run jointly on both graphs
// so that colour ids are comparable.
std::pair<std::vector<int>, std::vector<int>> refine(const Matrix& a, const Matrix& b) {
  const int n = static_cast<int>(a.size());
  std::vector<int> ca(n, 0), cb(n, 0);
  for (int round = 0; round <= n; ++round) {
    std::map<std::vector<int>, int> ids;
    auto signature = [&](const Matrix& m, const std::vector<int>& col, int v) {
      std::vector<int> sig{col[v], m[v][v]};
      std::vector<std::pair<int, int>> nb;
      for (int u = 0; u < n; ++u)
        if (u != v && m[v][u]) nb.emplace_back(col[u], m[v][u]);
      std::sort(nb.begin(), nb.end());
      for (auto [c, k] : nb) {
        sig.push_back(c);
        sig.push_back(k);
      }
      return sig;
    };
    std::vector<std::vector<int>> sa(n), sb(n);
    for (int v = 0; v < n; ++v) {
      sa[v] = signature(a, ca, v);
      sb[v] = signature(b, cb, v);
      ids.emplace(sa[v], 0);
      ids.emplace(sb[v], 0);
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    std::vector<int> na(n), nb(n);
    for (int v = 0; v < n; ++v) {
      na[v] = ids[sa[v]];
      nb[v] = ids[sb[v]];
    }
    const bool stable = std::set<int>(na.begin(), na.end()).size() ==
                        std::set<int>(ca.begin(), ca.end()).size();
    ca = std::move(na);
    cb = std::move(nb);
    if (stable && round > 0) break;
  }
  return {ca, cb};
}

bool extend(const Matrix& a, const Matrix& b, const std::vector<int>& ca,
            const std::vector<int>& cb, const std::vector<int>& order, std::size_t depth,
            std::vector<int>& map, std::vector<char>& used) {
  if (depth == order.size()) return true;
  const int v = order[depth];
  const int n = static_cast<int>(a.size());
  for (int w = 0; w < n; ++w) {
    if (used[w] || ca[v] != cb[w] || a[v][v] != b[w][w]) continue;
    bool ok = true;
    for (std::size_t i = 0; i < depth && ok; ++i) {
      const int u = order[i];
      ok = a[v][u] == b[w][map[u]];
    }
    if (!ok) continue;
    map[v] = w;
    used[w] = 1;
    if (extend(a, b, ca, cb, order, depth + 1, map, used)) return true;
    used[w] = 0;
  }
  map[v] = -1;
  return false;
}

std::optional<GraphIsomorphism> abstract_iso(const PlaneGraph& g, const PlaneGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  const Matrix a = multiplicities(g), b = multiplicities(h);
  auto [ca, cb] = refine(a, b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  // Visit vertices breadth-first so every new vertex is constrained by an
  // already mapped neighbour.
  const int n = g.vertex_count();
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    order.push_back(s);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i)
      for (int u = 0; u < n; ++u)
        if (!seen[u] && a[order[i]][u]) {
          seen[u] = 1;
          order.push_back(u);
        }
  }
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  if (!extend(a, b, ca, cb, order, 0, map, used)) return std::nullopt;
  return GraphIsomorphism{std::move(map), {}, false};
}

RotationMap plain_map(const PlaneGraph& g) {
  RotationMap m;
  const int k = g.half_edge_count();
  m.sigma = g.rotation();
  m.alpha.resize(k);
  m.label.assign(k, 0);
  for (int x = 0; x < k; ++x) m.alpha[x] = x ^ 1;
  return m;
}

}  // namespace

std::optional<GraphIsomorphism> iso(const PlaneGraph& g, const PlaneGraph& h, GraphIsoMode mode) {
  if (mode == GraphIsoMode::Abstract) return abstract_iso(g, h);
  if (g.edge_count() != h.edge_count() || g.vertex_count() != h.vertex_count()) return std::nullopt;
  if (g.edge_count() == 0) return GraphIsomorphism{{0}, {}, false};
  auto m = map_isomorphism(plain_map(g), plain_map(h), mode == GraphIsoMode::EmbeddedWithReflection);
  if (!m) return std::nullopt;
  GraphIsomorphism out;
  out.vertex_map.assign(g.vertex_count(), -1);
  for (int x = 0; x < g.half_edge_count(); ++x) out.vertex_map[g.vertex_of(x)] = h.vertex_of(m->dart_map[x]);
  out.half_edge_map = std::move(m->dart_map);
  out.reflected = m->reflected;
  return out;
}

bool abstract_iso_brute_force(const PlaneGraph& g, const PlaneGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  const Matrix a = multiplicities(g), b = multiplicities(h);
  std::vector<int> p(g.vertex_count());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t u = 0; u < p.size() && ok; ++u)
      for (std::size_t v = 0; v < p.size() && ok; ++v) ok = a[u][v] == b[p[u]][p[v]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::string to_dot(const PlaneGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  v" << v << ";\n";
  for (int e = 0; e < g.edge_count(); ++e) {
    out << "  v" << g.source(e) << " -- v" << g.target(e) << " [id=\"e" << e << "\"";
    if (g.is_signed()) out << ", label=\"" << (g.sign(e) > 0 ? '+' : '-') << "\"";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const PlaneGraph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.vertex_count();
  auto edges = nlohmann::ordered_json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    nlohmann::ordered_json edge = {{"id", e}, {"ends", {g.source(e), g.target(e)}}};
    if (g.is_signed()) edge["sign"] = g.sign(e);
    edges.push_back(edge);
  }
  j["edges"] = edges;
  // Rotation: per vertex, counterclockwise list of half-edges 2e (edge e
  // leaving its first end) and 2e+1 (leaving its second end).
  auto rot = nlohmann::ordered_json::array();
  for (int v = 0; v < g.vertex_count(); ++v) rot.push_back(g.around(v));
  j["rotation"] = rot;
  j["faces"] = g.face_count();
  if (g.outer() >= 0) j["outer_half_edge"] = g.outer();
  return j.dump();
}

}  // namespace amphi
