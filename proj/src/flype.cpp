#include "amphichiral/flype.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace amphi {

namespace {

// Connected components of the crossings after deleting the edges whose
// dart ids are flagged in `cut`.
std::vector<int> crossing_components(const Diagram& d, const std::vector<char>& cut, int& count) {
  const int n = d.crossing_count();
  std::vector<int> comp(n, -1);
  count = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = count;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int c = stack.back();
      stack.pop_back();
      for (int k = 0; k < 4; ++k) {
        const int x = dart::make(c, k);
        if (cut[x]) continue;
        const int c2 = dart::crossing(d.partner(x));
        if (comp[c2] < 0) {
          comp[c2] = count;
          stack.push_back(c2);
        }
      }
    }
    ++count;
  }
  return comp;
}

bool connected_subset(const Diagram& d, const std::vector<char>& in, bool value) {
  const int n = d.crossing_count();
  int start = -1, size = 0;
  for (int c = 0; c < n; ++c)
    if (static_cast<bool>(in[c]) == value) {
      if (start < 0) start = c;
      ++size;
    }
  if (size == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int c = stack.back();
    stack.pop_back();
    for (int k = 0; k < 4; ++k) {
      const int c2 = dart::crossing(d.partner(dart::make(c, k)));
      if (!seen[c2] && static_cast<bool>(in[c2]) == value) {
        seen[c2] = 1;
        ++reached;
        stack.push_back(c2);
      }
    }
  }
  return reached == size;
}

}  // namespace

std::vector<std::vector<int>> four_edge_tangles(const Diagram& d) {
  const int n = d.crossing_count();
  if (n < 2) return {};
  const FaceTrace faces = trace_faces(d);
  // Face adjacency: the edge through dart x separates the corners on
  // either side of x. Edges are named by their smaller dart.
  struct Step {
    int face;
    int edge;
  };
  std::vector<std::vector<Step>> adj(faces.face_count);
  for (int x = 0; x < d.dart_count(); ++x) {
    if (d.partner(x) < x) continue;
    const int f = faces.face_of_corner[x];
    const int g = faces.face_of_corner[dart::ccw_prev(x)];
    adj[f].push_back({g, x});
    adj[g].push_back({f, x});
  }
  // Four-edge bonds are the simple 4-cycles of the face graph.
  std::set<std::array<int, 4>> cycles;
  for (int f0 = 0; f0 < faces.face_count; ++f0)
    for (const Step& a : adj[f0]) {
      const int f1 = a.face;
      if (f1 <= f0) continue;
      for (const Step& b : adj[f1]) {
        const int f2 = b.face;
        if (f2 <= f0 || f2 == f1) continue;
        for (const Step& c : adj[f2]) {
          const int f3 = c.face;
          if (f3 <= f0 || f3 == f1 || f3 == f2) continue;
          for (const Step& e : adj[f3]) {
            if (e.face != f0) continue;
            std::array<int, 4> edges{a.edge, b.edge, c.edge, e.edge};
            std::sort(edges.begin(), edges.end());
            cycles.insert(edges);
          }
        }
      }
    }
  std::set<std::vector<int>> out;
  for (const auto& edges : cycles) {
    std::vector<char> cut(d.dart_count(), 0);
    for (int x : edges) cut[x] = cut[d.partner(x)] = 1;
    int count = 0;
    const auto comp = crossing_components(d, cut, count);
    if (count != 2) continue;
    std::vector<int> side[2];
    for (int c = 0; c < n; ++c) side[comp[c]].push_back(c);
    out.insert(side[0]);
    out.insert(side[1]);
  }
  return {out.begin(), out.end()};
}

std::vector<std::vector<int>> four_edge_tangles_brute_force(const Diagram& d) {
  const int n = d.crossing_count();
  std::vector<std::vector<int>> out;
  if (n < 2 || n > 24) return out;
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<char> in(n);
    for (int c = 0; c < n; ++c) in[c] = (mask >> c) & 1;
    int boundary = 0;
    for (int x = 0; x < d.dart_count(); ++x)
      if (in[dart::crossing(x)] && !in[dart::crossing(d.partner(x))]) ++boundary;
    if (boundary != 4 || !connected_subset(d, in, true) || !connected_subset(d, in, false)) continue;
    std::vector<int> side;
    for (int c = 0; c < n; ++c)
      if (in[c]) side.push_back(c);
    out.push_back(side);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_flype_preconditions(const Diagram& d) {
  if (!is_alternating(d)) throw Error(ErrorKind::Precondition, "diagram is not alternating");
  if (!is_reduced(d)) throw Error(ErrorKind::Precondition, "diagram is not reduced");
  if (!is_prime(d)) throw Error(ErrorKind::Precondition, "diagram is not prime");
}

std::vector<FlypeSite> all_flype_sites(const Diagram& d) {
  std::vector<FlypeSite> sites;
  if (d.crossing_count() < 3) return sites;
  const FaceTrace faces = trace_faces(d);
  for (const auto& tangle : four_edge_tangles(d)) {
    std::vector<char> in(d.crossing_count(), 0);
    for (int c : tangle) in[c] = 1;
    std::vector<int> boundary;
    for (int c : tangle)
      for (int k = 0; k < 4; ++k) {
        const int x = dart::make(c, k);
        if (!in[dart::crossing(d.partner(x))]) boundary.push_back(x);
      }
    for (int c = 0; c < d.crossing_count(); ++c) {
      if (in[c]) continue;
      int mask = 0;
      for (int k = 0; k < 4; ++k)
        if (in[dart::crossing(d.partner(dart::make(c, k)))]) mask |= 1 << k;
      std::vector<int> pivots;  // candidate d0 slots
      if (mask == 15) {
        pivots = {0, 1, 2, 3};
      } else if (__builtin_popcount(mask) == 2) {
        for (int k = 0; k < 4; ++k)
          if ((mask >> k & 1) && (mask >> ((k + 3) & 3) & 1)) pivots.push_back(k);
      }
      for (int k : pivots) {
        FlypeSite s;
        s.crossing = c;
        s.tangle = tangle;
        s.d0 = dart::make(c, k);
        s.nw = d.partner(s.d0);
        s.sw = d.partner(dart::ccw_prev(s.d0));
        const int north = faces.face_of_corner[s.d0];
        for (int q : boundary) {
          if (q == s.nw || q == s.sw) continue;
          if (faces.face_of_corner[q] == north && s.ne < 0)
            s.ne = q;
          else
            s.se = q;
        }
        if (s.ne < 0 || s.se < 0) continue;
        sites.push_back(std::move(s));
      }
    }
  }
  return sites;
}

Diagram apply_flype(const Diagram& d, const FlypeSite& s) {
  const int d0 = s.d0;
  const int d1 = dart::ccw_next(d0), d2 = dart::ccw_next(d1), d3 = dart::ccw_next(d2);
  const int n = d.crossing_count();
  auto bad = [] { return Error(ErrorKind::InvalidArgument, "not a flype site of this diagram"); };
  if (s.crossing < 0 || s.crossing >= n || dart::crossing(d0) != s.crossing) throw bad();
  std::vector<char> in(n, 0);
  for (int c : s.tangle) {
    if (c < 0 || c >= n || c == s.crossing) throw bad();
    in[c] = 1;
  }
  for (int q : {s.nw, s.sw, s.ne, s.se})
    if (q < 0 || q >= d.dart_count() || !in[dart::crossing(q)] || in[dart::crossing(d.partner(q))])
      throw bad();
  if (d.partner(d0) != s.nw || d.partner(d3) != s.sw) throw bad();

  // Move the crossing to the far side of T: its west ends are taken over
  // by T's ends and its own darts take over T's east ends.
  const auto& old = d.links();
  std::vector<int> link = old;
  const std::array<int, 4> from{d1, d2, s.ne, s.se};
  const std::array<int, 4> to{s.sw, s.nw, d0, d3};
  auto moved = [&](int x) {
    for (int i = 0; i < 4; ++i)
      if (from[i] == x) return to[i];
    return x;
  };
  for (int u : from) {
    const int a = moved(u), b = moved(old[u]);
    link[a] = b;
    link[b] = a;
  }
  link[s.se] = d1;
  link[d1] = s.se;
  link[s.ne] = d2;
  link[d2] = s.ne;

  // Turn T over: reverse its rotation and switch its crossings.
  auto turn = [&](int x) { return in[dart::crossing(x)] && (x & 1) ? x ^ 2 : x; };
  std::vector<int> turned(link.size());
  for (int x = 0; x < static_cast<int>(link.size()); ++x) turned[turn(x)] = turn(link[x]);
  std::vector<std::uint8_t> over = d.markers();
  for (int c : s.tangle) over[c] ^= 1;
  const int outer = dart::make(0, over[0] + 1);
  try {
    return Diagram(std::move(turned), std::move(over), outer);
  } catch (const Error&) {
    throw bad();
  }
}

std::vector<FlypeSite> find_flypes(const Diagram& d) {
  require_flype_preconditions(d);
  const DiagramCode self = canonical_code(d, {});
  std::vector<FlypeSite> out;
  for (auto& s : all_flype_sites(d)) {
    try {
      if (canonical_code(apply_flype(d, s), {}) != self) out.push_back(std::move(s));
    } catch (const Error&) {
    }
  }
  return out;
}

int Orbit::find(const DiagramCode& code) const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].code == code) return static_cast<int>(i);
  return -1;
}

bool Orbit::contains(const Diagram& d) const { return find(canonical_code(d, {})) >= 0; }

int Orbit::shape_of(const Diagram& d) const {
  const DiagramCode code = projection_code(d);
  for (std::size_t i = 0; i < shapes.size(); ++i)
    if (shapes[i].code == code) return static_cast<int>(i);
  return -1;
}

namespace {

struct Candidate {
  FlypeSite site;
  Diagram diagram;
  DiagramCode code;
};

std::vector<Candidate> expand(const OrbitEntry& e) {
  std::vector<Candidate> out;
  for (auto& s : all_flype_sites(e.diagram)) {
    Diagram next;
    try {
      next = apply_flype(e.diagram, s);
    } catch (const Error&) {
      continue;
    }
    DiagramCode code = canonical_code(next, {});
    if (code == e.code) continue;
    out.push_back({std::move(s), std::move(next), std::move(code)});
  }
  return out;
}

void group_shapes(Orbit& orbit) {
  std::map<DiagramCode, int> index;
  for (std::size_t i = 0; i < orbit.entries.size(); ++i) {
    auto& e = orbit.entries[i];
    DiagramCode code = projection_code(e.diagram);
    auto [it, fresh] = index.emplace(code, static_cast<int>(orbit.shapes.size()));
    if (fresh) {
      OrbitShape s;
      s.code = std::move(code);
      s.representative = static_cast<int>(i);
      orbit.shapes.push_back(std::move(s));
    }
    e.shape = it->second;
    orbit.shapes[it->second].members.push_back(static_cast<int>(i));
  }
  for (auto& s : orbit.shapes)
    for (int id : orbit.entries[s.representative].path) {
      const int k = orbit.entries[id].shape;
      if (s.path.empty() || s.path.back() != k) s.path.push_back(k);
    }
}

}  // namespace

Orbit flype_orbit(const Diagram& d, const OrbitOptions& options) {
  require_flype_preconditions(d);
  if (options.max_size < 1) throw Error(ErrorKind::InvalidArgument, "max orbit size must be at least 1");
  Orbit orbit;
  std::map<DiagramCode, int> index;
  {
    OrbitEntry root;
    root.diagram = d;
    root.code = canonical_code(d, {});
    root.path = {0};
    index.emplace(root.code, 0);
    orbit.entries.push_back(std::move(root));
  }
  std::vector<int> frontier{0};
  const int threads = std::max(1, options.threads);
  while (!frontier.empty()) {
    std::vector<std::vector<Candidate>> found(frontier.size());
    if (threads == 1 || frontier.size() == 1) {
      for (std::size_t i = 0; i < frontier.size(); ++i) found[i] = expand(orbit.entries[frontier[i]]);
    } else {
      std::vector<std::thread> pool;
      const std::size_t workers = std::min<std::size_t>(threads, frontier.size());
      for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < frontier.size(); i += workers)
            found[i] = expand(orbit.entries[frontier[i]]);
        });
      for (auto& t : pool) t.join();
    }
    std::vector<int> next;
    for (std::size_t i = 0; i < frontier.size(); ++i)
      for (auto& cand : found[i]) {
        if (index.count(cand.code)) continue;
        const int id = static_cast<int>(orbit.entries.size());
        if (id >= options.max_size) {
          orbit.complete = false;
          group_shapes(orbit);
          throw OrbitOverflowError("flype orbit exceeds " + std::to_string(options.max_size) + " diagrams",
                                   std::move(orbit));
        }
        OrbitEntry e;
        e.diagram = std::move(cand.diagram);
        e.code = cand.code;
        e.parent = frontier[i];
        e.via = std::move(cand.site);
        e.path = orbit.entries[frontier[i]].path;
        e.path.push_back(id);
        index.emplace(std::move(cand.code), id);
        orbit.entries.push_back(std::move(e));
        next.push_back(id);
      }
    frontier = std::move(next);
  }
  group_shapes(orbit);
  return orbit;
}

}  // namespace amphi
