#include "amphichiral/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "amphichiral/error.hpp"

namespace amphi {

Diagram::Diagram(std::vector<int> link, std::vector<std::uint8_t> over, int outer)
    : link_(std::move(link)), over_(std::move(over)), outer_(outer) {
  const int n = crossing_count();
  if (static_cast<int>(link_.size()) != 4 * n)
    throw Error(ErrorKind::InvalidArgument, "diagram needs exactly 4 darts per crossing");
  if (n == 0) {
    outer_ = -1;
    return;
  }
  for (int d = 0; d < 4 * n; ++d) {
    const int p = link_[d];
    if (p < 0 || p >= 4 * n || p == d || link_[p] != d)
      throw Error(ErrorKind::InvalidArgument,
                  "dart pairing is not a fixed-point-free involution at dart " +
                      std::to_string(d));
  }
  for (auto m : over_)
    if (m > 1) throw Error(ErrorKind::InvalidArgument, "over marker must be 0 or 1");
  if (outer_ < 0 || outer_ >= 4 * n)
    throw Error(ErrorKind::InvalidArgument, "outer corner out of range");
  if (!is_connected(rotation_map(*this)))
    throw Error(ErrorKind::InvalidArgument, "diagram is not connected");
  if (trace_faces(*this).face_count != n + 2)
    throw Error(ErrorKind::InvalidArgument, "diagram is not a sphere map");
}

FaceTrace trace_faces(const Diagram& d) {
  FaceTrace ft;
  const int n = d.dart_count();
  if (n == 0) {
    ft.face_count = 2;
    return ft;
  }
  ft.face_of_corner.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    // Orbit element q stands for the corner that ends at q.
    if (ft.face_of_corner[dart::ccw_prev(s)] >= 0) continue;
    int q = s;
    do {
      ft.face_of_corner[dart::ccw_prev(q)] = ft.face_count;
      q = dart::ccw_next(d.partner(q));
    } while (q != s);
    ++ft.face_count;
  }
  return ft;
}

std::vector<int> face_colors(const Diagram& d, const FaceTrace& faces) {
  if (d.is_unknot()) return {1, 0};  // face 0 is the disc, face 1 the outside
  // Corners k and k+1 of a crossing lie in faces of opposite colour.
  std::vector<std::vector<int>> adj(faces.face_count);
  for (int corner = 0; corner < d.dart_count(); ++corner) {
    const int f = faces.face_of_corner[corner];
    const int g = faces.face_of_corner[dart::ccw_next(corner)];
    adj[f].push_back(g);
  }
  std::vector<int> color(faces.face_count, -1);
  const int outer = faces.face_of_corner[d.outer_corner()];
  color[outer] = 0;
  std::vector<int> queue{outer};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int f = queue[h];
    for (int g : adj[f]) {
      if (color[g] < 0) {
        color[g] = color[f] ^ 1;
        queue.push_back(g);
      }
    }
  }
  return color;
}

std::vector<std::vector<int>> components(const Diagram& d) {
  std::vector<std::vector<int>> out;
  const int n = d.dart_count();
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Each strand segment is used once per direction; mark both ends.
  std::vector<char> used(n, 0);
  for (int s = 0; s < n; ++s) {
    if (used[s]) continue;
    std::vector<int> comp;
    int x = s;
    do {
      comp.push_back(x);
      used[x] = 1;
      const int y = d.partner(x);
      used[y] = 1;
      x = dart::opposite(y);
    } while (x != s);
    out.push_back(std::move(comp));
  }
  return out;
}

int component_count(const Diagram& d) { return static_cast<int>(components(d).size()); }

bool is_alternating(const Diagram& d) {
  for (int x = 0; x < d.dart_count(); ++x)
    if (d.is_over(x) == d.is_over(d.partner(x))) return false;
  return true;
}

std::vector<int> nugatory_crossings(const Diagram& d) {
  std::vector<int> out;
  if (d.is_unknot()) return out;
  const FaceTrace ft = trace_faces(d);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto f = [&](int s) { return ft.face_of_corner[dart::make(c, s)]; };
    if (f(0) == f(2) || f(1) == f(3)) out.push_back(c);
  }
  return out;
}

bool is_reduced(const Diagram& d) { return nugatory_crossings(d).empty(); }

bool is_prime(const Diagram& d) {
  if (d.crossing_count() <= 1) return true;
  const FaceTrace ft = trace_faces(d);
  // A 2-edge cut is a pair of distinct faces sharing two edges.
  std::vector<std::pair<int, int>> sides;
  for (int x = 0; x < d.dart_count(); ++x) {
    if (d.partner(x) < x) continue;
    int a = ft.face_of_corner[x];
    int b = ft.face_of_corner[dart::ccw_prev(x)];
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    sides.emplace_back(a, b);
  }
  std::sort(sides.begin(), sides.end());
  return std::adjacent_find(sides.begin(), sides.end()) == sides.end();
}

Diagram mirror(const Diagram& d) {
  if (d.is_unknot()) return d;
  std::vector<std::uint8_t> over = d.markers();
  for (auto& m : over) m ^= 1;
  return Diagram(d.links(), std::move(over), d.outer_corner() ^ 1);
}

namespace {

// Reverses the rotation at the crossings in `mask` by exchanging slots 1 and 3.
std::vector<int> reverse_rotation(const std::vector<int>& link, const std::vector<char>& mask) {
  auto perm = [&](int x) {
    if (!mask[dart::crossing(x)]) return x;
    const int s = dart::slot(x);
    return (s & 1) ? dart::make(dart::crossing(x), s ^ 2) : x;
  };
  std::vector<int> out(link.size());
  for (std::size_t x = 0; x < link.size(); ++x) out[perm(static_cast<int>(x))] = perm(link[x]);
  return out;
}

int reversed_corner(int corner) {
  // Corner k (between k and k+1) becomes the corner between the images of
  // k+1 and k, which starts at the reversed image of k+1.
  const int s = dart::slot(corner);
  const int image_next = ((s + 1) & 1) ? ((s + 1) & 3) ^ 2 : (s + 1) & 3;
  return dart::make(dart::crossing(corner), image_next);
}

}  // namespace

Diagram view_from_behind(const Diagram& d) {
  if (d.is_unknot()) return d;
  std::vector<char> all(d.crossing_count(), 1);
  std::vector<std::uint8_t> over = d.markers();
  for (auto& m : over) m ^= 1;
  return Diagram(reverse_rotation(d.links(), all), std::move(over),
                 reversed_corner(d.outer_corner()));
}

int first_b_corner(const Diagram& d) {
  if (d.is_unknot()) return -1;
  return dart::make(0, d.over_parity(0) + 1);
}

namespace {

// Removes crossing c whose corners k and k+2 share a face (k = 0 or 1).
Diagram remove_nugatory(const Diagram& d, int c, int k) {
  const int n = d.crossing_count();
  if (n == 1) return Diagram::unknot();
  std::vector<int> link = d.links();
  std::vector<std::uint8_t> over = d.markers();
  const int p0 = dart::make(c, k - 1);  // the two darts on one side
  const int p1 = dart::make(c, k);
  const int q0 = dart::make(c, k + 1);
  const int q1 = dart::make(c, k + 2);
  std::vector<char> flip(n, 0);
  if (link[p0] == p1 && link[q0] == q1) return Diagram::unknot();
  if (link[p0] == p1) {
    const int a = link[q0], b = link[q1];
    link[a] = b;
    link[b] = a;
  } else if (link[q0] == q1) {
    const int a = link[p0], b = link[p1];
    link[a] = b;
    link[b] = a;
  } else {
    // Turn the p-side over and join the strands straight through.
    std::vector<int> stack{dart::crossing(link[p0])};
    flip[stack[0]] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int s = 0; s < 4; ++s) {
        const int y = dart::crossing(link[dart::make(x, s)]);
        if (y != c && !flip[y]) {
          flip[y] = 1;
          stack.push_back(y);
        }
      }
    }
    const int a = link[p0], b = link[p1], e = link[q0], f = link[q1];
    link[a] = e;
    link[e] = a;
    link[b] = f;
    link[f] = b;
  }
  for (int x = 0; x < n; ++x)
    if (flip[x]) over[x] ^= 1;
  link = reverse_rotation(link, flip);
  // Drop crossing c and compact indices.
  std::vector<int> remap(n, -1);
  int next = 0;
  for (int x = 0; x < n; ++x)
    if (x != c) remap[x] = next++;
  std::vector<int> out_link(4 * (n - 1));
  std::vector<std::uint8_t> out_over(n - 1);
  for (int x = 0; x < n; ++x) {
    if (x == c) continue;
    out_over[remap[x]] = over[x];
    for (int s = 0; s < 4; ++s) {
      const int t = link[dart::make(x, s)];
      out_link[dart::make(remap[x], s)] = dart::make(remap[dart::crossing(t)], dart::slot(t));
    }
  }
  Diagram tmp(out_link, out_over, 0);
  const int outer = is_alternating(tmp) ? first_b_corner(tmp) : 0;
  return Diagram(std::move(out_link), std::move(out_over), outer);
}

}  // namespace

Diagram reduce(const Diagram& d) {
  Diagram cur = d;
  for (;;) {
    if (cur.is_unknot()) return cur;
    const FaceTrace ft = trace_faces(cur);
    int found = -1, k = 0;
    for (int c = 0; c < cur.crossing_count() && found < 0; ++c) {
      const auto f = [&](int s) { return ft.face_of_corner[dart::make(c, s)]; };
      if (f(1) == f(3)) {
        found = c;
        k = 1;
      } else if (f(0) == f(2)) {
        found = c;
        k = 0;
      }
    }
    if (found < 0) return cur;
    cur = remove_nugatory(cur, found, k);
  }
}

Diagram connected_sum(const Diagram& a, const Diagram& b) {
  if (a.is_unknot()) return b;
  if (b.is_unknot()) return a;
  const int na = a.crossing_count();
  std::vector<int> link(a.links());
  for (int x : b.links()) link.push_back(x + 4 * na);
  std::vector<std::uint8_t> over(a.markers());
  over.insert(over.end(), b.markers().begin(), b.markers().end());
  // Cut edge (0, a0) of a and (4na, b0) of b; reconnect crosswise.
  const int a0 = a.partner(0);
  const int bb = 4 * na;
  const int b0 = link[bb];
  link[0] = b0;
  link[b0] = 0;
  link[a0] = bb;
  link[bb] = a0;
  Diagram tmp(link, over, 0);
  const int outer = is_alternating(tmp) ? first_b_corner(tmp) : 0;
  return Diagram(std::move(link), std::move(over), outer);
}

Diagram relabel(const Diagram& d, const std::vector<int>& crossing_perm,
                const std::vector<int>& rotation) {
  if (d.is_unknot()) return d;
  const int n = d.crossing_count();
  auto image = [&](int x) {
    const int c = dart::crossing(x);
    return dart::make(crossing_perm[c], dart::slot(x) + rotation[c]);
  };
  std::vector<int> link(4 * n);
  std::vector<std::uint8_t> over(n);
  for (int x = 0; x < 4 * n; ++x) link[image(x)] = image(d.partner(x));
  for (int c = 0; c < n; ++c) over[crossing_perm[c]] = (d.over_parity(c) + rotation[c]) & 1;
  return Diagram(std::move(link), std::move(over), image(d.outer_corner()));
}

RotationMap rotation_map(const Diagram& d) {
  RotationMap m;
  const int n = d.dart_count();
  m.sigma.resize(n);
  m.alpha.resize(n);
  m.label.resize(n);
  for (int x = 0; x < n; ++x) {
    m.sigma[x] = dart::ccw_next(x);
    m.alpha[x] = d.partner(x);
    m.label[x] = d.is_over(x) ? 1 : 0;
  }
  return m;
}

DiagramCode canonical_code(const Diagram& d, ReflectionPolicy policy) {
  return DiagramCode{canonical_form(rotation_map(d), policy.allow_reflection).code};
}

DiagramCode projection_code(const Diagram& d) {
  RotationMap m = rotation_map(d);
  std::fill(m.label.begin(), m.label.end(), 0);
  return DiagramCode{canonical_form(m, true).code};
}

std::optional<DiagramIsomorphism> sphere_iso(const Diagram& a, const Diagram& b,
                                             ReflectionPolicy policy) {
  if (a.crossing_count() != b.crossing_count()) return std::nullopt;
  auto iso = map_isomorphism(rotation_map(a), rotation_map(b), policy.allow_reflection);
  if (!iso) return std::nullopt;
  return DiagramIsomorphism{std::move(iso->dart_map), iso->reflected};
}

}  // namespace amphi
