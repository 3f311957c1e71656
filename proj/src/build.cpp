#include "amphichiral/build.hpp"

#include <array>
#include <cstdlib>
#include <map>
#include <string>

#include "amphichiral/error.hpp"
#include "amphichiral/polyhedra.hpp"

namespace amphi {

namespace {

// Tangle ends, counterclockwise.
enum Port { NE = 0, NW = 1, SW = 2, SE = 3 };

constexpr int port_code(int p) { return -1 - p; }
constexpr bool is_port(int end) { return end < 0; }
constexpr int port_of(int end) { return -1 - end; }

// A 2-tangle under construction. Each dart is paired with another dart or
// with one of the four ends; `port[p]` is what end p is attached to.
// Over/under information is ignored until the closure is shaded.
struct Fragment {
  int crossings = 0;
  std::vector<int> link;
  std::array<int, 4> port{};
  int free_loops = 0;
};

// Wiring of several fragments into a new one. Nodes are the darts of all
// parts, then four new ends, then one relay node per end of every part.
class Wiring {
 public:
  explicit Wiring(const std::vector<const Fragment*>& parts) {
    for (const Fragment* f : parts) {
      offset_.push_back(darts_);
      darts_ += 4 * f->crossings;
      loops_ += f->free_loops;
    }
    adj_.resize(darts_ + 4 + 4 * parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const Fragment& f = *parts[i];
      const int off = offset_[i];
      for (int d = 0; d < 4 * f.crossings; ++d) {
        const int e = f.link[d];
        if (is_port(e))
          connect(off + d, relay(i, port_of(e)));
        else if (d < e)
          connect(off + d, off + e);
      }
      for (int p = 0; p < 4; ++p) {
        const int e = f.port[p];
        if (is_port(e) && p < port_of(e)) connect(relay(i, p), relay(i, port_of(e)));
      }
    }
  }

  int relay(std::size_t part, int p) const {
    return darts_ + 4 + static_cast<int>(part) * 4 + p;
  }
  int new_end(int p) const { return darts_ + p; }

  void connect(int a, int b) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }

  // Resolves relay chains. `with_ends` is false for a closure, in which
  // case the result has no meaningful ports.
  Fragment resolve(bool with_ends) {
    Fragment out;
    out.crossings = darts_ / 4;
    out.link.assign(darts_, 0);
    std::vector<char> seen(adj_.size(), 0);
    auto walk = [&](int start) {
      int prev = start;
      int cur = adj_[start].at(0);
      while (cur >= darts_ + 4) {
        seen[cur] = 1;
        if (adj_[cur].size() != 2) throw Error(ErrorKind::Build, "malformed tangle wiring");
        const int next = adj_[cur][0] == prev ? adj_[cur][1] : adj_[cur][0];
        prev = cur;
        cur = next;
      }
      return cur < darts_ ? cur : port_code(cur - darts_);
    };
    for (int d = 0; d < darts_; ++d) {
      if (adj_[d].size() != 1) throw Error(ErrorKind::Build, "malformed tangle wiring");
      out.link[d] = walk(d);
    }
    if (with_ends)
      for (int p = 0; p < 4; ++p) {
        if (adj_[new_end(p)].size() != 1) throw Error(ErrorKind::Build, "malformed tangle wiring");
        out.port[p] = walk(new_end(p));
      }
    out.free_loops = loops_;
    // Relays not reached from any dart or end form closed loops.
    for (int v = darts_ + 4; v < static_cast<int>(adj_.size()); ++v) {
      if (seen[v]) continue;
      ++out.free_loops;
      int prev = -1, cur = v;
      while (!seen[cur]) {
        seen[cur] = 1;
        const int next = adj_[cur][0] == prev ? adj_[cur][1] : adj_[cur][0];
        prev = cur;
        cur = next;
      }
    }
    return out;
  }

  int offset(std::size_t part) const { return offset_[part]; }

 private:
  std::vector<int> offset_;
  std::vector<std::vector<int>> adj_;
  int darts_ = 0;
  int loops_ = 0;
};

Fragment zero_tangle() {
  Fragment f;
  f.port = {port_code(NW), port_code(NE), port_code(SE), port_code(SW)};
  return f;
}

// Horizontal chain of n crossings; each crossing's slots coincide with the
// port directions NE, NW, SW, SE.
Fragment integer_tangle(long n) {
  if (n == 0) return zero_tangle();
  if (n > 100000) throw Error(ErrorKind::CapExceeded, "integer tangle too large");
  Fragment f;
  f.crossings = static_cast<int>(n);
  f.link.assign(4 * n, 0);
  auto pair = [&](int a, int b) {
    f.link[a] = b;
    f.link[b] = a;
  };
  for (int i = 0; i + 1 < n; ++i) {
    pair(dart::make(i, NE), dart::make(i + 1, NW));
    pair(dart::make(i, SE), dart::make(i + 1, SW));
  }
  const int last = static_cast<int>(n) - 1;
  f.link[dart::make(0, NW)] = port_code(NW);
  f.link[dart::make(0, SW)] = port_code(SW);
  f.link[dart::make(last, NE)] = port_code(NE);
  f.link[dart::make(last, SE)] = port_code(SE);
  f.port = {dart::make(last, NE), dart::make(0, NW), dart::make(0, SW), dart::make(last, SE)};
  return f;
}

Fragment add(const Fragment& a, const Fragment& b) {
  Wiring w({&a, &b});
  w.connect(w.relay(0, NE), w.relay(1, NW));
  w.connect(w.relay(0, SE), w.relay(1, SW));
  w.connect(w.new_end(NW), w.relay(0, NW));
  w.connect(w.new_end(SW), w.relay(0, SW));
  w.connect(w.new_end(NE), w.relay(1, NE));
  w.connect(w.new_end(SE), w.relay(1, SE));
  return w.resolve(true);
}

// Reflection in the NW-SE line: reverses the rotation at every crossing and
// exchanges the NE and SW ends.
Fragment negate(const Fragment& a) {
  auto swap_port = [](int p) { return p == NE ? SW : p == SW ? NE : p; };
  auto swap_slot = [](int d) { return dart::slot(d) & 1 ? (d ^ 2) : d; };
  auto map_end = [&](int e) { return is_port(e) ? port_code(swap_port(port_of(e))) : swap_slot(e); };
  Fragment out = a;
  for (int d = 0; d < 4 * a.crossings; ++d) out.link[swap_slot(d)] = map_end(a.link[d]);
  for (int p = 0; p < 4; ++p) out.port[swap_port(p)] = map_end(a.port[p]);
  return out;
}

Fragment assemble(const TangleExpr& e);

Fragment substitute(const TangleExpr& e) {
  const Polyhedron* poly = find_polyhedron(e.polyhedron);
  if (!poly) throw Error(ErrorKind::Build, "unknown basic polyhedron " + e.polyhedron);
  if (static_cast<int>(e.children.size()) != poly->vertex_count())
    throw Error(ErrorKind::Build, "polyhedron " + e.polyhedron + " needs " +
                                      std::to_string(poly->vertex_count()) + " slots");
  std::vector<Fragment> parts;
  for (const auto& c : e.children) parts.push_back(assemble(c));
  std::vector<const Fragment*> ptrs;
  for (const auto& p : parts) ptrs.push_back(&p);
  Wiring w(ptrs);
  std::map<int, int> seen;
  for (int v = 0; v < poly->vertex_count(); ++v)
    for (int j = 0; j < 4; ++j) {
      const int label = poly->vertices[v][j];
      const int node = w.relay(v, j);
      auto it = seen.find(label);
      if (it == seen.end())
        seen.emplace(label, node);
      else
        w.connect(it->second, node);
    }
  Fragment out = w.resolve(false);
  out.port = {0, 0, 0, 0};
  return out;
}

Fragment assemble(const TangleExpr& e) {
  using K = TangleExpr::Kind;
  switch (e.kind) {
    case K::Integer:
      return integer_tangle(std::labs(e.value));
    case K::Sum:
      return add(assemble(e.children[0]), assemble(e.children[1]));
    case K::Product:
      return add(negate(assemble(e.children[0])), assemble(e.children[1]));
    case K::Ramification: {
      Fragment acc = negate(assemble(e.children[0]));
      for (std::size_t i = 1; i < e.children.size(); ++i)
        acc = add(acc, negate(assemble(e.children[i])));
      return acc;
    }
    case K::Polyhedron:
      break;
  }
  throw Error(ErrorKind::Build, "a polyhedral expression can only appear at the top level");
}

void leaf_signs(const TangleExpr& e, bool& pos, bool& neg) {
  if (e.kind == TangleExpr::Kind::Integer) {
    pos |= e.value > 0;
    neg |= e.value < 0;
  }
  for (const auto& c : e.children) leaf_signs(c, pos, neg);
}

Diagram shade_type_a(std::vector<int> link, int outer) {
  const int n = static_cast<int>(link.size()) / 4;
  std::vector<std::uint8_t> over(n, 0);
  Diagram plain(link, over, outer);
  const FaceTrace faces = trace_faces(plain);
  const auto color = face_colors(plain, faces);
  for (int c = 0; c < n; ++c)
    over[c] = color[faces.face_of_corner[dart::make(c, 0)]] ? 0 : 1;
  return Diagram(std::move(link), std::move(over), outer);
}

Diagram close(const Fragment& t) {
  if (t.crossings == 0) {
    Wiring w({&t});
    w.connect(w.relay(0, NW), w.relay(0, NE));
    w.connect(w.relay(0, SW), w.relay(0, SE));
    if (w.resolve(false).free_loops != 1) throw Error(ErrorKind::Build, "closure is a split link");
    return Diagram::unknot();
  }
  // West region of the tangle: after closing it is the unbounded face.
  int outer;
  if (!is_port(t.port[NW]))
    outer = t.port[NW];
  else if (!is_port(t.port[SW]))
    outer = dart::ccw_prev(t.port[SW]);
  else if (!is_port(t.port[NE]))
    outer = dart::ccw_prev(t.port[NE]);
  else
    outer = t.port[SE];
  Wiring w({&t});
  w.connect(w.relay(0, NW), w.relay(0, NE));
  w.connect(w.relay(0, SW), w.relay(0, SE));
  const Fragment closed = w.resolve(false);
  if (closed.free_loops > 0) throw Error(ErrorKind::Build, "closure is a split link");
  try {
    return shade_type_a(closed.link, outer);
  } catch (const Error& err) {
    throw Error(ErrorKind::Build, std::string("closure is not a connected diagram: ") + err.what());
  }
}

}  // namespace

Diagram build(const TangleExpr& expr) {
  bool pos = false, neg = false;
  leaf_signs(expr, pos, neg);
  if (pos && neg)
    throw Error(ErrorKind::Build, "mixed-sign integer tangles do not give an alternating diagram");
  Diagram out;
  if (expr.kind == TangleExpr::Kind::Polyhedron) {
    const Fragment body = substitute(expr);
    if (body.free_loops > 0) throw Error(ErrorKind::Build, "closure is a split link");
    if (body.crossings == 0) throw Error(ErrorKind::Build, "polyhedral closure has no crossings");
    try {
      out = shade_type_a(body.link, 0);
    } catch (const Error& err) {
      throw Error(ErrorKind::Build, std::string("closure is not a connected diagram: ") + err.what());
    }
  } else {
    out = close(assemble(expr));
  }
  return neg ? mirror(out) : out;
}

Diagram build(std::string_view conway) { return build(parse(conway)); }

}  // namespace amphi
