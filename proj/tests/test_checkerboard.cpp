#include <random>
#include <set>

#include "amphichiral/build.hpp"
#include "amphichiral/checkerboard.hpp"
#include "amphichiral/error.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

using namespace amphi;

namespace {

// Same graph with edges renamed and half-edges of some edges swapped.
PlaneGraph relabel_graph(const PlaneGraph& g, std::mt19937& rng) {
  const int m = g.edge_count();
  std::vector<int> perm(m), flip(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int& f : flip) f = std::uniform_int_distribution<int>(0, 1)(rng);
  auto map = [&](int h) { return 2 * perm[h / 2] + ((h & 1) ^ flip[h / 2]); };
  std::vector<int> sigma(2 * m), sign;
  for (int h = 0; h < 2 * m; ++h) sigma[map(h)] = map(g.next(h));
  if (g.is_signed()) {
    sign.resize(m);
    for (int e = 0; e < m; ++e) sign[perm[e]] = g.sign(e);
  }
  return PlaneGraph(sigma, sign);
}

PlaneGraph G(const std::string& s) { return graph_of(build(s)); }

}  // namespace

TEST_CASE("shading") {
  const Shading u = shade(Diagram::unknot());
  CHECK(u.faces.face_count == 2);
  REQUIRE(u.color.size() == 2);
  CHECK(u.color[0] + u.color[1] == 1);

  for (const auto& s : fixtures::all()) {
    const Diagram d = build(s);
    const Shading sh = shade(d);
    CHECK(sh.faces.face_count == d.crossing_count() + 2);
    CHECK(sh.color[sh.faces.face_of_corner[d.outer_corner()]] == 0);
    // Corners around each crossing alternate colours, so neighbouring
    // faces always differ.
    for (int c = 0; c < d.crossing_count(); ++c)
      for (int k = 0; k < 4; ++k) {
        const int f1 = sh.faces.face_of_corner[dart::make(c, k)];
        const int f2 = sh.faces.face_of_corner[dart::make(c, k + 1)];
        CHECK(sh.color[f1] != sh.color[f2]);
      }
  }
  const Diagram dh = build(fixtures::kDH);
  CHECK(shade(dh).faces.face_count == 16);
}

TEST_CASE("checkerboard graph basics") {
  const PlaneGraph g = G(fixtures::kDH);
  CHECK(g.edge_count() == 14);
  const PlaneGraph u = graph_of(Diagram::unknot());
  CHECK(u.vertex_count() == 1);
  CHECK(u.edge_count() == 0);
  CHECK(dual(u).vertex_count() == 1);
  for (const auto& s : fixtures::all()) {
    const Diagram d = build(s);
    const PlaneGraph gs = graph_of(d, true);
    CHECK(gs.edge_count() == d.crossing_count());
    CHECK(gs.vertex_count() + dual(gs).vertex_count() == d.crossing_count() + 2);
    CHECK(dual(gs).vertex_count() == gs.edge_count() - gs.vertex_count() + 2);
    CHECK(gs.face_count() == dual(gs).vertex_count());
    // Alternating diagrams have all signs equal.
    std::set<int> signs(gs.signs().begin(), gs.signs().end());
    CHECK(signs.size() == 1);
  }
}

TEST_CASE("dual is the graph of the unshaded regions and an involution") {
  for (const auto& s : fixtures::all()) {
    const Diagram d = build(s);
    const PlaneGraph g = graph_of(d);
    CHECK(iso(dual(dual(g)), g, GraphIsoMode::Embedded).has_value());
    CHECK(iso(dual(g), graph_of_unshaded(d), GraphIsoMode::Embedded).has_value());
    // Switching every crossing swaps the roles of the two colours.
    CHECK(iso(graph_of(mirror(d)), dual(g), GraphIsoMode::EmbeddedWithReflection).has_value());
  }
}

TEST_CASE("isomorphisms of the 14-crossing knot's minimal diagrams") {
  std::vector<PlaneGraph> g;
  for (const auto& s : fixtures::kDHDiagrams) g.push_back(G(s));
  CHECK(iso(g[2], dual(g[0]), GraphIsoMode::Abstract).has_value());
  CHECK(iso(g[3], dual(g[1]), GraphIsoMode::Abstract).has_value());
  for (const auto& x : g) CHECK_FALSE(iso(x, dual(x), GraphIsoMode::Abstract).has_value());
  // The embedded notions are stricter and give no cross pairs here.
  CHECK_FALSE(iso(g[2], dual(g[0]), GraphIsoMode::EmbeddedWithReflection).has_value());
}

TEST_CASE("mutant pair") {
  const PlaneGraph a = G(fixtures::kMutantAmph), b = G(fixtures::kMutantChiral);
  CHECK(iso(a, dual(a), GraphIsoMode::Abstract).has_value());
  CHECK_FALSE(iso(b, dual(b), GraphIsoMode::Abstract).has_value());
}

TEST_CASE("embedded isomorphism implies abstract isomorphism") {
  std::vector<PlaneGraph> gs;
  for (const auto& s : fixtures::all()) {
    const PlaneGraph g = G(s);
    gs.push_back(g);
    gs.push_back(dual(g));
  }
  for (const auto& a : gs)
    for (const auto& b : gs) {
      const bool e = iso(a, b, GraphIsoMode::Embedded).has_value();
      const bool er = iso(a, b, GraphIsoMode::EmbeddedWithReflection).has_value();
      const bool ab = iso(a, b, GraphIsoMode::Abstract).has_value();
      CHECK((!e || er));
      CHECK((!er || ab));
    }
}

TEST_CASE("abstract isomorphism agrees with exhaustive search") {
  std::mt19937 rng(17);
  int positives = 0, negatives = 0;
  for (int i = 0; i < 300; ++i) {
    const int edges = 1 + i % 8;
    const PlaneGraph g = gen::random_graph(rng, edges, false);
    const PlaneGraph h = gen::random_graph(rng, edges, false);
    const PlaneGraph r = relabel_graph(g, rng);
    if (g.vertex_count() > 8 || h.vertex_count() > 8) continue;
    CHECK(iso(g, r, GraphIsoMode::Abstract).has_value());
    CHECK(iso(g, r, GraphIsoMode::Embedded).has_value());
    CHECK(abstract_iso_brute_force(g, r));
    const bool fast = iso(g, h, GraphIsoMode::Abstract).has_value();
    CHECK(fast == abstract_iso_brute_force(g, h));
    const PlaneGraph gd = dual(g);
    if (gd.vertex_count() <= 8) CHECK(iso(g, gd, GraphIsoMode::Abstract).has_value() == abstract_iso_brute_force(g, gd));
    fast ? ++positives : ++negatives;
  }
  CHECK(positives > 10);
  CHECK(negatives > 10);
}

TEST_CASE("reconstruction") {
  for (const auto& s : {fixtures::kDH, fixtures::kSixStar, fixtures::kMutantAmph}) {
    const Diagram d = build(s);
    CHECK(sphere_iso(reconstruct(graph_of(d, true)), d, {}).has_value());
  }
  // One vertex with a signed loop is a kinked unknot.
  const PlaneGraph loop({1, 0}, {1});
  const Diagram curl = reconstruct(loop);
  CHECK(curl.crossing_count() == 1);
  CHECK(component_count(curl) == 1);
  CHECK(nugatory_crossings(curl).size() == 1);
  CHECK(reconstruct(PlaneGraph()).is_unknot());
  CHECK_THROWS_AS(reconstruct(PlaneGraph({1, 0})), Error);
}

TEST_CASE("loops are nugatory crossings") {
  std::mt19937 rng(23);
  for (int i = 0; i < 200; ++i) {
    const Diagram d = gen::random_diagram(rng, 9);
    const PlaneGraph g = graph_of(d);
    const PlaneGraph gd = dual(g);
    std::set<int> loops;
    for (int e = 0; e < g.edge_count(); ++e)
      if (g.is_loop(e) || gd.is_loop(e)) loops.insert(e);
    const auto nug = nugatory_crossings(d);
    CHECK(loops == std::set<int>(nug.begin(), nug.end()));
  }
}

TEST_CASE("plane graph validation") {
  CHECK_THROWS_AS(PlaneGraph({0}), Error);           // odd half-edge count
  CHECK_THROWS_AS(PlaneGraph({0, 0}), Error);        // not a permutation
  CHECK_THROWS_AS(PlaneGraph({1, 0}, {2}), Error);   // bad sign
  CHECK_THROWS_AS(PlaneGraph({1, 0}, {1, 1}), Error);
}

TEST_CASE("graph export") {
  const PlaneGraph g = graph_of(build(fixtures::kMutantAmph), true);
  const auto j = nlohmann::json::parse(to_json(g));
  CHECK(j["vertices"].get<int>() == g.vertex_count());
  CHECK(j["edges"].size() == static_cast<std::size_t>(g.edge_count()));
  const std::string dot = to_dot(g, "G_1");
  CHECK(dot.rfind("graph \"G_1\" {", 0) == 0);
  CHECK(std::count(dot.begin(), dot.end(), '\n') == g.vertex_count() + g.edge_count() + 2);
}

TEST_CASE("iso mode names") {
  for (auto m : {GraphIsoMode::Abstract, GraphIsoMode::Embedded, GraphIsoMode::EmbeddedWithReflection})
    CHECK(parse_iso_mode(to_string(m)) == m);
  CHECK_FALSE(parse_iso_mode("planar").has_value());
}
