#include <random>
#include <set>

#include "amphichiral/build.hpp"
#include "amphichiral/diagram.hpp"
#include "amphichiral/error.hpp"
#include "amphichiral/io.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace amphi;

namespace {

// Face count straight from the face permutation, independent of trace_faces.
int count_faces(const Diagram& d) {
  if (d.is_unknot()) return 2;
  std::vector<char> seen(d.dart_count(), 0);
  int faces = 0;
  for (int s = 0; s < d.dart_count(); ++s) {
    if (seen[s]) continue;
    ++faces;
    for (int x = s; !seen[x]; x = dart::ccw_next(d.partner(x))) seen[x] = 1;
  }
  return faces;
}

// Alternation checked by walking strands: leaving through an over dart,
// the next crossing must be entered on an under dart.
bool alternates(const Diagram& d) {
  for (int x = 0; x < d.dart_count(); ++x) {
    const int in = d.partner(x);
    if (d.is_over(x) == d.is_over(in)) return false;
  }
  return true;
}

// Nugatory crossings by brute force: two corners of the crossing in one face.
int nugatory_count(const Diagram& d) {
  std::vector<int> face(d.dart_count(), -1);
  int f = 0;
  for (int s = 0; s < d.dart_count(); ++s) {
    if (face[s] >= 0) continue;
    for (int x = s; face[x] < 0; x = dart::ccw_next(d.partner(x))) face[x] = f;
    ++f;
  }
  int n = 0;
  for (int c = 0; c < d.crossing_count(); ++c) {
    std::set<int> fs;
    for (int k = 0; k < 4; ++k) fs.insert(face[dart::make(c, k)]);
    n += fs.size() < 4;
  }
  return n;
}

// Two crossings, each with a kink, joined by a pair of edges.
Diagram double_curl(int over0, int over1) {
  for (bool swap : {false, true}) {
    std::vector<int> link(8);
    auto join = [&](int a, int b) { link[a] = b, link[b] = a; };
    join(0, 1);
    join(6, 7);
    join(2, swap ? 5 : 4);
    join(3, swap ? 4 : 5);
    Diagram d(link, {static_cast<std::uint8_t>(over0), static_cast<std::uint8_t>(over1)}, 0);
    if (count_faces(d) == 4) return d;
  }
  throw std::logic_error("no planar double curl");
}

}  // namespace

TEST_CASE("build: crossing and component counts") {
  const Diagram dh = build(fixtures::kDH);
  CHECK(dh.crossing_count() == 14);
  CHECK(component_count(dh) == 1);
  const Diagram l12 = build("(2 1,2) 1 1 (2 1,2)");
  CHECK(l12.crossing_count() == 12);
  CHECK(component_count(l12) >= 2);
  const Diagram six = build(fixtures::kSixStar);
  CHECK(six.crossing_count() == 16);
  CHECK(component_count(six) == 3);
  CHECK(build("3").crossing_count() == 3);
  CHECK(component_count(build("3")) == 1);
  CHECK(component_count(build("2")) == 2);
}

TEST_CASE("build: errors") {
  CHECK_THROWS_AS(build("0"), Error);      // split closure
  CHECK_THROWS_AS(build("2 -1"), Error);   // mixed signs
  CHECK_THROWS_AS(build("2 x"), ParseError);
  try {
    build("2 -1");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Build);
  }
  // An all-negative symbol is the mirror of its positive counterpart.
  CHECK(canonical_code(build("-3"), {}) == canonical_code(mirror(build("3")), {}));
}

TEST_CASE("build: Euler characteristic, alternation and crossing count on random inputs") {
  std::mt19937 rng(11);
  int built = 0;
  for (int i = 0; i < 600; ++i) {
    const TangleExpr e = gen::random_expr(rng, 1 + i % 14);
    Diagram d;
    try {
      d = build(e);
    } catch (const Error&) {
      continue;
    }
    ++built;
    CHECK(d.crossing_count() == leaf_magnitude(e));
    CHECK(count_faces(d) == d.crossing_count() + 2);
    CHECK(trace_faces(d).face_count == d.crossing_count() + 2);
    CHECK(alternates(d));
    CHECK(is_alternating(d));
    CHECK(alternates(mirror(d)));
  }
  CHECK(built > 400);
  for (const auto& s : fixtures::all()) {
    const Diagram d = build(s);
    CHECK(count_faces(d) == d.crossing_count() + 2);
    CHECK(alternates(d));
  }
}

TEST_CASE("mirror") {
  for (const auto& s : fixtures::all()) {
    const Diagram d = build(s);
    CHECK(mirror(mirror(d)) == d);
    CHECK(is_alternating(mirror(d)));
    CHECK(mirror(d).crossing_count() == d.crossing_count());
    for (int c = 0; c < d.crossing_count(); ++c) CHECK(mirror(d).over_parity(c) != d.over_parity(c));
  }
  CHECK(mirror(Diagram::unknot()) == Diagram::unknot());
}

TEST_CASE("reduce") {
  const Diagram curl = build("1");
  CHECK(curl.crossing_count() == 1);
  CHECK(reduce(curl).is_unknot());
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const Diagram d = double_curl(a, b);
      CHECK(nugatory_count(d) == 2);
      CHECK(reduce(d).is_unknot());
    }
  const Diagram dh = build(fixtures::kDH);
  CHECK(nugatory_count(dh) == 0);
  CHECK(nugatory_crossings(dh).empty());
  CHECK(is_reduced(dh));
  CHECK(reduce(dh) == dh);
  CHECK(reduce(Diagram::unknot()).is_unknot());
  // "3 0" closes into three kinks.
  const Diagram kinked = build("3 0");
  CHECK(nugatory_count(kinked) == 3);
  CHECK(nugatory_crossings(kinked).size() == 3);
  CHECK(reduce(kinked).is_unknot());
}

TEST_CASE("nugatory crossings agree with the face oracle") {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Diagram d = gen::random_diagram(rng, 10);
    CHECK(static_cast<int>(nugatory_crossings(d).size()) == nugatory_count(d));
    CHECK(is_reduced(d) == (nugatory_count(d) == 0));
    const Diagram r = reduce(d);
    CHECK(nugatory_count(r) == 0);
    CHECK(canonical_code(reduce(r), {}) == canonical_code(r, {}));
  }
}

TEST_CASE("primality") {
  CHECK(is_prime(build(fixtures::kDH)));
  CHECK(is_prime(build(fixtures::kSixStar)));
  CHECK(is_prime(Diagram::unknot()));
  const Diagram granny = connected_sum(build("3"), build("3"));
  CHECK(granny.crossing_count() == 6);
  CHECK(component_count(granny) == 1);
  CHECK_FALSE(is_prime(granny));
  CHECK_FALSE(is_prime(connected_sum(build("2 2"), build("3"))));
}

TEST_CASE("canonical codes are invariant under relabelling") {
  std::mt19937 rng(3);
  for (const auto& s : fixtures::all()) {
    const Diagram d = build(s);
    const DiagramCode c = canonical_code(d, {});
    const DiagramCode cr = canonical_code(d, {true});
    for (int i = 0; i < 100; ++i) {
      const Diagram e = gen::shuffle(d, rng);
      CHECK(canonical_code(e, {}) == c);
      CHECK(canonical_code(e, {true}) == cr);
    }
    CHECK(sphere_iso(d, gen::shuffle(d, rng), {}).has_value());
  }
}

TEST_CASE("sphere isomorphism") {
  const Diagram d = build(fixtures::kDH);
  const auto self = sphere_iso(d, d, {});
  REQUIRE(self.has_value());
  CHECK_FALSE(self->reflected);
  // The listed minimal diagrams are pairwise distinct.
  std::set<DiagramCode> codes;
  for (const auto& s : fixtures::kDHDiagrams) codes.insert(canonical_code(build(s), {}));
  CHECK(codes.size() == 4);
  CHECK_FALSE(sphere_iso(build(fixtures::kDHDiagrams[0]), build(fixtures::kDHDiagrams[2]), {}).has_value());
  // Seen from behind: rotation reversed and crossings switched, so it
  // matches the mirror once reflections are allowed.
  for (const auto& s : fixtures::all()) {
    const Diagram x = build(s);
    CHECK(canonical_code(view_from_behind(x), {true}) == canonical_code(mirror(x), {true}));
  }
  // The trefoil diagram and its mirror differ as oriented labelled maps.
  const Diagram t = build("3");
  CHECK_FALSE(sphere_iso(t, mirror(t), {}).has_value());
}

TEST_CASE("PD round trips") {
  for (const auto& s : fixtures::all()) {
    const Diagram d = build(s);
    const Diagram j = pd_from_json(pd_to_json(d));
    CHECK(canonical_code(j, {}) == canonical_code(d, {}));
    const Diagram t = pd_from_text(pd_to_text(d));
    CHECK(canonical_code(t, {}) == canonical_code(d, {}));
    CHECK(component_count(t) == component_count(d));
  }
  CHECK(pd_from_text("PD[]").is_unknot());
  CHECK_THROWS_AS(pd_from_text("PD[X[1,2,3,4]]"), Error);
  CHECK_THROWS_AS(pd_from_json("{\"pd\":[[1,2,3]]}"), Error);
  CHECK_THROWS_AS(pd_from_json("nope"), Error);
  // Trefoil in the usual convention.
  const Diagram t = pd_from_text("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]");
  CHECK(t.crossing_count() == 3);
  CHECK(is_alternating(t));
  const DiagramCode c = canonical_code(t, {});
  CHECK((c == canonical_code(build("3"), {}) || c == canonical_code(mirror(build("3")), {})));
}
