#include <map>
#include <numeric>
#include <random>
#include <regex>

#include "amphichiral/bracket.hpp"
#include "amphichiral/build.hpp"
#include "amphichiral/error.hpp"
#include "amphichiral/flype.hpp"
#include "amphichiral/io.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace amphi;

namespace {

using Poly = std::map<int, long long>;

Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (auto [e1, c1] : a)
    for (auto [e2, c2] : b) r[e1 + e2] += c1 * c2;
  std::erase_if(r, [](const auto& t) { return t.second == 0; });
  return r;
}

// State sum read off PD text: X[i,j,k,l] contributes A<i j><k l> + A^-1<i l><j k>.
Poly pd_bracket(const std::string& pd) {
  static const std::regex cross(R"(X\[(\d+),(\d+),(\d+),(\d+)\])");
  std::vector<std::array<int, 4>> xs;
  int labels = 0;
  for (auto it = std::sregex_iterator(pd.begin(), pd.end(), cross); it != std::sregex_iterator(); ++it) {
    std::array<int, 4> x{};
    for (int k = 0; k < 4; ++k) labels = std::max(labels, x[k] = std::stoi((*it)[k + 1]));
    xs.push_back(x);
  }
  if (xs.empty()) return {{0, 1}};
  const int n = static_cast<int>(xs.size());
  std::vector<long long> by_loops_and_a(static_cast<std::size_t>((n + 1) * (2 * n + 2)), 0);
  Poly total;
  std::vector<int> parent(labels + 1);
  for (long state = 0; state < (1L << n); ++state) {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    int a_count = 0;
    for (int c = 0; c < n; ++c) {
      const auto& x = xs[c];
      if ((state >> c) & 1) {
        unite(x[0], x[1]);
        unite(x[2], x[3]);
        ++a_count;
      } else {
        unite(x[0], x[3]);
        unite(x[1], x[2]);
      }
    }
    int loops = 0;
    for (int v = 1; v <= labels; ++v) loops += find(v) == v;
    // A^(a-b) (-A^2 - A^-2)^(loops-1)
    Poly term{{a_count - (n - a_count), 1}};
    for (int i = 1; i < loops; ++i) term = mul(term, {{2, -1}, {-2, -1}});
    for (auto [e, c] : term) total[e] += c;
  }
  std::erase_if(total, [](const auto& t) { return t.second == 0; });
  return total;
}

Poly as_map(const LaurentPoly& p) { return Poly(p.terms().begin(), p.terms().end()); }

}  // namespace

TEST_CASE("Laurent polynomial arithmetic") {
  const LaurentPoly a = LaurentPoly::monomial(2, 3) + LaurentPoly::monomial(-1, -2);
  CHECK(a.coeff(3) == 2);
  CHECK(a.coeff(-2) == -1);
  CHECK(a.coeff(0) == 0);
  CHECK((a - a).is_zero());
  CHECK((a - a).terms().empty());
  CHECK(a * LaurentPoly::constant(1) == a);
  CHECK(a.pow(2) == a * a);
  CHECK(a.pow(0) == LaurentPoly::constant(1));
  CHECK(a.inverted().coeff(-3) == 2);
  CHECK(a.inverted().inverted() == a);
  CHECK(a.to_string() == "-1*A^-2 + 2*A^3");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(LaurentPoly::monomial(0, 5).is_zero());
  CHECK(a.to_json() == "{\"-2\":-1,\"3\":2}");
  const LaurentPoly big = LaurentPoly::monomial(std::numeric_limits<std::int64_t>::max(), 0);
  CHECK_THROWS_AS(big + big, Error);
  CHECK_THROWS_AS(big * LaurentPoly::constant(2), Error);
}

TEST_CASE("bracket of small diagrams") {
  CHECK(bracket(Diagram::unknot()) == LaurentPoly::constant(1));
  CHECK(normalized(Diagram::unknot()) == LaurentPoly::constant(1));
  // A kink changes the bracket by -A^{+-3} and normalisation removes it.
  const LaurentPoly kink = bracket(build("1"));
  CHECK((kink == LaurentPoly::monomial(-1, 3) || kink == LaurentPoly::monomial(-1, -3)));
  CHECK(normalized(build("1")) == LaurentPoly::constant(1));
  CHECK(normalized(mirror(build("1"))) == LaurentPoly::constant(1));
  const LaurentPoly t = bracket(build("3"));
  const LaurentPoly left = LaurentPoly::monomial(-1, 5) + LaurentPoly::monomial(-1, -3) + LaurentPoly::monomial(1, -7);
  CHECK((t == left || t == left.inverted()));
  CHECK(std::abs(writhe(build("3"))) == 3);
  CHECK(writhe(build("2 2")) == 0);
}

TEST_CASE("bracket agrees with the PD state-sum oracle") {
  for (const auto& s : fixtures::all()) {
    const Diagram d = build(s);
    if (d.crossing_count() > 14) continue;
    CHECK_MESSAGE(as_map(bracket(d)) == pd_bracket(pd_to_text(d)), s);
  }
  std::mt19937 rng(31);
  for (int i = 0; i < 120; ++i) {
    const Diagram d = gen::random_diagram(rng, 10);
    CHECK(as_map(bracket(d)) == pd_bracket(pd_to_text(d)));
  }
}

TEST_CASE("mirror inverts the variable") {
  for (const auto& s : fixtures::all()) {
    const Diagram d = build(s);
    if (d.crossing_count() > 16) continue;
    CHECK(bracket(mirror(d)) == bracket(d).inverted());
    CHECK(writhe(mirror(d)) == -writhe(d));
    CHECK(mirror_symmetric(d) == mirror_symmetric(mirror(d)));
  }
}

TEST_CASE("bracket is a sphere-isomorphism invariant") {
  std::mt19937 rng(37);
  for (const char* s : {fixtures::kMutantAmph, "(2 1,2) 1 1 (2 1,2)", "5 2"}) {
    const Diagram d = build(s);
    const LaurentPoly b = bracket(d);
    for (int i = 0; i < 25; ++i) CHECK(bracket(gen::shuffle(d, rng)) == b);
  }
}

TEST_CASE("bracket and writhe are constant on flype orbits") {
  for (const auto& s : {fixtures::kDH, fixtures::kSixStar, fixtures::kMutantChiral, "(2 1,2) 1 1 (2 1,2)"}) {
    const Diagram d = build(s);
    const Orbit o = flype_orbit(d);
    const LaurentPoly b = bracket(d);
    const LaurentPoly n = normalized(d);
    for (const auto& e : o.entries) {
      CHECK(bracket(e.diagram) == b);
      CHECK(normalized(e.diagram) == n);
      CHECK(writhe(e.diagram) == writhe(d));
    }
  }
}

TEST_CASE("mirror symmetry of the normalized bracket") {
  CHECK(mirror_symmetric(build("2 2")));
  CHECK_FALSE(mirror_symmetric(build("3")));
  CHECK(mirror_symmetric(build(fixtures::kDH)));
  CHECK(normalized(build("3")) != normalized(mirror(build("3"))));
}

TEST_CASE("orientation of link components") {
  const Diagram hopf = build("2");
  REQUIRE(component_count(hopf) == 2);
  CHECK(writhe(hopf, {false, true}) == -writhe(hopf));
  CHECK_THROWS_AS(writhe(hopf, {true}), Error);
}

TEST_CASE("threads and the crossing cap") {
  const Diagram d = build(fixtures::kDH);
  CHECK(bracket(d, 4) == bracket(d, 1));
  CHECK_THROWS_AS(bracket(build("25")), Error);
  try {
    bracket(build("25"));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}
