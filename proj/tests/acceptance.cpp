// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "amphichiral/bracket.hpp"
#include "amphichiral/build.hpp"
#include "amphichiral/chirality.hpp"
#include "amphichiral/report.hpp"
#include "property_checks.hpp"
#include "support.hpp"

using namespace amphi;

namespace {

struct Checker {
  std::string detail;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

bool has_pair(const Verdict& v, int i, int j) {
  return std::find(v.cross_dual_pairs.begin(), v.cross_dual_pairs.end(), std::pair{i, j}) != v.cross_dual_pairs.end();
}

bool abstract_iso(const PlaneGraph& a, const PlaneGraph& b) { return iso(a, b, GraphIsoMode::Abstract).has_value(); }

void dh_knot(Checker& c) {
  Orbit o;
  const Verdict v = classify(build(fixtures::kDH), {}, &o);
  c.expect(v.orbit_size == 4, "orbit size " + std::to_string(v.orbit_size));

  std::vector<Diagram> items;
  for (const auto& s : fixtures::kDHDiagrams) items.push_back(build(s));
  std::set<DiagramCode> orbit_codes, item_codes;
  for (const auto& sh : o.shapes) orbit_codes.insert(canonical_code(o.entries[sh.representative].diagram, {}));
  for (const auto& d : items) item_codes.insert(canonical_code(d, {}));
  c.expect(orbit_codes == item_codes, "orbit codes differ from the listed diagrams");

  std::vector<PlaneGraph> g, gd;
  for (const auto& d : items) g.push_back(graph_of(d)), gd.push_back(dual(g.back()));
  for (int i = 0; i < 4; ++i) c.expect(!abstract_iso(g[i], gd[i]), "G_i ~ G*_i for item " + std::to_string(i + 1));
  c.expect(abstract_iso(g[2], gd[0]), "G_3 !~ G*_1");
  c.expect(abstract_iso(g[3], gd[1]), "G_4 !~ G*_2");

  std::vector<int> num;
  for (const auto& d : items) num.push_back(o.shape_of(d) + 1);
  c.expect(v.self_dual_diagrams.empty(), "verdict lists a self-dual diagram");
  c.expect(has_pair(v, num[2], num[0]) && has_pair(v, num[3], num[1]), "verdict lacks the cross pairs");
  c.expect(v.amphicheiral, "not amphicheiral");
  c.expect(v.dh_link, "dh_link false");
}

void mutants(Checker& c) {
  const Verdict a = classify(build(fixtures::kMutantAmph));
  c.expect(a.orbit_size == 1, "orbit of .(2,3).(3,2)");
  c.expect(a.self_dual_diagrams == std::vector<int>{1}, ".(2,3).(3,2) not self-dual");
  c.expect(a.amphicheiral, ".(2,3).(3,2) chiral");
  const Verdict b = classify(build(fixtures::kMutantChiral));
  c.expect(b.orbit_size == 1, "orbit of .(2,3).(2,3)");
  c.expect(b.self_dual_diagrams.empty(), ".(2,3).(2,3) self-dual");
  c.expect(!b.amphicheiral, ".(2,3).(2,3) amphicheiral");
}

void six_star(Checker& c) {
  Orbit o;
  const Verdict v = classify(build(fixtures::kSixStar), {}, &o);
  c.expect(v.crossings == 16, "crossings");
  c.expect(v.components == 3, "components");
  c.expect(v.orbit_size == 16, "orbit size " + std::to_string(v.orbit_size));
  c.expect(!v.amphicheiral, "amphicheiral");
  const PlaneGraph other = dual(graph_of(build(fixtures::kSixStarOther)));
  bool found = false;
  for (std::size_t j = 0; j < o.shapes.size(); ++j) {
    const PlaneGraph gj = dual(graph_of(o.entries[o.shapes[j].representative].diagram));
    found = found || (abstract_iso(gj, other) && has_pair(v, 1, static_cast<int>(j) + 1));
  }
  c.expect(found, "no pair (1, j) with G*_j ~ G* of the second drawing");
}

void families(Checker& c) {
  for (const char* s : {"(2 1,2) 1 1 (2 1,2)", "(3 1,2 2 1) 1 1 (3 1,2 2 1)", "(2 1,2,2) 1 1 (2 1,2,2)"}) {
    const Verdict v = classify(build(s));
    c.expect(v.amphicheiral && v.dh_link, s);
  }
}

void properties(Checker& c) {
  int n = 0;
  auto run = [&](const Diagram& d) {
    const auto bad = props::failures(d);
    c.expect(bad.empty(), bad.empty() ? "" : bad.front());
    ++n;
  };
  for (const auto& s : fixtures::all()) run(build(s));
  std::mt19937 rng(4242);
  for (int i = 0; i < 1000; ++i) run(gen::random_diagram(rng, 14));
  for (int i = 0; i < 300; ++i) run(reconstruct(gen::random_graph(rng, 1 + i % 12, true)));
  c.expect(n >= 1000, "too few instances");
}

void oracle(Checker& c) {
  for (const char* s : {fixtures::kDH, fixtures::kMutantAmph, fixtures::kMutantChiral, fixtures::kSixStar,
                        "(2 1,2) 1 1 (2 1,2)"}) {
    const Diagram d = build(s);
    const Orbit o = flype_orbit(d);
    const LaurentPoly raw = bracket(d), norm = normalized(d);
    for (const auto& e : o.entries) {
      c.expect(bracket(e.diagram) == raw, std::string("raw bracket varies on ") + s);
      c.expect(normalized(e.diagram) == norm, std::string("normalized bracket varies on ") + s);
    }
  }
  for (const char* s : {"3", "2 2", fixtures::kDH}) {
    const Diagram d = build(s);
    c.expect(mirror_symmetric(d) == classify(d).amphicheiral, std::string("mirror_symmetric disagrees on ") + s);
  }
}

void determinism(Checker& c) {
  RunConfig one = default_config();
  one.oracle_checks = true;
  RunConfig four = one;
  four.threads = 4;
  const VerifyResult a = verify_paper(one), b = verify_paper(one), t = verify_paper(four);
  c.expect(a.report == b.report, "repeated runs differ");
  c.expect(a.report == t.report, "thread counts differ");
  c.expect(a.passed, std::to_string(a.failures) + " verification fixtures fail");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Checker&)>>> criteria = {
      {"DH knot orbit, graphs and verdict", dh_knot},
      {"mutant pair", mutants},
      {"6* three-component link", six_star},
      {"amphicheiral DH families", families},
      {"property suite", properties},
      {"bracket oracle", oracle},
      {"deterministic verification report", determinism},
  };
  int failed = 0, k = 0;
  for (const auto& [name, fn] : criteria) {
    Checker c;
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::printf("%s %d %s%s%s\n", c.ok ? "PASS" : "FAIL", ++k, name, c.ok ? "" : ": ", c.detail.c_str());
    failed += !c.ok;
  }
  std::fflush(stdout);
  return failed ? 1 : 0;
}
