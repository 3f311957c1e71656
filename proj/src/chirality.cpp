#include "amphichiral/chirality.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <thread>

#include "amphichiral/build.hpp"
#include "amphichiral/error.hpp"

namespace amphi {

Verdict classify_orbit(const Diagram& d, const Orbit& orbit, const ClassifyOptions& options) {
  Verdict v;
  v.crossings = d.crossing_count();
  v.components = component_count(d);
  v.orbit_size = static_cast<int>(orbit.shapes.size());
  v.labeled_orbit_size = static_cast<int>(orbit.entries.size());
  v.iso_mode_used = options.iso_mode;
  v.reflection_policy_used = options.reflection;

  // D' in the orbit that is exactly D with every crossing switched.
  const Diagram m = mirror(d);
  v.mirror_entry = orbit.find(canonical_code(m, {}));
  v.mirror_in_orbit = v.mirror_entry >= 0;
  if (v.mirror_in_orbit) {
    v.mirror_in_orbit_up_to_reflection = true;
  } else {
    const DiagramCode target = canonical_code(m, {true});
    for (const auto& e : orbit.entries)
      if (canonical_code(e.diagram, {true}) == target) {
        v.mirror_in_orbit_up_to_reflection = true;
        break;
      }
  }
  v.amphicheiral = options.reflection.allow_reflection ? v.mirror_in_orbit_up_to_reflection : v.mirror_in_orbit;

  const int n = v.orbit_size;
  std::vector<PlaneGraph> g(n), gd(n);
  for (int i = 0; i < n; ++i) {
    g[i] = graph_of(orbit.entries[orbit.shapes[i].representative].diagram);
    gd[i] = dual(g[i]);
  }
  // Sort all 2n graphs into isomorphism classes; pairs then follow from
  // class ids without comparing every G_i with every G*_j.
  std::vector<const PlaneGraph*> reps;
  auto class_of = [&](const PlaneGraph& x) {
    for (std::size_t k = 0; k < reps.size(); ++k)
      if (iso(*reps[k], x, options.iso_mode)) return static_cast<int>(k);
    reps.push_back(&x);
    return static_cast<int>(reps.size()) - 1;
  };
  std::vector<int> cg(n), cd(n);
  for (int i = 0; i < n; ++i) cg[i] = class_of(g[i]);
  for (int i = 0; i < n; ++i) cd[i] = class_of(gd[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (cg[i] != cd[j]) continue;
      if (i == j)
        v.self_dual_diagrams.push_back(i + 1);
      else
        v.cross_dual_pairs.emplace_back(i + 1, j + 1);
    }
  v.dh_link = v.amphicheiral && v.self_dual_diagrams.empty();
  return v;
}

Verdict classify(const Diagram& d, const ClassifyOptions& options, Orbit* orbit_out) {
  require_flype_preconditions(d);
  Orbit orbit = flype_orbit(d, options.orbit);
  Verdict v = classify_orbit(d, orbit, options);
  if (orbit_out) *orbit_out = std::move(orbit);
  return v;
}

std::optional<bool> single_diagram_criterion(const Diagram& d, const ClassifyOptions& options) {
  require_flype_preconditions(d);
  const Orbit orbit = flype_orbit(d, options.orbit);
  if (orbit.shapes.size() != 1) return std::nullopt;
  const PlaneGraph g = graph_of(d);
  return iso(g, dual(g), options.iso_mode).has_value();
}

namespace {

std::optional<RationalTangle> as_rational(const TangleExpr& e) {
  if (e.kind == TangleExpr::Kind::Integer) {
    if (e.value < 1) return std::nullopt;
    return RationalTangle{{static_cast<int>(e.value)}};
  }
  if (e.kind != TangleExpr::Kind::Product) return std::nullopt;
  const TangleExpr& last = e.children[1];
  if (last.kind != TangleExpr::Kind::Integer || last.value < 1) return std::nullopt;
  auto head = as_rational(e.children[0]);
  if (!head) return std::nullopt;
  head->entries.push_back(static_cast<int>(last.value));
  return head;
}

std::optional<PretzelTangle> as_pretzel(const TangleExpr& e) {
  if (e.kind != TangleExpr::Kind::Ramification) return std::nullopt;
  PretzelTangle p;
  for (const auto& c : e.children) {
    auto r = as_rational(c);
    if (!r) return std::nullopt;
    p.components.push_back(std::move(*r));
  }
  return p;
}

bool begins_with_one(const PretzelTangle& p) {
  return std::any_of(p.components.begin(), p.components.end(),
                     [](const RationalTangle& t) { return t.entries.front() == 1; });
}

bool is_ones_4k_minus_2(const RationalTangle& t) {
  return t.entries.size() % 4 == 2 &&
         std::all_of(t.entries.begin(), t.entries.end(), [](int x) { return x == 1; });
}

}  // namespace

std::optional<Sandwich> as_sandwich(const TangleExpr& expr) {
  if (expr.kind != TangleExpr::Kind::Product) return std::nullopt;
  auto right = as_pretzel(expr.children[1]);
  if (!right) return std::nullopt;
  // Peel integer factors off the left-nested product down to the pretzel.
  std::vector<int> middle;
  const TangleExpr* cur = &expr.children[0];
  while (cur->kind == TangleExpr::Kind::Product && cur->children[1].kind == TangleExpr::Kind::Integer) {
    if (cur->children[1].value < 1) return std::nullopt;
    middle.push_back(static_cast<int>(cur->children[1].value));
    cur = &cur->children[0];
  }
  auto left = as_pretzel(*cur);
  if (!left || middle.empty()) return std::nullopt;
  std::reverse(middle.begin(), middle.end());
  return Sandwich{std::move(*left), RationalTangle{std::move(middle)}, std::move(*right)};
}

const char* to_string(Expectation e) {
  switch (e) {
    case Expectation::None: return "none";
    case Expectation::DasbachHougardy: return "dasbach-hougardy";
    case Expectation::Chiral: return "chiral";
    case Expectation::KauffmanAmphicheiral: return "amphicheiral-self-dual";
  }
  return "?";
}

const char* to_string(ScanOutcome o) {
  switch (o) {
    case ScanOutcome::Match: return "match";
    case ScanOutcome::Mismatch: return "MISMATCH";
    case ScanOutcome::NoExpectation: return "no-expectation";
    case ScanOutcome::Skipped: return "skipped";
  }
  return "?";
}

Expectation expectation_for(const TangleExpr& expr, std::string* reason) {
  auto say = [&](Expectation e, const char* why) {
    if (reason) *reason = why;
    return e;
  };
  const auto s = as_sandwich(expr);
  if (!s) return say(Expectation::None, "not of the form (P) t (Q)");
  if (begins_with_one(s->left)) return say(Expectation::None, "a pretzel component begins with 1");
  const PretzelClass cls = classify_pretzel(s->left);
  if (!cls.oriented) return say(Expectation::None, "pretzel is not oriented");
  if (s->right == s->left) {
    // 1^(4k-2) is itself palindromic; the specific clause wins.
    if (is_ones_4k_minus_2(s->middle))
      return cls.integer ? say(Expectation::Chiral, "(P) 1^(4k-2) (P) with P oriented integer")
                         : say(Expectation::DasbachHougardy, "(P) 1^(4k-2) (P) with P oriented non-integer");
    if (is_palindromic(s->middle))
      return say(Expectation::KauffmanAmphicheiral, "(P) t (P) with t palindromic");
    return say(Expectation::None, "middle tangle is not palindromic");
  }
  if (s->right == reverse(s->left)) {
    if (is_palindromic(s->middle))
      return say(Expectation::KauffmanAmphicheiral, "(P) t (reverse P) with t palindromic");
    return say(Expectation::None, "middle tangle is not palindromic");
  }
  return say(Expectation::None, "outer pretzels are neither equal nor reversed");
}

namespace {

void score(ScanInstance& inst) {
  const Verdict& v = *inst.verdict;
  bool ok = true;
  switch (inst.expectation) {
    case Expectation::None:
      inst.outcome = ScanOutcome::NoExpectation;
      return;
    case Expectation::DasbachHougardy:
      ok = v.dh_link;
      if (!ok) inst.notice = v.amphicheiral ? "amphicheiral but has a self-dual minimal diagram" : "chiral";
      break;
    case Expectation::Chiral:
      ok = !v.amphicheiral;
      if (!ok) inst.notice = "amphicheiral";
      break;
    case Expectation::KauffmanAmphicheiral:
      ok = v.amphicheiral && !v.self_dual_diagrams.empty();
      if (!ok) inst.notice = v.amphicheiral ? "no self-dual minimal diagram" : "chiral";
      break;
  }
  inst.outcome = ok ? ScanOutcome::Match : ScanOutcome::Mismatch;
}

void run_instance(ScanInstance& inst, const ScanOptions& options) {
  TangleExpr expr;
  try {
    expr = parse(inst.symbol);
  } catch (const Error& e) {
    inst.notice = e.what();
    return;
  }
  inst.expectation = expectation_for(expr, &inst.reason);
  inst.crossings = static_cast<int>(leaf_magnitude(expr));
  if (inst.crossings > options.crossing_cap) {
    inst.notice = "crossing cap " + std::to_string(options.crossing_cap) + " exceeded";
    return;
  }
  try {
    inst.verdict = classify(build(expr), options.classify);
  } catch (const Error& e) {
    inst.notice = e.what();
    return;
  }
  score(inst);
}

}  // namespace

ScanReport scan_family(const std::vector<std::string>& symbols, const ScanOptions& options) {
  ScanReport report;
  report.instances.resize(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) report.instances[i].symbol = symbols[i];
  const std::size_t workers = std::clamp<std::size_t>(options.threads < 1 ? 1 : options.threads, 1,
                                                      std::max<std::size_t>(1, symbols.size()));
  if (workers == 1) {
    for (auto& inst : report.instances) run_instance(inst, options);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < report.instances.size();) run_instance(report.instances[i], options);
      });
    for (auto& t : pool) t.join();
  }
  for (const auto& inst : report.instances) {
    switch (inst.outcome) {
      case ScanOutcome::Match: ++report.matches; break;
      case ScanOutcome::Mismatch: ++report.mismatches; break;
      case ScanOutcome::NoExpectation: ++report.unchecked; break;
      case ScanOutcome::Skipped: ++report.skipped; break;
    }
  }
  return report;
}

std::vector<std::string> family_symbols(const PretzelTangle& p, int k_min, int k_max) {
  std::vector<std::string> out;
  for (int k = k_min; k <= k_max; ++k) out.push_back(render(generate_family({p, k})));
  return out;
}

namespace {

// Rational tangles with entries in [1, max_entry], first entry >= 2, length
// <= max_length and total at most `budget`, in lexicographic order.
void rationals(int max_entry, int max_length, int budget, std::vector<int>& cur,
               std::vector<RationalTangle>& out) {
  if (!cur.empty()) out.push_back({cur});
  if (static_cast<int>(cur.size()) == max_length) return;
  for (int x = cur.empty() ? 2 : 1; x <= std::min(max_entry, budget); ++x) {
    cur.push_back(x);
    rationals(max_entry, max_length, budget - x, cur, out);
    cur.pop_back();
  }
}

int weight(const RationalTangle& t) {
  int w = 0;
  for (int x : t.entries) w += x;
  return w;
}

void pretzels(const std::vector<RationalTangle>& pool, int n_max, int budget, PretzelTangle& cur,
              const std::function<void(const PretzelTangle&)>& emit) {
  if (cur.components.size() >= 2) emit(cur);
  if (static_cast<int>(cur.components.size()) == n_max) return;
  for (const auto& t : pool) {
    if (weight(t) > budget) continue;
    cur.components.push_back(t);
    pretzels(pool, n_max, budget - weight(t), cur, emit);
    cur.components.pop_back();
  }
}

}  // namespace

std::vector<std::string> enumerate_family_symbols(int n_min, int n_max, int max_entry, int max_length,
                                                  int k, int crossing_cap, bool integer_only) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "family parameter k must be at least 1");
  // (P) 1^(4k-2) (P) has 2 |P| + 4k - 2 crossings.
  const int budget = (crossing_cap - (4 * k - 2)) / 2;
  std::vector<std::string> out;
  if (budget < 4 || n_max < 2) return out;
  std::vector<RationalTangle> pool;
  std::vector<int> cur;
  rationals(max_entry, integer_only ? 1 : max_length, budget, cur, pool);
  PretzelTangle p;
  pretzels(pool, n_max, budget, p, [&](const PretzelTangle& q) {
    if (static_cast<int>(q.components.size()) < n_min || !classify_pretzel(q).oriented) return;
    out.push_back(render(generate_family({q, k})));
  });
  return out;
}

}  // namespace amphi
