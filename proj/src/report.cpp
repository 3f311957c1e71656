#include "amphichiral/report.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "amphichiral/bracket.hpp"
#include "amphichiral/build.hpp"
#include "amphichiral/error.hpp"
#include "amphichiral/io.hpp"
#include "embedded_data.hpp"
#include "json.hpp"

namespace amphi {

using nlohmann::json;
using nlohmann::ordered_json;

const char* to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Table: return "table";
    case OutputFormat::Dot: return "dot";
  }
  return "?";
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "table") return OutputFormat::Table;
  if (text == "dot") return OutputFormat::Dot;
  throw Error(ErrorKind::InvalidArgument, "unknown output format '" + std::string(text) + "'");
}

void apply_config_json(RunConfig& cfg, std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
    if (j.contains("iso_mode")) {
      auto m = parse_iso_mode(j["iso_mode"].get<std::string>());
      if (!m) throw Error(ErrorKind::InvalidArgument, "unknown iso_mode " + j["iso_mode"].dump());
      cfg.iso_mode = *m;
    }
    if (j.contains("reflection")) cfg.reflection.allow_reflection = j["reflection"].get<bool>();
    if (j.contains("max_orbit")) cfg.max_orbit = j["max_orbit"].get<int>();
    if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
    if (j.contains("format")) cfg.format = parse_output_format(j["format"].get<std::string>());
    if (j.contains("oracle_checks")) cfg.oracle_checks = j["oracle_checks"].get<bool>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("bad configuration: ") + e.what());
  }
  if (cfg.max_orbit < 1) throw Error(ErrorKind::InvalidArgument, "max_orbit must be at least 1");
  if (cfg.threads < 1) throw Error(ErrorKind::InvalidArgument, "threads must be at least 1");
}

RunConfig default_config() {
  RunConfig cfg;
  apply_config_json(cfg, embedded::defaults_json());
  return cfg;
}

namespace {

// Thread count is deliberately absent: it must not change any report.
ordered_json config_node(const RunConfig& cfg) {
  return ordered_json{{"iso_mode", to_string(cfg.iso_mode)},
                      {"reflection", cfg.reflection.allow_reflection},
                      {"max_orbit", cfg.max_orbit},
                      {"oracle_checks", cfg.oracle_checks}};
}

}  // namespace

std::string config_to_json(const RunConfig& cfg) {
  ordered_json j = config_node(cfg);
  j["threads"] = cfg.threads;
  j["format"] = to_string(cfg.format);
  return j.dump();
}

ClassifyOptions classify_options(const RunConfig& cfg) {
  ClassifyOptions o;
  o.iso_mode = cfg.iso_mode;
  o.reflection = cfg.reflection;
  o.orbit.max_size = cfg.max_orbit;
  o.orbit.threads = cfg.threads;
  return o;
}

namespace {

ordered_json pairs_node(const std::vector<std::pair<int, int>>& pairs) {
  ordered_json a = ordered_json::array();
  for (auto [i, j] : pairs) a.push_back({i, j});
  return a;
}

ordered_json verdict_node(const Verdict& v, const Orbit* orbit) {
  ordered_json j;
  j["crossings"] = v.crossings;
  j["components"] = v.components;
  j["orbit_size"] = v.orbit_size;
  j["labeled_orbit_size"] = v.labeled_orbit_size;
  j["amphicheiral"] = v.amphicheiral;
  j["mirror_in_orbit"] = v.mirror_in_orbit;
  j["mirror_in_orbit_up_to_reflection"] = v.mirror_in_orbit_up_to_reflection;
  if (orbit && v.mirror_entry >= 0)
    j["mirror_diagram"] = orbit->entries[v.mirror_entry].shape + 1;
  else
    j["mirror_diagram"] = nullptr;
  j["self_dual_diagrams"] = v.self_dual_diagrams;
  j["cross_dual_pairs"] = pairs_node(v.cross_dual_pairs);
  j["dh_link"] = v.dh_link;
  if (v.orbit_size == 1)
    j["single_diagram_criterion"] = !v.self_dual_diagrams.empty();
  else
    j["single_diagram_criterion"] = nullptr;
  j["iso_mode"] = to_string(v.iso_mode_used);
  j["reflection"] = v.reflection_policy_used.allow_reflection;
  return j;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string list_text(const std::vector<int>& xs) {
  if (xs.empty()) return "none";
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

std::string pairs_text(const std::vector<std::pair<int, int>>& ps) {
  if (ps.empty()) return "none";
  std::string s;
  for (auto [i, j] : ps) s += (s.empty() ? "(" : " (") + std::to_string(i) + "," + std::to_string(j) + ")";
  return s;
}

void row(std::ostringstream& os, const std::string& key, const std::string& value) {
  os << key << std::string(key.size() < 26 ? 26 - key.size() : 1, ' ') << value << '\n';
}

// Bracket checks over an orbit: all labelled diagrams up to 16 crossings,
// only the shape representatives above that.
ordered_json oracle_node(const Diagram& d, const Orbit& orbit, const Verdict& v, int threads) {
  ordered_json j;
  if (d.crossing_count() > kBracketCrossingCap) {
    j["skipped"] = "above the state-sum crossing cap";
    return j;
  }
  const LaurentPoly raw = bracket(d, threads);
  const LaurentPoly norm = normalized(d, {}, threads);
  std::vector<int> ids;
  const bool all = d.crossing_count() <= 16;
  if (all)
    for (std::size_t i = 0; i < orbit.entries.size(); ++i) ids.push_back(static_cast<int>(i));
  else
    for (const auto& s : orbit.shapes) ids.push_back(s.representative);
  bool raw_ok = true, norm_ok = true;
  for (int id : ids) {
    const Diagram& e = orbit.entries[id].diagram;
    raw_ok = raw_ok && bracket(e, threads) == raw;
    norm_ok = norm_ok && normalized(e, {}, threads) == norm;
  }
  j["bracket"] = raw.to_string();
  j["normalized"] = norm.to_string();
  j["orbit_scope"] = all ? "all" : "shapes";
  j["orbit_checked"] = ids.size();
  j["raw_constant_on_orbit"] = raw_ok;
  j["normalized_constant_on_orbit"] = norm_ok;
  if (v.components == 1) {
    const bool sym = norm == norm.inverted();
    j["mirror_symmetric"] = sym;
    j["consistent_with_verdict"] = !v.amphicheiral || sym;
  } else {
    j["mirror_symmetric"] = nullptr;
    j["consistent_with_verdict"] = nullptr;
  }
  return j;
}

std::string classify_text(std::string_view label, const Verdict& v, const Orbit& orbit, const ordered_json* oracle) {
  std::ostringstream os;
  row(os, "input", std::string(label));
  row(os, "crossings", std::to_string(v.crossings));
  row(os, "components", std::to_string(v.components));
  row(os, "minimal diagrams", std::to_string(v.orbit_size) + " (" + std::to_string(v.labeled_orbit_size) + " labelled)");
  std::string amph = yes_no(v.amphicheiral);
  if (v.mirror_entry >= 0) amph += " (mirror is diagram " + std::to_string(orbit.entries[v.mirror_entry].shape + 1) + ")";
  row(os, "amphicheiral", amph);
  row(os, "  up to reflection", yes_no(v.mirror_in_orbit_up_to_reflection));
  row(os, "self-dual diagrams", list_text(v.self_dual_diagrams));
  row(os, "cross-dual pairs", pairs_text(v.cross_dual_pairs));
  row(os, "Dasbach-Hougardy link", yes_no(v.dh_link));
  row(os, "iso mode", to_string(v.iso_mode_used));
  row(os, "reflection", v.reflection_policy_used.allow_reflection ? "on" : "off");
  if (oracle) {
    if (oracle->contains("skipped")) {
      row(os, "oracle", (*oracle)["skipped"].get<std::string>());
    } else {
      row(os, "bracket", (*oracle)["bracket"].get<std::string>());
      row(os, "bracket constant", yes_no((*oracle)["raw_constant_on_orbit"].get<bool>() &&
                                         (*oracle)["normalized_constant_on_orbit"].get<bool>()));
      if (!(*oracle)["mirror_symmetric"].is_null())
        row(os, "mirror symmetric", yes_no((*oracle)["mirror_symmetric"].get<bool>()));
    }
  }
  return os.str();
}

std::string code_text(const DiagramCode& c) {
  std::string s;
  for (int x : c.code) s += (s.empty() ? "" : ".") + std::to_string(x);
  return s;
}

}  // namespace

std::string verdict_to_json(const Verdict& v, const Orbit* orbit) { return verdict_node(v, orbit).dump(2); }

std::string report_classify(const Diagram& d, std::string_view label, const RunConfig& cfg) {
  Orbit orbit;
  const Verdict v = classify(d, classify_options(cfg), &orbit);
  ordered_json oracle;
  if (cfg.oracle_checks) oracle = oracle_node(d, orbit, v, cfg.threads);
  if (cfg.format == OutputFormat::Table) return classify_text(label, v, orbit, cfg.oracle_checks ? &oracle : nullptr);
  ordered_json j;
  j["input"] = label;
  j["config"] = config_node(cfg);
  j["verdict"] = verdict_node(v, &orbit);
  if (cfg.oracle_checks) j["oracle"] = oracle;
  return j.dump(2) + "\n";
}

std::string report_classify(std::string_view conway, const RunConfig& cfg) {
  const TangleExpr e = parse(conway);
  return report_classify(build(e), render(e), cfg);
}

std::string report_orbit(std::string_view conway, const RunConfig& cfg, const std::vector<std::string>& named) {
  const TangleExpr expr = parse(conway);
  const Diagram d = build(expr);
  require_flype_preconditions(d);
  OrbitOptions opt;
  opt.max_size = cfg.max_orbit;
  opt.threads = cfg.threads;
  const Orbit orbit = flype_orbit(d, opt);

  // Conway renderings: the input for diagram 1, plus any named symbol
  // whose diagram lies in the orbit.
  std::vector<std::vector<std::string>> names(orbit.shapes.size());
  names[0].push_back(render(expr));
  std::vector<std::string> outside;
  for (const auto& s : named) {
    const TangleExpr e = parse(s);
    const Diagram x = build(e);
    const int k = orbit.contains(x) ? orbit.shape_of(x) : -1;
    if (k >= 0) {
      if (std::find(names[k].begin(), names[k].end(), render(e)) == names[k].end()) names[k].push_back(render(e));
    } else {
      outside.push_back(render(e));
    }
  }

  if (cfg.format == OutputFormat::Table) {
    std::ostringstream os;
    os << "input " << render(expr) << ": " << orbit.shapes.size() << " minimal diagrams (" << orbit.entries.size()
       << " labelled)\n";
    for (std::size_t i = 0; i < orbit.shapes.size(); ++i) {
      const auto& s = orbit.shapes[i];
      os << i + 1 << "  path";
      for (int k : s.path) os << ' ' << k + 1;
      os << "  members " << s.members.size();
      for (const auto& n : names[i]) os << "  [" << n << "]";
      os << "\n   " << pd_to_text(orbit.entries[s.representative].diagram) << '\n';
    }
    for (const auto& n : outside) os << "not in orbit: " << n << '\n';
    return os.str();
  }

  ordered_json j;
  j["input"] = render(expr);
  j["orbit_size"] = orbit.shapes.size();
  j["labeled_orbit_size"] = orbit.entries.size();
  j["complete"] = orbit.complete;
  ordered_json diagrams = ordered_json::array();
  for (std::size_t i = 0; i < orbit.shapes.size(); ++i) {
    const auto& s = orbit.shapes[i];
    const auto& rep = orbit.entries[s.representative];
    ordered_json e;
    e["index"] = i + 1;
    e["canonical_code"] = code_text(rep.code);
    e["projection_code"] = code_text(s.code);
    e["pd"] = json::parse(pd_to_json(rep.diagram));
    if (names[i].empty())
      e["conway"] = nullptr;
    else
      e["conway"] = names[i];
    ordered_json path = ordered_json::array();
    for (int k : s.path) path.push_back(k + 1);
    e["path"] = path;
    e["labeled_members"] = s.members.size();
    diagrams.push_back(std::move(e));
  }
  j["diagrams"] = diagrams;
  j["not_in_orbit"] = outside;
  return j.dump(2) + "\n";
}

GraphSelection parse_graph_selection(std::string_view text) {
  if (text == "G") return GraphSelection::G;
  if (text == "Gdual") return GraphSelection::GDual;
  if (text == "both") return GraphSelection::Both;
  if (text == "all-orbit") return GraphSelection::AllOrbit;
  throw Error(ErrorKind::InvalidArgument, "graph selection must be G, Gdual, both or all-orbit");
}

std::vector<NamedText> report_graphs(std::string_view conway, GraphSelection which, const RunConfig& cfg) {
  return report_graphs(build(conway), which, cfg);
}

std::vector<NamedText> report_graphs(const Diagram& d, GraphSelection which, const RunConfig& cfg) {
  std::vector<Diagram> diagrams{d};
  if (which == GraphSelection::AllOrbit) {
    require_flype_preconditions(d);
    OrbitOptions opt;
    opt.max_size = cfg.max_orbit;
    opt.threads = cfg.threads;
    const Orbit orbit = flype_orbit(d, opt);
    diagrams.clear();
    for (const auto& s : orbit.shapes) diagrams.push_back(orbit.entries[s.representative].diagram);
  }
  const bool dot = cfg.format == OutputFormat::Dot;
  std::vector<NamedText> out;
  auto emit = [&](const PlaneGraph& g, const std::string& stem) {
    out.push_back({stem + (dot ? ".dot" : ".json"), dot ? to_dot(g, stem) : to_json(g) + "\n"});
  };
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    const PlaneGraph g = graph_of(diagrams[i], true);
    const std::string n = std::to_string(i + 1);
    if (which != GraphSelection::GDual) emit(g, "G_" + n);
    if (which != GraphSelection::G) emit(dual(g), "Gstar_" + n);
  }
  return out;
}

namespace {

ordered_json scan_node(const ScanReport& r, int crossing_cap) {
  ordered_json j;
  j["crossing_cap"] = crossing_cap;
  ordered_json items = ordered_json::array();
  for (const auto& inst : r.instances) {
    ordered_json e;
    e["symbol"] = inst.symbol;
    e["crossings"] = inst.crossings;
    e["expectation"] = to_string(inst.expectation);
    e["reason"] = inst.reason;
    e["outcome"] = to_string(inst.outcome);
    e["notice"] = inst.notice;
    if (inst.verdict)
      e["verdict"] = verdict_node(*inst.verdict, nullptr);
    else
      e["verdict"] = nullptr;
    items.push_back(std::move(e));
  }
  j["instances"] = items;
  j["scoreboard"] = {{"instances", r.instances.size()},
                     {"match", r.matches},
                     {"mismatch", r.mismatches},
                     {"no_expectation", r.unchecked},
                     {"skipped", r.skipped}};
  return j;
}

std::string scan_text(const ScanReport& r) {
  std::ostringstream os;
  for (const auto& inst : r.instances) {
    os << to_string(inst.outcome) << "  " << inst.symbol << "  (" << inst.crossings << " crossings)  expect "
       << to_string(inst.expectation);
    if (inst.verdict) {
      const Verdict& v = *inst.verdict;
      os << "  got " << (v.amphicheiral ? (v.dh_link ? "amphicheiral, DH" : "amphicheiral, self-dual diagram")
                                        : "chiral");
    }
    if (!inst.notice.empty()) os << "  [" << inst.notice << "]";
    os << '\n';
  }
  os << "instances " << r.instances.size() << ", match " << r.matches << ", mismatch " << r.mismatches
     << ", no expectation " << r.unchecked << ", skipped " << r.skipped << '\n';
  return os.str();
}

}  // namespace

std::string report_scan(const std::vector<std::string>& symbols, int crossing_cap, const RunConfig& cfg) {
  ScanOptions opt;
  opt.crossing_cap = crossing_cap;
  opt.threads = cfg.threads;
  opt.classify = classify_options(cfg);
  opt.classify.orbit.threads = 1;
  const ScanReport r = scan_family(symbols, opt);
  if (cfg.format == OutputFormat::Table) return scan_text(r);
  ordered_json j;
  j["config"] = config_node(cfg);
  j["scan"] = scan_node(r, crossing_cap);
  return j.dump(2) + "\n";
}

// --- verify-paper -----------------------------------------------------------

namespace {

struct Fixture {
  std::string id, claim, expected, actual;
  bool pass = false;
};

class Verifier {
 public:
  explicit Verifier(const RunConfig& cfg) : cfg_(cfg), opt_(classify_options(cfg)) {}

  struct Classified {
    Diagram diagram;
    Orbit orbit;
    Verdict verdict;
  };

  // Classification is shared between fixtures that use the same symbol.
  const Classified& classified(const std::string& symbol) {
    auto it = cache_.find(symbol);
    if (it != cache_.end()) return *it->second;
    auto c = std::make_unique<Classified>();
    c->diagram = build(symbol);
    c->verdict = classify(c->diagram, opt_, &c->orbit);
    return *cache_.emplace(symbol, std::move(c)).first->second;
  }

  template <class F>
  void check(const std::string& id, const std::string& claim, const std::string& expected, F&& actual) {
    Fixture f{id, claim, expected, "", false};
    try {
      f.actual = actual();
    } catch (const std::exception& e) {
      f.actual = std::string("error: ") + e.what();
    }
    f.pass = f.actual == f.expected;
    fixtures_.push_back(std::move(f));
  }

  const std::vector<Fixture>& fixtures() const { return fixtures_; }
  const ClassifyOptions& options() const { return opt_; }
  const RunConfig& config() const { return cfg_; }

 private:
  RunConfig cfg_;
  ClassifyOptions opt_;
  std::map<std::string, std::unique_ptr<Classified>> cache_;
  std::vector<Fixture> fixtures_;
};

std::string b(bool x) { return x ? "true" : "false"; }

std::string counts(const Diagram& d) {
  return std::to_string(d.crossing_count()) + " crossings, " + std::to_string(component_count(d)) + " components";
}

const char* kDH = "(2 1,3) 1 1 (2 1,3)";
const char* kK1 = ".(2,3).(3,2)";
const char* kK2 = ".(2,3).(2,3)";
const char* kSix = "6*(2 1,2) 1.(2,2 1) 1";
const char* kSixD2 = "6*(1,(2,(1,2))).(((2,1),2),1)";
const std::vector<std::string> kDHList = {
    "((((2,1),3),1),1) ((2,1),3)",
    "((((1,2),3),1),1) ((2,1),3)",
    "((1,(3,(2,1))),1) ((2,1),3)",
    "(1,(1,((2,1),3))) ((2,1),3)",
};

void conway_fixtures(Verifier& v) {
  v.check("conway.parse.dh", "product is left-associative", "product(product(product(ramification[product(2,1),3],1),1),ramification[product(2,1),3])", [] {
    std::function<std::string(const TangleExpr&)> show = [&](const TangleExpr& e) -> std::string {
      switch (e.kind) {
        case TangleExpr::Kind::Integer: return std::to_string(e.value);
        case TangleExpr::Kind::Sum: return "sum(" + show(e.children[0]) + "," + show(e.children[1]) + ")";
        case TangleExpr::Kind::Product: return "product(" + show(e.children[0]) + "," + show(e.children[1]) + ")";
        case TangleExpr::Kind::Ramification: {
          std::string s = "ramification[";
          for (std::size_t i = 0; i < e.children.size(); ++i) s += (i ? "," : "") + show(e.children[i]);
          return s + "]";
        }
        case TangleExpr::Kind::Polyhedron: return e.polyhedron;
      }
      return "?";
    };
    return show(parse(kDH));
  });
  v.check("conway.parse.zero", "0 is the elementary tangle Integer(0)", b(true),
          [] { return b(parse("0") == TangleExpr::integer(0)); });
  v.check("conway.parse.6star", "6* slots in order, omitted ones are 1", "(2 1,2) 1|(2,2 1) 1|1|1|1|1", [] {
    const TangleExpr e = parse(kSix);
    std::string s;
    for (std::size_t i = 0; i < e.children.size(); ++i) s += (i ? "|" : "") + render(e.children[i]);
    return s;
  });
  v.check("conway.render.pretzel", "ramification renders with commas", "(2 1,3)",
          [] { return render(to_expr(parse_pretzel("2 1,3"))); });
  v.check("conway.reverse", "reverse of 2 1", "1 2", [] { return render(reverse(parse_rational("2 1"))); });
  v.check("conway.palindromic", "1 1 is palindromic", b(true), [] { return b(is_palindromic(parse_rational("1 1"))); });
  for (const char* p : {"2 1,3", "2 1,2,2"})
    v.check(std::string("conway.pretzel.") + p, "oriented non-integer pretzel", "oriented=true integer=false", [p] {
      const PretzelClass c = classify_pretzel(parse_pretzel(p));
      return "oriented=" + b(c.oriented) + " integer=" + b(c.integer);
    });
  const std::vector<std::tuple<std::string, int, std::string>> fam = {
      {"2 1,3", 1, "(2 1,3) 1 1 (2 1,3)"},
      {"2 1,2", 1, "(2 1,2) 1 1 (2 1,2)"},
      {"2 1,2,2", 2, "(2 1,2,2) 1 1 1 1 1 1 (2 1,2,2)"},
  };
  for (const auto& [p, k, want] : fam)
    v.check("conway.family." + p + ".k" + std::to_string(k), "family symbol", want,
            [&] { return render(generate_family({parse_pretzel(p), k})); });
}

void diagram_fixtures(Verifier& v) {
  v.check("diagram.build.dh", "14-crossing knot", "14 crossings, 1 components", [] { return counts(build(kDH)); });
  v.check("diagram.build.12", "12-crossing link", "12 crossings, multi-component", [] {
    const Diagram d = build("(2 1,2) 1 1 (2 1,2)");
    return std::to_string(d.crossing_count()) + " crossings, " +
           (component_count(d) >= 2 ? "multi-component" : "knot");
  });
  v.check("diagram.build.6star", "16-crossing 3-component link", "16 crossings, 3 components",
          [] { return counts(build(kSix)); });
  v.check("diagram.mirror.dh", "mirror of an alternating diagram is alternating", "14 crossings, alternating=true", [] {
    const Diagram m = mirror(build(kDH));
    return std::to_string(m.crossing_count()) + " crossings, alternating=" + b(is_alternating(m));
  });
  v.check("diagram.sphere_iso.dh13", "minimal diagrams 1 and 3 are distinct", b(false),
          [] { return b(sphere_iso(build(kDHList[0]), build(kDHList[2]), {}).has_value()); });
  v.check("diagram.codes.dh", "four pairwise distinct codes", "4", [] {
    std::set<DiagramCode> codes;
    for (const auto& s : kDHList) codes.insert(projection_code(build(s)));
    return std::to_string(codes.size());
  });
  v.check("diagram.mirror_in_orbit.k1", "mirror of .(2,3).(3,2) is reached by flypes", b(true),
          [&] { return b(v.classified(kK1).verdict.mirror_in_orbit); });
}

void checkerboard_fixtures(Verifier& v) {
  const GraphIsoMode mode = v.options().iso_mode;
  v.check("checkerboard.edges.dh", "one edge per crossing", "14", [] { return std::to_string(graph_of(build(kDH)).edge_count()); });
  v.check("checkerboard.dh.self_dual", "no G_i is isomorphic to G*_i", "false false false false", [&] {
    std::string s;
    for (const auto& sym : kDHList) {
      const PlaneGraph g = graph_of(build(sym));
      s += (s.empty() ? "" : " ") + b(iso(g, dual(g), mode).has_value());
    }
    return s;
  });
  v.check("checkerboard.dh.cross", "G3 ~ G1* and G4 ~ G2*", "true true", [&] {
    const PlaneGraph g1 = graph_of(build(kDHList[0])), g2 = graph_of(build(kDHList[1]));
    const PlaneGraph g3 = graph_of(build(kDHList[2])), g4 = graph_of(build(kDHList[3]));
    return b(iso(g3, dual(g1), mode).has_value()) + " " + b(iso(g4, dual(g2), mode).has_value());
  });
  v.check("checkerboard.k1.self_dual", "G(.(2,3).(3,2)) is self-dual", b(true), [&] {
    const PlaneGraph g = graph_of(build(kK1));
    return b(iso(g, dual(g), mode).has_value());
  });
  v.check("checkerboard.k2.self_dual", "G(.(2,3).(2,3)) is not self-dual", b(false), [&] {
    const PlaneGraph g = graph_of(build(kK2));
    return b(iso(g, dual(g), mode).has_value());
  });
}

void flype_fixtures(Verifier& v) {
  for (auto [sym, size] : std::vector<std::pair<std::string, int>>{{kK1, 1}, {kK2, 1}, {kDH, 4}, {kSix, 16}})
    v.check("flype.orbit." + sym, "number of minimal diagrams", std::to_string(size),
            [&, sym = sym] { return std::to_string(v.classified(sym).verdict.orbit_size); });
  v.check("flype.orbit.dh.list", "the orbit is exactly the four listed diagrams", "4 of 4 listed, 4 shapes", [&] {
    const Orbit& o = v.classified(kDH).orbit;
    std::set<int> shapes;
    int in = 0;
    for (const auto& s : kDHList) {
      const Diagram d = build(s);
      if (o.contains(d)) {
        ++in;
        shapes.insert(o.shape_of(d));
      }
    }
    return std::to_string(in) + " of 4 listed, " + std::to_string(o.shapes.size()) + " shapes" +
           (static_cast<int>(shapes.size()) == 4 ? "" : " (listed cover " + std::to_string(shapes.size()) + ")");
  });
  v.check("flype.invariants", "flypes keep crossing and component counts", b(true), [&] {
    for (const char* sym : {kDH, kK1, kK2, kSix}) {
      const auto& c = v.classified(sym);
      for (const auto& e : c.orbit.entries)
        if (e.diagram.crossing_count() != c.diagram.crossing_count() ||
            component_count(e.diagram) != component_count(c.diagram) || !is_alternating(e.diagram))
          return b(false);
    }
    return b(true);
  });
}

std::string verdict_summary(const Verdict& x) {
  return "amphicheiral=" + b(x.amphicheiral) + " dh=" + b(x.dh_link);
}

bool has_pair(const Verdict& x, int i, int j) {
  return std::find(x.cross_dual_pairs.begin(), x.cross_dual_pairs.end(), std::make_pair(i, j)) != x.cross_dual_pairs.end();
}

void chirality_fixtures(Verifier& v) {
  v.check("chirality.dh", "amphicheiral DH knot with G3~G1*, G4~G2*", "amphicheiral=true dh=true self_dual=none pairs(3,1),(4,2)=true", [&] {
    const Verdict& x = v.classified(kDH).verdict;
    return verdict_summary(x) + " self_dual=" + list_text(x.self_dual_diagrams) +
           " pairs(3,1),(4,2)=" + b(has_pair(x, 3, 1) && has_pair(x, 4, 2));
  });
  v.check("chirality.k1", "amphicheiral, self-dual single diagram", "amphicheiral=true dh=false self_dual=1", [&] {
    const Verdict& x = v.classified(kK1).verdict;
    return verdict_summary(x) + " self_dual=" + list_text(x.self_dual_diagrams);
  });
  v.check("chirality.k2", "chiral mutant", "amphicheiral=false", [&] {
    return "amphicheiral=" + b(v.classified(kK2).verdict.amphicheiral);
  });
  v.check("chirality.6star", "chiral although G1 ~ G*_j for the second drawing",
          "amphicheiral=false pair(1,j) with G*_j ~ G*(D2)=true", [&] {
            const auto& c = v.classified(kSix);
            const PlaneGraph target = dual(graph_of(build(kSixD2)));
            bool found = false;
            for (auto [i, j] : c.verdict.cross_dual_pairs) {
              if (i != 1) continue;
              const PlaneGraph gj = graph_of(c.orbit.entries[c.orbit.shapes[j - 1].representative].diagram);
              if (iso(dual(gj), target, v.options().iso_mode)) found = true;
            }
            return "amphicheiral=" + b(c.verdict.amphicheiral) + " pair(1,j) with G*_j ~ G*(D2)=" + b(found);
          });
  for (const char* sym : {"(2 1,2) 1 1 (2 1,2)", "(2 1,2,2) 1 1 (2 1,2,2)", "(3 1,2 2 1) 1 1 (3 1,2 2 1)",
                          "(3 1,2,2 1) 1 1 (3 1,2,2 1)"})
    v.check(std::string("chirality.family.") + sym, "amphicheiral Dasbach-Hougardy link", "amphicheiral=true dh=true",
            [&, sym] { return verdict_summary(v.classified(sym).verdict); });
  for (auto [sym, want] : std::vector<std::pair<std::string, std::string>>{{kK1, "true"}, {kK2, "false"}, {kDH, "n/a"}})
    v.check("chirality.single_diagram." + sym, "single-diagram criterion", want, [&, sym = sym] {
      const Verdict& x = v.classified(sym).verdict;
      return x.orbit_size == 1 ? b(!x.self_dual_diagrams.empty()) : std::string("n/a");
    });
}

void oracle_fixtures(Verifier& v) {
  for (const char* sym : {kDH, kK1, kK2, kSix, "(2 1,2) 1 1 (2 1,2)"})
    v.check(std::string("bracket.orbit.") + sym, "raw and normalized bracket constant on the orbit", "true true", [&, sym] {
      const auto& c = v.classified(sym);
      const ordered_json o = oracle_node(c.diagram, c.orbit, c.verdict, v.config().threads);
      return b(o["raw_constant_on_orbit"].get<bool>()) + " " + b(o["normalized_constant_on_orbit"].get<bool>());
    });
  for (auto [sym, want] : std::vector<std::pair<std::string, bool>>{{"3", false}, {"2 2", true}, {kDH, true}})
    v.check("bracket.mirror_symmetric." + sym, "normalized bracket symmetry matches the verdict",
            "symmetric=" + b(want) + " amphicheiral=" + b(want), [&, sym = sym] {
              return "symmetric=" + b(mirror_symmetric(build(sym), v.config().threads)) +
                     " amphicheiral=" + b(v.classified(sym).verdict.amphicheiral);
            });
}

std::vector<std::string> experimental_symbols() {
  std::vector<std::string> s;
  for (int p = 2; p <= 4; ++p) {
    const std::string t = "(" + std::to_string(p) + " 1,2) 1 1 (" + std::to_string(p) + " 1,2)";
    s.push_back(t);
  }
  s.push_back("(2 1,2,2) 1 1 (2 1,2,2)");
  s.push_back("(3 1,2,2 1) 1 1 (3 1,2,2 1)");
  s.push_back("(2 1,2,2) 1 1 1 1 1 1 (2 1,2,2)");
  s.push_back("(3,3) 1 1 (3,3)");
  for (auto& x : enumerate_family_symbols(2, 4, 6, 1, 1, 16, true)) s.push_back(x);
  return s;
}

}  // namespace

VerifyResult verify_paper(const RunConfig& cfg) {
  Verifier v(cfg);
  conway_fixtures(v);
  diagram_fixtures(v);
  checkerboard_fixtures(v);
  flype_fixtures(v);
  chirality_fixtures(v);
  if (cfg.oracle_checks) oracle_fixtures(v);

  ScanOptions so;
  so.crossing_cap = 20;
  so.threads = cfg.threads;
  so.classify = v.options();
  so.classify.orbit.threads = 1;
  const ScanReport scan = scan_family(experimental_symbols(), so);

  VerifyResult r;
  r.fixtures = static_cast<int>(v.fixtures().size());
  for (const auto& f : v.fixtures()) r.failures += f.pass ? 0 : 1;
  r.passed = r.failures == 0;

  if (cfg.format == OutputFormat::Table) {
    std::ostringstream os;
    for (const auto& f : v.fixtures()) {
      os << (f.pass ? "PASS  " : "FAIL  ") << f.id << "  " << f.claim << '\n';
      if (!f.pass) os << "      expected: " << f.expected << "\n      actual:   " << f.actual << '\n';
    }
    os << "\nconjecture scan (reported, not gating)\n" << scan_text(scan);
    os << "\n" << (r.fixtures - r.failures) << "/" << r.fixtures << " fixtures passed\n";
    r.report = os.str();
    return r;
  }
  ordered_json j;
  j["config"] = config_node(cfg);
  ordered_json fx = ordered_json::array();
  for (const auto& f : v.fixtures())
    fx.push_back({{"id", f.id}, {"claim", f.claim}, {"expected", f.expected}, {"actual", f.actual}, {"pass", f.pass}});
  j["fixtures"] = fx;
  j["conjecture_scan"] = scan_node(scan, so.crossing_cap);
  j["summary"] = {{"fixtures", r.fixtures}, {"failures", r.failures}, {"passed", r.passed}};
  r.report = j.dump(2) + "\n";
  return r;
}

}  // namespace amphi
