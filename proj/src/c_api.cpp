#include "amphichiral/amphichiral.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "amphichiral/bracket.hpp"
#include "amphichiral/build.hpp"
#include "amphichiral/chirality.hpp"
#include "amphichiral/error.hpp"
#include "amphichiral/io.hpp"
#include "amphichiral/report.hpp"
#include "json.hpp"

struct amphi_config {
  amphi::RunConfig cfg;
};
struct amphi_diagram {
  amphi::Diagram d;
};
struct amphi_verdict {
  amphi::Verdict v;
  amphi::Orbit orbit;
};
struct amphi_orbit {
  amphi::Orbit orbit;
};
struct amphi_graph_set {
  std::vector<amphi::NamedText> files;
};

namespace {

thread_local std::string g_last_error;

amphi_status fail(amphi_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

amphi_status status_of(amphi::ErrorKind k) {
  switch (k) {
    case amphi::ErrorKind::InvalidArgument: return AMPHI_INVALID_ARGUMENT;
    case amphi::ErrorKind::Parse: return AMPHI_PARSE;
    case amphi::ErrorKind::Build: return AMPHI_BUILD;
    case amphi::ErrorKind::Precondition: return AMPHI_PRECONDITION;
    case amphi::ErrorKind::OrbitOverflow: return AMPHI_ORBIT_OVERFLOW;
    case amphi::ErrorKind::CapExceeded: return AMPHI_CAP_EXCEEDED;
  }
  return AMPHI_INTERNAL;
}

// Runs f, translating exceptions into status codes.
template <class F>
amphi_status guard(F&& f) {
  g_last_error.clear();
  try {
    f();
    return AMPHI_OK;
  } catch (const amphi::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(AMPHI_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(AMPHI_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(AMPHI_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

amphi::RunConfig config_or_default(const amphi_config* cfg) { return cfg ? cfg->cfg : amphi::default_config(); }

#define AMPHI_REQUIRE(cond) \
  if (!(cond)) return fail(AMPHI_INVALID_ARGUMENT, "null or invalid argument: " #cond)

std::vector<std::string> string_array(const char* json_text) {
  const auto j = nlohmann::json::parse(json_text);
  if (!j.is_array()) throw amphi::Error(amphi::ErrorKind::Parse, "expected a JSON array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(x.get<std::string>());
  return out;
}

}  // namespace

extern "C" {

const char* amphi_version(void) { return "1.0.0"; }

const char* amphi_status_name(amphi_status s) {
  switch (s) {
    case AMPHI_OK: return "ok";
    case AMPHI_INVALID_ARGUMENT: return "invalid argument";
    case AMPHI_PARSE: return "parse error";
    case AMPHI_BUILD: return "build error";
    case AMPHI_PRECONDITION: return "precondition failed";
    case AMPHI_ORBIT_OVERFLOW: return "orbit overflow";
    case AMPHI_CAP_EXCEEDED: return "cap exceeded";
    case AMPHI_IO: return "i/o error";
    case AMPHI_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* amphi_last_error(void) { return g_last_error.c_str(); }

void amphi_string_free(char* s) { std::free(s); }

// --- config ------------------------------------------------------------------

amphi_status amphi_config_new(amphi_config** out) {
  AMPHI_REQUIRE(out);
  *out = nullptr;
  return guard([&] { *out = new amphi_config{amphi::default_config()}; });
}

amphi_status amphi_config_apply_json(amphi_config* cfg, const char* json) {
  AMPHI_REQUIRE(cfg && json);
  // Applied to a copy so a bad document leaves cfg untouched.
  return guard([&] {
    amphi::RunConfig c = cfg->cfg;
    amphi::apply_config_json(c, json);
    cfg->cfg = c;
  });
}

amphi_status amphi_config_set_iso_mode(amphi_config* cfg, const char* mode) {
  AMPHI_REQUIRE(cfg && mode);
  const auto m = amphi::parse_iso_mode(mode);
  if (!m) return fail(AMPHI_INVALID_ARGUMENT, std::string("unknown iso mode '") + mode + "'");
  cfg->cfg.iso_mode = *m;
  return AMPHI_OK;
}

amphi_status amphi_config_set_reflection(amphi_config* cfg, int allow) {
  AMPHI_REQUIRE(cfg);
  cfg->cfg.reflection.allow_reflection = allow != 0;
  return AMPHI_OK;
}

amphi_status amphi_config_set_max_orbit(amphi_config* cfg, int max_orbit) {
  AMPHI_REQUIRE(cfg);
  if (max_orbit < 1) return fail(AMPHI_INVALID_ARGUMENT, "max_orbit must be at least 1");
  cfg->cfg.max_orbit = max_orbit;
  return AMPHI_OK;
}

amphi_status amphi_config_set_threads(amphi_config* cfg, int threads) {
  AMPHI_REQUIRE(cfg);
  if (threads < 1) return fail(AMPHI_INVALID_ARGUMENT, "threads must be at least 1");
  cfg->cfg.threads = threads;
  return AMPHI_OK;
}

amphi_status amphi_config_set_format(amphi_config* cfg, const char* format) {
  AMPHI_REQUIRE(cfg && format);
  return guard([&] { cfg->cfg.format = amphi::parse_output_format(format); });
}

amphi_status amphi_config_set_oracle_checks(amphi_config* cfg, int enabled) {
  AMPHI_REQUIRE(cfg);
  cfg->cfg.oracle_checks = enabled != 0;
  return AMPHI_OK;
}

amphi_status amphi_config_to_json(const amphi_config* cfg, char** out) {
  AMPHI_REQUIRE(cfg && out);
  return guard([&] { *out = dup(amphi::config_to_json(cfg->cfg)); });
}

void amphi_config_free(amphi_config* cfg) { delete cfg; }

// --- diagrams ----------------------------------------------------------------

amphi_status amphi_diagram_from_conway(const char* conway, amphi_diagram** out) {
  AMPHI_REQUIRE(conway && out);
  *out = nullptr;
  return guard([&] { *out = new amphi_diagram{amphi::build(std::string_view(conway))}; });
}

amphi_status amphi_diagram_from_pd(const char* pd, amphi_diagram** out) {
  AMPHI_REQUIRE(pd && out);
  *out = nullptr;
  return guard([&] {
    std::string_view s(pd);
    const auto first = s.find_first_not_of(" \t\r\n");
    const bool json = first != std::string_view::npos && (s[first] == '{' || s[first] == '[');
    *out = new amphi_diagram{json ? amphi::pd_from_json(s) : amphi::pd_from_text(s)};
  });
}

amphi_status amphi_diagram_mirror(const amphi_diagram* d, amphi_diagram** out) {
  AMPHI_REQUIRE(d && out);
  return guard([&] { *out = new amphi_diagram{amphi::mirror(d->d)}; });
}

int amphi_diagram_crossings(const amphi_diagram* d) { return d ? d->d.crossing_count() : -1; }

int amphi_diagram_components(const amphi_diagram* d) { return d ? amphi::component_count(d->d) : -1; }

int amphi_diagram_is_alternating(const amphi_diagram* d) { return d ? amphi::is_alternating(d->d) : -1; }

amphi_status amphi_diagram_pd_json(const amphi_diagram* d, char** out) {
  AMPHI_REQUIRE(d && out);
  return guard([&] { *out = dup(amphi::pd_to_json(d->d)); });
}

amphi_status amphi_diagram_pd_text(const amphi_diagram* d, char** out) {
  AMPHI_REQUIRE(d && out);
  return guard([&] { *out = dup(amphi::pd_to_text(d->d)); });
}

amphi_status amphi_diagram_equivalent(const amphi_diagram* a, const amphi_diagram* b, int* out) {
  AMPHI_REQUIRE(a && b && out);
  return guard([&] { *out = amphi::sphere_iso(a->d, b->d, {}).has_value(); });
}

void amphi_diagram_free(amphi_diagram* d) { delete d; }

// --- classification ----------------------------------------------------------

amphi_status amphi_classify(const amphi_diagram* d, const amphi_config* cfg, amphi_verdict** out) {
  AMPHI_REQUIRE(d && out);
  *out = nullptr;
  return guard([&] {
    auto v = std::make_unique<amphi_verdict>();
    v->v = amphi::classify(d->d, amphi::classify_options(config_or_default(cfg)), &v->orbit);
    *out = v.release();
  });
}

int amphi_verdict_amphicheiral(const amphi_verdict* v) { return v ? v->v.amphicheiral : -1; }
int amphi_verdict_dh_link(const amphi_verdict* v) { return v ? v->v.dh_link : -1; }
int amphi_verdict_orbit_size(const amphi_verdict* v) { return v ? v->v.orbit_size : -1; }
int amphi_verdict_labeled_orbit_size(const amphi_verdict* v) { return v ? v->v.labeled_orbit_size : -1; }

size_t amphi_verdict_self_dual_count(const amphi_verdict* v) { return v ? v->v.self_dual_diagrams.size() : 0; }

int amphi_verdict_self_dual(const amphi_verdict* v, size_t index) {
  return v && index < v->v.self_dual_diagrams.size() ? v->v.self_dual_diagrams[index] : -1;
}

size_t amphi_verdict_pair_count(const amphi_verdict* v) { return v ? v->v.cross_dual_pairs.size() : 0; }

amphi_status amphi_verdict_pair(const amphi_verdict* v, size_t index, int* i, int* j) {
  AMPHI_REQUIRE(v && i && j);
  if (index >= v->v.cross_dual_pairs.size()) return fail(AMPHI_INVALID_ARGUMENT, "pair index out of range");
  *i = v->v.cross_dual_pairs[index].first;
  *j = v->v.cross_dual_pairs[index].second;
  return AMPHI_OK;
}

amphi_status amphi_verdict_json(const amphi_verdict* v, char** out) {
  AMPHI_REQUIRE(v && out);
  return guard([&] { *out = dup(amphi::verdict_to_json(v->v, &v->orbit)); });
}

void amphi_verdict_free(amphi_verdict* v) { delete v; }

// --- orbit -------------------------------------------------------------------

amphi_status amphi_orbit_compute(const amphi_diagram* d, const amphi_config* cfg, amphi_orbit** out) {
  AMPHI_REQUIRE(d && out);
  *out = nullptr;
  return guard([&] {
    const amphi::RunConfig c = config_or_default(cfg);
    amphi::require_flype_preconditions(d->d);
    amphi::OrbitOptions opt;
    opt.max_size = c.max_orbit;
    opt.threads = c.threads;
    *out = new amphi_orbit{amphi::flype_orbit(d->d, opt)};
  });
}

int amphi_orbit_size(const amphi_orbit* o) { return o ? static_cast<int>(o->orbit.shapes.size()) : -1; }

int amphi_orbit_labeled_size(const amphi_orbit* o) { return o ? static_cast<int>(o->orbit.entries.size()) : -1; }

amphi_status amphi_orbit_diagram(const amphi_orbit* o, int index, amphi_diagram** out) {
  AMPHI_REQUIRE(o && out);
  if (index < 1 || index > static_cast<int>(o->orbit.shapes.size()))
    return fail(AMPHI_INVALID_ARGUMENT, "orbit index out of range");
  return guard([&] {
    *out = new amphi_diagram{o->orbit.entries[o->orbit.shapes[index - 1].representative].diagram};
  });
}

amphi_status amphi_orbit_find(const amphi_orbit* o, const amphi_diagram* d, int* index) {
  AMPHI_REQUIRE(o && d && index);
  return guard([&] { *index = o->orbit.contains(d->d) ? o->orbit.shape_of(d->d) + 1 : 0; });
}

void amphi_orbit_free(amphi_orbit* o) { delete o; }

// --- graphs ------------------------------------------------------------------

amphi_status amphi_graphs(const char* conway, const char* which, const amphi_config* cfg, amphi_graph_set** out) {
  AMPHI_REQUIRE(conway && which && out);
  *out = nullptr;
  return guard([&] {
    const auto sel = amphi::parse_graph_selection(which);
    *out = new amphi_graph_set{amphi::report_graphs(conway, sel, config_or_default(cfg))};
  });
}

amphi_status amphi_graphs_of_diagram(const amphi_diagram* d, const char* which, const amphi_config* cfg,
                                     amphi_graph_set** out) {
  AMPHI_REQUIRE(d && which && out);
  *out = nullptr;
  return guard([&] {
    const auto sel = amphi::parse_graph_selection(which);
    *out = new amphi_graph_set{amphi::report_graphs(d->d, sel, config_or_default(cfg))};
  });
}

size_t amphi_graph_set_size(const amphi_graph_set* g) { return g ? g->files.size() : 0; }

const char* amphi_graph_set_name(const amphi_graph_set* g, size_t index) {
  return g && index < g->files.size() ? g->files[index].name.c_str() : nullptr;
}

const char* amphi_graph_set_text(const amphi_graph_set* g, size_t index) {
  return g && index < g->files.size() ? g->files[index].text.c_str() : nullptr;
}

void amphi_graph_set_free(amphi_graph_set* g) { delete g; }

// --- reports -----------------------------------------------------------------

amphi_status amphi_report_classify(const char* conway, const amphi_config* cfg, char** out) {
  AMPHI_REQUIRE(conway && out);
  return guard([&] { *out = dup(amphi::report_classify(conway, config_or_default(cfg))); });
}

amphi_status amphi_report_classify_diagram(const amphi_diagram* d, const char* label, const amphi_config* cfg,
                                            char** out) {
  AMPHI_REQUIRE(d && label && out);
  return guard([&] { *out = dup(amphi::report_classify(d->d, label, config_or_default(cfg))); });
}

amphi_status amphi_report_orbit(const char* conway, const char* names_json, const amphi_config* cfg, char** out) {
  AMPHI_REQUIRE(conway && out);
  return guard([&] {
    const auto names = names_json ? string_array(names_json) : std::vector<std::string>{};
    *out = dup(amphi::report_orbit(conway, config_or_default(cfg), names));
  });
}

amphi_status amphi_report_scan(const char* symbols_json, int crossing_cap, const amphi_config* cfg, char** out) {
  AMPHI_REQUIRE(symbols_json && out);
  return guard([&] { *out = dup(amphi::report_scan(string_array(symbols_json), crossing_cap, config_or_default(cfg))); });
}

amphi_status amphi_verify_paper(const amphi_config* cfg, int* passed, char** report) {
  AMPHI_REQUIRE(passed || report);
  return guard([&] {
    const auto r = amphi::verify_paper(config_or_default(cfg));
    if (passed) *passed = r.passed;
    if (report) *report = dup(r.report);
  });
}

amphi_status amphi_family_symbols(const char* pretzel, int k_min, int k_max, char** out) {
  AMPHI_REQUIRE(pretzel && out);
  return guard([&] {
    *out = dup(nlohmann::json(amphi::family_symbols(amphi::parse_pretzel(pretzel), k_min, k_max)).dump());
  });
}

amphi_status amphi_enumerate_family_symbols(int n_min, int n_max, int max_entry, int max_length, int k,
                                            int crossing_cap, int integer_only, char** out) {
  AMPHI_REQUIRE(out);
  return guard([&] {
    *out = dup(nlohmann::json(amphi::enumerate_family_symbols(n_min, n_max, max_entry, max_length, k, crossing_cap,
                                                              integer_only != 0))
                   .dump());
  });
}

// --- bracket -----------------------------------------------------------------

amphi_status amphi_bracket(const amphi_diagram* d, int threads, char** out) {
  AMPHI_REQUIRE(d && out && threads >= 1);
  return guard([&] { *out = dup(amphi::bracket(d->d, threads).to_string()); });
}

amphi_status amphi_normalized_bracket(const amphi_diagram* d, int threads, char** out) {
  AMPHI_REQUIRE(d && out && threads >= 1);
  return guard([&] { *out = dup(amphi::normalized(d->d, {}, threads).to_string()); });
}

amphi_status amphi_writhe(const amphi_diagram* d, int* out) {
  AMPHI_REQUIRE(d && out);
  return guard([&] { *out = amphi::writhe(d->d); });
}

amphi_status amphi_mirror_symmetric(const amphi_diagram* d, int threads, int* out) {
  AMPHI_REQUIRE(d && out && threads >= 1);
  return guard([&] { *out = amphi::mirror_symmetric(d->d, threads); });
}

}  // extern "C"
