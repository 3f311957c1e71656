// amphi: command-line front end over the C API.
//
// Exit codes: 0 success, 1 verify-paper fixture failure, 2 usage or parse
// error, 3 build or precondition failure, 4 orbit overflow, 5 crossing cap
// exceeded, 6 file i/o error, 7 internal error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "amphichiral/amphichiral.h"
#include "json.hpp"

namespace {

int exit_code(amphi_status s) {
  switch (s) {
    case AMPHI_OK: return 0;
    case AMPHI_INVALID_ARGUMENT:
    case AMPHI_PARSE: return 2;
    case AMPHI_BUILD:
    case AMPHI_PRECONDITION: return 3;
    case AMPHI_ORBIT_OVERFLOW: return 4;
    case AMPHI_CAP_EXCEEDED: return 5;
    case AMPHI_IO: return 6;
    case AMPHI_INTERNAL: return 7;
  }
  return 7;
}

struct Failure {
  amphi_status status;
  std::string message;
};

void check(amphi_status s) {
  if (s != AMPHI_OK) throw Failure{s, amphi_last_error()};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  amphi_string_free(s);
  return out;
}

struct ConfigHandle {
  amphi_config* p = nullptr;
  ConfigHandle() { check(amphi_config_new(&p)); }
  ~ConfigHandle() { amphi_config_free(p); }
  ConfigHandle(const ConfigHandle&) = delete;
  ConfigHandle& operator=(const ConfigHandle&) = delete;
};

struct Options {
  std::string config_file;
  std::optional<std::string> iso_mode, format;
  bool reflection = false, oracle_checks = false;
  std::optional<int> max_orbit, threads;
  std::string out_dir;
};

void configure(ConfigHandle& cfg, const Options& o, bool graphs) {
  if (!o.config_file.empty()) {
    std::ifstream in(o.config_file);
    if (!in) {
      throw Failure{AMPHI_IO, "cannot read " + o.config_file};
    }
    std::stringstream ss;
    ss << in.rdbuf();
    check(amphi_config_apply_json(cfg.p, ss.str().c_str()));
  }
  if (o.iso_mode) check(amphi_config_set_iso_mode(cfg.p, o.iso_mode->c_str()));
  if (o.reflection) check(amphi_config_set_reflection(cfg.p, 1));
  if (o.oracle_checks) check(amphi_config_set_oracle_checks(cfg.p, 1));
  if (o.max_orbit) check(amphi_config_set_max_orbit(cfg.p, *o.max_orbit));
  if (o.threads) check(amphi_config_set_threads(cfg.p, *o.threads));
  if (o.format) {
    if (*o.format == "dot" && !graphs) {
      throw Failure{AMPHI_INVALID_ARGUMENT, "--format dot applies to the graphs command only"};
    }
    check(amphi_config_set_format(cfg.p, o.format->c_str()));
  } else if (graphs) {
    check(amphi_config_set_format(cfg.p, "dot"));
  }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Failure{AMPHI_IO, "cannot write " + path.string()};
}

// Prints the report, or stores it under --out-dir.
void emit(const Options& o, const std::string& stem, const std::string& text, bool table) {
  if (o.out_dir.empty()) {
    std::cout << text;
    return;
  }
  const auto path = std::filesystem::path(o.out_dir) / (stem + (table ? ".txt" : ".json"));
  write_file(path, text);
  std::cout << path.string() << '\n';
}

bool is_table(const Options& o) { return o.format && *o.format == "table"; }

// "a..b" or a single integer.
std::pair<int, int> parse_range(const std::string& text) {
  static const std::regex re(R"(\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw CLI::ValidationError("range", "expected N or A..B, got '" + text + "'");
  const int a = std::stoi(m[1]);
  return {a, m[2].matched ? std::stoi(m[2]) : a};
}

// Expands a template such as "(p 1,2) 1 1 (p 1,2)" over --var p=2..4
// bindings; several variables give their cartesian product.
std::vector<std::string> expand_template(const std::string& tmpl, const std::vector<std::string>& vars) {
  std::vector<std::string> out{tmpl};
  for (const auto& v : vars) {
    const auto eq = v.find('=');
    if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("--var", "expected NAME=A..B, got '" + v + "'");
    const std::string name = v.substr(0, eq);
    if (!std::regex_match(name, std::regex("[A-Za-z_][A-Za-z0-9_]*")))
      throw CLI::ValidationError("--var", "variable names are letters, digits and underscores");
    const auto [lo, hi] = parse_range(v.substr(eq + 1));
    const std::regex word("\\b" + name + "\\b");
    std::vector<std::string> next;
    for (const auto& s : out)
      for (int x = lo; x <= hi; ++x) next.push_back(std::regex_replace(s, word, std::to_string(x)));
    out = std::move(next);
  }
  return out;
}

// PD input given inline or as a file name.
amphi_diagram* read_pd(const std::string& arg) {
  std::string text = arg;
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    if (!in && !in.eof()) throw Failure{AMPHI_IO, "cannot read " + arg};
    text = ss.str();
  }
  amphi_diagram* d = nullptr;
  check(amphi_diagram_from_pd(text.c_str(), &d));
  return d;
}

std::vector<std::string> json_strings(const std::string& text) {
  return nlohmann::json::parse(text).get<std::vector<std::string>>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Amphicheirality of alternating links via flype orbits and checkerboard graphs", "amphi"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(amphi_version()));

  Options o;
  app.add_option("--config", o.config_file, "JSON file overriding the default configuration");
  app.add_option("--iso-mode", o.iso_mode, "graph isomorphism: abstract, embedded or embedded-reflection");
  app.add_flag("--reflection", o.reflection, "also accept a reflected copy of the mirror in the orbit");
  app.add_option("--max-orbit", o.max_orbit, "abort when an orbit exceeds this many diagrams");
  app.add_option("--format", o.format, "json, table or dot (graphs only)");
  app.add_flag("--oracle-checks", o.oracle_checks, "cross-check results with the Kauffman bracket");
  app.add_option("--out-dir", o.out_dir, "write output files here instead of standard output");
  app.add_option("--threads", o.threads, "worker threads");

  std::string conway, pd;
  auto* classify = app.add_subcommand("classify", "decide amphicheirality of a Conway symbol");
  auto* classify_input = classify->add_option("conway", conway, "Conway symbol");
  classify->add_option("--pd", pd, "planar diagram code (text, JSON, or a file containing either)")
      ->excludes(classify_input);

  std::vector<std::string> names;
  auto* orbit = app.add_subcommand("orbit", "list the minimal diagrams reached by flypes");
  orbit->add_option("conway", conway, "Conway symbol")->required();
  orbit->add_option("--name", names, "Conway symbol to locate in the orbit (repeatable)");

  std::string which = "both";
  auto* graphs = app.add_subcommand("graphs", "export checkerboard graphs");
  auto* graphs_input = graphs->add_option("conway", conway, "Conway symbol");
  graphs->add_option("--pd", pd, "planar diagram code instead of a symbol; PD[] is the unknot")
      ->excludes(graphs_input);
  graphs->add_option("--which", which, "G, Gdual, both or all-orbit")
      ->check(CLI::IsMember({"G", "Gdual", "both", "all-orbit"}));

  std::vector<std::string> symbols, vars;
  std::string tmpl, pretzel, k_range = "1", enumerate, components = "2..3";
  int max_crossings = 16, max_entry = 5, max_length = 1;
  auto* scan = app.add_subcommand("scan", "classify a family and score it against the conjecture");
  scan->add_option("symbols", symbols, "Conway symbols");
  scan->add_option("--template", tmpl, "symbol template with integer variables");
  scan->add_option("--var", vars, "NAME=A..B binding for --template (repeatable)");
  scan->add_option("--pretzel", pretzel, "pretzel P for the family (P) 1^(4k-2) (P)");
  scan->add_option("--k", k_range, "k or k range for --pretzel and --enumerate");
  scan->add_option("--enumerate", enumerate, "enumerate oriented pretzels: integer or all")
      ->check(CLI::IsMember({"integer", "all"}));
  scan->add_option("--components", components, "pretzel part counts for --enumerate");
  scan->add_option("--max-entry", max_entry, "largest integer entry for --enumerate");
  scan->add_option("--max-length", max_length, "longest rational part for --enumerate");
  scan->add_option("--max-crossings", max_crossings, "skip instances above this many crossings");

  auto* verify = app.add_subcommand("verify-paper", "run the built-in regression fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    ConfigHandle cfg;
    configure(cfg, o, app.got_subcommand(graphs));
    const bool table = is_table(o);

    if (app.got_subcommand(classify)) {
      if (!pd.empty()) {
        amphi_diagram* d = read_pd(pd);
        char* out = nullptr;
        const amphi_status s = amphi_report_classify_diagram(d, pd.c_str(), cfg.p, &out);
        amphi_diagram_free(d);
        check(s);
        emit(o, "classify", take(out), table);
        return 0;
      }
      if (conway.empty()) {
        std::cerr << "amphi: classify needs a Conway symbol or --pd\n";
        return 2;
      }
      char* out = nullptr;
      check(amphi_report_classify(conway.c_str(), cfg.p, &out));
      emit(o, "classify", take(out), table);
    } else if (app.got_subcommand(orbit)) {
      char* out = nullptr;
      const std::string names_json = nlohmann::json(names).dump();
      check(amphi_report_orbit(conway.c_str(), names_json.c_str(), cfg.p, &out));
      emit(o, "orbit", take(out), table);
    } else if (app.got_subcommand(graphs)) {
      amphi_graph_set* g = nullptr;
      if (!pd.empty()) {
        amphi_diagram* d = read_pd(pd);
        const amphi_status s = amphi_graphs_of_diagram(d, which.c_str(), cfg.p, &g);
        amphi_diagram_free(d);
        check(s);
      } else if (!conway.empty()) {
        check(amphi_graphs(conway.c_str(), which.c_str(), cfg.p, &g));
      } else {
        std::cerr << "amphi: graphs needs a Conway symbol or --pd\n";
        return 2;
      }
      for (std::size_t i = 0; i < amphi_graph_set_size(g); ++i) {
        const std::string name = amphi_graph_set_name(g, i), text = amphi_graph_set_text(g, i);
        if (o.out_dir.empty()) {
          std::cout << text;
        } else {
          try {
            write_file(std::filesystem::path(o.out_dir) / name, text);
          } catch (...) {
            amphi_graph_set_free(g);
            throw;
          }
          std::cout << (std::filesystem::path(o.out_dir) / name).string() << '\n';
        }
      }
      amphi_graph_set_free(g);
    } else if (app.got_subcommand(scan)) {
      std::vector<std::string> all = symbols;
      if (!tmpl.empty())
        for (auto& s : expand_template(tmpl, vars)) all.push_back(std::move(s));
      else if (!vars.empty())
        throw CLI::ValidationError("--var", "needs --template");
      const auto [k_lo, k_hi] = parse_range(k_range);
      if (!pretzel.empty()) {
        char* out = nullptr;
        check(amphi_family_symbols(pretzel.c_str(), k_lo, k_hi, &out));
        for (auto& s : json_strings(take(out))) all.push_back(std::move(s));
      }
      if (!enumerate.empty()) {
        const auto [n_lo, n_hi] = parse_range(components);
        for (int k = k_lo; k <= k_hi; ++k) {
          char* out = nullptr;
          check(amphi_enumerate_family_symbols(n_lo, n_hi, max_entry, max_length, k, max_crossings,
                                               enumerate == "integer", &out));
          for (auto& s : json_strings(take(out))) all.push_back(std::move(s));
        }
      }
      const std::string symbols_json = nlohmann::json(all).dump();
      char* out = nullptr;
      check(amphi_report_scan(symbols_json.c_str(), max_crossings, cfg.p, &out));
      emit(o, "scan", take(out), table);
    } else if (app.got_subcommand(verify)) {
      int passed = 0;
      char* out = nullptr;
      check(amphi_verify_paper(cfg.p, &passed, &out));
      emit(o, "verify-paper", take(out), table);
      return passed ? 0 : 1;
    }
    return 0;
  } catch (const Failure& f) {
    std::cerr << "amphi: " << amphi_status_name(f.status) << ": " << f.message << '\n';
    return exit_code(f.status);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "amphi: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "amphi: " << e.what() << '\n';
    return 7;
  }
}
