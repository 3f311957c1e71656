#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "amphichiral/chirality.hpp"

namespace amphi {

enum class OutputFormat { Json, Table, Dot };

const char* to_string(OutputFormat f);
OutputFormat parse_output_format(std::string_view text);

// Everything a report depends on. Defaults come from the bundled
// defaults.json; these are the settings the regression fixtures expect.
struct RunConfig {
  GraphIsoMode iso_mode = GraphIsoMode::Abstract;
  ReflectionPolicy reflection{};
  int max_orbit = 4096;
  int threads = 1;
  OutputFormat format = OutputFormat::Json;
  bool oracle_checks = false;
};

RunConfig default_config();
// Overrides the fields present in a JSON object with the defaults.json keys.
void apply_config_json(RunConfig& cfg, std::string_view json_text);
std::string config_to_json(const RunConfig& cfg);
ClassifyOptions classify_options(const RunConfig& cfg);

// Verdict fields as a JSON object. With the orbit, the mirror's diagram
// number is filled in; without it, mirror_diagram is null.
std::string verdict_to_json(const Verdict& v, const Orbit* orbit = nullptr);

// Parse, build, classify. JSON or table according to cfg.format.
std::string report_classify(std::string_view conway, const RunConfig& cfg);
std::string report_classify(const Diagram& d, std::string_view label, const RunConfig& cfg);

// Flype orbit dump. `named` symbols are built and, when they land in the
// orbit, attached to the matching diagrams as Conway renderings.
std::string report_orbit(std::string_view conway, const RunConfig& cfg,
                         const std::vector<std::string>& named = {});

enum class GraphSelection { G, GDual, Both, AllOrbit };
GraphSelection parse_graph_selection(std::string_view text);

struct NamedText {
  std::string name;  // file name, e.g. "G_1.dot"
  std::string text;
};

// Checkerboard graphs of the input (or of every orbit diagram) as DOT or
// JSON documents, according to cfg.format (table falls back to JSON).
std::vector<NamedText> report_graphs(std::string_view conway, GraphSelection which, const RunConfig& cfg);
std::vector<NamedText> report_graphs(const Diagram& d, GraphSelection which, const RunConfig& cfg);

std::string report_scan(const std::vector<std::string>& symbols, int crossing_cap, const RunConfig& cfg);

struct VerifyResult {
  bool passed = false;
  int fixtures = 0;
  int failures = 0;
  std::string report;
};

// Every regression fixture, checked against the library. The report is
// deterministic: identical for identical configs, whatever cfg.threads is.
VerifyResult verify_paper(const RunConfig& cfg);

}  // namespace amphi
