#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "isohopf/cone.hpp"
#include "isohopf/numeric_topology.hpp"
#include "isohopf/routes.hpp"
#include "isohopf/spec_file.hpp"

namespace isohopf {

// Fixed report order.
const std::vector<std::string>& all_routes();
bool is_numeric_route(const std::string& route);

struct RouteOutcome {
  std::string route;
  enum class Status { Ok, NotApplicable, Failed } status = Status::Failed;
  std::optional<RefinedIndex> result;
  std::optional<Errc> code;
  std::string message;
};

struct IndexReport {
  std::string name;
  std::vector<RouteOutcome> outcomes;
  std::optional<std::size_t> length_z;
  std::optional<std::size_t> segre;
  std::optional<long> sqrt_e, d1, d2;
  std::vector<std::string> issues;
  bool pass = false;
};

struct RunOptions {
  std::vector<std::string> routes;  // empty: every route
  std::uint64_t seed = 0;
  std::size_t samples = 200000;
  GroebnerOptions groebner;
  bool parallel = true;
};

RouteOutcome run_route(const std::string& route, const IsoSection& s, const std::optional<SpinData>& spin,
                       const RunOptions& opts);

// Runs the routes, compares them, and fills the verdict.
IndexReport cross_validate(const IsoSection& s, const std::optional<SpinData>& spin, const RunOptions& opts,
                           const std::string& name = "");
IndexReport cross_validate(const SectionSpec& spec, const std::vector<std::string>& routes = {});

nlohmann::ordered_json report_json(const IndexReport& r);
void render_report(std::ostream& out, const IndexReport& r);

// Rows of the regression suite: a section, the values it must produce, and the routes to run.
struct SuiteRow {
  std::string name;
  IsoSection section;
  std::optional<SpinData> spin;
  long sqrt_e = 0;
  std::optional<long> d1, d2;
  std::optional<std::size_t> segre;
  std::vector<std::string> routes;
};

struct SuiteResult {
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

std::vector<SuiteRow> paper_suite_rows();
SuiteResult run_suite(const std::vector<SuiteRow>& rows, std::ostream& table, const RunOptions& opts = {});
SuiteResult paper_suite(std::ostream& table, const RunOptions& opts = {});

}  // namespace isohopf
