#include <CLI11.hpp>
#include <iostream>

#include "isohopf/harness.hpp"

using namespace isohopf;

namespace {

struct Common {
  std::string spec_path;
  std::vector<std::string> routes;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t step_budget = 0;
  bool json = false;
};

SectionSpec load(const Common& c, const CLI::App& sub) {
  SectionSpec spec = parse_spec(c.spec_path);
  if (sub.count("--seed")) spec.seed = c.seed;
  if (sub.count("--samples")) spec.samples = c.samples;
  if (sub.count("--step-budget")) spec.step_budget = c.step_budget;
  if (sub.count("--routes")) spec.routes = c.routes;
  return spec;
}

void add_common(CLI::App* sub, Common& c, bool with_spec = true) {
  if (with_spec) sub->add_option("spec", c.spec_path, "JSON section file")->required()->check(CLI::ExistingFile);
  sub->add_option("--routes", c.routes, "routes to run (comma separated)")->delimiter(',');
  sub->add_option("--seed", c.seed, "random seed");
  sub->add_option("--samples", c.samples, "quadrature samples for winding numbers");
  sub->add_option("--step-budget", c.step_budget, "Groebner step budget");
  sub->add_flag("--json", c.json, "machine-readable output");
}

int compute(const Common& c, const CLI::App& sub) {
  SectionSpec spec = load(c, sub);
  IndexReport rep = cross_validate(spec);
  if (c.json) std::cout << report_json(rep).dump(2) << "\n";
  else render_report(std::cout, rep);
  return rep.pass ? 0 : 1;
}

int validate_cmd(const Common& c, const CLI::App& sub) {
  SectionSpec spec = load(c, sub);
  IsoSection s = validate(spec.section(), spec.groebner());
  std::size_t len = colength(PolyIdeal(s.ring, s.components), spec.groebner());
  if (c.json) {
    nlohmann::ordered_json j = spec_to_json(spec);
    j["valid"] = true;
    j["length_Z"] = len;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << spec.name << ": valid isotropic section, length Z(s) = " << len << "\n";
  }
  return 0;
}

int cone_cmd(const Common& c, const CLI::App& sub) {
  SectionSpec spec = load(c, sub);
  IsoSection s = validate(spec.section(), spec.groebner());
  ConeData cone = normal_cone_ideal(s, ConeMethod::Saturation, spec.groebner());
  std::size_t segre = segre_class(cone, spec.groebner());
  std::optional<ConeBidegree> bd;
  if (s.n() == 2) bd = cone_bidegree_n2(cone, spec.seed, spec.groebner());
  if (c.json) {
    nlohmann::ordered_json j;
    std::vector<std::string> gens;
    for (const auto& g : cone.ideal.generators()) gens.push_back(g.to_string());
    j["ring"] = cone.ring->names();
    j["cone_ideal"] = gens;
    j["segre"] = segre;
    if (bd) j["bidegree"] = {{"alpha", bd->alpha}, {"beta", bd->beta}, {"sqrt_e", bd->sqrt_e}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "cone ideal:\n";
    for (const auto& g : cone.ideal.generators()) std::cout << "  " << g.to_string() << "\n";
    std::cout << "segre = " << segre << "\n";
    if (bd) std::cout << "bidegree (alpha, beta) = (" << bd->alpha << ", " << bd->beta << "), sqrt_e = " << bd->sqrt_e << "\n";
  }
  return 0;
}

int degree_cmd(const Common& c, const CLI::App& sub) {
  SectionSpec spec = load(c, sub);
  IsoSection s = validate(spec.section(), spec.groebner());
  SphereDegreeOptions so;
  so.samples = spec.samples;
  so.seed = spec.seed;
  WindingCheck w = oh1_check(s, so);
  if (c.json) {
    nlohmann::ordered_json j;
    j["degree"] = w.degree;
    j["s_plus"] = {{"raw", w.plus.raw}, {"residual", w.plus.residual}};
    j["s_minus"] = {{"raw", w.minus.raw}, {"residual", w.minus.residual}};
    j["samples"] = so.samples;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "deg s+ = " << w.plus.degree << " (raw " << w.plus.raw << ")\n"
              << "deg s- = " << w.minus.degree << " (raw " << w.minus.raw << ")\n";
  }
  return 0;
}

int suite_cmd(const Common& c, const CLI::App& sub) {
  RunOptions opts;
  if (sub.count("--seed")) opts.seed = c.seed;
  if (sub.count("--samples")) opts.samples = c.samples;
  if (sub.count("--step-budget")) opts.groebner.step_budget = c.step_budget;
  SuiteResult res = paper_suite(std::cout, opts);
  for (const auto& f : res.failures) std::cout << "FAIL " << f << "\n";
  std::cout << (res.pass() ? "all rows pass" : "suite failed") << "\n";
  return res.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Square-root Euler class of isotropic sections"};
  app.require_subcommand(1);
  Common compute_o, validate_o, cone_o, degree_o, suite_o;
  auto* c1 = app.add_subcommand("compute", "run the routes and cross-validate");
  add_common(c1, compute_o);
  auto* c2 = app.add_subcommand("validate", "check a section file");
  add_common(c2, validate_o);
  auto* c3 = app.add_subcommand("cone", "normal cone ideal, Segre number and bidegree");
  add_common(c3, cone_o);
  auto* c4 = app.add_subcommand("degree", "winding numbers of the real and imaginary parts");
  add_common(c4, degree_o);
  auto* c5 = app.add_subcommand("paper-suite", "regression grid");
  add_common(c5, suite_o, false);
  CLI11_PARSE(app, argc, argv);
  try {
    if (*c1) return compute(compute_o, *c1);
    if (*c2) return validate_cmd(validate_o, *c2);
    if (*c3) return cone_cmd(cone_o, *c3);
    if (*c4) return degree_cmd(degree_o, *c4);
    if (*c5) return suite_cmd(suite_o, *c5);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
