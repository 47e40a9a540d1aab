#include "isohopf/spec_file.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace isohopf {

namespace {

using json = nlohmann::json;

[[noreturn]] void schema(const std::string& field, const std::string& what) {
  fail(Errc::SchemaError, "field '" + field + "': " + what);
}

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

void check_keys(const json& obj, const std::string& where, const std::set<std::string>& allowed) {
  if (!obj.is_object()) schema(where, "expected an object");
  for (const auto& [key, _] : obj.items())
    if (!allowed.count(key)) schema(where.empty() ? key : where + "." + key, "unknown field");
}

std::vector<std::string> strings(const json& j, const std::string& field) {
  if (!j.is_array()) schema(field, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) schema(field, "expected an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<long> integers(const json& j, const std::string& field) {
  if (!j.is_array()) schema(field, "expected an array of integers");
  std::vector<long> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) schema(field, "expected an array of integers");
    out.push_back(e.get<long>());
  }
  return out;
}

Rational rational(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error&) {
      schema(field, "bad rational '" + j.get<std::string>() + "'");
    }
  }
  schema(field, "expected an integer or a rational string");
}

RatMatrix rational_matrix(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty() || !j.front().is_array()) schema(field, "expected a matrix (array of rows)");
  const std::size_t rows = j.size(), cols = j.front().size();
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) schema(field, "rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rational(j[r][c], field);
  }
  return m;
}

std::uint64_t count(const json& j, const std::string& field) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    schema(field, "expected a nonnegative integer");
  return j.get<std::uint64_t>();
}

const std::set<std::string> kRouteNames{"rh3", "rh4", "rh5", "oh5", "rh6", "rh7", "oh8", "rh8", "oh3", "oh1", "segre"};

}  // namespace

QuadSpace quad_space_preset(const std::string& label) {
  static const std::regex hyp(R"(\s*hyperbolic\(\s*(\d+)\s*\)\s*)"), sos(R"(\s*sum_of_squares\(\s*(\d+)\s*\)\s*)");
  std::smatch m;
  if (std::regex_match(label, m, hyp)) return QuadSpace::hyperbolic(std::stoul(m[1]));
  if (std::regex_match(label, m, sos)) return QuadSpace::sum_of_squares(std::stoul(m[1]));
  if (label == "eg2") return QuadSpace::eg2();
  schema("quadratic_form", "unknown preset '" + label + "'");
}

RingPtr SectionSpec::ring() const { return make_ring(variables); }

GroebnerOptions SectionSpec::groebner() const {
  GroebnerOptions g;
  if (step_budget > 0) g.step_budget = step_budget;
  return g;
}

std::optional<SpinData> SectionSpec::spin_data() const {
  if (!spin) return std::nullopt;
  RingPtr r = ring();
  SpinData d;
  d.ring = r;
  if (torus) d.base_weights = torus->base;
  d.m_plus = spin->m_plus;
  d.m_minus = spin->m_minus;
  for (std::size_t k = 0; k < 2; ++k) {
    d.F[k] = parse_poly(r, spin->F[k]);
    d.v[k] = parse_poly(r, spin->v[k]);
  }
  d.orientation = space.orientation();
  return d;
}

IsoSection SectionSpec::section() const {
  if (components.empty()) {
    auto sd = spin_data();
    if (!sd) fail(Errc::SchemaError, "field 'components': required unless a spin block is given");
    IsoSection s = spin_section(*sd);
    s.space = space;
    if (torus) s.torus = torus;
    return s;
  }
  IsoSection s;
  s.ring = ring();
  s.space = space;
  for (const auto& c : components) s.components.push_back(parse_poly(s.ring, c));
  s.torus = torus;
  return s;
}

SectionSpec parse_spec_json(const std::string& text, const std::string& name) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::ParseError, name + ": " + line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  check_keys(j, "", {"variables", "quadratic_form", "fiber_variables", "reference_plane", "orientation", "components",
                     "torus", "spin", "routes", "seed", "samples", "step_budget", "description"});
  SectionSpec spec;
  spec.name = name;
  if (!j.contains("variables")) schema("variables", "required");
  spec.variables = strings(j["variables"], "variables");
  try {
    make_ring(spec.variables);
  } catch (const Error& e) {
    schema("variables", e.what());
  }

  QuadSpace space;
  const json qf = j.value("quadratic_form", json("hyperbolic(" + std::to_string(spec.variables.size()) + ")"));
  std::vector<std::string> names;
  if (j.contains("fiber_variables")) names = strings(j["fiber_variables"], "fiber_variables");
  std::optional<Subspace> ref;
  if (j.contains("reference_plane")) ref = to_gauss(rational_matrix(j["reference_plane"], "reference_plane"));
  int orientation = 1;
  if (j.contains("orientation")) {
    if (!j["orientation"].is_number_integer() || std::abs(j["orientation"].get<long>()) != 1)
      schema("orientation", "expected 1 or -1");
    orientation = j["orientation"].get<int>();
  }
  if (qf.is_string()) {
    spec.form_label = qf.get<std::string>();
    space = quad_space_preset(spec.form_label);
    if (!names.empty() || ref) space = QuadSpace::from_gram(space.gram(), names.empty() ? space.names() : names, ref);
  } else {
    spec.form_label = "gram";
    space = QuadSpace::from_gram(rational_matrix(qf, "quadratic_form"), names, ref);
  }
  spec.space = space.with_orientation(orientation);

  if (j.contains("components")) spec.components = strings(j["components"], "components");
  if (j.contains("torus")) {
    const json& t = j["torus"];
    check_keys(t, "torus", {"base_weights", "fiber_weights"});
    if (!t.contains("base_weights")) schema("torus.base_weights", "required");
    TorusWeights w;
    w.base = integers(t["base_weights"], "torus.base_weights");
    if (t.contains("fiber_weights")) w.fiber = integers(t["fiber_weights"], "torus.fiber_weights");
    spec.torus = w;
  }
  if (j.contains("spin")) {
    const json& s = j["spin"];
    check_keys(s, "spin", {"m_plus_weights", "m_minus_weights", "F", "v"});
    SpinBlock b;
    for (const char* key : {"m_plus_weights", "m_minus_weights", "F", "v"})
      if (!s.contains(key)) schema(std::string("spin.") + key, "required");
    auto mp = integers(s["m_plus_weights"], "spin.m_plus_weights");
    auto mm = integers(s["m_minus_weights"], "spin.m_minus_weights");
    auto f = strings(s["F"], "spin.F");
    auto v = strings(s["v"], "spin.v");
    if (mp.size() != 2 || mm.size() != 2 || f.size() != 2 || v.size() != 2)
      schema("spin", "every entry needs exactly two elements");
    b.m_plus = {mp[0], mp[1]};
    b.m_minus = {mm[0], mm[1]};
    b.F = {f[0], f[1]};
    b.v = {v[0], v[1]};
    spec.spin = b;
    if (spec.torus && spec.torus->fiber.empty()) {
      spec.torus->fiber = {mm[1] - mp[1], mm[0] - mp[0], mm[1] - mp[0], mm[0] - mp[1]};
    }
  }
  if (spec.torus && spec.torus->fiber.empty()) schema("torus.fiber_weights", "required without a spin block");
  if (spec.components.empty() && !spec.spin) schema("components", "required unless a spin block is given");
  if (j.contains("routes")) {
    spec.routes = strings(j["routes"], "routes");
    for (const auto& r : spec.routes)
      if (!kRouteNames.count(r)) fail(Errc::UnknownRoute, "unknown route '" + r + "'");
  }
  if (j.contains("seed")) spec.seed = count(j["seed"], "seed");
  if (j.contains("samples")) spec.samples = count(j["samples"], "samples");
  if (j.contains("step_budget")) spec.step_budget = count(j["step_budget"], "step_budget");
  if (j.contains("description") && !j["description"].is_string()) schema("description", "expected a string");
  // polynomials are parsed eagerly so syntax errors surface here
  spec.section();
  if (spec.spin) spec.spin_data();
  return spec;
}

SectionSpec parse_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::InvalidArgument, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec_json(buf.str(), path);
}

nlohmann::ordered_json spec_to_json(const SectionSpec& spec) {
  nlohmann::ordered_json j;
  j["variables"] = spec.variables;
  if (spec.form_label == "gram") {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t r = 0; r < spec.space.rank(); ++r) {
      rows.emplace_back();
      for (std::size_t c = 0; c < spec.space.rank(); ++c) rows.back().push_back(to_string(spec.space.gram().at(r, c)));
    }
    j["quadratic_form"] = rows;
  } else {
    j["quadratic_form"] = spec.form_label;
  }
  j["fiber_variables"] = spec.space.names();
  j["orientation"] = spec.space.orientation();
  j["components"] = spec.components;
  if (spec.torus) j["torus"] = {{"base_weights", spec.torus->base}, {"fiber_weights", spec.torus->fiber}};
  if (spec.spin)
    j["spin"] = {{"m_plus_weights", spec.spin->m_plus},
                 {"m_minus_weights", spec.spin->m_minus},
                 {"F", spec.spin->F},
                 {"v", spec.spin->v}};
  j["routes"] = spec.routes;
  j["seed"] = spec.seed;
  j["samples"] = spec.samples;
  if (spec.step_budget) j["step_budget"] = spec.step_budget;
  return j;
}

}  // namespace isohopf
