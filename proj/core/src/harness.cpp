#include "isohopf/harness.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <sstream>

#include "isohopf/ideal.hpp"

namespace isohopf {

const std::vector<std::string>& all_routes() {
  static const std::vector<std::string> routes{"rh3", "rh5", "oh5", "rh6", "rh7", "oh8", "rh8", "oh3", "rh4", "oh1", "segre"};
  return routes;
}

bool is_numeric_route(const std::string& route) { return route == "rh4" || route == "oh1"; }

namespace {

bool not_applicable(Errc c) {
  switch (c) {
    case Errc::WrongDimension:
    case Errc::NotHomogeneous:
    case Errc::BadWeights:
    case Errc::ZeroBaseWeight:
    case Errc::NoRationalSplitting:
    case Errc::NoInvariantIsotropic:
    case Errc::SectionNotInSubspace:
      return true;
    default:
      return false;
  }
}

RefinedIndex compute(const std::string& route, const IsoSection& s, const std::optional<SpinData>& spin,
                     const RunOptions& opts) {
  RouteOptions ro;
  ro.seed = opts.seed;
  ro.groebner = opts.groebner;
  if (route == "rh3") return route_rh3(s, ro);
  if (route == "rh4") return route_rh4_deform(s, ro);
  if (route == "rh5") return route_rh5_homogeneous(s, ro);
  if (route == "oh5") return route_oh5_incidence(s, ro);
  if (route == "rh7") return route_rh7_clifford(s, ro);
  if (route == "oh8") return route_oh8_torus(s, ro);
  if (route == "oh3") {
    auto l = find_containing_isotropic(s);
    if (!l) fail(Errc::SectionNotInSubspace, "no constant maximal isotropic subspace contains the section");
    return route_oh3_factored(s, *l, ro);
  }
  if (route == "rh8") {
    if (!spin) fail(Errc::BadWeights, "no spin-model data");
    return route_rh8_spin(*spin, ro);
  }
  if (route == "rh6") {
    if (s.n() != 2) fail(Errc::WrongDimension, "cone bidegree needs n = 2");
    ConeData c = normal_cone_ideal(s, ConeMethod::Saturation, opts.groebner);
    ConeBidegree b = cone_bidegree_n2(c, opts.seed, opts.groebner);
    RefinedIndex r;
    r.route = "rh6";
    r.sqrt_e = b.sqrt_e;
    r.diagnostics = {{"alpha", std::to_string(b.alpha)}, {"beta", std::to_string(b.beta)}};
    return r;
  }
  if (route == "oh1") {
    SphereDegreeOptions so;
    so.samples = opts.samples;
    so.seed = opts.seed;
    WindingCheck w = oh1_check(s, so);
    RefinedIndex r;
    r.route = "oh1";
    r.sqrt_e = w.degree;
    std::ostringstream a, b;
    a << std::setprecision(6) << w.plus.raw;
    b << std::setprecision(6) << w.minus.raw;
    r.diagnostics = {{"deg_s_plus_raw", a.str()}, {"deg_s_minus_raw", b.str()}};
    return r;
  }
  if (route == "segre") {
    std::size_t sg = segre_class(s, opts.groebner);
    RefinedIndex r;
    r.route = "segre";
    r.diagnostics = {{"segre", std::to_string(sg)}};
    return r;
  }
  fail(Errc::UnknownRoute, "unknown route '" + route + "'");
}

std::string diag(const RefinedIndex& r, const std::string& key) {
  for (const auto& [k, v] : r.diagnostics)
    if (k == key) return v;
  return {};
}

}  // namespace

RouteOutcome run_route(const std::string& route, const IsoSection& s, const std::optional<SpinData>& spin,
                       const RunOptions& opts) {
  RouteOutcome o;
  o.route = route;
  try {
    o.result = compute(route, s, spin, opts);
    o.status = RouteOutcome::Status::Ok;
  } catch (const Error& e) {
    if (e.code() == Errc::UnknownRoute) throw;
    o.code = e.code();
    o.message = e.what();
    o.status = not_applicable(e.code()) ? RouteOutcome::Status::NotApplicable : RouteOutcome::Status::Failed;
  }
  return o;
}

IndexReport cross_validate(const IsoSection& raw, const std::optional<SpinData>& spin, const RunOptions& opts,
                           const std::string& name) {
  IsoSection s = validate(raw, opts.groebner);
  std::vector<std::string> routes;
  for (const auto& r : all_routes())
    if (opts.routes.empty() || std::count(opts.routes.begin(), opts.routes.end(), r)) routes.push_back(r);
  for (const auto& r : opts.routes)
    if (!std::count(all_routes().begin(), all_routes().end(), r)) fail(Errc::UnknownRoute, "unknown route '" + r + "'");

  IndexReport rep;
  rep.name = name;
  if (opts.parallel) {
    std::vector<std::future<RouteOutcome>> jobs;
    for (const auto& r : routes) jobs.push_back(std::async(std::launch::async, [&, r] { return run_route(r, s, spin, opts); }));
    for (auto& j : jobs) rep.outcomes.push_back(j.get());
  } else {
    for (const auto& r : routes) rep.outcomes.push_back(run_route(r, s, spin, opts));
  }
  rep.length_z = colength(PolyIdeal(s.ring, s.components), opts.groebner);

  // exact routes first, then verifiers against them
  for (const auto& o : rep.outcomes) {
    if (o.route == "segre") {
      if (o.result) rep.segre = std::stoul(diag(*o.result, "segre"));
      continue;
    }
    if (o.status == RouteOutcome::Status::Failed && !is_numeric_route(o.route))
      rep.issues.push_back(o.route + ": " + o.message);
    if (!o.result || is_numeric_route(o.route)) continue;
    const RefinedIndex& r = *o.result;
    if (!rep.sqrt_e) rep.sqrt_e = r.sqrt_e;
    else if (*rep.sqrt_e != r.sqrt_e)
      rep.issues.push_back("disagreement: " + o.route + " gives sqrt_e = " + std::to_string(r.sqrt_e));
    if (r.d1) {
      if (!rep.d1) {
        rep.d1 = r.d1;
        rep.d2 = r.d2;
      } else if (*rep.d1 != *r.d1 || *rep.d2 != *r.d2) {
        rep.issues.push_back("disagreement: " + o.route + " gives (d1, d2) = (" + std::to_string(*r.d1) + ", " +
                             std::to_string(*r.d2) + ")");
      }
    }
  }
  if (!rep.sqrt_e) rep.issues.push_back("no exact route succeeded");
  for (const auto& o : rep.outcomes) {
    if (!is_numeric_route(o.route) || !o.result || !rep.sqrt_e) continue;
    const RefinedIndex& r = *o.result;
    bool same = r.sqrt_e == *rep.sqrt_e;
    if (r.d1 && rep.d1) same = same && *r.d1 == *rep.d1 && *r.d2 == *rep.d2;
    if (!same) rep.issues.push_back("verifier-mismatch: " + o.route + " gives sqrt_e = " + std::to_string(r.sqrt_e));
  }
  if (rep.segre && rep.sqrt_e && static_cast<std::size_t>(std::labs(*rep.sqrt_e)) > *rep.segre)
    rep.issues.push_back("Segre bound violated: |sqrt_e| > " + std::to_string(*rep.segre));
  rep.pass = rep.issues.empty();
  return rep;
}

IndexReport cross_validate(const SectionSpec& spec, const std::vector<std::string>& routes) {
  RunOptions opts;
  opts.routes = routes.empty() ? spec.routes : routes;
  opts.seed = spec.seed;
  opts.samples = spec.samples;
  opts.groebner = spec.groebner();
  return cross_validate(spec.section(), spec.spin_data(), opts, spec.name);
}

nlohmann::ordered_json report_json(const IndexReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["verdict"] = r.pass ? "pass" : "fail";
  j["sqrt_e"] = r.sqrt_e ? nlohmann::ordered_json(*r.sqrt_e) : nlohmann::ordered_json();
  j["d1"] = r.d1 ? nlohmann::ordered_json(*r.d1) : nlohmann::ordered_json();
  j["d2"] = r.d2 ? nlohmann::ordered_json(*r.d2) : nlohmann::ordered_json();
  j["length_Z"] = r.length_z ? nlohmann::ordered_json(*r.length_z) : nlohmann::ordered_json();
  j["segre"] = r.segre ? nlohmann::ordered_json(*r.segre) : nlohmann::ordered_json();
  auto& routes = j["routes"] = nlohmann::ordered_json::array();
  for (const auto& o : r.outcomes) {
    nlohmann::ordered_json e;
    e["route"] = o.route;
    e["status"] = o.status == RouteOutcome::Status::Ok              ? "ok"
                  : o.status == RouteOutcome::Status::NotApplicable ? "not_applicable"
                                                                    : "error";
    e["numeric"] = is_numeric_route(o.route);
    if (o.result) {
      if (o.route != "segre") e["sqrt_e"] = o.result->sqrt_e;
      if (o.result->d1) {
        e["d1"] = *o.result->d1;
        e["d2"] = *o.result->d2;
      }
      nlohmann::ordered_json d = nlohmann::ordered_json::object();
      for (const auto& [k, v] : o.result->diagnostics) d[k] = v;
      e["diagnostics"] = d;
    } else {
      e["error"] = {{"code", errc_name(*o.code)}, {"message", o.message}};
    }
    routes.push_back(e);
  }
  j["issues"] = r.issues;
  return j;
}

void render_report(std::ostream& out, const IndexReport& r) {
  out << r.name << "\n";
  for (const auto& o : r.outcomes) {
    out << "  " << std::left << std::setw(6) << o.route;
    if (o.result) {
      if (o.route == "segre") out << "segre = " << diag(*o.result, "segre");
      else out << "sqrt_e = " << o.result->sqrt_e;
      if (o.result->d1) out << "  (d1, d2) = (" << *o.result->d1 << ", " << *o.result->d2 << ")";
      if (is_numeric_route(o.route)) out << "  [numeric]";
    } else {
      out << (o.status == RouteOutcome::Status::NotApplicable ? "n/a: " : "error: ") << o.message;
    }
    out << "\n";
  }
  if (r.length_z) out << "  length Z(s) = " << *r.length_z << "\n";
  for (const auto& i : r.issues) out << "  ! " << i << "\n";
  out << "  verdict: " << (r.pass ? "pass" : "fail") << "\n";
}

namespace {

IsoSection running_example(std::size_t d, std::size_t i, std::size_t j) {
  RingPtr ring = make_ring({"x", "y"});
  MultiPoly x = MultiPoly::variable(ring, 0), y = MultiPoly::variable(ring, 1);
  IsoSection s;
  s.ring = ring;
  s.space = QuadSpace::hyperbolic(2);
  s.components = {x.pow(d), y.pow(d), x.pow(i) * y.pow(j), -(x.pow(d - i) * y.pow(d - j))};
  const long dd = static_cast<long>(d), ii = static_cast<long>(i), jj = static_cast<long>(j);
  s.torus = TorusWeights{{1, -1}, {dd, -dd, ii - jj, jj - ii}};
  return s;
}

IsoSection from_strings(const std::vector<std::string>& vars, QuadSpace space, const std::vector<std::string>& comps) {
  IsoSection s;
  s.ring = make_ring(vars);
  s.space = std::move(space);
  for (const auto& c : comps) s.components.push_back(parse_poly(s.ring, c));
  return s;
}

}  // namespace

std::vector<SuiteRow> paper_suite_rows() {
  std::vector<SuiteRow> rows;
  for (std::size_t d = 1; d <= 4; ++d)
    for (std::size_t i = 0; i <= d; ++i)
      for (std::size_t j = 0; j <= d; ++j) {
        SuiteRow r;
        r.name = "run(d=" + std::to_string(d) + ",i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")";
        r.section = running_example(d, i, j);
        const long dd = static_cast<long>(d), ii = static_cast<long>(i), jj = static_cast<long>(j);
        r.d1 = ii * (dd - jj);
        r.d2 = jj * (dd - ii);
        r.sqrt_e = dd * (ii - jj);
        r.routes = {"rh3", "rh7", "oh8", "rh4"};
        if (d == i + j) r.routes.insert(r.routes.end(), {"rh5", "oh5", "rh6"});
        if (std::labs(r.sqrt_e) <= 4) r.routes.push_back("oh1");
        rows.push_back(r);
      }
  {
    SuiteRow r;
    r.name = "eg";
    r.section = running_example(2, 1, 1);
    r.d1 = 1;
    r.d2 = 1;
    r.sqrt_e = 0;
    r.segre = 4;
    r.routes = {"rh3", "rh5", "oh5", "rh6", "rh7", "oh8", "rh4", "oh1", "segre"};
    rows.push_back(r);
  }
  {
    SuiteRow r;
    r.name = "eg2";
    r.section = from_strings({"x", "y", "z"}, QuadSpace::eg2(), {"x^2", "y^2", "z^2", "x*y", "x*z", "y*z"});
    r.sqrt_e = 4;
    r.segre = 8;
    r.routes = {"oh5", "segre"};
    rows.push_back(r);
  }
  {
    SuiteRow r;
    r.name = "linear(x,0,y,0)";
    r.section = from_strings({"x", "y"}, QuadSpace::hyperbolic(2), {"x", "0", "y", "0"});
    r.d1 = 0;
    r.d2 = 1;
    r.sqrt_e = -1;
    r.routes = {"rh3", "rh7", "rh4", "oh3", "oh1"};
    rows.push_back(r);
  }
  {
    SuiteRow r;
    r.name = "factored(x,0,0,y^2)";
    r.section = from_strings({"x", "y"}, QuadSpace::hyperbolic(2), {"x", "0", "0", "y^2"});
    r.d1 = 2;
    r.d2 = 0;
    r.sqrt_e = 2;
    r.routes = {"rh3", "rh7", "oh3", "rh4"};
    rows.push_back(r);
  }
  {
    SuiteRow r;
    r.name = "spin(d=3,i=2,j=1)";
    SpinData sd;
    sd.ring = make_ring({"x", "y"});
    sd.base_weights = {1, -1};
    sd.m_plus = {1, -1};
    sd.m_minus = {-2, 2};
    sd.F = {parse_poly(sd.ring, "y"), parse_poly(sd.ring, "x")};
    sd.v = {parse_poly(sd.ring, "y^2"), parse_poly(sd.ring, "x^2")};
    r.section = spin_section(sd);
    r.spin = sd;
    r.d1 = 4;
    r.d2 = 1;
    r.sqrt_e = 3;
    r.routes = {"rh8", "rh3", "oh8"};
    rows.push_back(r);
  }
  return rows;
}

SuiteResult run_suite(const std::vector<SuiteRow>& rows, std::ostream& table, const RunOptions& base) {
  SuiteResult res;
  table << std::left << std::setw(24) << "instance" << "  expected        routes\n";
  for (const auto& row : rows) {
    RunOptions opts = base;
    opts.routes = row.routes;
    std::ostringstream expect;
    expect << row.sqrt_e;
    if (row.d1) expect << " (" << *row.d1 << "," << *row.d2 << ")";
    if (row.segre) expect << " s=" << *row.segre;
    table << std::left << std::setw(24) << row.name << "  " << std::setw(14) << expect.str();
    std::vector<std::string> bad;
    try {
      IndexReport rep = cross_validate(row.section, row.spin, opts, row.name);
      for (const auto& o : rep.outcomes) {
        table << "  " << o.route << "=";
        if (!o.result) {
          table << "ERR";
          bad.push_back(o.route + " " + o.message);
          continue;
        }
        const RefinedIndex& r = *o.result;
        if (o.route == "segre") {
          table << diag(r, "segre");
          if (row.segre && rep.segre != row.segre) bad.push_back("segre " + diag(r, "segre"));
          continue;
        }
        table << r.sqrt_e;
        if (r.d1) table << "(" << *r.d1 << "," << *r.d2 << ")";
        if (r.sqrt_e != row.sqrt_e) bad.push_back(o.route + " sqrt_e " + std::to_string(r.sqrt_e));
        if (r.d1 && row.d1 && (*r.d1 != *row.d1 || *r.d2 != *row.d2))
          bad.push_back(o.route + " (d1,d2) = (" + std::to_string(*r.d1) + "," + std::to_string(*r.d2) + ")");
      }
      for (const auto& i : rep.issues) bad.push_back(i);
    } catch (const Error& e) {
      bad.push_back(std::string("spec error: ") + e.what());
    }
    table << (bad.empty() ? "  PASS" : "  FAIL") << "\n";
    for (const auto& b : bad) res.failures.push_back(row.name + ": " + b);
  }
  return res;
}

SuiteResult paper_suite(std::ostream& table, const RunOptions& opts) { return run_suite(paper_suite_rows(), table, opts); }

}  // namespace isohopf
