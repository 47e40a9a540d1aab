#include <gtest/gtest.h>

#include <sstream>

#include "isohopf/error.hpp"
#include "isohopf/harness.hpp"
#include "isohopf/spec_file.hpp"
#include "helpers.hpp"

using namespace isohopf;

namespace {

std::string fixture(const std::string& name) { return std::string(ISOHOPF_FIXTURE_DIR) + "/" + name; }

Error error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  return Error(Errc::InvalidArgument, "no error raised");
}

const RouteOutcome* outcome(const IndexReport& r, const std::string& route) {
  for (const auto& o : r.outcomes)
    if (o.route == route) return &o;
  return nullptr;
}

}  // namespace

TEST(Spec, ParsesEgFixture) {
  SectionSpec spec = parse_spec(fixture("eg.json"));
  IsoSection s = validate(spec.section());
  IsoSection ref = testing_helpers::eg();
  ASSERT_EQ(s.components.size(), 4u);
  for (int k = 0; k < 4; ++k) EXPECT_EQ(s.components[k].to_string(), ref.components[k].to_string());
  ASSERT_TRUE(spec.torus.has_value());
  EXPECT_EQ(spec.torus->fiber, (std::vector<long>{2, -2, 0, 0}));
  EXPECT_EQ(s.space.orientation(), 1);
}

TEST(Spec, SpinBlockDerivesFiberWeights) {
  SectionSpec spec = parse_spec(fixture("run_d3_i2_j1.json"));
  ASSERT_TRUE(spec.spin.has_value());
  ASSERT_TRUE(spec.torus.has_value());
  EXPECT_EQ(spec.torus->fiber, (std::vector<long>{3, -3, 1, -1}));
  EXPECT_TRUE(spec.spin_data().has_value());
}

TEST(Spec, Presets) {
  EXPECT_EQ(quad_space_preset("hyperbolic(2)").rank(), 4u);
  EXPECT_EQ(quad_space_preset("hyperbolic(3)").rank(), 6u);
  EXPECT_EQ(quad_space_preset("sum_of_squares(4)").rank(), 4u);
  EXPECT_EQ(quad_space_preset("eg2").rank(), 6u);
  EXPECT_EQ(error_of([] { quad_space_preset("nonsense"); }).code(), Errc::SchemaError);
}

TEST(Spec, GramMatrixForm) {
  SectionSpec spec = parse_spec_json(R"j({
    "variables": ["x", "y"],
    "quadratic_form": [[0, "1/2", 0, 0], ["1/2", 0, 0, 0], [0, 0, 0, "1/2"], [0, 0, "1/2", 0]],
    "components": ["x", "0", "y", "0"]
  })j");
  EXPECT_EQ(spec.form_label, "gram");
  EXPECT_EQ(spec.space.gram(), QuadSpace::hyperbolic(2).gram());
  EXPECT_NO_THROW(validate(spec.section()));
}

TEST(Spec, UnknownFieldIsSchemaError) {
  Error e = error_of([] {
    parse_spec_json(R"j({"variables": ["x","y"], "quadratic_form": "hyperbolic(2)",
                        "components": ["x","0","y","0"], "foo": 1})j");
  });
  EXPECT_EQ(e.code(), Errc::SchemaError);
  EXPECT_NE(e.detail().find("foo"), std::string::npos);
}

TEST(Spec, MissingFieldIsSchemaError) {
  Error e = error_of([] { parse_spec_json(R"j({"variables": ["x","y"], "quadratic_form": "hyperbolic(2)"})j"); });
  EXPECT_EQ(e.code(), Errc::SchemaError);
  EXPECT_NE(e.detail().find("components"), std::string::npos);
}

TEST(Spec, SyntaxErrorReportsLineAndColumn) {
  Error e = error_of([] { parse_spec_json("{\n  \"variables\": [\"x\", \"y\"],\n  \"quadratic_form\" \"hyperbolic(2)\"\n}"); });
  EXPECT_EQ(e.code(), Errc::ParseError);
  EXPECT_NE(e.detail().find("line 3"), std::string::npos) << e.detail();
  EXPECT_NE(e.detail().find("column"), std::string::npos) << e.detail();
}

TEST(Spec, UnknownRoute) {
  Error e = error_of([] {
    parse_spec_json(R"j({"variables": ["x","y"], "quadratic_form": "hyperbolic(2)",
                        "components": ["x","0","y","0"], "routes": ["rh3", "bogus"]})j");
  });
  EXPECT_EQ(e.code(), Errc::UnknownRoute);
}

TEST(Spec, NotIsotropicSurfacesResidual) {
  SectionSpec spec = parse_spec_json(R"j({"variables": ["x","y"], "quadratic_form": "hyperbolic(2)",
                                          "components": ["x^2","y^2","x*y","x*y"]})j");
  Error e = error_of([&] { validate(spec.section()); });
  EXPECT_EQ(e.code(), Errc::NotIsotropic);
  EXPECT_NE(e.detail().find("x^2*y^2"), std::string::npos);
}

TEST(Spec, JsonRoundTrip) {
  SectionSpec a = parse_spec(fixture("run_d3_i2_j1.json"));
  SectionSpec b = parse_spec_json(spec_to_json(a).dump());
  EXPECT_EQ(spec_to_json(a).dump(), spec_to_json(b).dump());
}

TEST(CrossValidate, EgFixture) {
  IndexReport r = cross_validate(parse_spec(fixture("eg.json")));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.sqrt_e, 0);
  EXPECT_EQ(r.d1, 1);
  EXPECT_EQ(r.d2, 1);
  EXPECT_EQ(r.length_z, 3u);
  EXPECT_EQ(r.segre, 4u);
  for (const char* route : {"rh3", "rh5", "oh5", "rh6", "rh7", "oh8", "rh4", "oh1"}) {
    const RouteOutcome* o = outcome(r, route);
    ASSERT_NE(o, nullptr) << route;
    ASSERT_EQ(o->status, RouteOutcome::Status::Ok) << route << ": " << o->message;
    EXPECT_EQ(o->result->sqrt_e, 0) << route;
  }
}

TEST(CrossValidate, RunningExampleFixture) {
  IndexReport r = cross_validate(parse_spec(fixture("run_d3_i2_j1.json")));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.sqrt_e, 3);
  EXPECT_EQ(r.d1, 4);
  EXPECT_EQ(r.d2, 1);
  const RouteOutcome* rh8 = outcome(r, "rh8");
  ASSERT_NE(rh8, nullptr);
  ASSERT_EQ(rh8->status, RouteOutcome::Status::Ok) << rh8->message;
  EXPECT_EQ(rh8->result->d1, 4);
}

TEST(CrossValidate, Eg2Fixture) {
  IndexReport r = cross_validate(parse_spec(fixture("eg2.json")));
  EXPECT_TRUE(r.pass);
  ASSERT_TRUE(r.sqrt_e.has_value());
  EXPECT_EQ(std::labs(*r.sqrt_e), 4);
  EXPECT_EQ(r.segre, 8u);
}

TEST(CrossValidate, InapplicableRoutesDoNotFail) {
  SectionSpec spec = parse_spec_json(R"j({"variables": ["x","y"], "quadratic_form": "hyperbolic(2)",
                                          "components": ["x^3","y^3","x^2*y","-x*y^2"]})j");
  IndexReport r = cross_validate(spec, {"rh3", "rh5", "oh8"});
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(outcome(r, "oh8")->status, RouteOutcome::Status::NotApplicable);
  EXPECT_EQ(outcome(r, "rh3")->status, RouteOutcome::Status::Ok);
}

TEST(CrossValidate, DisagreementFailsVerdict) {
  // spin data of (d, i, j) = (3, 1, 2) attached to the (3, 2, 1) section
  SpinData sd;
  sd.ring = make_ring({"x", "y"});
  MultiPoly x = MultiPoly::variable(sd.ring, 0), y = MultiPoly::variable(sd.ring, 1);
  sd.base_weights = {1, -1};
  sd.m_plus = {2, -2};
  sd.m_minus = {-1, 1};
  sd.F = {y.pow(2), x.pow(2)};
  sd.v = {y, x};
  RunOptions o;
  o.routes = {"rh3", "rh8"};
  IndexReport r = cross_validate(validate(testing_helpers::running_example(3, 2, 1)), sd, o, "mismatch");
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.issues.empty());
}

TEST(Report, ByteIdenticalJson) {
  SectionSpec spec = parse_spec(fixture("run_d3_i2_j1.json"));
  std::string a = report_json(cross_validate(spec)).dump(2);
  std::string b = report_json(cross_validate(spec)).dump(2);
  EXPECT_EQ(a, b);
  RunOptions serial;
  serial.parallel = false;
  serial.seed = spec.seed;
  serial.samples = spec.samples;
  IndexReport rs = cross_validate(validate(spec.section()), spec.spin_data(), serial, spec.name);
  EXPECT_EQ(rs.sqrt_e, 3);
}

TEST(Report, HumanRendering) {
  std::ostringstream out;
  render_report(out, cross_validate(parse_spec(fixture("eg.json"))));
  EXPECT_NE(out.str().find("verdict: pass"), std::string::npos);
  EXPECT_NE(out.str().find("length Z(s) = 3"), std::string::npos);
}

TEST(Suite, WrongOrientationIsDetected) {
  std::vector<SuiteRow> rows;
  SuiteRow r;
  r.name = "flipped(d=3,i=2,j=1)";
  r.section = with_orientation(testing_helpers::running_example(3, 2, 1), -1);
  r.d1 = 4;
  r.d2 = 1;
  r.sqrt_e = 3;
  r.routes = {"rh3", "rh7"};
  rows.push_back(r);
  std::ostringstream table;
  SuiteResult res = run_suite(rows, table);
  EXPECT_FALSE(res.pass());
  ASSERT_FALSE(res.failures.empty());
  EXPECT_NE(table.str().find("(1,4)"), std::string::npos) << table.str();
}

TEST(Suite, RowsCoverTheGrid) {
  auto rows = paper_suite_rows();
  std::size_t grid = 0;
  for (const auto& r : rows)
    if (r.name.rfind("run(", 0) == 0) ++grid;
  EXPECT_EQ(grid, 4u + 9u + 16u + 25u);
}
