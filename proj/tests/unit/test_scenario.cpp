#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>

#include <json.hpp>

#include "errors_util.hpp"
#include "ruled/scenario.hpp"

using namespace ruled;
using namespace ruled::scenario;

namespace {

const char* kBase = R"({
  "curve": {"kind": "circular_helix", "a": 1, "b": 2},
  "base": "alpha",
  "director": {"x1": 0, "x2": 1, "x3": 0, "causal_sign": 1},
  "grid": {"s_min": -2, "s_max": 2, "n_s": 11, "v_min": -1, "v_max": 1, "n_v": 3}
})";

nlohmann::json base_json() { return nlohmann::json::parse(kBase); }

std::string config_error(const nlohmann::json& j) {
  try {
    build_model(parse_scenario(j.dump()));
  } catch (const GeometryError& e) {
    CHECK(e.code() == ErrorCode::ConfigInvalid);
    return e.what();
  }
  FAIL("expected ConfigInvalid");
  return {};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("parse defaults and fields") {
  const Scenario sc = parse_scenario(kBase);
  CHECK(sc.curve.kind == CurveKind::CircularHelix);
  CHECK(sc.grid.n_s == 11);
  CHECK_FALSE(sc.companion);
  CHECK(sc.convention == DenominatorConvention::PaperExpanded);
  CHECK(sc.outputs.size() == 5);

  auto j = base_json();
  j["curve"] = {{"kind", "hyperbolic_helix"}};
  j["base"] = {{"companion", {0, 0, 1}}};
  j["convention"] = "lorentzian";
  j["outputs"] = {"report"};
  j["tol"] = 1e-5;
  const Scenario s2 = parse_scenario(j.dump());
  CHECK(s2.curve.a == 2.0);
  CHECK(s2.curve.b == 1.0);
  REQUIRE(s2.companion);
  CHECK(s2.companion->b == 1.0);
  CHECK(s2.convention == DenominatorConvention::Lorentzian);
  CHECK(s2.outputs == std::set<Output>{Output::Report});
  CHECK(s2.verdict_tol == 1e-5);
}

TEST_CASE("config errors name the field") {
  auto j = base_json();
  j["colour"] = "red";
  CHECK(config_error(j).find("colour") != std::string::npos);

  j = base_json();
  j["grid"]["n_s"] = 1;
  CHECK(config_error(j).find("grid.n_s") != std::string::npos);

  j = base_json();
  j["grid"]["s_max"] = -3;
  CHECK(config_error(j).find("grid.s_max") != std::string::npos);

  j = base_json();
  j["director"]["x1"] = 1;
  CHECK(config_error(j).find("director") != std::string::npos);

  j = base_json();
  j["base"] = {{"companion", {1, 1, 0}}};
  const std::string msg = config_error(j);
  CHECK(msg.find("base.companion") != std::string::npos);
  CHECK(msg.find("NullCompanion") != std::string::npos);

  j = base_json();
  j["curve"]["b"] = 0.5;
  CHECK(config_error(j).find("curve") != std::string::npos);

  j = base_json();
  j["curve"]["kind"] = "spiral";
  CHECK(config_error(j).find("curve.kind") != std::string::npos);

  j = base_json();
  j["director"]["wobble"] = 1;
  CHECK(config_error(j).find("director.wobble") != std::string::npos);

  CHECK(error_code_of([] { parse_scenario("{not json"); }) == ErrorCode::ConfigInvalid);
}

TEST_CASE("grid and convention overrides") {
  CHECK(parse_grid_override("101x21") == std::pair<std::size_t, std::size_t>{101, 21});
  CHECK(error_code_of([] { parse_grid_override("1x21"); }) == ErrorCode::ConfigInvalid);
  CHECK(error_code_of([] { parse_grid_override("10by3"); }) == ErrorCode::ConfigInvalid);
  CHECK(error_code_of([] { parse_grid_override("10x3x"); }) == ErrorCode::ConfigInvalid);
  CHECK(parse_convention("lorentzian") == DenominatorConvention::Lorentzian);
  CHECK(error_code_of([] { parse_convention("euclid"); }) == ErrorCode::ConfigInvalid);
}

TEST_CASE("model grid keeps the finite-difference margin") {
  const Model m = build_model(parse_scenario(kBase));
  CHECK(m.s_grid.front() == doctest::Approx(-2.0 + 3e-5).epsilon(1e-12));
  CHECK(m.s_grid.back() == doctest::Approx(2.0 - 3e-5).epsilon(1e-12));
  CHECK(m.s_grid.size() == 11);
  CHECK(m.v_grid.size() == 3);
}

TEST_CASE("mesh export counts and base row") {
  for (auto [ns, nv] : {std::pair<std::size_t, std::size_t>{2, 2}, {101, 21}}) {
    Scenario sc = parse_scenario(kBase);
    sc.grid.n_s = ns;
    sc.grid.n_v = nv;
    const auto ls = lines(export_mesh(sc));
    const auto nvert = std::count_if(ls.begin(), ls.end(), [](const std::string& l) { return l.rfind("v ", 0) == 0; });
    const auto nface = std::count_if(ls.begin(), ls.end(), [](const std::string& l) { return l.rfind("f ", 0) == 0; });
    CHECK(static_cast<std::size_t>(nvert) == ns * nv);
    CHECK(static_cast<std::size_t>(nface) == 2 * (ns - 1) * (nv - 1));
    CHECK(ls.size() == static_cast<std::size_t>(nvert + nface));
  }
  const std::string obj = export_mesh(parse_scenario(kBase));
  const auto ls = lines(obj);
  CHECK(ls[0].rfind("v ", 0) == 0);
  CHECK(ls[11 * 3] == "f 1 4 5");
  CHECK(ls[11 * 3 + 1] == "f 1 5 2");
  CHECK(obj == export_mesh(parse_scenario(kBase), {{}, kernels::Execution::Serial}));
}

TEST_CASE("sweep export") {
  const auto ls = lines(export_sweep(parse_scenario(kBase)));
  REQUIRE(ls.size() == 12);
  CHECK(ls[0] == std::string(kSweepHeader));
  for (std::size_t i = 1; i < ls.size(); ++i) {
    std::vector<std::string> cells;
    std::istringstream in(ls[i]);
    for (std::string c; std::getline(in, c, ',');) cells.push_back(c);
    REQUIRE(cells.size() == 9);
    CHECK(std::stod(cells[4]) == doctest::Approx(1.2).epsilon(1e-7));
    CHECK(cells[8] == "none");
  }

  auto j = base_json();
  j["curve"] = {{"kind", "hyperbolic_helix"}, {"a", 2}, {"b", 1}};
  j["director"] = {{"x1", 1 / std::sqrt(3.0)}, {"x2", 0}, {"x3", 2 / std::sqrt(3.0)}};
  const auto cyl = lines(export_sweep(parse_scenario(j.dump())));
  for (std::size_t i = 1; i < cyl.size(); ++i) {
    CHECK(cyl[i].find(",undefined,undefined,") != std::string::npos);
    CHECK(cyl[i].find("cylinder") != std::string::npos);
  }
}

TEST_CASE("printed reals round-trip") {
  for (double x : {0.1, 1.0 / 3.0, -2.718281828459045, 1e-300, 6.02214076e23}) {
    CHECK(std::stod(format_real(x)) == x);
  }
}

TEST_CASE("outputs must be requested") {
  auto j = base_json();
  j["outputs"] = {"report"};
  const Scenario sc = parse_scenario(j.dump());
  CHECK(error_code_of([&] { export_mesh(sc); }) == ErrorCode::ConfigInvalid);
  CHECK(error_code_of([&] { export_sweep(sc); }) == ErrorCode::ConfigInvalid);
  CHECK_NOTHROW(run_scenario(sc));
}

TEST_CASE("reports for the reference scenarios") {
  const auto rep = nlohmann::json::parse(run_scenario(parse_scenario(kBase)));
  CHECK(rep["distribution"]["developable"] == false);
  CHECK(rep["distribution"]["max_abs_P"].get<double>() == doctest::Approx(1.2).epsilon(1e-9));
  CHECK(rep["curve"]["helix"] == true);
  CHECK(rep["director"]["case"] == "AxisN");
  CHECK(rep["striction"]["collinear"] == true);
  CHECK(std::abs(rep["striction"]["first_point"][0].get<double>()) < 1e-9);
  CHECK(rep["surface_causal_type"].size() == 4);

  auto j = base_json();
  j["curve"] = {{"kind", "hyperbolic_helix"}, {"a", 2}, {"b", 1}};
  j["director"] = {{"x1", 1 / std::sqrt(3.0)}, {"x2", 0}, {"x3", 2 / std::sqrt(3.0)}};
  const auto cyl = nlohmann::json::parse(run_scenario(parse_scenario(j.dump())));
  CHECK(cyl["distribution"]["cylinder"] == true);
  CHECK(cyl["distribution"]["developable"] == true);
  CHECK(cyl["striction"]["status"] == "undefined");
  CHECK(cyl["striction"]["reason"] == "CylinderStriction");
}

TEST_CASE("line scenarios fail as numeric degeneracies") {
  auto j = base_json();
  j["curve"] = {{"kind", "line"}};
  const Scenario sc = parse_scenario(j.dump());
  const ErrorCode code = error_code_of([&] { run_scenario(sc); });
  CHECK(code == ErrorCode::VanishingCurvature);
  CHECK_FALSE(is_validation_error(code));
}

TEST_CASE("case table export") {
  const auto ct = nlohmann::json::parse(export_case_table(parse_scenario(kBase)));
  REQUIRE(ct["rows"].size() == 18);
  CHECK(ct["rows"][13]["case"] == "AxisN");
  CHECK(ct["rows"][13]["P_range"][0].get<double>() == doctest::Approx(-0.6).epsilon(1e-9));
}
