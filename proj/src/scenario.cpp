#include "ruled/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "ruled/catalogue.hpp"
#include "ruled/errors.hpp"
#include "ruled/numerics.hpp"

namespace ruled::scenario {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& why) {
  throw GeometryError(ErrorCode::ConfigInvalid, field + ": " + why);
}

void reject_unknown_keys(const json& obj, const std::string& where, std::initializer_list<std::string_view> allowed) {
  for (const auto& item : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      invalid(where.empty() ? item.key() : where + "." + item.key(), "unknown key");
    }
  }
}

const json& require_object(const json& parent, const char* key, const std::string& where) {
  if (!parent.contains(key)) invalid(where + key, "missing");
  const json& v = parent.at(key);
  if (!v.is_object()) invalid(where + key, "must be an object");
  return v;
}

double read_real(const json& obj, const char* key, const std::string& where, std::optional<double> fallback = {}) {
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    invalid(where + key, "missing");
  }
  const json& v = obj.at(key);
  if (!v.is_number()) invalid(where + key, "must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) invalid(where + key, "must be finite");
  return x;
}

std::size_t read_count(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) invalid(where + key, "missing");
  const json& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 2) invalid(where + key, "must be an integer >= 2");
  return static_cast<std::size_t>(v.get<long long>());
}

CurveKind parse_kind(const json& v) {
  if (!v.is_string()) invalid("curve.kind", "must be a string");
  const auto s = v.get<std::string>();
  if (s == "circular_helix") return CurveKind::CircularHelix;
  if (s == "hyperbolic_helix") return CurveKind::HyperbolicHelix;
  if (s == "line") return CurveKind::Line;
  if (s == "planar_fixture") return CurveKind::PlanarFixture;
  invalid("curve.kind", "unknown kind '" + s + "'");
}

std::string_view kind_name(CurveKind k) {
  switch (k) {
    case CurveKind::CircularHelix: return "circular_helix";
    case CurveKind::HyperbolicHelix: return "hyperbolic_helix";
    case CurveKind::Line: return "line";
    case CurveKind::PlanarFixture: return "planar_fixture";
  }
  return "unknown";
}

Output parse_output(const json& v) {
  if (!v.is_string()) invalid("outputs", "entries must be strings");
  const auto s = v.get<std::string>();
  if (s == "report") return Output::Report;
  if (s == "mesh") return Output::Mesh;
  if (s == "sweep") return Output::Sweep;
  if (s == "striction") return Output::Striction;
  if (s == "case_table") return Output::CaseTable;
  invalid("outputs", "unknown output '" + s + "'");
}

void require_output(const Scenario& sc, Output o, const char* name) {
  if (!sc.outputs.contains(o)) invalid("outputs", std::string("scenario does not request '") + name + "'");
}

ordered_json real_or_null(const std::optional<double>& x) { return x ? ordered_json(*x) : ordered_json(nullptr); }

ordered_json vec_json(const Vec3& v) { return ordered_json::array({v.c1, v.c2, v.c3}); }

ordered_json frame_vec_json(const FrameVector& v) { return ordered_json::array({v.t, v.n, v.b}); }

}  // namespace

std::string format_real(double x) {
  char buf[40];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", x);
  return std::string(buf, static_cast<std::size_t>(n));
}

DenominatorConvention parse_convention(std::string_view text) {
  if (text == "paper") return DenominatorConvention::PaperExpanded;
  if (text == "lorentzian") return DenominatorConvention::Lorentzian;
  invalid("convention", "must be 'paper' or 'lorentzian'");
}

std::pair<std::size_t, std::size_t> parse_grid_override(std::string_view text) {
  const auto x = text.find('x');
  if (x == std::string_view::npos) invalid("--grid", "expected <n_s>x<n_v>");
  std::size_t ns = 0, nv = 0;
  const auto a = text.substr(0, x);
  const auto b = text.substr(x + 1);
  const auto r1 = std::from_chars(a.data(), a.data() + a.size(), ns);
  const auto r2 = std::from_chars(b.data(), b.data() + b.size(), nv);
  if (r1.ec != std::errc{} || r1.ptr != a.data() + a.size() || r2.ec != std::errc{} ||
      r2.ptr != b.data() + b.size()) {
    invalid("--grid", "expected <n_s>x<n_v>");
  }
  if (ns < 2 || nv < 2) invalid("--grid", "n_s and n_v must be >= 2");
  return {ns, nv};
}

Scenario parse_scenario(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    invalid("scenario", std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) invalid("scenario", "top level must be an object");
  reject_unknown_keys(root, "", {"curve", "base", "director", "grid", "convention", "outputs", "tol"});

  Scenario sc;

  const json& curve = require_object(root, "curve", "");
  reject_unknown_keys(curve, "curve", {"kind", "a", "b"});
  if (!curve.contains("kind")) invalid("curve.kind", "missing");
  sc.curve.kind = parse_kind(curve.at("kind"));
  switch (sc.curve.kind) {
    case CurveKind::CircularHelix:
      sc.curve.a = read_real(curve, "a", "curve.", 1.0);
      sc.curve.b = read_real(curve, "b", "curve.", 2.0);
      break;
    case CurveKind::HyperbolicHelix:
      sc.curve.a = read_real(curve, "a", "curve.", 2.0);
      sc.curve.b = read_real(curve, "b", "curve.", 1.0);
      break;
    case CurveKind::Line:
      sc.curve.a = read_real(curve, "a", "curve.", 0.0);
      sc.curve.b = read_real(curve, "b", "curve.", 1.0);
      break;
    case CurveKind::PlanarFixture:
      sc.curve.a = read_real(curve, "a", "curve.", 1.0);
      sc.curve.b = read_real(curve, "b", "curve.", 0.0);
      break;
  }

  if (root.contains("base")) {
    const json& base = root.at("base");
    if (base.is_string()) {
      if (base.get<std::string>() != "alpha") invalid("base", "must be \"alpha\" or {\"companion\": [l1, l2, l3]}");
    } else if (base.is_object()) {
      reject_unknown_keys(base, "base", {"companion"});
      if (!base.contains("companion")) invalid("base.companion", "missing");
      const json& l = base.at("companion");
      if (!l.is_array() || l.size() != 3 || !std::all_of(l.begin(), l.end(), [](const json& e) { return e.is_number(); })) {
        invalid("base.companion", "must be an array of three numbers");
      }
      sc.companion = FrameVector{l[0].get<double>(), l[1].get<double>(), l[2].get<double>()};
    } else {
      invalid("base", "must be \"alpha\" or {\"companion\": [l1, l2, l3]}");
    }
  }

  const json& dir = require_object(root, "director", "");
  reject_unknown_keys(dir, "director", {"x1", "x2", "x3", "causal_sign"});
  sc.director.x1 = read_real(dir, "x1", "director.");
  sc.director.x2 = read_real(dir, "x2", "director.");
  sc.director.x3 = read_real(dir, "x3", "director.");
  if (dir.contains("causal_sign")) {
    const json& cs = dir.at("causal_sign");
    if (!cs.is_number_integer() || (cs.get<int>() != 1 && cs.get<int>() != -1)) {
      invalid("director.causal_sign", "must be 1 or -1");
    }
    sc.director.causal_sign = cs.get<int>();
  }

  const json& grid = require_object(root, "grid", "");
  reject_unknown_keys(grid, "grid", {"s_min", "s_max", "n_s", "v_min", "v_max", "n_v"});
  sc.grid.s_min = read_real(grid, "s_min", "grid.");
  sc.grid.s_max = read_real(grid, "s_max", "grid.");
  sc.grid.n_s = read_count(grid, "n_s", "grid.");
  sc.grid.v_min = read_real(grid, "v_min", "grid.");
  sc.grid.v_max = read_real(grid, "v_max", "grid.");
  sc.grid.n_v = read_count(grid, "n_v", "grid.");
  if (!(sc.grid.s_min < sc.grid.s_max)) invalid("grid.s_max", "must exceed s_min");
  if (!(sc.grid.v_min <= sc.grid.v_max)) invalid("grid.v_max", "must not be below v_min");

  if (root.contains("convention")) {
    if (!root.at("convention").is_string()) invalid("convention", "must be a string");
    sc.convention = parse_convention(root.at("convention").get<std::string>());
  }

  if (root.contains("outputs")) {
    const json& outs = root.at("outputs");
    if (!outs.is_array()) invalid("outputs", "must be an array");
    sc.outputs.clear();
    for (const auto& o : outs) sc.outputs.insert(parse_output(o));
  }

  if (root.contains("tol")) {
    sc.verdict_tol = read_real(root, "tol", "");
    if (!(sc.verdict_tol > 0.0)) invalid("tol", "must be positive");
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) invalid("scenario", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

Model build_model(const Scenario& sc, const Tolerance& tol) {
  const double inset = 3.0 * tol.fd_step;
  if (!(sc.grid.s_max - sc.grid.s_min > 2.0 * inset)) invalid("grid", "s interval too short for the sampling margin");

  const double a = sc.curve.a;
  const double b = sc.curve.b;
  double speed = 0.0;
  switch (sc.curve.kind) {
    case CurveKind::CircularHelix:
      if (!(a >= 0.0 && b > a)) invalid("curve", "circular_helix requires b > a >= 0 (timelike)");
      speed = std::sqrt(b * b - a * a);
      break;
    case CurveKind::HyperbolicHelix:
      if (!(b >= 0.0 && a > b)) invalid("curve", "hyperbolic_helix requires a > b >= 0 (timelike)");
      speed = std::sqrt(a * a - b * b);
      break;
    case CurveKind::Line:
      if (!(b > std::abs(a))) invalid("curve", "line requires b > |a| (timelike)");
      speed = std::sqrt(b * b - a * a);
      break;
    case CurveKind::PlanarFixture:
      if (!(a > 0.0)) invalid("curve", "planar_fixture requires a > 0");
      speed = a;
      break;
  }
  const Interval t_domain{sc.grid.s_min / speed, sc.grid.s_max / speed};
  ParamCurve pc = [&] {
    switch (sc.curve.kind) {
      case CurveKind::CircularHelix: return catalogue::circular_helix(a, b, t_domain);
      case CurveKind::HyperbolicHelix: return catalogue::hyperbolic_helix(a, b, t_domain);
      case CurveKind::Line: return catalogue::timelike_line(a, b, t_domain);
      case CurveKind::PlanarFixture: break;
    }
    return catalogue::planar_hyperbola(a, t_domain);
  }();

  Model m;
  m.alpha = std::make_shared<const ProperTimeCurve>(reparametrize_proper_time(std::move(pc), sc.grid.s_min, tol));
  const Interval d = m.alpha->domain();
  m.s_grid = numerics::uniform_grid(d.lo + inset, d.hi - inset, sc.grid.n_s);
  m.v_grid = numerics::uniform_grid(sc.grid.v_min, sc.grid.v_max, sc.grid.n_v);

  const FrameCoefficients x = [&] {
    try {
      return validate_coefficients(sc.director.x1, sc.director.x2, sc.director.x3, sc.director.causal_sign);
    } catch (const GeometryError& e) {
      invalid("director", e.what());
    }
  }();

  if (sc.companion) {
    const CompanionSpec spec{*sc.companion, {}};
    try {
      companion_causal_character(spec, tol.zero_tol);
    } catch (const GeometryError& e) {
      invalid("base.companion", e.what());
    }
    m.beta = std::make_shared<const CompanionCurve>(integrate_companion(m.alpha, spec, m.s_grid, tol));
    m.surface = RuledSurface::over_companion(m.beta, x);
  } else {
    m.surface = RuledSurface::over_base(m.alpha, x);
  }
  return m;
}

namespace {

ordered_json helix_section(const FrameCoefficients& x, std::span<const kernels::SweepRow> rows) {
  ordered_json out = ordered_json::object();
  for (HelixVariant v :
       {HelixVariant::AlphaGeneral, HelixVariant::RectifyingAlpha, HelixVariant::BetaN, HelixVariant::BetaB}) {
    ordered_json entry;
    try {
      double worst = 0.0;
      std::size_t undefined_h = 0;
      for (const auto& r : rows) {
        if (!r.h) {
          ++undefined_h;
          continue;
        }
        worst = std::max(worst, std::abs(helix_condition(x, *r.h, v)));
      }
      if (undefined_h == rows.size()) {
        entry["status"] = "undefined";
        entry["reason"] = "k2 vanishes; h = k1/k2 undefined";
      } else {
        entry["status"] = "evaluated";
        entry["max_abs_residual"] = worst;
        entry["satisfied"] = worst <= 1e-6;
      }
    } catch (const GeometryError& e) {
      entry["status"] = "degenerate";
      entry["reason"] = std::string(to_string(e.code()));
    }
    out[std::string(to_string(v))] = entry;
  }
  return out;
}

ordered_json striction_section(const Model& m, std::span<const kernels::SweepRow> rows, const Tolerance& tol) {
  ordered_json out;
  std::size_t cylinder = 0, null_ruling = 0, coincide = 0;
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& r : rows) {
    if (r.flags & kernels::kCylinder) ++cylinder;
    if (r.flags & kernels::kNullRulingDerivative) ++null_ruling;
    if (r.striction_offset) {
      lo = std::min(lo, *r.striction_offset);
      hi = std::max(hi, *r.striction_offset);
      if (r.striction_coincides) ++coincide;
    }
  }
  if (cylinder == rows.size()) {
    out["status"] = "undefined";
    out["reason"] = std::string(to_string(ErrorCode::CylinderStriction));
    return out;
  }
  out["status"] = (cylinder + null_ruling == 0) ? "defined" : "partial";
  out["undefined_cylinder_points"] = cylinder;
  out["undefined_null_points"] = null_ruling;
  out["offset_range"] = ordered_json::array({lo, hi});
  out["coincides_with_base_points"] = coincide;
  out["coincides_with_base"] = coincide == rows.size();

  std::vector<Vec3> pts;
  for (const auto& r : rows) {
    if (r.striction_offset) pts.push_back(striction_point(*m.surface, r.s, tol).point);
  }
  bool collinear = pts.size() >= 2;
  if (collinear) {
    const Vec3 first = pts[1] - pts[0];
    const double nf = euclid_norm(first);
    collinear = nf > 0.0;
    for (std::size_t i = 2; collinear && i < pts.size(); ++i) {
      const Vec3 d = pts[i] - pts[i - 1];
      if (euclid_norm(euclid_cross(d, first)) > 1e-6 * nf * std::max(euclid_norm(d), nf)) collinear = false;
    }
  }
  out["collinear"] = collinear;
  if (!pts.empty()) {
    out["first_point"] = vec_json(pts.front());
    out["last_point"] = vec_json(pts.back());
  }
  return out;
}

}  // namespace

std::string run_scenario(const Scenario& sc, const RunOptions& opts) {
  require_output(sc, Output::Report, "report");
  const Model m = build_model(sc, opts.tol);
  const RuledSurface& surf = *m.surface;
  const auto rows = kernels::sweep(surf, m.s_grid, opts.tol, opts.execution);

  ordered_json rep;
  ordered_json& scn = rep["scenario"];
  scn["curve"] = {{"kind", kind_name(sc.curve.kind)}, {"a", sc.curve.a}, {"b", sc.curve.b}};
  scn["base"] = sc.companion ? ordered_json{{"companion", frame_vec_json(*sc.companion)}} : ordered_json("alpha");
  scn["director"] = ordered_json::array({sc.director.x1, sc.director.x2, sc.director.x3});
  scn["causal_sign"] = sc.director.causal_sign;
  scn["convention"] = std::string(to_string(sc.convention));
  scn["n_s"] = sc.grid.n_s;
  scn["s_range"] = ordered_json::array({m.s_grid.front(), m.s_grid.back()});

  const CurveClass cc = classify_curve(*m.alpha, m.s_grid, {}, opts.tol);
  const MannheimResult mh = mannheim_constancy(*m.alpha, m.s_grid, 1e-6, opts.tol);
  rep["curve"] = {{"planar", cc.planar},
                  {"helix", cc.helix},
                  {"h_mean", real_or_null(cc.h_mean)},
                  {"h_relative_spread", real_or_null(cc.h_relative_spread)},
                  {"k1_range", ordered_json::array({cc.k1_min, cc.k1_max})},
                  {"k2_range", ordered_json::array({cc.k2_min, cc.k2_max})},
                  {"mannheim_ratio_constant", mh.constant},
                  {"mannheim_ratio_mean", mh.mean}};

  rep["director"] = {{"case", std::string(to_string(classify_case(surf.director())))},
                     {"causal_sign", surf.director().causal_sign()}};

  VerdictOptions vo;
  vo.convention = sc.convention;
  vo.verdict_tol = sc.verdict_tol;
  vo.tol = opts.tol;
  const DevelopabilityVerdict v = verdict_from_rows(rows, vo);
  ordered_json witnesses = ordered_json::array();
  for (const auto& w : v.witnesses) witnesses.push_back({{"s", w.s}, {"P", w.P}});
  rep["distribution"] = {{"convention", std::string(to_string(v.convention))},
                         {"developable", v.developable},
                         {"cylinder", v.cylinder},
                         {"max_abs_P", v.max_abs_P},
                         {"max_abs_numerator", v.max_abs_numerator},
                         {"undefined_points", v.undefined_count},
                         {"samples", v.samples},
                         {"witnesses", witnesses}};

  rep["helix_conditions"] = helix_section(surf.director(), rows);

  if (sc.outputs.contains(Output::Striction)) rep["striction"] = striction_section(m, rows, opts.tol);

  double bx_lo = std::numeric_limits<double>::infinity(), bx_hi = -bx_lo;
  for (const auto& r : rows) {
    bx_lo = std::min(bx_lo, r.base_director_inner);
    bx_hi = std::max(bx_hi, r.base_director_inner);
  }
  rep["base_director_inner_range"] = ordered_json::array({bx_lo, bx_hi});

  ordered_json corners = ordered_json::array();
  for (double s : {m.s_grid.front(), m.s_grid.back()}) {
    for (double vv : {sc.grid.v_min, sc.grid.v_max}) {
      std::string type;
      try {
        type = std::string(to_string(surface_causal_type(surf, s, vv, opts.tol)));
      } catch (const GeometryError& e) {
        if (e.code() != ErrorCode::SingularPoint) throw;
        type = "Singular";
      }
      corners.push_back({{"s", s}, {"v", vv}, {"type", type}});
    }
  }
  rep["surface_causal_type"] = corners;
  return rep.dump(2) + "\n";
}

std::string export_mesh(const Scenario& sc, const RunOptions& opts) {
  require_output(sc, Output::Mesh, "mesh");
  const Model m = build_model(sc, opts.tol);
  const auto verts = kernels::mesh(*m.surface, m.s_grid, m.v_grid, opts.tol, opts.execution);
  std::string out;
  out.reserve(verts.size() * 64);
  for (const Vec3& p : verts) {
    out += "v " + format_real(p.c1) + " " + format_real(p.c2) + " " + format_real(p.c3) + "\n";
  }
  const std::size_t ns = m.s_grid.size();
  const std::size_t nv = m.v_grid.size();
  const auto idx = [nv](std::size_t i, std::size_t j) { return std::to_string(i * nv + j + 1); };
  for (std::size_t i = 0; i + 1 < ns; ++i) {
    for (std::size_t j = 0; j + 1 < nv; ++j) {
      out += "f " + idx(i, j) + " " + idx(i + 1, j) + " " + idx(i + 1, j + 1) + "\n";
      out += "f " + idx(i, j) + " " + idx(i + 1, j + 1) + " " + idx(i, j + 1) + "\n";
    }
  }
  return out;
}

std::string export_sweep(const Scenario& sc, const RunOptions& opts) {
  require_output(sc, Output::Sweep, "sweep");
  const Model m = build_model(sc, opts.tol);
  const auto rows = kernels::sweep(*m.surface, m.s_grid, opts.tol, opts.execution);
  const auto cell = [](const std::optional<double>& x) { return x ? format_real(*x) : std::string("undefined"); };
  std::string out(kSweepHeader);
  out += "\n";
  for (const auto& r : rows) {
    std::string flags;
    const auto add = [&flags](const char* name) {
      if (!flags.empty()) flags += "|";
      flags += name;
    };
    if (r.flags & kernels::kHUndefined) add("h_undefined");
    if (r.flags & kernels::kPaperUndefined) add("paper_undefined");
    if (r.flags & kernels::kLorentzianUndefined) add("lorentzian_undefined");
    if (r.flags & kernels::kCylinder) add("cylinder");
    if (r.flags & kernels::kNullRulingDerivative) add("null_ruling_derivative");
    if (flags.empty()) flags = "none";
    out += format_real(r.s) + "," + format_real(r.k1) + "," + format_real(r.k2) + "," + cell(r.h) + "," +
           cell(r.p_paper) + "," + cell(r.p_lorentzian) + "," + format_real(r.numerator) + "," +
           cell(r.striction_offset) + "," + flags + "\n";
  }
  return out;
}

std::string export_case_table(const Scenario& sc, const RunOptions& opts) {
  require_output(sc, Output::CaseTable, "case_table");
  const Model m = build_model(sc, opts.tol);
  const auto rows = case_table(m.alpha, m.s_grid, sc.verdict_tol, opts.tol, opts.execution);
  ordered_json out;
  out["curve"] = {{"kind", kind_name(sc.curve.kind)}, {"a", sc.curve.a}, {"b", sc.curve.b}};
  out["convention"] = "paper";
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"lambda", frame_vec_json(r.lambda)},
                   {"case", std::string(to_string(r.case_class))},
                   {"x", frame_vec_json(r.x)},
                   {"causal_sign", r.causal_sign},
                   {"numerator_coefficients", {{"k1", r.numerator_k1}, {"k2", r.numerator_k2}}},
                   {"denominator_coefficients",
                    {{"k1k1", r.denominator_k1k1}, {"k1k2", r.denominator_k1k2}, {"k2k2", r.denominator_k2k2}}},
                   {"P_range", ordered_json::array({r.p_min, r.p_max})},
                   {"max_oracle_deviation", r.max_oracle_deviation},
                   {"undefined_points", r.undefined_count},
                   {"pattern", std::string(to_string(r.pattern))}});
  }
  out["rows"] = arr;
  return out.dump(2) + "\n";
}

}  // namespace ruled::scenario
