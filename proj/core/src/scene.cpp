#include "spintensor/scene.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace spintensor {

namespace {

using nlohmann::json;

std::string orientation_str(Orientation o) {
  return o == Orientation::right ? "right" : "left";
}

std::string mode_str(DerivativeMode m) {
  return m == DerivativeMode::symbolic ? "symbolic" : "finite-difference";
}

Orientation parse_orientation(const std::string& s, const std::string& origin) {
  if (s == "right") return Orientation::right;
  if (s == "left") return Orientation::left;
  throw ConfigError(origin + ": orientation must be \"right\" or \"left\", got \"" + s +
                    "\"");
}

DerivativeMode parse_mode(const std::string& s, const std::string& origin) {
  if (s == "symbolic") return DerivativeMode::symbolic;
  if (s == "finite-difference") return DerivativeMode::finite_difference;
  throw ConfigError(origin +
                    ": derivative_mode must be \"symbolic\" or \"finite-difference\", "
                    "got \"" +
                    s + "\"");
}

const json& require_key(const json& doc, const char* key, const std::string& origin) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw ConfigError(origin + ": missing key \"" + key + "\"");
  return *it;
}

std::string require_string(const json& j, const std::string& what,
                           const std::string& origin) {
  if (!j.is_string()) throw ConfigError(origin + ": " + what + " must be a string");
  return j.get<std::string>();
}

// Reads an N x N grid of expression strings, validating that every entry
// parses; errors name the offending entry and keep the parser's byte offset.
template <std::size_t N>
std::array<std::array<std::string, N>, N> parse_grid(const json& j, const char* key,
                                                     const std::string& origin) {
  std::array<std::array<std::string, N>, N> grid;
  if (!j.is_array() || j.size() != N)
    throw ConfigError(origin + ": \"" + key + "\" must be an array of " +
                      std::to_string(N) + " rows");
  for (std::size_t a = 0; a < N; ++a) {
    const json& row = j[a];
    if (!row.is_array() || row.size() != N)
      throw ConfigError(origin + ": \"" + key + "\" row " + std::to_string(a) +
                        " must hold " + std::to_string(N) + " strings");
    for (std::size_t b = 0; b < N; ++b) {
      const std::string entry =
          std::string(key) + "[" + std::to_string(a) + "][" + std::to_string(b) + "]";
      grid[a][b] = require_string(row[b], entry, origin);
      try {
        parse_expr(grid[a][b]);
      } catch (const ParseError& e) {
        throw ConfigError(origin + ": " + entry + ": " + e.what());
      }
    }
  }
  return grid;
}

// Compiled form of a config: every expression parsed once, equipment built.
struct CompiledScene {
  FrameField frame;
  MetricField metric;
  EquipmentField equipment;
  EvalOptions options;
  double tolerance = 0.0;
};

CompiledScene compile_scene(const SceneConfig& cfg) {
  CompiledScene s;
  for (int i = 0; i < 4; ++i)
    for (int r = 0; r < 4; ++r) {
      s.frame.comp[i][r] = parse_expr(cfg.frame[i][r]);
      s.metric.comp[i][r] = parse_expr(cfg.metric[i][r]);
    }
  s.equipment = canonical_equipment_field(cfg.orientation);
  if (cfg.has_spin_transform) {
    Expr2 st;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) st[a][b] = parse_expr(cfg.spin_transform[a][b]);
    s.equipment = spin_frame_transform(s.equipment, st);
  }
  s.options.mode = cfg.mode;
  s.options.fd_step = kFdStep;
  s.tolerance = cfg.tolerance;
  return s;
}

PointReport evaluate_point(const CompiledScene& s, const Point& x) {
  PointReport pr;
  pr.x = x;
  const double tol = s.tolerance;
  const EvalOptions& opts = s.options;
  try {
    invert4(eval_matrix(s.frame.comp, x), "frame"); // nondegeneracy preflight
    require_lorentzian(eval_matrix(s.metric.comp, x), x);
    const EquipmentValues v = eval_equipment(s.equipment, x);
    pr.residuals.push_back(equipment_consistency(v, tol));
    const Ten3c c = commutation_coefficients(s.frame, x, opts);
    const Connection conn = christoffel(s.frame, s.metric, x, opts);
    pr.residuals.push_back(check_torsion(conn, c, tol));
    pr.residuals.push_back(check_metricity(s.frame, s.metric, conn, x, opts, tol));
    pr.residuals.push_back(
        check_gamma_symmetrization(s.frame, s.metric, conn, x, opts, tol));
    pr.residuals.push_back(check_gamma_trace(s.frame, s.metric, conn, x, opts, tol));
    const SpinorConnection sc =
        spinor_connection(s.equipment, s.frame, conn, x, opts, tol);
    pr.residuals.push_back(
        check_spinor_metric_concordance(s.equipment, s.frame, sc, x, opts, tol));
    pr.residuals.push_back(
        check_field_concordance(s.equipment, s.frame, conn, sc, x, opts, tol));
    pr.residuals.push_back(check_lie_swap_spinor(s.equipment, s.frame, x, opts, tol));
    pr.residuals.push_back(check_lie_swap_conj(s.equipment, s.frame, x, opts, tol));
    pr.residuals.push_back(check_lie_swap_pointwise(s.equipment, s.frame, x, opts, tol));
    pr.u = u_coefficients(s.equipment, s.frame, x, opts);
    pr.residuals.push_back(
        check_dual_proportionality_spinor(s.equipment, s.frame, pr.u, x, opts, tol));
    pr.residuals.push_back(
        check_dual_proportionality_conj(s.equipment, s.frame, pr.u, x, opts, tol));
    pr.passed = true;
    for (const ResidualReport& r : pr.residuals) pr.passed = pr.passed && r.passed;
  } catch (const std::exception& e) {
    pr.error = e.what();
    pr.passed = false;
  }
  return pr;
}

std::size_t thread_count(std::size_t njobs) {
  std::size_t n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("SPINTENSOR_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024)
      n = static_cast<std::size_t>(v);
  }
  return std::clamp<std::size_t>(n, 1, std::max<std::size_t>(njobs, 1));
}

int parse_small_int(const std::string& s, const std::string& spec) {
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0' || v < -1000 || v > 1000)
    throw ConfigError("corruption spec \"" + spec + "\": \"" + s +
                      "\" is not a small integer");
  return static_cast<int>(v);
}

} // namespace

SceneConfig parse_scene_config(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(origin + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError(origin + ": top level must be an object");

  static const char* known[] = {"name",      "orientation",   "derivative_mode",
                                "tolerance", "frame",         "metric",
                                "equipment", "sample_points"};
  for (const auto& item : doc.items()) {
    const bool ok = std::any_of(std::begin(known), std::end(known),
                                [&](const char* k) { return item.key() == k; });
    if (!ok) throw ConfigError(origin + ": unknown key \"" + item.key() + "\"");
  }

  SceneConfig cfg;
  cfg.name = require_string(require_key(doc, "name", origin), "name", origin);
  if (doc.contains("orientation"))
    cfg.orientation = parse_orientation(
        require_string(doc["orientation"], "orientation", origin), origin);
  if (doc.contains("derivative_mode"))
    cfg.mode =
        parse_mode(require_string(doc["derivative_mode"], "derivative_mode", origin),
                   origin);
  if (doc.contains("tolerance")) {
    if (!doc["tolerance"].is_number())
      throw ConfigError(origin + ": tolerance must be a number");
    cfg.tolerance = doc["tolerance"].get<double>();
  }
  if (!(cfg.tolerance > 0.0))
    throw ConfigError(origin + ": tolerance must be positive");

  cfg.frame = parse_grid<4>(require_key(doc, "frame", origin), "frame", origin);
  cfg.metric = parse_grid<4>(require_key(doc, "metric", origin), "metric", origin);

  const json& equip = require_key(doc, "equipment", origin);
  if (equip.is_string()) {
    if (equip.get<std::string>() != "canonical-constant")
      throw ConfigError(origin +
                        ": equipment must be \"canonical-constant\" or an object with "
                        "\"spin_transform\"");
  } else if (equip.is_object() && equip.size() == 1 && equip.contains("spin_transform")) {
    cfg.has_spin_transform = true;
    cfg.spin_transform =
        parse_grid<2>(equip["spin_transform"], "spin_transform", origin);
  } else {
    throw ConfigError(origin +
                      ": equipment must be \"canonical-constant\" or an object with "
                      "\"spin_transform\"");
  }

  const json& pts = require_key(doc, "sample_points", origin);
  if (!pts.is_array() || pts.empty())
    throw ConfigError(origin + ": sample_points must be a nonempty array");
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const json& p = pts[k];
    if (!p.is_array() || p.size() != 4)
      throw ConfigError(origin + ": sample_points[" + std::to_string(k) +
                        "] must hold 4 numbers");
    Point x{};
    for (int a = 0; a < 4; ++a) {
      if (!p[a].is_number())
        throw ConfigError(origin + ": sample_points[" + std::to_string(k) +
                          "] must hold 4 numbers");
      x[a] = p[a].get<double>();
    }
    cfg.sample_points.push_back(x);
  }
  return cfg;
}

SceneConfig load_scene_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene_config(buf.str(), path);
}

std::string serialize_scene_config(const SceneConfig& cfg) {
  json equip;
  if (cfg.has_spin_transform)
    equip = json{{"spin_transform", cfg.spin_transform}};
  else
    equip = "canonical-constant";
  json pts = json::array();
  for (const Point& x : cfg.sample_points) pts.push_back(x);
  const json doc{{"derivative_mode", mode_str(cfg.mode)},
                 {"equipment", equip},
                 {"frame", cfg.frame},
                 {"metric", cfg.metric},
                 {"name", cfg.name},
                 {"orientation", orientation_str(cfg.orientation)},
                 {"sample_points", pts},
                 {"tolerance", cfg.tolerance}};
  return doc.dump(2) + "\n";
}

SceneRun run_verify_scene(const SceneConfig& cfg) {
  SceneRun run;
  run.name = cfg.name;
  run.orientation = orientation_str(cfg.orientation);
  run.derivative_mode = mode_str(cfg.mode);
  run.tolerance = cfg.tolerance;

  const CompiledScene s = compile_scene(cfg);
  const std::size_t n = cfg.sample_points.size();
  run.points.resize(n);

  // Points are independent; workers fill disjoint slots, so the report
  // order is the config order regardless of scheduling.
  const std::size_t workers = thread_count(n);
  if (workers <= 1) {
    for (std::size_t k = 0; k < n; ++k)
      run.points[k] = evaluate_point(s, cfg.sample_points[k]);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t k = w; k < n; k += workers)
          run.points[k] = evaluate_point(s, cfg.sample_points[k]);
      });
    for (std::thread& t : pool) t.join();
  }

  run.overall_pass = true;
  for (const PointReport& p : run.points) run.overall_pass = run.overall_pass && p.passed;
  return run;
}

void apply_corruption(ExactEquipment& eq, const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw ConfigError("corruption spec \"" + spec +
                      "\": expected G:p,r,rb or Ginv:q,s,sb");
  const std::string field = spec.substr(0, colon);
  std::array<int, 3> v{};
  std::string rest = spec.substr(colon + 1);
  for (int k = 0; k < 3; ++k) {
    const auto comma = rest.find(',');
    if ((k < 2) == (comma == std::string::npos))
      throw ConfigError("corruption spec \"" + spec + "\": expected three indices");
    v[k] = parse_small_int(rest.substr(0, comma), spec);
    rest = comma == std::string::npos ? std::string() : rest.substr(comma + 1);
  }
  if (v[0] < 0 || v[0] > 3 || v[1] < 1 || v[1] > 2 || v[2] < 1 || v[2] > 2)
    throw ConfigError("corruption spec \"" + spec +
                      "\": spatial index in 0..3, spinor indices in 1..2");
  if (field == "G") {
    auto& e = eq.G.at({v[0], v[1], v[2]});
    e = -e;
  } else if (field == "Ginv") {
    auto& e = eq.G_inv.at({v[0], v[1], v[2]});
    e = -e;
  } else {
    throw ConfigError("corruption spec \"" + spec + "\": field must be G or Ginv");
  }
}

CanonicalRun run_verify_canonical(Orientation orient,
                                  const std::vector<std::string>& corruptions) {
  ExactEquipment eq = canonical_equipment<GaussianRational>(orient);
  for (const std::string& spec : corruptions) apply_corruption(eq, spec);
  CanonicalRun run;
  run.orientation = orientation_str(orient);
  run.corruptions = corruptions;
  run.identities = run_canonical_suite(eq);
  run.overall_pass = true;
  for (const IdentityReport& rep : run.identities) {
    if (rep.id == "cubic") run.cubic_total_cases = rep.total_cases;
    run.overall_pass = run.overall_pass && rep.passed;
  }
  return run;
}

} // namespace spintensor
