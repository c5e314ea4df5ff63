#include "doctest.h"

#include <cstdlib>
#include <string>

#include "spintensor/scene.hpp"

using namespace spintensor;

namespace {

// Baked in at configure time; the environment can override it.
std::string scenes_dir() {
  const char* dir = std::getenv("SPINTENSOR_SCENES_DIR");
  return dir != nullptr ? dir : SPINTENSOR_SCENES_DIR;
}

// A minimal valid scene the structural tests below mutate.
std::string minimal_scene(const std::string& equipment = "\"canonical-constant\"",
                          const std::string& extra = "") {
  return std::string(R"({
    "name": "minimal",
    "orientation": "right",
    "derivative_mode": "symbolic",
    "tolerance": 1e-9,
    "frame": [
      ["1", "0", "0", "0"],
      ["0", "1", "0", "0"],
      ["0", "0", "1", "0"],
      ["0", "0", "0", "1"]
    ],
    "metric": [
      ["1", "0", "0", "0"],
      ["0", "-1", "0", "0"],
      ["0", "0", "-1", "0"],
      ["0", "0", "0", "-1"]
    ],
    "equipment": )") +
         equipment + R"(,
    "sample_points": [[0, 0, 0, 0], [0.3, -0.2, 0.9, 1.4]])" + extra + "\n}";
}

bool has_error(const std::string& text, const std::string& needle) {
  try {
    parse_scene_config(text, "test-config");
  } catch (const Error& e) {
    CAPTURE(e.what());
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

const std::vector<std::string> kResidualOrder = {
    "equipment_consistency", "torsion",
    "metricity",             "gamma_symmetrization",
    "gamma_trace",           "spinor_metric_concordance",
    "field_concordance",     "lie_swap_spinor",
    "lie_swap_conj",         "lie_swap_pointwise",
    "dual_proportionality_spinor", "dual_proportionality_conj",
};

void check_scene_passes(const SceneRun& run, std::size_t n_points) {
  CHECK(run.overall_pass);
  REQUIRE(run.points.size() == n_points);
  for (const PointReport& p : run.points) {
    CHECK(p.passed);
    CHECK(p.error.empty());
    REQUIRE(p.residuals.size() == kResidualOrder.size());
    for (std::size_t k = 0; k < p.residuals.size(); ++k) {
      CAPTURE(p.residuals[k].id);
      CHECK(p.residuals[k].id == kResidualOrder[k]);
      CHECK(p.residuals[k].passed);
      CHECK(p.residuals[k].max_abs <= run.tolerance);
    }
  }
}

} // namespace

TEST_CASE("config round trip: parse, serialize, reparse, same run") {
  const SceneConfig cfg = load_scene_config(scenes_dir() + "/spin-rescaled.json");
  CHECK(cfg.name == "spin-rescaled");
  CHECK(cfg.orientation == Orientation::right);
  CHECK(cfg.mode == DerivativeMode::symbolic);
  CHECK(cfg.tolerance == 1e-9);
  CHECK(cfg.frame[0][0] == "exp(-x1)");
  CHECK(cfg.frame[0][1] == "0");
  CHECK(cfg.has_spin_transform);
  CHECK(cfg.spin_transform[0][0] == "exp(x1)");
  REQUIRE(cfg.sample_points.size() == 5);
  CHECK(cfg.sample_points[1][1] == 0.5);

  const SceneConfig back = parse_scene_config(serialize_scene_config(cfg), "turn");
  CHECK(back.name == cfg.name);
  CHECK(back.orientation == cfg.orientation);
  CHECK(back.mode == cfg.mode);
  CHECK(back.tolerance == cfg.tolerance);
  CHECK(back.frame == cfg.frame);
  CHECK(back.metric == cfg.metric);
  CHECK(back.has_spin_transform == cfg.has_spin_transform);
  CHECK(back.spin_transform == cfg.spin_transform);
  CHECK(back.sample_points == cfg.sample_points);

  // Serialization is stable under the round trip as well.
  CHECK(serialize_scene_config(back) == serialize_scene_config(cfg));
}

TEST_CASE("malformed configs are rejected with pointed messages") {
  CHECK(has_error("{ not json", "test-config"));
  CHECK(has_error("[1,2,3]", "test-config"));

  // Bad expression text names the entry and the parse offset.
  std::string bad = minimal_scene();
  bad.replace(bad.find("\"1\""), 3, "\"1+\"");
  CHECK(has_error(bad, "frame[0][0]"));
  CHECK(has_error(bad, "offset"));

  std::string bad_metric = minimal_scene();
  bad_metric.replace(bad_metric.rfind("\"-1\""), 4, "\"x9\"");
  CHECK(has_error(bad_metric, "metric[3][3]"));

  // Structural violations.
  std::string no_name = minimal_scene();
  no_name.replace(no_name.find("\"name\": \"minimal\","), 19, "");
  CHECK(has_error(no_name, "name"));

  std::string bad_orient = minimal_scene();
  bad_orient.replace(bad_orient.find("\"right\""), 7, "\"up\"");
  CHECK(has_error(bad_orient, "orientation"));

  std::string bad_mode = minimal_scene();
  bad_mode.replace(bad_mode.find("\"symbolic\""), 10, "\"autodiff\"");
  CHECK(has_error(bad_mode, "derivative_mode"));

  std::string bad_tol = minimal_scene();
  bad_tol.replace(bad_tol.find("1e-9"), 4, "0");
  CHECK(has_error(bad_tol, "tolerance"));

  std::string no_points = minimal_scene();
  no_points.replace(no_points.find("[[0, 0, 0, 0], [0.3, -0.2, 0.9, 1.4]]"), 37, "[]");
  CHECK(has_error(no_points, "sample_points"));

  std::string short_point = minimal_scene();
  short_point.replace(short_point.find("[0, 0, 0, 0]"), 12, "[0, 0, 0]");
  CHECK(has_error(short_point, "sample_points"));

  CHECK(has_error(minimal_scene("\"canonical-constant\"",
                                ",\n    \"color\": \"red\""),
                  "color"));
  CHECK(has_error(minimal_scene("\"something-else\""), "equipment"));
  CHECK(has_error(minimal_scene("{\"spin_transform\": [[\"1\", \"0\"], [\"0\"]]}"),
                  "spin_transform"));
  CHECK(has_error(minimal_scene("{\"spin_transform\": [[\"1\", \"0\"], [\"0\", \"1\"]],"
                                " \"extra\": 1}"),
                  "equipment"));

  CHECK_THROWS_AS(load_scene_config("/nonexistent/path/config.json"), ConfigError);
}

TEST_CASE("bundled scenes pass at every sample point") {
  for (const char* name : {"flat", "conformal", "spin-rescaled"}) {
    CAPTURE(name);
    const SceneConfig cfg =
        load_scene_config(scenes_dir() + "/" + name + ".json");
    const SceneRun run = run_verify_scene(cfg);
    CHECK(run.name == name);
    CHECK(run.orientation == "right");
    CHECK(run.derivative_mode == "symbolic");
    check_scene_passes(run, 5);
  }
}

TEST_CASE("rendered reports are deterministic") {
  const SceneConfig cfg = load_scene_config(scenes_dir() + "/conformal.json");
  const SceneRun a = run_verify_scene(cfg);
  const SceneRun b = run_verify_scene(cfg);
  CHECK(render_json(a) == render_json(b));
  CHECK(render_text(a) == render_text(b));
  CHECK(render_json(a).find("\"overall_pass\": true") != std::string::npos);
  CHECK(render_text(a).find("overall: PASS") != std::string::npos);
}

TEST_CASE("finite differences pass the loose and fail an impossible tolerance") {
  SceneConfig cfg = load_scene_config(scenes_dir() + "/spin-rescaled.json");
  cfg.mode = DerivativeMode::finite_difference;
  cfg.tolerance = 1e-5;
  const SceneRun loose = run_verify_scene(cfg);
  CHECK(loose.derivative_mode == "finite-difference");
  check_scene_passes(loose, 5);

  // Central differences carry real truncation noise, so demanding exact
  // zeros must fail: this guards against residuals that are identically
  // zero by construction rather than genuinely computed.
  cfg.tolerance = 1e-15;
  const SceneRun tight = run_verify_scene(cfg);
  CHECK(!tight.overall_pass);
  bool some_failed = false;
  for (const PointReport& p : tight.points)
    for (const ResidualReport& r : p.residuals)
      if (!r.passed && r.max_abs > 0.0) some_failed = true;
  CHECK(some_failed);
}

TEST_CASE("a degenerate point is reported without poisoning the others") {
  SceneConfig cfg = load_scene_config(scenes_dir() + "/conformal.json");
  for (int i = 0; i < 4; ++i)
    for (int r = 0; r < 4; ++r) cfg.frame[i][r] = i == r ? "x1" : "0";
  cfg.sample_points = {Point{0, 2, 0, 0}, Point{0, 0, 0, 0}, Point{0, 1, 0, 0}};
  const SceneRun run = run_verify_scene(cfg);
  CHECK(!run.overall_pass);
  REQUIRE(run.points.size() == 3);
  CHECK(run.points[0].passed);
  CHECK(!run.points[1].passed);
  CHECK(!run.points[1].error.empty());
  CHECK(run.points[2].passed);
}

TEST_CASE("a non-lorentzian metric point is reported as an error") {
  SceneConfig cfg = load_scene_config(scenes_dir() + "/flat.json");
  cfg.metric[1][1] = "1"; // signature (+,+,-,-)
  cfg.sample_points = {Point{0, 0, 0, 0}};
  const SceneRun run = run_verify_scene(cfg);
  CHECK(!run.overall_pass);
  REQUIRE(run.points.size() == 1);
  CHECK(!run.points[0].passed);
  CHECK(!run.points[0].error.empty());
}

TEST_CASE("corruption specs are validated and applied") {
  ExactEquipment eq = canonical_equipment<GaussianRational>();
  CHECK_THROWS_AS(apply_corruption(eq, "X:0,1,1"), ConfigError);
  CHECK_THROWS_AS(apply_corruption(eq, "G:0,1"), ConfigError);
  CHECK_THROWS_AS(apply_corruption(eq, "G:4,1,1"), ConfigError);
  CHECK_THROWS_AS(apply_corruption(eq, "G:0,3,1"), ConfigError);
  CHECK_THROWS_AS(apply_corruption(eq, "G:a,b,c"), ConfigError);
  CHECK_THROWS_AS(apply_corruption(eq, ""), ConfigError);

  const GaussianRational before = eq.G.at({2, 1, 2});
  apply_corruption(eq, "G:2,1,2");
  CHECK(eq.G.at({2, 1, 2}) == -before);
  apply_corruption(eq, "Ginv:0,1,1");
  CHECK(eq.G_inv.at({0, 1, 1}) == GaussianRational(-1));
}

TEST_CASE("canonical run: clean passes, corrupted fails with the corruption echoed") {
  const CanonicalRun clean = run_verify_canonical(Orientation::right);
  CHECK(clean.overall_pass);
  CHECK(clean.orientation == "right");
  CHECK(clean.cubic_total_cases == 256);
  CHECK(clean.corruptions.empty());
  CHECK(clean.identities.size() == 12);

  const CanonicalRun left = run_verify_canonical(Orientation::left);
  CHECK(left.overall_pass);
  CHECK(left.orientation == "left");

  const CanonicalRun bad = run_verify_canonical(Orientation::right, {"G:2,1,2"});
  CHECK(!bad.overall_pass);
  CHECK(bad.cubic_total_cases == 256);
  REQUIRE(bad.corruptions.size() == 1);
  CHECK(bad.corruptions[0] == "G:2,1,2");
  const std::string doc = render_json(bad);
  CHECK(doc.find("\"overall_pass\": false") != std::string::npos);
  CHECK(doc.find("G:2,1,2") != std::string::npos);
}
