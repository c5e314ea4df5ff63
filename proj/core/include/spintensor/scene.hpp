#pragma once

#include "spintensor/report.hpp"

namespace spintensor {

//! Declarative verification scene: a chart frame, a metric in frame
//! components, equipment (the canonical constants, optionally pushed
//! through a pointwise spin transform), and sample points. All matrix
//! entries are expression strings over x0..x3.
struct SceneConfig {
  std::string name;
  Orientation orientation = Orientation::right;
  DerivativeMode mode = DerivativeMode::symbolic;
  double tolerance = 1e-9;
  //! frame[i][r] = i-th holonomic component of frame vector r.
  std::array<std::array<std::string, 4>, 4> frame;
  //! metric[i][j] = metric along frame vectors i and j.
  std::array<std::array<std::string, 4>, 4> metric;
  bool has_spin_transform = false;
  std::array<std::array<std::string, 2>, 2> spin_transform;
  std::vector<Point> sample_points;
};

//! Parses a scene config from json text; `origin` names the source for
//! error messages. Structural problems raise ConfigError; a bad expression
//! raises ParseError naming the entry. Requires at least one sample point
//! and a positive tolerance.
SceneConfig parse_scene_config(const std::string& text, const std::string& origin);

//! Reads and parses a config file. Throws ConfigError when unreadable.
SceneConfig load_scene_config(const std::string& path);

//! Serializes a config back to json (sorted keys, deterministic). Parsing
//! the result yields an equivalent scene.
std::string serialize_scene_config(const SceneConfig& cfg);

//! Runs the full residual catalogue at every sample point: frame
//! nondegeneracy and Lorentzian-metric preflight, equipment consistency,
//! torsion, metricity, symmetrization and trace of the connection, both
//! spinor concordance conditions, the three derivative-swap patterns, and
//! the dual-proportionality residuals with their coefficients. Points are
//! independent and may be evaluated in parallel (SPINTENSOR_THREADS
//! overrides the thread count); the report order is always the config
//! order.
SceneRun run_verify_scene(const SceneConfig& cfg);

//! Negates one entry of exact equipment for failure-path testing. Spec
//! format "G:p,r,rb" or "Ginv:q,s,sb" with a spatial index 0..3 and spinor
//! indices 1..2. Throws ConfigError on malformed specs.
void apply_corruption(ExactEquipment& eq, const std::string& spec);

//! Runs the exact identity suite on canonical equipment of the given
//! orientation after applying the corruption specs in order.
CanonicalRun run_verify_canonical(Orientation orient,
                                  const std::vector<std::string>& corruptions = {});

} // namespace spintensor
