#pragma once

#include <string>
#include <vector>

#include "spintensor/identities.hpp"
#include "spintensor/spinor_connection.hpp"

namespace spintensor {

//! Outcome of the exact canonical verification suite.
struct CanonicalRun {
  std::string orientation;              //!< "right" or "left"
  std::vector<std::string> corruptions; //!< applied corruption specs, echoed
  std::vector<IdentityReport> identities;
  long cubic_total_cases = 0;
  bool overall_pass = false;
};

//! Residual catalogue at one sample point. When evaluation aborts (frame
//! degenerate, metric not Lorentzian, inconsistent equipment), `error`
//! carries the message and the residuals collected so far are kept.
struct PointReport {
  Point x{};
  std::vector<ResidualReport> residuals;
  UCoefficients u;
  std::string error;
  bool passed = false;
};

//! Outcome of running one scene over all of its sample points.
struct SceneRun {
  std::string name;
  std::string orientation;
  std::string derivative_mode; //!< "symbolic" or "finite-difference"
  double tolerance = 0.0;
  std::vector<PointReport> points;
  bool overall_pass = false;
};

//! Renderings are deterministic: json objects carry lexicographically
//! sorted keys and shortest-round-trip floats, so identical runs emit
//! byte-identical documents. Text is a human-readable summary of the same
//! content.
std::string render_json(const CanonicalRun& run);
std::string render_text(const CanonicalRun& run);
std::string render_json(const SceneRun& run);
std::string render_text(const SceneRun& run);

} // namespace spintensor
