#include "spintensor/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "spintensor/version.hpp"

namespace spintensor {

namespace {

using nlohmann::json;

std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string tuple_str(const std::vector<int>& idx) {
  std::string s = "(";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(idx[k]);
  }
  return s + ")";
}

json residual_json(const ResidualReport& r) {
  return json{{"id", r.id},
              {"max_abs", r.max_abs},
              {"passed", r.passed},
              {"tolerance", r.tolerance},
              {"worst", r.worst}};
}

json complex_pair(cplx v) { return json::array({v.real(), v.imag()}); }

} // namespace

std::string render_json(const CanonicalRun& run) {
  json identities = json::array();
  for (const IdentityReport& rep : run.identities) {
    json failures = json::array();
    for (const IdentityFailure& f : rep.failures)
      failures.push_back(json{
          {"indices", f.indices}, {"lhs", f.lhs}, {"relation", f.relation}, {"rhs", f.rhs}});
    identities.push_back(json{{"failures", failures},
                              {"formula", rep.formula},
                              {"id", rep.id},
                              {"passed", rep.passed},
                              {"total_cases", rep.total_cases}});
  }
  const json doc{{"corruptions", run.corruptions},
                 {"cubic_total_cases", run.cubic_total_cases},
                 {"identities", identities},
                 {"kind", "verify-canonical"},
                 {"orientation", run.orientation},
                 {"overall_pass", run.overall_pass},
                 {"version", kVersion}};
  return doc.dump(2) + "\n";
}

std::string render_text(const CanonicalRun& run) {
  std::ostringstream out;
  out << "verify-canonical  orientation=" << run.orientation << "  version=" << kVersion
      << "\n";
  if (!run.corruptions.empty()) {
    out << "corruptions:";
    for (const std::string& c : run.corruptions) out << " " << c;
    out << "\n";
  }
  for (const IdentityReport& rep : run.identities) {
    char line[128];
    std::snprintf(line, sizeof line, "  %-26s cases=%-4ld %s\n", rep.id.c_str(),
                  rep.total_cases, rep.passed ? "pass" : "FAIL");
    out << line;
    const std::size_t cap = 8;
    for (std::size_t k = 0; k < rep.failures.size() && k < cap; ++k) {
      const IdentityFailure& f = rep.failures[k];
      out << "    relation " << f.relation << " at " << tuple_str(f.indices)
          << ": lhs=" << f.lhs << " rhs=" << f.rhs << "\n";
    }
    if (rep.failures.size() > cap)
      out << "    ... " << (rep.failures.size() - cap) << " more failures\n";
  }
  out << "overall: " << (run.overall_pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string render_json(const SceneRun& run) {
  json points = json::array();
  for (const PointReport& p : run.points) {
    json residuals = json::array();
    for (const ResidualReport& r : p.residuals) residuals.push_back(residual_json(r));
    json u = json::array(), ubar = json::array();
    for (int r = 0; r < 4; ++r) {
      u.push_back(complex_pair(p.u.u[r]));
      ubar.push_back(complex_pair(p.u.ubar[r]));
    }
    points.push_back(json{{"error", p.error},
                          {"passed", p.passed},
                          {"residuals", residuals},
                          {"u", u},
                          {"ubar", ubar},
                          {"x", p.x}});
  }
  const json doc{{"derivative_mode", run.derivative_mode},
                 {"kind", "verify-scene"},
                 {"name", run.name},
                 {"orientation", run.orientation},
                 {"overall_pass", run.overall_pass},
                 {"points", points},
                 {"tolerance", run.tolerance},
                 {"version", kVersion}};
  return doc.dump(2) + "\n";
}

std::string render_text(const SceneRun& run) {
  std::ostringstream out;
  out << "verify-scene  name=" << run.name << "  mode=" << run.derivative_mode
      << "  tolerance=" << sci(run.tolerance) << "  orientation=" << run.orientation
      << "  version=" << kVersion << "\n";
  for (const PointReport& p : run.points) {
    out << "point (" << num(p.x[0]) << ", " << num(p.x[1]) << ", " << num(p.x[2]) << ", "
        << num(p.x[3]) << ")\n";
    for (const ResidualReport& r : p.residuals) {
      char line[160];
      std::snprintf(line, sizeof line, "  %-30s max=%s tol=%s %s\n", r.id.c_str(),
                    sci(r.max_abs).c_str(), sci(r.tolerance).c_str(),
                    r.passed ? "pass" : "FAIL");
      out << line;
      if (!r.passed && !r.worst.empty()) out << "    worst at " << tuple_str(r.worst) << "\n";
    }
    out << "  u    =";
    for (int r = 0; r < 4; ++r)
      out << " (" << num(p.u.u[r].real()) << "," << num(p.u.u[r].imag()) << ")";
    out << "\n  ubar =";
    for (int r = 0; r < 4; ++r)
      out << " (" << num(p.u.ubar[r].real()) << "," << num(p.u.ubar[r].imag()) << ")";
    out << "\n";
    if (!p.error.empty()) out << "  error: " << p.error << "\n";
  }
  out << "overall: " << (run.overall_pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

} // namespace spintensor
