#include "exsym/io/report_json.hpp"

#include <sstream>

namespace exsym::io {

using nlohmann::json;

json eigen_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

json eigen_json(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(eigen_json(Eigen::VectorXd(m.row(r).transpose())));
  return out;
}

json to_json(const ValidationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}, {"detail", c.detail}});
  }
  return {{"ok", r.ok()}, {"checks", std::move(checks)}};
}

json to_json(const SurveyReport& r) {
  json samples = json::array();
  for (const auto& s : r.samples) {
    samples.push_back({{"point", eigen_json(s.point)},
                       {"h", eigen_json(s.h)},
                       {"a_h", eigen_json(s.a_h)},
                       {"a_h_squared", eigen_json(s.a_h_squared)},
                       {"nabla_alpha_max", s.nabla_alpha_max}});
  }
  return {{"name", r.name},
          {"closed_form", r.closed_form},
          {"step", r.step},
          {"grid_scale", r.grid_scale},
          {"grid_points", r.samples.size()},
          {"max_nabla_alpha", r.max_nabla_alpha},
          {"max_abs_h", r.max_abs_h},
          {"max_abs_a_h", r.max_abs_a_h},
          {"max_abs_a_h_squared", r.max_abs_a_h_squared},
          {"samples", std::move(samples)}};
}

namespace {

bool is_check_report(const json& v) { return v.is_object() && v.contains("ok") && v.contains("checks"); }

}  // namespace

std::string to_text(const json& report) {
  std::ostringstream os;
  for (const auto& [key, value] : report.items()) {
    os << key << ": ";
    if (value.is_string()) {
      os << value.get<std::string>();
    } else if (is_check_report(value)) {
      os << (value["ok"].get<bool>() ? "pass" : "FAIL") << " (";
      bool first = true;
      for (const auto& c : value["checks"]) {
        if (value["ok"].get<bool>() || !c["passed"].get<bool>()) {
          os << (first ? "" : "; ") << c["name"].get<std::string>();
          if (!c["passed"].get<bool>()) os << " at " << c["witness"].dump() << ": " << c["detail"].get<std::string>();
          first = false;
        }
      }
      os << ")";
    } else {
      os << value.dump();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace exsym::io
