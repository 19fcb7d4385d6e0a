#pragma once

#include <nlohmann/json.hpp>

#include "exsym/immersion.hpp"
#include "exsym/report.hpp"
#include "exsym/triple.hpp"

namespace exsym::io {

/// Exact scalars become canonical "p/q" strings, floats become numbers.
inline nlohmann::json scalar_json(const Rational& x) { return format_rational(x); }
inline nlohmann::json scalar_json(double x) { return x; }

template <class T>
nlohmann::json vector_json(const Vec<T>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(scalar_json(x));
  return out;
}

template <class T>
nlohmann::json matrix_json(const Matrix<T>& m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

nlohmann::json eigen_json(const Eigen::VectorXd& v);
nlohmann::json eigen_json(const Eigen::MatrixXd& m);

/// {"ok": bool, "checks": [{"name", "passed", "witness", "detail"}]}
nlohmann::json to_json(const ValidationReport& r);

nlohmann::json to_json(const SurveyReport& r);

/// Keys in sorted order, one "key: value" line each; nested values as compact JSON.
std::string to_text(const nlohmann::json& report);

}  // namespace exsym::io
