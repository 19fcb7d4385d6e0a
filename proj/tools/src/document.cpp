#include "exsym/io/document.hpp"

#include <fstream>
#include <sstream>

namespace exsym::io {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Parse, (where.empty() ? std::string("/") : where) + ": " + what);
}

const json& member(const json& obj, const std::string& where, const char* key) {
  if (!obj.is_object()) parse_fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where + "/" + key, "missing field");
  return *it;
}

Rational rational_at(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      parse_fail(where, e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long>());
  parse_fail(where, "expected a rational string \"p/q\" or an integer");
}

std::size_t index_at(const json& v, const std::string& where, std::size_t dim) {
  if (!v.is_number_integer() || v.get<long long>() < 0) parse_fail(where, "expected a non-negative integer index");
  const auto i = v.get<std::size_t>();
  if (i >= dim) parse_fail(where, "index " + std::to_string(i) + " out of range for dim " + std::to_string(dim));
  return i;
}

Matrix<Rational> matrix_at(const json& obj, const std::string& where, const char* key, std::size_t dim) {
  const json& m = member(obj, where, key);
  const std::string at = where + "/" + key;
  if (!m.is_array() || m.size() != dim) parse_fail(at, "expected " + std::to_string(dim) + " rows");
  Matrix<Rational> out(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const std::string row_at = at + "/" + std::to_string(r);
    if (!m[r].is_array() || m[r].size() != dim) parse_fail(row_at, "expected " + std::to_string(dim) + " entries");
    for (std::size_t c = 0; c < dim; ++c) out(r, c) = rational_at(m[r][c], row_at + "/" + std::to_string(c));
  }
  return out;
}

json matrix_json(const Matrix<Rational>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_rational(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::size_t> index_list(const json& obj, const std::string& where, const char* key, std::size_t dim) {
  const json& v = member(obj, where, key);
  const std::string at = where + "/" + key;
  if (!v.is_array()) parse_fail(at, "expected an index list");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(index_at(v[i], at + "/" + std::to_string(i), dim));
  return out;
}

void check_schema(const json& j) {
  const json& v = member(j, "", "schema_version");
  if (!v.is_string() || v.get<std::string>() != kSchemaVersion) {
    parse_fail("/schema_version", std::string("unsupported schema version, expected \"") + kSchemaVersion + "\"");
  }
}

}  // namespace

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, path + ": invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

TripleDocument parse_triple_document(const json& j) {
  check_schema(j);
  const json& dim_v = member(j, "", "dim");
  if (!dim_v.is_number_integer() || dim_v.get<long long>() <= 0) parse_fail("/dim", "expected a positive integer");
  const auto dim = dim_v.get<std::size_t>();

  std::vector<std::string> labels;
  if (j.contains("basis")) {
    const json& b = j["basis"];
    if (!b.is_array() || b.size() != dim) parse_fail("/basis", "expected " + std::to_string(dim) + " labels");
    for (std::size_t i = 0; i < dim; ++i) {
      if (!b[i].is_string()) parse_fail("/basis/" + std::to_string(i), "expected a string");
      labels.push_back(b[i].get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i + 1));
  }

  StructureConstants<Rational> c(dim);
  const json& s = member(j, "", "structure");
  if (!s.is_array()) parse_fail("/structure", "expected a list of [i, j, k, value]");
  for (std::size_t e = 0; e < s.size(); ++e) {
    const std::string at = "/structure/" + std::to_string(e);
    if (!s[e].is_array() || s[e].size() != 4) parse_fail(at, "expected [i, j, k, value]");
    const std::size_t i = index_at(s[e][0], at + "/0", dim);
    const std::size_t jj = index_at(s[e][1], at + "/1", dim);
    const std::size_t k = index_at(s[e][2], at + "/2", dim);
    c(i, jj, k) += rational_at(s[e][3], at + "/3");
  }

  TripleDocument doc;
  Matrix<Rational> gram = matrix_at(j, "", "gram", dim);
  Matrix<Rational> theta = matrix_at(j, "", "theta", dim);
  Matrix<Rational> d = matrix_at(j, "", "dmat", dim);
  bool weak = false;
  if (j.contains("flags")) {
    const json& f = j["flags"];
    if (!f.is_object()) parse_fail("/flags", "expected an object");
    for (const auto& [key, value] : f.items()) {
      if (!value.is_boolean()) parse_fail("/flags/" + key, "expected a boolean");
      if (key == "weak") {
        weak = value.get<bool>();
      } else if (key == "assert_indecomposable") {
        doc.assert_indecomposable = value.get<bool>();
      } else {
        parse_fail("/flags/" + key, "unknown flag");
      }
    }
  }
  if (j.contains("quad_grading")) {
    const json& q = j["quad_grading"];
    doc.quad = QuadIndices{index_list(q, "/quad_grading", "lstar", dim), index_list(q, "/quad_grading", "a", dim),
                           index_list(q, "/quad_grading", "l", dim)};
  }
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : std::string{};
  doc.triple = ExtrinsicTriple<Rational>(MetricLieAlgebra<Rational>(std::move(labels), std::move(c), std::move(gram)),
                                         std::move(theta), std::move(d), weak, std::move(name));
  return doc;
}

TripleDocument load_triple_document(const std::string& path) {
  const json j = read_json(path);
  try {
    return parse_triple_document(j);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw Error(ErrorKind::Parse, path + ": " + e.what());
    throw;
  }
}

TripleDocument make_document(const ExtrinsicTriple<Rational>& t, std::optional<QuadIndices> quad) {
  TripleDocument doc;
  doc.triple = t;
  doc.quad = std::move(quad);
  return doc;
}

json to_json(const TripleDocument& doc) {
  const auto& t = doc.triple;
  const std::size_t n = t.dim();
  json j;
  j["schema_version"] = kSchemaVersion;
  j["name"] = t.name();
  j["dim"] = n;
  j["basis"] = t.alg().labels();
  json s = json::array();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& v = t.alg().structure()(a, b, k);
        if (sgn(v) != 0) s.push_back(json::array({a, b, k, format_rational(v)}));
      }
  j["structure"] = std::move(s);
  j["gram"] = matrix_json(t.alg().gram());
  j["theta"] = matrix_json(t.theta());
  j["dmat"] = matrix_json(t.dmat());
  if (doc.quad) j["quad_grading"] = {{"lstar", doc.quad->lstar}, {"a", doc.quad->a}, {"l", doc.quad->l}};
  j["flags"] = {{"weak", t.weak()}, {"assert_indecomposable", doc.assert_indecomposable}};
  return j;
}

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Parse, path + ": cannot write file");
  out << j.dump(2) << "\n";
}

Immersion parse_immersion_document(const json& j) {
  check_schema(j);
  const json& kind = member(j, "", "kind");
  if (kind != "polynomial_immersion") parse_fail("/kind", "expected \"polynomial_immersion\"");
  const json& dd = member(j, "", "domain_dim");
  if (!dd.is_number_integer() || dd.get<long long>() <= 0) parse_fail("/domain_dim", "expected a positive integer");
  const auto n = dd.get<std::size_t>();
  const json& comps = member(j, "", "components");
  if (!comps.is_array() || comps.empty()) parse_fail("/components", "expected a non-empty list");
  const std::size_t m = comps.size();
  const Matrix<Rational> g = matrix_at(j, "", "metric", m);

  std::vector<Polynomial> f;
  for (std::size_t c = 0; c < m; ++c) {
    const std::string at = "/components/" + std::to_string(c);
    if (!comps[c].is_array()) parse_fail(at, "expected a list of terms");
    std::vector<Monomial> terms;
    for (std::size_t t = 0; t < comps[c].size(); ++t) {
      const std::string tat = at + "/" + std::to_string(t);
      const json& term = comps[c][t];
      Monomial mono;
      mono.coeff = rational_at(member(term, tat, "coeff"), tat + "/coeff").get_d();
      const json& e = member(term, tat, "exponents");
      if (!e.is_array() || e.size() != n) parse_fail(tat + "/exponents", "expected " + std::to_string(n) + " exponents");
      for (std::size_t v = 0; v < n; ++v) {
        if (!e[v].is_number_integer() || e[v].get<long long>() < 0) {
          parse_fail(tat + "/exponents/" + std::to_string(v), "expected a non-negative integer");
        }
        mono.exponents.push_back(e[v].get<int>());
      }
      terms.push_back(std::move(mono));
    }
    f.emplace_back(n, std::move(terms));
  }
  double scale = 0.5;
  if (j.contains("grid_scale")) scale = rational_at(j["grid_scale"], "/grid_scale").get_d();
  Eigen::MatrixXd metric(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) metric(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = g(r, c).get_d();
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "polynomial";
  return polynomial_immersion(std::move(name), PolynomialMap(std::move(f)), std::move(metric), scale);
}

Immersion load_immersion_document(const std::string& path) {
  const json j = read_json(path);
  try {
    return parse_immersion_document(j);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw Error(ErrorKind::Parse, path + ": " + e.what());
    throw;
  }
}

}  // namespace exsym::io
