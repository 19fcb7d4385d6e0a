#include "exsym/immersion.hpp"

#include <cmath>
#include <regex>
#include <sstream>

#include "exsym/error.hpp"
#include "exsym/gallery.hpp"
#include "exsym/orbit.hpp"

namespace exsym {

PseudoEuclideanSpace::PseudoEuclideanSpace(Eigen::MatrixXd metric) : metric_(std::move(metric)) {
  if (metric_.rows() != metric_.cols()) throw Error(ErrorKind::DimensionMismatch, "ambient metric must be square");
  const double scale = std::max(1.0, metric_.cwiseAbs().maxCoeff());
  if ((metric_ - metric_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw Error(ErrorKind::InvalidArgument, "ambient metric must be symmetric");
  }
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(metric_);
  if (metric_.rows() > 0 && !lu.isInvertible()) throw DegenerateMetricError("ambient metric is degenerate", lu.determinant());
}

namespace {

std::string format_point(const Eigen::VectorXd& p) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
  os << ")";
  return os.str();
}

Jet finite_difference_jet(const Immersion& imm, const Eigen::VectorXd& p) {
  const std::size_t n = imm.domain_dim;
  const double d = imm.diff.step;
  const auto m = static_cast<Eigen::Index>(imm.ambient.dim());
  Jet j;
  j.value = imm.map(p);
  j.first.resize(m, static_cast<Eigen::Index>(n));
  auto e = [&](std::size_t i) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    v[static_cast<Eigen::Index>(i)] = d;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    j.first.col(static_cast<Eigen::Index>(i)) = (imm.map(p + e(i)) - imm.map(p - e(i))) / (2.0 * d);
  j.second.assign(n, Eigen::MatrixXd(m, static_cast<Eigen::Index>(n)));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const Eigen::VectorXd v = (imm.map(p + e(a) + e(b)) - imm.map(p - e(a) + e(b)) - imm.map(p + e(a) - e(b)) +
                                 imm.map(p - e(a) - e(b))) /
                                (4.0 * d * d);
      j.second[a].col(static_cast<Eigen::Index>(b)) = v;
      j.second[b].col(static_cast<Eigen::Index>(a)) = v;
    }
  }
  return j;
}

Jet polynomial_jet(const PolynomialMap& f, const Eigen::VectorXd& p) {
  const std::size_t n = f.domain_dim();
  const auto m = static_cast<Eigen::Index>(f.target_dim());
  const auto ni = static_cast<Eigen::Index>(n);
  Jet j;
  j.value = f.value(p);
  j.first.resize(m, ni);
  j.second.assign(n, Eigen::MatrixXd(m, ni));
  j.third.assign(n, std::vector<Eigen::MatrixXd>(n, Eigen::MatrixXd(m, ni)));
  for (std::size_t a = 0; a < n; ++a) {
    j.first.col(static_cast<Eigen::Index>(a)) = f.d1(p, a);
    for (std::size_t b = 0; b < n; ++b) {
      j.second[a].col(static_cast<Eigen::Index>(b)) = f.d2(p, a, b);
      for (std::size_t c = 0; c < n; ++c) j.third[a][b].col(static_cast<Eigen::Index>(c)) = f.d3(p, a, b, c);
    }
  }
  return j;
}

Eigen::VectorXd unit_vec(std::size_t n, std::size_t i) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  v[static_cast<Eigen::Index>(i)] = 1.0;
  return v;
}

}  // namespace

Jet compute_jet(const Immersion& imm, const Eigen::VectorXd& p) {
  require_dim(static_cast<std::size_t>(p.size()), imm.domain_dim, "immersion domain point");
  if (imm.closed_form && imm.diff.use_closed_form) return imm.closed_form(p);
  return finite_difference_jet(imm, p);
}

PointGeometry point_geometry(const Immersion& imm, const Eigen::VectorXd& p) {
  PointGeometry g;
  g.point = p;
  g.jet = compute_jet(imm, p);
  const std::size_t n = imm.domain_dim;
  const auto ni = static_cast<Eigen::Index>(n);
  const Eigen::MatrixXd& metric = imm.ambient.metric();
  const Eigen::MatrixXd& f = g.jet.first;
  g.tangent_frame = f;
  g.induced_gram = f.transpose() * metric * f;
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(g.induced_gram);
  if (n > 0 && !lu.isInvertible()) {
    throw DegenerateMetricError("induced metric is degenerate at " + format_point(p), lu.determinant());
  }
  g.induced_gram_inverse = n > 0 ? Eigen::MatrixXd(lu.inverse()) : Eigen::MatrixXd(0, 0);
  const Eigen::Index m = metric.rows();
  g.normal_projector = Eigen::MatrixXd::Identity(m, m) - f * g.induced_gram_inverse * f.transpose() * metric;

  g.christoffel.assign(n, Eigen::MatrixXd::Zero(ni, ni));
  for (std::size_t k = 0; k < n; ++k) {
    // <f_ki, f_m> for all i, m
    const Eigen::MatrixXd inner = g.jet.second[k].transpose() * metric * f;  // (i, m)
    const Eigen::MatrixXd gamma = g.induced_gram_inverse * inner.transpose();  // (l, i)
    for (std::size_t l = 0; l < n; ++l)
      g.christoffel[l].row(static_cast<Eigen::Index>(k)) = gamma.row(static_cast<Eigen::Index>(l));
  }

  g.alpha.assign(n, std::vector<Eigen::VectorXd>(n));
  g.h = Eigen::VectorXd::Zero(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      g.alpha[i][j] = g.normal_projector * g.jet.second[i].col(static_cast<Eigen::Index>(j));
      g.h += g.induced_gram_inverse(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * g.alpha[i][j];
    }
  }
  if (n > 0) g.h /= static_cast<double>(n);
  Eigen::MatrixXd w(ni, ni);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = imm.ambient.inner(g.alpha[i][j], g.h);
  g.a_h = g.induced_gram_inverse * w;
  return g;
}

AlphaDerivative covariant_derivative_alpha(const Immersion& imm, const Eigen::VectorXd& p) {
  const PointGeometry g = point_geometry(imm, p);
  const std::size_t n = imm.domain_dim;
  auto gamma = [&](std::size_t l, std::size_t a, std::size_t b) {
    return g.christoffel[l](static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
  };
  AlphaDerivative out(n, std::vector<std::vector<Eigen::VectorXd>>(n, std::vector<Eigen::VectorXd>(n)));
  for (std::size_t k = 0; k < n; ++k) {
    // Normal part of d_k alpha_ij.
    std::vector<std::vector<Eigen::VectorXd>> dalpha(n, std::vector<Eigen::VectorXd>(n));
    if (g.jet.has_third()) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Eigen::VectorXd v = g.normal_projector * g.jet.third[i][j].col(static_cast<Eigen::Index>(k));
          for (std::size_t l = 0; l < n; ++l) v -= gamma(l, i, j) * g.alpha[k][l];
          dalpha[i][j] = v;
        }
    } else {
      const double s = imm.diff.alpha_step;
      const Eigen::VectorXd e = s * unit_vec(n, k);
      const PointGeometry plus = point_geometry(imm, p + e);
      const PointGeometry minus = point_geometry(imm, p - e);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          dalpha[i][j] = g.normal_projector * ((plus.alpha[i][j] - minus.alpha[i][j]) / (2.0 * s));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Eigen::VectorXd v = dalpha[i][j];
        for (std::size_t l = 0; l < n; ++l) {
          v -= gamma(l, k, i) * g.alpha[l][j];
          v -= gamma(l, k, j) * g.alpha[i][l];
        }
        out[k][i][j] = v;
      }
    }
  }
  return out;
}

double max_abs_entry(const AlphaDerivative& d) {
  double m = 0.0;
  for (const auto& a : d)
    for (const auto& b : a)
      for (const auto& v : b)
        if (v.size() > 0) m = std::max(m, v.cwiseAbs().maxCoeff());
  return m;
}

std::vector<Eigen::VectorXd> sample_grid(std::size_t dim, double scale) {
  std::vector<Eigen::VectorXd> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= 3;
  for (std::size_t c = 0; c < total; ++c) {
    Eigen::VectorXd p(static_cast<Eigen::Index>(dim));
    std::size_t r = c;
    for (std::size_t i = 0; i < dim; ++i) {
      p[static_cast<Eigen::Index>(i)] = (static_cast<double>(r % 3) - 1.0) * scale;
      r /= 3;
    }
    out.push_back(p);
  }
  return out;
}

Immersion polynomial_immersion(std::string name, PolynomialMap f, Eigen::MatrixXd metric, double grid_scale) {
  if (f.target_dim() != static_cast<std::size_t>(metric.rows())) {
    throw Error(ErrorKind::DimensionMismatch, "polynomial immersion: target dimension differs from metric size");
  }
  Immersion imm;
  imm.name = std::move(name);
  imm.domain_dim = f.domain_dim();
  imm.ambient = PseudoEuclideanSpace(std::move(metric));
  auto shared = std::make_shared<PolynomialMap>(std::move(f));
  imm.map = [shared](const Eigen::VectorXd& x) { return shared->value(x); };
  imm.closed_form = [shared](const Eigen::VectorXd& x) { return polynomial_jet(*shared, x); };
  imm.grid_scale = grid_scale;
  imm.grid = sample_grid(imm.domain_dim, grid_scale);
  return imm;
}

namespace {

Polynomial poly(std::size_t vars, std::vector<std::pair<double, std::vector<int>>> terms) {
  std::vector<Monomial> ms;
  for (auto& [c, e] : terms) ms.push_back(Monomial{c, e});
  return Polynomial(vars, std::move(ms));
}

Eigen::MatrixXd e1_metric(int sign) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(3, 3);
  g(0, 2) = g(2, 0) = 1.0;
  g(1, 1) = sign;
  return g;
}

Immersion make_e1(int sign, double cubic, std::string name) {
  // (r, s) -> (r, s^2 + cubic s^3, s)
  std::vector<Polynomial> f{poly(2, {{1.0, {1, 0}}}), poly(2, {{1.0, {0, 2}}, {cubic, {0, 3}}}),
                            poly(2, {{1.0, {0, 1}}})};
  return polynomial_immersion(std::move(name), PolynomialMap(std::move(f)), e1_metric(sign));
}

Immersion make_e2() {
  // (r, s, t) -> (s, -rt + r^4/4, t, r, r^2)
  std::vector<Polynomial> f{poly(3, {{1.0, {0, 1, 0}}}), poly(3, {{-1.0, {1, 0, 1}}, {0.25, {4, 0, 0}}}),
                            poly(3, {{1.0, {0, 0, 1}}}), poly(3, {{1.0, {1, 0, 0}}}), poly(3, {{1.0, {2, 0, 0}}})};
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(5, 5);
  g(0, 3) = g(3, 0) = 1.0;
  g(1, 4) = g(4, 1) = 1.0;
  g(2, 2) = 1.0;
  return polynomial_immersion("E2", PolynomialMap(std::move(f)), g);
}

Immersion make_e3(int sign) {
  // (r, s) -> (r, s^2, s, rs +- s^4/2, 0)
  std::vector<Polynomial> f{poly(2, {{1.0, {1, 0}}}), poly(2, {{1.0, {0, 2}}}), poly(2, {{1.0, {0, 1}}}),
                            poly(2, {{1.0, {1, 1}}, {0.5 * sign, {0, 4}}}), Polynomial::constant(2, 0.0)};
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(5, 5);
  g(0, 2) = g(2, 0) = 1.0;
  g(1, 1) = sign;
  g(3, 4) = g(4, 3) = 1.0;
  return polynomial_immersion(sign > 0 ? "E3+" : "E3-", PolynomialMap(std::move(f)), g);
}

Immersion make_sphere(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "sphere(n) needs n >= 1");
  Immersion imm;
  imm.name = "sphere(" + std::to_string(n) + ")";
  imm.domain_dim = n;
  imm.ambient = PseudoEuclideanSpace(Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n + 1),
                                                               static_cast<Eigen::Index>(n + 1)));
  const auto ni = static_cast<Eigen::Index>(n);
  auto height = [](const Eigen::VectorXd& u) {
    const double r2 = u.squaredNorm();
    if (r2 >= 1.0) throw Error(ErrorKind::InvalidArgument, "sphere chart: |u| must be < 1");
    return std::sqrt(1.0 - r2);
  };
  imm.map = [ni, height](const Eigen::VectorXd& u) {
    Eigen::VectorXd x(ni + 1);
    x.head(ni) = u;
    x[ni] = height(u);
    return x;
  };
  imm.closed_form = [n, ni, height](const Eigen::VectorXd& u) {
    const double w = height(u);
    const double w3 = w * w * w;
    const double w5 = w3 * w * w;
    auto delta = [](std::size_t a, std::size_t b) { return a == b ? 1.0 : 0.0; };
    auto ui = [&u](std::size_t a) { return u[static_cast<Eigen::Index>(a)]; };
    Jet j;
    j.value = Eigen::VectorXd(ni + 1);
    j.value.head(ni) = u;
    j.value[ni] = w;
    j.first = Eigen::MatrixXd::Zero(ni + 1, ni);
    j.second.assign(n, Eigen::MatrixXd::Zero(ni + 1, ni));
    j.third.assign(n, std::vector<Eigen::MatrixXd>(n, Eigen::MatrixXd::Zero(ni + 1, ni)));
    for (std::size_t a = 0; a < n; ++a) {
      const auto ai = static_cast<Eigen::Index>(a);
      j.first(ai, ai) = 1.0;
      j.first(ni, ai) = -ui(a) / w;
      for (std::size_t b = 0; b < n; ++b) {
        j.second[a](ni, static_cast<Eigen::Index>(b)) = -delta(a, b) / w - ui(a) * ui(b) / w3;
        for (std::size_t c = 0; c < n; ++c) {
          j.third[a][b](ni, static_cast<Eigen::Index>(c)) =
              -(delta(a, b) * ui(c) + delta(a, c) * ui(b) + delta(b, c) * ui(a)) / w3 - 3.0 * ui(a) * ui(b) * ui(c) / w5;
        }
      }
    }
    return j;
  };
  imm.grid_scale = 0.3;
  imm.grid = sample_grid(n, imm.grid_scale);
  return imm;
}

Immersion make_circle_orbit() {
  const auto t = sphere_triple(1);
  auto chart = std::make_shared<OrbitChart>(make_orbit_chart(t, unit<Rational>(3, 2)));
  Immersion imm;
  imm.name = "circle_orbit";
  imm.domain_dim = 1;
  imm.ambient = PseudoEuclideanSpace(chart->metric);
  imm.map = [chart](const Eigen::VectorXd& s) { return chart->point(s[0]); };
  imm.closed_form = [chart](const Eigen::VectorXd& s) {
    const auto m = static_cast<Eigen::Index>(chart->dim());
    Jet j;
    j.value = chart->point(s[0]);
    j.first = Eigen::MatrixXd(m, 1);
    j.first.col(0) = chart->derivative(s[0], 1);
    j.second.assign(1, Eigen::MatrixXd(m, 1));
    j.second[0].col(0) = chart->derivative(s[0], 2);
    j.third.assign(1, std::vector<Eigen::MatrixXd>(1, Eigen::MatrixXd(m, 1)));
    j.third[0][0].col(0) = chart->derivative(s[0], 3);
    return j;
  };
  imm.grid_scale = 0.5;
  imm.grid = sample_grid(1, imm.grid_scale);
  return imm;
}

}  // namespace

Immersion builtin(const std::string& name) {
  if (name == "E1+") return make_e1(1, 0.0, "E1+");
  if (name == "E1-") return make_e1(-1, 0.0, "E1-");
  if (name == "perturbed_E1") return make_e1(1, 0.1, "perturbed_E1");
  if (name == "E2") return make_e2();
  if (name == "E3+") return make_e3(1);
  if (name == "E3-") return make_e3(-1);
  if (name == "circle_orbit") return make_circle_orbit();
  static const std::regex sphere(R"(sphere\((\d+)\))");
  std::smatch match;
  if (std::regex_match(name, match, sphere)) return make_sphere(std::stoul(match[1].str()));
  throw Error(ErrorKind::InvalidArgument, "unknown built-in immersion '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"E1+", "E1-", "E2", "E3+", "E3-", "perturbed_E1", "sphere(n)", "circle_orbit"};
}

SurveyReport survey(const Immersion& imm, const std::vector<Eigen::VectorXd>& grid) {
  SurveyReport r;
  r.name = imm.name;
  r.closed_form = imm.closed_form && imm.diff.use_closed_form;
  r.step = imm.diff.step;
  r.grid_scale = imm.grid_scale;
  for (const auto& p : grid.empty() ? imm.grid : grid) {
    const PointGeometry g = point_geometry(imm, p);
    SampleResult s;
    s.point = p;
    s.h = g.h;
    s.a_h = g.a_h;
    s.a_h_squared = g.a_h * g.a_h;
    s.nabla_alpha_max = max_abs_entry(covariant_derivative_alpha(imm, p));
    r.max_nabla_alpha = std::max(r.max_nabla_alpha, s.nabla_alpha_max);
    if (s.h.size() > 0) r.max_abs_h = std::max(r.max_abs_h, s.h.cwiseAbs().maxCoeff());
    if (s.a_h.size() > 0) {
      r.max_abs_a_h = std::max(r.max_abs_a_h, s.a_h.cwiseAbs().maxCoeff());
      r.max_abs_a_h_squared = std::max(r.max_abs_a_h_squared, s.a_h_squared.cwiseAbs().maxCoeff());
    }
    r.samples.push_back(std::move(s));
  }
  return r;
}

}  // namespace exsym
