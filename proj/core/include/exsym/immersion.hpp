#pragma once

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

#include "exsym/polynomial.hpp"

namespace exsym {

/// R^m with a constant symmetric nondegenerate metric (possibly indefinite).
class PseudoEuclideanSpace {
 public:
  PseudoEuclideanSpace() = default;
  /// Throws Error(InvalidArgument) if not symmetric, DegenerateMetricError if singular.
  explicit PseudoEuclideanSpace(Eigen::MatrixXd metric);

  std::size_t dim() const { return static_cast<std::size_t>(metric_.rows()); }
  const Eigen::MatrixXd& metric() const { return metric_; }
  double inner(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const { return a.dot(metric_ * b); }

 private:
  Eigen::MatrixXd metric_;
};

/// Derivatives of f at a point. first: m x n, column i = d_i f. second[i]:
/// column j = d_i d_j f. third[i][j]: column k = d_i d_j d_k f (empty if unknown).
struct Jet {
  Eigen::VectorXd value;
  Eigen::MatrixXd first;
  std::vector<Eigen::MatrixXd> second;
  std::vector<std::vector<Eigen::MatrixXd>> third;

  bool has_third() const { return !third.empty(); }
};

struct DiffConfig {
  /// Step for central differences of the map.
  double step = 1e-4;
  /// Step for differencing the alpha field when third derivatives are unavailable.
  double alpha_step = 1e-3;
  /// Use the closed-form jet when the immersion provides one.
  bool use_closed_form = true;
};

struct Immersion {
  std::string name;
  std::size_t domain_dim = 0;
  PseudoEuclideanSpace ambient;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> map;
  /// Exact derivatives; may be empty.
  std::function<Jet(const Eigen::VectorXd&)> closed_form;
  DiffConfig diff;
  /// Standard sample points.
  std::vector<Eigen::VectorXd> grid;
  double grid_scale = 0.5;
};

/// Closed-form jet if available and enabled, otherwise central differences
/// (first and nested second differences, no third derivatives).
Jet compute_jet(const Immersion& imm, const Eigen::VectorXd& p);

struct PointGeometry {
  Eigen::VectorXd point;
  Jet jet;
  Eigen::MatrixXd tangent_frame;
  Eigen::MatrixXd induced_gram;
  Eigen::MatrixXd induced_gram_inverse;
  Eigen::MatrixXd normal_projector;
  /// christoffel[l](k, i) = Gamma^l_{ki}
  std::vector<Eigen::MatrixXd> christoffel;
  /// alpha[i][j] = normal part of d_i d_j f, an ambient vector.
  std::vector<std::vector<Eigen::VectorXd>> alpha;
  Eigen::VectorXd h;
  /// Tangent coordinates; <A_h u, v> = <alpha(u,v), h>.
  Eigen::MatrixXd a_h;
};

/// Throws DegenerateMetricError (message names the point) if the induced metric is degenerate.
PointGeometry point_geometry(const Immersion& imm, const Eigen::VectorXd& p);

/// nabla[k][i][j] = (nabla_k alpha)(d_i, d_j) as an ambient vector.
using AlphaDerivative = std::vector<std::vector<std::vector<Eigen::VectorXd>>>;

AlphaDerivative covariant_derivative_alpha(const Immersion& imm, const Eigen::VectorXd& p);

/// Largest absolute entry over all components.
double max_abs_entry(const AlphaDerivative& d);

/// Names: E1+, E1-, E2, E3+, E3-, perturbed_E1, sphere(n), circle_orbit.
/// Throws Error(InvalidArgument) for unknown names.
Immersion builtin(const std::string& name);
std::vector<std::string> builtin_names();

/// {-1, 0, 1}^dim scaled.
std::vector<Eigen::VectorXd> sample_grid(std::size_t dim, double scale);

/// A polynomial immersion with exact jets of all orders.
Immersion polynomial_immersion(std::string name, PolynomialMap f, Eigen::MatrixXd metric, double grid_scale = 0.5);

struct SampleResult {
  Eigen::VectorXd point;
  Eigen::VectorXd h;
  Eigen::MatrixXd a_h;
  Eigen::MatrixXd a_h_squared;
  double nabla_alpha_max = 0.0;
};

struct SurveyReport {
  std::string name;
  bool closed_form = false;
  double step = 0.0;
  double grid_scale = 0.0;
  std::vector<SampleResult> samples;
  double max_nabla_alpha = 0.0;
  double max_abs_h = 0.0;
  double max_abs_a_h = 0.0;
  double max_abs_a_h_squared = 0.0;
};

/// point_geometry and covariant_derivative_alpha over the grid (imm.grid if empty).
SurveyReport survey(const Immersion& imm, const std::vector<Eigen::VectorXd>& grid = {});

}  // namespace exsym
