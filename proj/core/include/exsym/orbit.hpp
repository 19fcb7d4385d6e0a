#pragma once

#include <Eigen/Dense>

#include "exsym/triple.hpp"

namespace exsym {

/// Matrix exponential by scaling and squaring with a truncated Taylor series.
Eigen::MatrixXd expm(const Eigen::MatrixXd& m);

/// The affine map phi(X) = (ad X|g_-, -DX) acting on g_- = g_-^+ + g_-^-,
/// written as a homogeneous (m+1)x(m+1) matrix in a basis of g_-.
struct OrbitChart {
  /// Columns: basis of g_- in g coordinates, normal basis first, then tangent basis.
  Eigen::MatrixXd basis;
  std::size_t normal_dim = 0;
  /// The inner product restricted to g_- in this basis.
  Eigen::MatrixXd metric;
  Eigen::MatrixXd generator;

  std::size_t dim() const { return static_cast<std::size_t>(basis.cols()); }

  /// g_- coordinates of exp(s phi(X)) 0.
  Eigen::VectorXd point(double s) const;
  /// The same point as a vector of g.
  Eigen::VectorXd point_in_g(double s) const;
  /// d^k/ds^k of the g_- coordinates, exactly: top block of M^k exp(sM) e_last.
  Eigen::VectorXd derivative(double s, int k) const;
};

/// Throws Error(InvalidArgument) if x is not in g_+^-.
template <class T>
OrbitChart make_orbit_chart(const ExtrinsicTriple<T>& t, const Vec<T>& x);

/// exp(phi(X)) 0 as a vector of g (it lies in g_-).
template <class T>
Eigen::VectorXd orbit_chart(const ExtrinsicTriple<T>& t, const Vec<T>& x);

}  // namespace exsym
