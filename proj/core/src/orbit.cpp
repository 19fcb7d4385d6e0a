#include "exsym/orbit.hpp"

#include <cmath>
#include <limits>

namespace exsym {

Eigen::MatrixXd expm(const Eigen::MatrixXd& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return m;
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Eigen::MatrixXd a = m / std::ldexp(1.0, squarings);

  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k < 40; ++k) {
    term = term * a / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() <= std::numeric_limits<double>::epsilon() * 1e-2) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

Eigen::VectorXd OrbitChart::point(double s) const { return derivative(s, 0); }

Eigen::VectorXd OrbitChart::point_in_g(double s) const { return basis * point(s); }

Eigen::VectorXd OrbitChart::derivative(double s, int k) const {
  const Eigen::Index m = basis.cols();
  Eigen::VectorXd v = expm(s * generator).col(m);
  for (int i = 0; i < k; ++i) v = generator * v;
  return v.head(m);
}

template <class T>
OrbitChart make_orbit_chart(const ExtrinsicTriple<T>& t, const Vec<T>& x) {
  require_dim(x.size(), t.dim(), "orbit_chart X");
  const double tol = t.tolerance();
  const auto& g = t.grading();
  if (!g[Part::PlusMinus].contains(x, tol)) throw Error(ErrorKind::InvalidArgument, "orbit_chart: X is not in g_+^-");

  const Matrix<T> b = hconcat(g.normal().basis(), g.tangent().basis());
  const std::size_t m = b.cols();
  Matrix<T> gen(m + 1, m + 1);
  for (std::size_t j = 0; j < m; ++j) {
    auto c = solve(b, t.alg().bracket(x, b.column(j)), tol);
    if (!c) throw InvalidTripleError("theta automorphism", "ad X does not preserve g_-");
    for (std::size_t i = 0; i < m; ++i) gen(i, j) = (*c)[i];
  }
  auto shift = solve(b, scaled(Vec<T>(t.dmat() * x), T(-1)), tol);
  if (!shift) throw InvalidTripleError("D theta anticommute", "DX is not in g_-");
  for (std::size_t i = 0; i < m; ++i) gen(i, m) = (*shift)[i];

  OrbitChart chart;
  chart.normal_dim = g.normal().dim();
  chart.basis.resize(static_cast<Eigen::Index>(t.dim()), static_cast<Eigen::Index>(m));
  for (std::size_t r = 0; r < t.dim(); ++r)
    for (std::size_t c = 0; c < m; ++c) chart.basis(r, c) = to_double(b(r, c));
  const Matrix<T> metric = b.transpose() * t.alg().gram() * b;
  chart.metric.resize(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) chart.metric(r, c) = to_double(metric(r, c));
  chart.generator.resize(static_cast<Eigen::Index>(m + 1), static_cast<Eigen::Index>(m + 1));
  for (std::size_t r = 0; r <= m; ++r)
    for (std::size_t c = 0; c <= m; ++c) chart.generator(r, c) = to_double(gen(r, c));
  return chart;
}

template <class T>
Eigen::VectorXd orbit_chart(const ExtrinsicTriple<T>& t, const Vec<T>& x) {
  return make_orbit_chart(t, x).point_in_g(1.0);
}

template OrbitChart make_orbit_chart(const ExtrinsicTriple<Rational>&, const Vec<Rational>&);
template OrbitChart make_orbit_chart(const ExtrinsicTriple<double>&, const Vec<double>&);
template Eigen::VectorXd orbit_chart(const ExtrinsicTriple<Rational>&, const Vec<Rational>&);
template Eigen::VectorXd orbit_chart(const ExtrinsicTriple<double>&, const Vec<double>&);

}  // namespace exsym
