#include "exsym/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>

namespace exsym {

namespace {

Eigen::MatrixXd to_eigen(const Matrix<double>& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
  return e;
}

Matrix<double> from_eigen(const Eigen::MatrixXd& e) {
  Matrix<double> m(e.rows(), e.cols());
  for (Eigen::Index r = 0; r < e.rows(); ++r)
    for (Eigen::Index c = 0; c < e.cols(); ++c) m(r, c) = e(r, c);
  return m;
}

struct Svd {
  Eigen::VectorXd sigma;
  Eigen::MatrixXd u;
  Eigen::MatrixXd v;
  std::size_t rank = 0;
};

Svd svd(const Matrix<double>& m, double tol) {
  Svd out;
  if (m.rows() == 0 || m.cols() == 0) {
    out.u = Eigen::MatrixXd::Identity(m.rows(), m.rows());
    out.v = Eigen::MatrixXd::Identity(m.cols(), m.cols());
    return out;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> solver(to_eigen(m), Eigen::ComputeFullU | Eigen::ComputeFullV);
  out.sigma = solver.singularValues();
  out.u = solver.matrixU();
  out.v = solver.matrixV();
  const double top = out.sigma.size() > 0 ? out.sigma(0) : 0.0;
  const double threshold = tol * std::max(1.0, top);
  for (Eigen::Index i = 0; i < out.sigma.size(); ++i) {
    if (out.sigma(i) > threshold) ++out.rank;
  }
  return out;
}

template <class T>
std::size_t choose_pivot(const Matrix<T>& m, std::size_t col, std::size_t start, double tol, bool& found) {
  found = false;
  std::size_t best = start;
  double best_mag = 0.0;
  for (std::size_t r = start; r < m.rows(); ++r) {
    if (Field<T>::is_zero(m(r, col), tol)) continue;
    if constexpr (Field<T>::exact) {
      found = true;
      return r;
    } else {
      const double mag = std::abs(m(r, col));
      if (!found || mag > best_mag) {
        best = r;
        best_mag = mag;
        found = true;
      }
    }
  }
  return best;
}

}  // namespace

template <class T>
RowEchelon<T> row_reduce(Matrix<T> m, double tol) {
  RowEchelon<T> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    bool found = false;
    const std::size_t p = choose_pivot(m, col, row, tol, found);
    if (!found) {
      if constexpr (!Field<T>::exact) {
        for (std::size_t r = row; r < m.rows(); ++r) m(r, col) = 0.0;
      }
      continue;
    }
    if (p != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    }
    const T inv = T(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || Field<T>::is_exact_zero(m(r, col))) continue;
      const T factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!Field<T>::is_exact_zero(m(row, c))) m(r, c) -= factor * m(row, c);
      }
      if constexpr (!Field<T>::exact) m(r, col) = 0.0;
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

// ---------------------------------------------------------------------------
// Exact backend

template <>
std::size_t rank(const Matrix<Rational>& m, double tol) {
  return row_reduce(m, tol).pivots.size();
}

template <>
Matrix<Rational> kernel(const Matrix<Rational>& m, double tol) {
  const auto ech = row_reduce(m, tol);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<Vec<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<Rational> v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return Matrix<Rational>::from_columns(basis, m.cols());
}

template <>
Matrix<Rational> column_basis(const Matrix<Rational>& m, double tol) {
  const auto ech = row_reduce(m, tol);
  Matrix<Rational> b(m.rows(), ech.pivots.size());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) b.set_column(i, m.column(ech.pivots[i]));
  return b;
}

template <>
std::optional<Vec<Rational>> solve(const Matrix<Rational>& m, const Vec<Rational>& b, double tol) {
  require_dim(b.size(), m.rows(), "solve");
  Matrix<Rational> aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto ech = row_reduce(aug, tol);
  Vec<Rational> x(m.cols(), Rational(0));
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    if (ech.pivots[i] == m.cols()) return std::nullopt;
    x[ech.pivots[i]] = ech.reduced(i, m.cols());
  }
  return x;
}

template <>
std::optional<Matrix<Rational>> inverse(const Matrix<Rational>& m, double tol) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  const auto ech = row_reduce(hconcat(m, Matrix<Rational>::identity(n)), tol);
  if (n > 0 && (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix<Rational> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.reduced(r, n + c);
  return inv;
}

template <>
Rational determinant(const Matrix<Rational>& m0) {
  if (m0.rows() != m0.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  Matrix<Rational> m = m0;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(m(p, col)) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(p, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m(r, col)) == 0) continue;
      const Rational f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// Float backend

template <>
std::size_t rank(const Matrix<double>& m, double tol) {
  return svd(m, tol).rank;
}

template <>
Matrix<double> kernel(const Matrix<double>& m, double tol) {
  const auto s = svd(m, tol);
  const std::size_t n = m.cols();
  Matrix<double> k(n, n - s.rank);
  for (std::size_t j = s.rank; j < n; ++j)
    for (std::size_t r = 0; r < n; ++r) k(r, j - s.rank) = s.v(r, j);
  return k;
}

template <>
Matrix<double> column_basis(const Matrix<double>& m, double tol) {
  const auto s = svd(m, tol);
  Matrix<double> b(m.rows(), s.rank);
  for (std::size_t j = 0; j < s.rank; ++j)
    for (std::size_t r = 0; r < m.rows(); ++r) b(r, j) = s.u(r, j);
  return b;
}

template <>
std::optional<Vec<double>> solve(const Matrix<double>& m, const Vec<double>& b, double tol) {
  require_dim(b.size(), m.rows(), "solve");
  if (m.cols() == 0) {
    if (max_abs(b) <= tol) return Vec<double>{};
    return std::nullopt;
  }
  const auto s = svd(m, tol);
  Eigen::VectorXd rhs(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i) = b[i];
  Eigen::VectorXd x = Eigen::VectorXd::Zero(m.cols());
  for (std::size_t i = 0; i < s.rank; ++i) {
    x += s.v.col(i) * (s.u.col(i).dot(rhs) / s.sigma(i));
  }
  const Eigen::VectorXd residual = to_eigen(m) * x - rhs;
  const double scale = std::max({1.0, rhs.cwiseAbs().maxCoeff(), s.rank > 0 ? s.sigma(0) * x.cwiseAbs().maxCoeff() : 0.0});
  if (residual.size() > 0 && residual.cwiseAbs().maxCoeff() > tol * scale) return std::nullopt;
  return Vec<double>(x.data(), x.data() + x.size());
}

template <>
std::optional<Matrix<double>> inverse(const Matrix<double>& m, double tol) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (m.rows() == 0) return Matrix<double>();
  if (svd(m, tol).rank < m.rows()) return std::nullopt;
  return from_eigen(to_eigen(m).fullPivLu().inverse());
}

template <>
double determinant(const Matrix<double>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  if (m.rows() == 0) return 1.0;
  return to_eigen(m).partialPivLu().determinant();
}

// ---------------------------------------------------------------------------

template <class T>
std::vector<Vec<T>> refine_kernel(const std::vector<Vec<T>>& basis,
                                  const std::function<Vec<T>(const Vec<T>&)>& constraint, double tol) {
  if (basis.empty()) return {};
  std::vector<Vec<T>> images;
  images.reserve(basis.size());
  for (const auto& b : basis) images.push_back(constraint(b));
  const std::size_t rows = images.front().size();
  if (rows == 0) return basis;
  const Matrix<T> k = kernel(Matrix<T>::from_columns(images, rows), tol);
  std::vector<Vec<T>> out;
  out.reserve(k.cols());
  for (std::size_t j = 0; j < k.cols(); ++j) {
    Vec<T> v = zeros<T>(basis.front().size());
    for (std::size_t i = 0; i < basis.size(); ++i) axpy(k(i, j), basis[i], v);
    out.push_back(std::move(v));
  }
  return out;
}

template <class T>
Subspace<T> Subspace<T>::span(const Matrix<T>& generators, double tol) {
  Subspace s(generators.rows());
  if (generators.cols() == 0) return s;
  s.basis_ = column_basis(generators, tol);
  if (s.basis_.cols() > 0) {
    const Matrix<T> bt = s.basis_.transpose();
    auto gram = inverse(Matrix<T>(bt * s.basis_), tol);
    if (!gram) throw Error(ErrorKind::Internal, "Subspace::span: basis Gram matrix is singular");
    s.left_inverse_ = *gram * bt;
  }
  return s;
}

template <class T>
Subspace<T> Subspace<T>::span(const std::vector<Vec<T>>& generators, std::size_t ambient_dim, double tol) {
  return span(Matrix<T>::from_columns(generators, ambient_dim), tol);
}

template <class T>
std::optional<Vec<T>> Subspace<T>::coordinates(const Vec<T>& v, double tol) const {
  require_dim(v.size(), ambient_, "Subspace::coordinates");
  if (dim() == 0) {
    if (is_zero(v, tol)) return Vec<T>{};
    return std::nullopt;
  }
  Vec<T> c = left_inverse_ * v;
  const Vec<T> back = basis_ * c;
  if constexpr (Field<T>::exact) {
    if (back != v) return std::nullopt;
  } else {
    const double scale = std::max(1.0, max_abs(v));
    if (max_abs(sub(back, v)) > tol * scale) return std::nullopt;
  }
  return c;
}

template <class T>
bool Subspace<T>::contains(const Subspace& other, double tol) const {
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.vector(i), tol)) return false;
  }
  return true;
}

template <class T>
Subspace<T> intersection(const Subspace<T>& a, const Subspace<T>& b, double tol) {
  if (a.dim() == 0 || b.dim() == 0) return Subspace<T>(a.ambient_dim());
  const Matrix<T> k = kernel(hconcat(a.basis(), -b.basis()), tol);
  std::vector<Vec<T>> gens;
  for (std::size_t j = 0; j < k.cols(); ++j) {
    Vec<T> coeff(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) coeff[i] = k(i, j);
    gens.push_back(a.basis() * coeff);
  }
  return Subspace<T>::span(gens, a.ambient_dim(), tol);
}

template <class T>
Subspace<T> restricted_radical(const Subspace<T>& s, const Matrix<T>& g, double tol) {
  if (s.dim() == 0) return s;
  const Matrix<T>& b = s.basis();
  const Matrix<T> k = kernel(Matrix<T>(b.transpose() * g * b), tol);
  return Subspace<T>::span(Matrix<T>(b * k), tol);
}

template RowEchelon<Rational> row_reduce(Matrix<Rational>, double);
template RowEchelon<double> row_reduce(Matrix<double>, double);
template std::vector<Vec<Rational>> refine_kernel(const std::vector<Vec<Rational>>&,
                                                  const std::function<Vec<Rational>(const Vec<Rational>&)>&, double);
template std::vector<Vec<double>> refine_kernel(const std::vector<Vec<double>>&,
                                                const std::function<Vec<double>(const Vec<double>&)>&, double);
template class Subspace<Rational>;
template class Subspace<double>;
template Subspace<Rational> intersection(const Subspace<Rational>&, const Subspace<Rational>&, double);
template Subspace<double> intersection(const Subspace<double>&, const Subspace<double>&, double);
template Subspace<Rational> restricted_radical(const Subspace<Rational>&, const Matrix<Rational>&, double);
template Subspace<double> restricted_radical(const Subspace<double>&, const Matrix<double>&, double);

}  // namespace exsym
