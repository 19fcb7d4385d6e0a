#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "exsym/matrix.hpp"

namespace exsym {

/// Gauss-Jordan elimination. On the float backend entries with |x| <= tol are
/// treated as zero; the exact backend ignores tol.
template <class T>
struct RowEchelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;
};

template <class T>
RowEchelon<T> row_reduce(Matrix<T> m, double tol);

// Exact backend: row reduction. Float backend: SVD with singular values
// <= tol * max(1, sigma_max) treated as zero.
template <class T>
std::size_t rank(const Matrix<T>& m, double tol);

/// Basis of the null space, one vector per column.
template <class T>
Matrix<T> kernel(const Matrix<T>& m, double tol);

/// Basis of the column space, one vector per column.
template <class T>
Matrix<T> column_basis(const Matrix<T>& m, double tol);

/// Some solution of m x = b, or nullopt if the system is inconsistent.
template <class T>
std::optional<Vec<T>> solve(const Matrix<T>& m, const Vec<T>& b, double tol);

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m, double tol);

template <class T>
T determinant(const Matrix<T>& m);

template <> std::size_t rank(const Matrix<Rational>&, double);
template <> std::size_t rank(const Matrix<double>&, double);
template <> Matrix<Rational> kernel(const Matrix<Rational>&, double);
template <> Matrix<double> kernel(const Matrix<double>&, double);
template <> Matrix<Rational> column_basis(const Matrix<Rational>&, double);
template <> Matrix<double> column_basis(const Matrix<double>&, double);
template <> std::optional<Vec<Rational>> solve(const Matrix<Rational>&, const Vec<Rational>&, double);
template <> std::optional<Vec<double>> solve(const Matrix<double>&, const Vec<double>&, double);
template <> std::optional<Matrix<Rational>> inverse(const Matrix<Rational>&, double);
template <> std::optional<Matrix<double>> inverse(const Matrix<double>&, double);
template <> Rational determinant(const Matrix<Rational>&);
template <> double determinant(const Matrix<double>&);

/// Restricts a family of unknown vectors to those satisfying a linear constraint.
/// `basis` spans the current solution space; the return value spans the subspace
/// on which `constraint` vanishes. Used to solve large homogeneous systems block
/// by block without materializing the full constraint matrix.
template <class T>
std::vector<Vec<T>> refine_kernel(const std::vector<Vec<T>>& basis,
                                  const std::function<Vec<T>(const Vec<T>&)>& constraint, double tol);

/// A linear subspace of T^n given by a basis (columns).
template <class T>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(ambient_dim, 0) {}

  /// Span of the columns of `generators`; a basis is extracted.
  static Subspace span(const Matrix<T>& generators, double tol);
  static Subspace span(const std::vector<Vec<T>>& generators, std::size_t ambient_dim, double tol);
  static Subspace whole(std::size_t n) { return span(Matrix<T>::identity(n), 0.0); }

  std::size_t dim() const noexcept { return basis_.cols(); }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  const Matrix<T>& basis() const noexcept { return basis_; }
  Vec<T> vector(std::size_t i) const { return basis_.column(i); }

  /// Coordinates c with basis * c = v, or nullopt if v is not in the span.
  std::optional<Vec<T>> coordinates(const Vec<T>& v, double tol) const;
  bool contains(const Vec<T>& v, double tol) const { return coordinates(v, tol).has_value(); }
  bool contains(const Subspace& other, double tol) const;

 private:
  std::size_t ambient_ = 0;
  Matrix<T> basis_;
  Matrix<T> left_inverse_;
};

template <class T>
bool equal(const Subspace<T>& a, const Subspace<T>& b, double tol) {
  return a.dim() == b.dim() && a.contains(b, tol) && b.contains(a, tol);
}

template <class T>
Subspace<T> sum(const Subspace<T>& a, const Subspace<T>& b, double tol) {
  return Subspace<T>::span(hconcat(a.basis(), b.basis()), tol);
}

template <class T>
Subspace<T> intersection(const Subspace<T>& a, const Subspace<T>& b, double tol);

/// Kernel of the bilinear form with Gram matrix g restricted to s, as a subspace of the ambient space.
template <class T>
Subspace<T> restricted_radical(const Subspace<T>& s, const Matrix<T>& g, double tol);

}  // namespace exsym
