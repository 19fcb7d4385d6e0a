#pragma once

#include <string>
#include <vector>

#include "exsym/linalg.hpp"
#include "exsym/matrix.hpp"
#include "exsym/report.hpp"

namespace exsym {

/// Dense structure constants: [b_i, b_j] = sum_k c(i, j, k) b_k.
template <class T>
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim), c_(dim * dim * dim, T(0)) {}

  std::size_t dim() const noexcept { return dim_; }

  const T& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  T& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }

  /// Sets [b_i, b_j] = value and [b_j, b_i] = -value.
  void set_bracket(std::size_t i, std::size_t j, const Vec<T>& value) {
    require_dim(value.size(), dim_, "StructureConstants::set_bracket");
    for (std::size_t k = 0; k < dim_; ++k) {
      (*this)(i, j, k) = value[k];
      (*this)(j, i, k) = -value[k];
    }
  }

  const std::vector<T>& data() const noexcept { return c_; }
  bool operator==(const StructureConstants& o) const { return dim_ == o.dim_ && c_ == o.c_; }

 private:
  std::size_t dim_ = 0;
  std::vector<T> c_;
};

/// A finite-dimensional real Lie algebra with an invariant symmetric bilinear form,
/// possibly degenerate. Immutable once built; ad matrices of the basis are cached.
/// The algebra axioms are not enforced here; see validate_algebra.
template <class T>
class MetricLieAlgebra {
 public:
  MetricLieAlgebra() = default;
  MetricLieAlgebra(std::vector<std::string> labels, StructureConstants<T> structure, Matrix<T> gram,
                   double tolerance = kDefaultTolerance);

  std::size_t dim() const noexcept { return structure_.dim(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const StructureConstants<T>& structure() const noexcept { return structure_; }
  const Matrix<T>& gram() const noexcept { return gram_; }
  double tolerance() const noexcept { return tolerance_; }

  /// Matrix of ad(b_i); column j holds [b_i, b_j].
  const Matrix<T>& ad_basis(std::size_t i) const { return ad_[i]; }
  Matrix<T> ad(const Vec<T>& x) const;
  Vec<T> bracket(const Vec<T>& x, const Vec<T>& y) const;
  T inner(const Vec<T>& x, const Vec<T>& y) const { return bilinear(x, gram_, y); }

 private:
  std::vector<std::string> labels_;
  StructureConstants<T> structure_;
  Matrix<T> gram_;
  double tolerance_ = kDefaultTolerance;
  std::vector<Matrix<T>> ad_;
};

/// Checks "antisymmetry", "jacobi", "invariance" and "gram symmetry".
template <class T>
ValidationReport validate_algebra(const MetricLieAlgebra<T>& alg);

/// B_ij = tr(ad b_i o ad b_j).
template <class T>
Matrix<T> killing_form(const MetricLieAlgebra<T>& alg);

/// Cartan's criterion: the Killing form is nondegenerate.
template <class T>
bool is_semisimple(const MetricLieAlgebra<T>& alg);

/// Kernel of a symmetric bilinear form given by its Gram matrix.
template <class T>
Subspace<T> form_radical(const MetricLieAlgebra<T>& alg, const Matrix<T>& form);

template <class T>
Subspace<T> center(const MetricLieAlgebra<T>& alg);

/// The image [U, V] spanned by brackets of basis vectors.
template <class T>
Subspace<T> bracket_span(const MetricLieAlgebra<T>& alg, const Subspace<T>& u, const Subspace<T>& v);

MetricLieAlgebra<double> to_float(const MetricLieAlgebra<Rational>& alg, double tolerance = kDefaultTolerance);

}  // namespace exsym
