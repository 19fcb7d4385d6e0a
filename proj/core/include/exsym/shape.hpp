#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "exsym/triple.hpp"

namespace exsym {

/// Type of the shape operator in the mean curvature direction.
enum class TriClass { Invertible, TwoStepNilpotentNonzero, Zero, Mixed };

std::string_view tri_class_name(TriClass c);

/// alpha(u_i, u_j) = [D u_i, u_j] over the tangent basis u of g_-^-.
template <class T>
struct AlphaTensor {
  Subspace<T> tangent;
  Subspace<T> normal;
  /// values[i][j] is alpha(u_i, u_j) as a vector of g.
  std::vector<std::vector<Vec<T>>> values;

  /// alpha(u_i, u_j) in coordinates of the normal basis.
  Vec<T> normal_coordinates(std::size_t i, std::size_t j, double tol) const {
    return *normal.coordinates(values[i][j], tol);
  }
};

/// Throws InvalidTripleError("alpha in normal space") if a value leaves g_-^+.
template <class T>
AlphaTensor<T> second_fundamental_form(const ExtrinsicTriple<T>& t);

/// Matrix of u -> -[D u, eta] in the tangent basis of the grading.
/// Throws Error(InvalidArgument) if eta is not in g_-^+.
template <class T>
Matrix<T> shape_operator(const ExtrinsicTriple<T>& t, const Vec<T>& eta);

/// h = (1/n) sum_ij g^ij alpha(u_i, u_j), using the inverse tangent Gram matrix.
/// Zero when the tangent space is zero. Throws DegenerateMetricError if the
/// tangent metric is degenerate.
template <class T>
Vec<T> mean_curvature(const ExtrinsicTriple<T>& t);

/// Same, with an explicitly supplied basis of g_-^- (columns).
template <class T>
Vec<T> mean_curvature(const ExtrinsicTriple<T>& t, const Matrix<T>& tangent_basis);

/// Exact backend: exact decisions. Float backend: Zero if max|A| < tol,
/// Invertible if |det A| > tol * max|A|^n, nilpotent if max|A^2| < tol.
/// An empty matrix (n = 0) is Zero.
template <class T>
TriClass classify(const Matrix<T>& a_h, double tol);

template <class T>
TriClass classify(const ExtrinsicTriple<T>& t);

template <class T>
struct ShapeReport {
  AlphaTensor<T> alpha;
  Vec<T> h;
  /// A_h in the tangent basis.
  Matrix<T> a_h;
  TriClass tri_class = TriClass::Zero;
  std::size_t n = 0;
  /// "alpha symmetric" and "Weingarten identity".
  ValidationReport invariants;
};

template <class T>
ShapeReport<T> analyze_shape(const ExtrinsicTriple<T>& t);

/// B(u,v) = -2n <A_h u, v> = B(Du, Dv) on all pairs of tangent basis vectors.
template <class T>
ValidationReport verify_lemma1(const ExtrinsicTriple<T>& t);

enum class Prop1Status { Verified, Failed, ComplexCaseOutOfScope };

std::string_view prop1_status_name(Prop1Status s);

template <class T>
struct Prop1Report {
  Vec<T> xi;
  /// Set when the metric is a real multiple of the Killing form.
  std::optional<T> mu;
  std::optional<T> lambda;
  /// max |gram - mu B| after the least-squares fit.
  double fit_residual = 0.0;
  /// max |h - lambda xi| and max |A_h + lambda Id| (only when mu is set).
  double h_residual = 0.0;
  double a_h_residual = 0.0;
  Prop1Status status = Prop1Status::Failed;
};

/// Requires a semisimple algebra (throws Error(InvalidArgument) otherwise).
/// Throws Error(Internal) if no xi with ad(xi) = D exists.
template <class T>
Prop1Report<T> verify_prop1(const ExtrinsicTriple<T>& t);

template <class T>
struct Theorem1Report {
  bool semisimple = false;
  T killing_determinant{};
  Matrix<T> a_h_squared;
  bool a_h_squared_nonzero = false;
  bool consistent = false;
};

/// Compares is_semisimple with A_h^2 != 0.
template <class T>
Theorem1Report<T> verify_theorem1(const ExtrinsicTriple<T>& t);

template <class T>
struct CurvatureValue {
  /// R^M(u,v)w = -[[u,v],w]
  Vec<T> tangent;
  /// R^perp(u,v)eta = -[[u,v],eta]
  Vec<T> normal;
};

template <class T>
CurvatureValue<T> curvature(const ExtrinsicTriple<T>& t, const Vec<T>& u, const Vec<T>& v, const Vec<T>& w,
                            const Vec<T>& eta);

}  // namespace exsym
