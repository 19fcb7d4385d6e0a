#include "exsym/shape.hpp"

#include <cmath>

namespace exsym {

std::string_view tri_class_name(TriClass c) {
  switch (c) {
    case TriClass::Invertible: return "Invertible";
    case TriClass::TwoStepNilpotentNonzero: return "TwoStepNilpotentNonzero";
    case TriClass::Zero: return "Zero";
    case TriClass::Mixed: return "Mixed";
  }
  return "?";
}

std::string_view prop1_status_name(Prop1Status s) {
  switch (s) {
    case Prop1Status::Verified: return "verified";
    case Prop1Status::Failed: return "failed";
    case Prop1Status::ComplexCaseOutOfScope: return "complex case - verification out of scope";
  }
  return "?";
}

namespace {

template <class T>
Matrix<T> inverse_tangent_gram(const ExtrinsicTriple<T>& t, const Matrix<T>& basis) {
  const Matrix<T> g = basis.transpose() * t.alg().gram() * basis;
  auto inv = inverse(g, t.tolerance());
  if (!inv) {
    throw DegenerateMetricError("tangent metric on g_-^- is degenerate", to_double(determinant(g)));
  }
  return *inv;
}

/// -[D u, eta] for each tangent basis vector, in tangent coordinates.
template <class T>
Matrix<T> shape_matrix(const ExtrinsicTriple<T>& t, const Vec<T>& eta) {
  const Subspace<T>& tan = t.grading().tangent();
  const std::size_t n = tan.dim();
  Matrix<T> a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec<T> image = scaled(t.alg().bracket(t.dmat() * tan.vector(i), eta), T(-1));
    auto c = tan.coordinates(image, t.tolerance());
    if (!c) throw InvalidTripleError("shape operator in tangent space", "A_eta u leaves g_-^-");
    a.set_column(i, *c);
  }
  return a;
}

template <class T>
Vec<T> mean_curvature_impl(const ExtrinsicTriple<T>& t, const Matrix<T>& basis) {
  const std::size_t n = basis.cols();
  const std::size_t dim = t.dim();
  if (n == 0) return zeros<T>(dim);
  const Matrix<T> ginv = inverse_tangent_gram(t, basis);
  Vec<T> h = zeros<T>(dim);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec<T> du = t.dmat() * basis.column(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (Field<T>::is_exact_zero(ginv(i, j))) continue;
      axpy(ginv(i, j), t.alg().bracket(du, basis.column(j)), h);
    }
  }
  return scaled(h, T(T(1) / T(static_cast<long>(n))));
}

}  // namespace

template <class T>
AlphaTensor<T> second_fundamental_form(const ExtrinsicTriple<T>& t) {
  const auto& g = t.grading();
  AlphaTensor<T> a{g.tangent(), g.normal(), {}};
  const std::size_t n = a.tangent.dim();
  a.values.assign(n, std::vector<Vec<T>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Vec<T> du = t.dmat() * a.tangent.vector(i);
    for (std::size_t j = 0; j < n; ++j) {
      a.values[i][j] = t.alg().bracket(du, a.tangent.vector(j));
      if (!a.normal.contains(a.values[i][j], t.tolerance())) {
        throw InvalidTripleError("alpha in normal space", "alpha(u_" + std::to_string(i) + ", u_" +
                                                              std::to_string(j) + ") is not in g_-^+");
      }
    }
  }
  return a;
}

template <class T>
Matrix<T> shape_operator(const ExtrinsicTriple<T>& t, const Vec<T>& eta) {
  require_dim(eta.size(), t.dim(), "shape_operator eta");
  if (!t.grading().normal().contains(eta, t.tolerance())) {
    throw Error(ErrorKind::InvalidArgument, "shape_operator: eta is not in g_-^+");
  }
  return shape_matrix(t, eta);
}

template <class T>
Vec<T> mean_curvature(const ExtrinsicTriple<T>& t) {
  return mean_curvature_impl(t, t.grading().tangent().basis());
}

template <class T>
Vec<T> mean_curvature(const ExtrinsicTriple<T>& t, const Matrix<T>& tangent_basis) {
  const Subspace<T> given = Subspace<T>::span(tangent_basis, t.tolerance());
  if (given.dim() != tangent_basis.cols() || !equal(given, t.grading().tangent(), t.tolerance())) {
    throw Error(ErrorKind::InvalidArgument, "mean_curvature: supplied vectors are not a basis of g_-^-");
  }
  return mean_curvature_impl(t, tangent_basis);
}

template <class T>
TriClass classify(const Matrix<T>& a, double tol) {
  const std::size_t n = a.rows();
  if (n == 0) return TriClass::Zero;
  const Matrix<T> sq = a * a;
  if constexpr (Field<T>::exact) {
    if (is_zero(a, tol)) return TriClass::Zero;
    if (sgn(determinant(a)) != 0) return TriClass::Invertible;
    if (is_zero(sq, tol)) return TriClass::TwoStepNilpotentNonzero;
  } else {
    const double scale = max_abs(a);
    if (scale < tol) return TriClass::Zero;
    if (std::abs(determinant(a)) > tol * std::pow(scale, static_cast<double>(n))) return TriClass::Invertible;
    if (max_abs(sq) < tol) return TriClass::TwoStepNilpotentNonzero;
  }
  return TriClass::Mixed;
}

template <class T>
TriClass classify(const ExtrinsicTriple<T>& t) {
  return classify(shape_matrix(t, mean_curvature(t)), t.tolerance());
}

template <class T>
ShapeReport<T> analyze_shape(const ExtrinsicTriple<T>& t) {
  ShapeReport<T> r;
  const double tol = t.tolerance();
  r.alpha = second_fundamental_form(t);
  r.n = r.alpha.tangent.dim();
  r.h = mean_curvature(t);
  r.a_h = shape_matrix(t, r.h);
  r.tri_class = classify(r.a_h, tol);

  Check& sym = r.invariants.add("alpha symmetric");
  for (std::size_t i = 0; i < r.n && sym.passed; ++i)
    for (std::size_t j = i + 1; j < r.n; ++j)
      if (!is_zero(sub(r.alpha.values[i][j], r.alpha.values[j][i]), tol)) {
        fail(sym, {i, j}, "alpha(u_i,u_j) != alpha(u_j,u_i)");
        break;
      }

  // <A_eta u, v> = <alpha(u,v), eta> for normal basis vectors eta.
  Check& wein = r.invariants.add("Weingarten identity");
  const auto& normal = r.alpha.normal;
  const auto& tan = r.alpha.tangent;
  for (std::size_t e = 0; e < normal.dim() && wein.passed; ++e) {
    const Vec<T> eta = normal.vector(e);
    const Matrix<T> a_eta = shape_matrix(t, eta);
    for (std::size_t i = 0; i < r.n && wein.passed; ++i) {
      const Vec<T> au = tan.basis() * a_eta.column(i);
      for (std::size_t j = 0; j < r.n; ++j) {
        const T d = t.alg().inner(au, tan.vector(j)) - t.alg().inner(r.alpha.values[i][j], eta);
        if (!Field<T>::is_zero(d, tol)) {
          fail(wein, {e, i, j}, "<A_eta u, v> != <alpha(u,v), eta>");
          break;
        }
      }
    }
  }
  return r;
}

template <class T>
ValidationReport verify_lemma1(const ExtrinsicTriple<T>& t) {
  const double tol = t.tolerance();
  const Matrix<T> b = killing_form(t.alg());
  const Subspace<T>& tan = t.grading().tangent();
  const std::size_t n = tan.dim();
  const Vec<T> h = mean_curvature(t);
  const T two_n = T(2) * T(static_cast<long>(n));

  ValidationReport report;
  Check& first = report.add("B(u,v) = -2n<A_h u,v>");
  Check& second = report.add("B(u,v) = B(Du,Dv)");
  for (std::size_t i = 0; i < n; ++i) {
    const Vec<T> u = tan.vector(i);
    const Vec<T> du = t.dmat() * u;
    const Vec<T> ahu = scaled(t.alg().bracket(du, h), T(-1));
    for (std::size_t j = 0; j < n; ++j) {
      const Vec<T> v = tan.vector(j);
      const T buv = bilinear(u, b, v);
      const T rhs1 = -two_n * t.alg().inner(ahu, v);
      const T rhs2 = bilinear(du, b, Vec<T>(t.dmat() * v));
      if (!Field<T>::is_zero(T(buv - rhs1), tol)) fail(first, {i, j}, "Killing form differs from -2n<A_h u, v>");
      if (!Field<T>::is_zero(T(buv - rhs2), tol)) fail(second, {i, j}, "Killing form differs from B(Du, Dv)");
    }
  }
  return report;
}

template <class T>
Prop1Report<T> verify_prop1(const ExtrinsicTriple<T>& t) {
  const double tol = t.tolerance();
  if (!is_semisimple(t.alg())) {
    throw Error(ErrorKind::InvalidArgument, "verify_prop1 requires a semisimple Lie algebra");
  }
  auto xi = find_xi(t);
  if (!xi) throw Error(ErrorKind::Internal, "no xi with ad(xi) = D on a semisimple algebra");

  Prop1Report<T> report;
  report.xi = xi->xi;
  const Matrix<T> b = killing_form(t.alg());
  const Matrix<T>& g = t.alg().gram();
  T gb(0), bb(0);
  for (std::size_t i = 0; i < b.data().size(); ++i) {
    gb += g.data()[i] * b.data()[i];
    bb += b.data()[i] * b.data()[i];
  }
  const T mu = gb / bb;
  const Matrix<T> resid = g - b * mu;
  report.fit_residual = max_abs(resid);
  const bool scalar_fit = Field<T>::exact ? is_zero(resid, tol) : report.fit_residual <= tol * std::max(1.0, max_abs(g));
  if (!scalar_fit) {
    report.status = Prop1Status::ComplexCaseOutOfScope;
    return report;
  }
  const std::size_t n = t.grading().tangent().dim();
  if (n == 0) {
    report.status = Prop1Status::Failed;
    return report;
  }
  const T lambda = T(T(1) / (T(2) * T(static_cast<long>(n)) * mu));
  report.mu = mu;
  report.lambda = lambda;
  const Vec<T> h = mean_curvature(t);
  const Vec<T> hdiff = sub(h, scaled(report.xi, lambda));
  report.h_residual = max_abs(hdiff);
  const Matrix<T> a_h = shape_matrix(t, h);
  const Matrix<T> adiff = a_h + Matrix<T>::identity(n) * lambda;
  report.a_h_residual = max_abs(adiff);
  report.status = (is_zero(hdiff, tol) && is_zero(adiff, tol)) ? Prop1Status::Verified : Prop1Status::Failed;
  return report;
}

template <class T>
Theorem1Report<T> verify_theorem1(const ExtrinsicTriple<T>& t) {
  Theorem1Report<T> r;
  const Matrix<T> b = killing_form(t.alg());
  r.killing_determinant = determinant(b);
  r.semisimple = is_semisimple(t.alg());
  const Matrix<T> a_h = shape_matrix(t, mean_curvature(t));
  r.a_h_squared = a_h * a_h;
  if constexpr (Field<T>::exact) {
    r.a_h_squared_nonzero = !is_zero(r.a_h_squared, 0.0);
  } else {
    r.a_h_squared_nonzero = max_abs(r.a_h_squared) >= t.tolerance();
  }
  r.consistent = r.semisimple == r.a_h_squared_nonzero;
  return r;
}

template <class T>
CurvatureValue<T> curvature(const ExtrinsicTriple<T>& t, const Vec<T>& u, const Vec<T>& v, const Vec<T>& w,
                            const Vec<T>& eta) {
  const double tol = t.tolerance();
  const auto& g = t.grading();
  for (const Vec<T>* x : {&u, &v, &w}) {
    require_dim(x->size(), t.dim(), "curvature argument");
    if (!g.tangent().contains(*x, tol)) throw Error(ErrorKind::InvalidArgument, "curvature: tangent argument not in g_-^-");
  }
  require_dim(eta.size(), t.dim(), "curvature eta");
  if (!g.normal().contains(eta, tol)) throw Error(ErrorKind::InvalidArgument, "curvature: eta not in g_-^+");
  const Vec<T> uv = t.alg().bracket(u, v);
  CurvatureValue<T> out{scaled(t.alg().bracket(uv, w), T(-1)), scaled(t.alg().bracket(uv, eta), T(-1))};
  if (!g.tangent().contains(out.tangent, tol)) throw InvalidTripleError("curvature", "R^M(u,v)w leaves g_-^-");
  if (!g.normal().contains(out.normal, tol)) throw InvalidTripleError("curvature", "R^perp(u,v)eta leaves g_-^+");
  return out;
}

#define EXSYM_INSTANTIATE(T)                                                                         \
  template AlphaTensor<T> second_fundamental_form(const ExtrinsicTriple<T>&);                        \
  template Matrix<T> shape_operator(const ExtrinsicTriple<T>&, const Vec<T>&);                       \
  template Vec<T> mean_curvature(const ExtrinsicTriple<T>&);                                         \
  template Vec<T> mean_curvature(const ExtrinsicTriple<T>&, const Matrix<T>&);                       \
  template TriClass classify(const Matrix<T>&, double);                                              \
  template TriClass classify(const ExtrinsicTriple<T>&);                                             \
  template ShapeReport<T> analyze_shape(const ExtrinsicTriple<T>&);                                  \
  template ValidationReport verify_lemma1(const ExtrinsicTriple<T>&);                                \
  template Prop1Report<T> verify_prop1(const ExtrinsicTriple<T>&);                                   \
  template Theorem1Report<T> verify_theorem1(const ExtrinsicTriple<T>&);                             \
  template CurvatureValue<T> curvature(const ExtrinsicTriple<T>&, const Vec<T>&, const Vec<T>&,      \
                                       const Vec<T>&, const Vec<T>&);

EXSYM_INSTANTIATE(Rational)
EXSYM_INSTANTIATE(double)

}  // namespace exsym
