#include "exsym/lie_algebra.hpp"

namespace exsym {

namespace {

std::string label_list(const std::vector<std::string>& labels, std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (auto i : idx) {
    if (!first) s += ", ";
    s += i < labels.size() ? labels[i] : std::to_string(i);
    first = false;
  }
  return s + ")";
}

}  // namespace

template <class T>
MetricLieAlgebra<T>::MetricLieAlgebra(std::vector<std::string> labels, StructureConstants<T> structure, Matrix<T> gram,
                                      double tolerance)
    : labels_(std::move(labels)), structure_(std::move(structure)), gram_(std::move(gram)), tolerance_(tolerance) {
  const std::size_t n = structure_.dim();
  if (labels_.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels_.push_back("b" + std::to_string(i + 1));
  }
  require_dim(labels_.size(), n, "MetricLieAlgebra labels");
  require_dim(gram_.rows(), n, "MetricLieAlgebra gram rows");
  require_dim(gram_.cols(), n, "MetricLieAlgebra gram cols");
  ad_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix<T> a(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) a(k, j) = structure_(i, j, k);
    ad_.push_back(std::move(a));
  }
}

template <class T>
Matrix<T> MetricLieAlgebra<T>::ad(const Vec<T>& x) const {
  require_dim(x.size(), dim(), "ad");
  Matrix<T> a(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (Field<T>::is_exact_zero(x[i])) continue;
    a += ad_[i] * x[i];
  }
  return a;
}

template <class T>
Vec<T> MetricLieAlgebra<T>::bracket(const Vec<T>& x, const Vec<T>& y) const {
  require_dim(x.size(), dim(), "bracket lhs");
  require_dim(y.size(), dim(), "bracket rhs");
  const std::size_t n = dim();
  Vec<T> out(n, T(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (Field<T>::is_exact_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (Field<T>::is_exact_zero(y[j])) continue;
      const T w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const T& c = structure_(i, j, k);
        if (!Field<T>::is_exact_zero(c)) out[k] += w * c;
      }
    }
  }
  return out;
}

template <class T>
ValidationReport validate_algebra(const MetricLieAlgebra<T>& alg) {
  const std::size_t n = alg.dim();
  const double tol = alg.tolerance();
  const auto& c = alg.structure();
  const auto& labels = alg.labels();
  ValidationReport report;

  Check& anti = report.add("antisymmetry");
  for (std::size_t i = 0; i < n && anti.passed; ++i)
    for (std::size_t j = i; j < n && anti.passed; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const T s = c(i, j, k) + c(j, i, k);
        if (!Field<T>::is_zero(s, tol)) {
          fail(anti, {i, j}, "[x,y] + [y,x] != 0 at " + label_list(labels, {i, j}));
          break;
        }
      }

  Check& jacobi = report.add("jacobi");
  for (std::size_t i = 0; i < n && jacobi.passed; ++i)
    for (std::size_t j = i + 1; j < n && jacobi.passed; ++j)
      for (std::size_t k = j + 1; k < n && jacobi.passed; ++k) {
        const Vec<T> bi = unit<T>(n, i), bj = unit<T>(n, j), bk = unit<T>(n, k);
        Vec<T> s = alg.bracket(bi, alg.bracket(bj, bk));
        s = add(s, alg.bracket(bj, alg.bracket(bk, bi)));
        s = add(s, alg.bracket(bk, alg.bracket(bi, bj)));
        if (!is_zero(s, tol)) fail(jacobi, {i, j, k}, "Jacobi identity fails at " + label_list(labels, {i, j, k}));
      }

  Check& inv = report.add("invariance");
  for (std::size_t i = 0; i < n && inv.passed; ++i) {
    const Matrix<T> m = alg.ad_basis(i).transpose() * alg.gram() + alg.gram() * alg.ad_basis(i);
    for (std::size_t j = 0; j < n && inv.passed; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (!Field<T>::is_zero(m(j, k), tol)) {
          fail(inv, {i, j, k}, "<[x,y],z> + <y,[x,z]> != 0 at " + label_list(labels, {i, j, k}));
          break;
        }
      }
  }

  Check& sym = report.add("gram symmetry");
  for (std::size_t i = 0; i < n && sym.passed; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const T d = alg.gram()(i, j) - alg.gram()(j, i);
      if (!Field<T>::is_zero(d, tol)) {
        fail(sym, {i, j}, "gram not symmetric at " + label_list(labels, {i, j}));
        break;
      }
    }
  return report;
}

template <class T>
Matrix<T> killing_form(const MetricLieAlgebra<T>& alg) {
  const std::size_t n = alg.dim();
  Matrix<T> b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      // tr(A B) = sum_{k,l} A_kl B_lk
      const Matrix<T>& a = alg.ad_basis(i);
      const Matrix<T>& bb = alg.ad_basis(j);
      T t(0);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          if (Field<T>::is_exact_zero(a(k, l)) || Field<T>::is_exact_zero(bb(l, k))) continue;
          t += a(k, l) * bb(l, k);
        }
      b(i, j) = t;
      b(j, i) = t;
    }
  }
  return b;
}

template <class T>
bool is_semisimple(const MetricLieAlgebra<T>& alg) {
  if (alg.dim() == 0) return true;
  return rank(killing_form(alg), alg.tolerance()) == alg.dim();
}

template <class T>
Subspace<T> form_radical(const MetricLieAlgebra<T>& alg, const Matrix<T>& form) {
  require_dim(form.rows(), alg.dim(), "form_radical rows");
  require_dim(form.cols(), alg.dim(), "form_radical cols");
  return Subspace<T>::span(kernel(form, alg.tolerance()), alg.tolerance());
}

template <class T>
Subspace<T> center(const MetricLieAlgebra<T>& alg) {
  // x is central iff [x, b_j] = 0 for all j, i.e. sum_i x_i C_ij. = 0.
  const std::size_t n = alg.dim();
  Matrix<T> stacked(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) stacked(j * n + k, i) = alg.structure()(i, j, k);
  return Subspace<T>::span(kernel(stacked, alg.tolerance()), alg.tolerance());
}

template <class T>
Subspace<T> bracket_span(const MetricLieAlgebra<T>& alg, const Subspace<T>& u, const Subspace<T>& v) {
  std::vector<Vec<T>> gens;
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) gens.push_back(alg.bracket(u.vector(i), v.vector(j)));
  return Subspace<T>::span(gens, alg.dim(), alg.tolerance());
}

MetricLieAlgebra<double> to_float(const MetricLieAlgebra<Rational>& alg, double tolerance) {
  const std::size_t n = alg.dim();
  StructureConstants<double> c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c(i, j, k) = alg.structure()(i, j, k).get_d();
  return MetricLieAlgebra<double>(alg.labels(), std::move(c), to_float(alg.gram()), tolerance);
}

template class MetricLieAlgebra<Rational>;
template class MetricLieAlgebra<double>;

#define EXSYM_INSTANTIATE(T)                                                                   \
  template ValidationReport validate_algebra(const MetricLieAlgebra<T>&);                      \
  template Matrix<T> killing_form(const MetricLieAlgebra<T>&);                                 \
  template bool is_semisimple(const MetricLieAlgebra<T>&);                                     \
  template Subspace<T> form_radical(const MetricLieAlgebra<T>&, const Matrix<T>&);             \
  template Subspace<T> center(const MetricLieAlgebra<T>&);                                     \
  template Subspace<T> bracket_span(const MetricLieAlgebra<T>&, const Subspace<T>&, const Subspace<T>&);

EXSYM_INSTANTIATE(Rational)
EXSYM_INSTANTIATE(double)

}  // namespace exsym
