#include "exsym/triple.hpp"

#include "exsym/shape.hpp"

namespace exsym {

std::string_view part_name(Part p) {
  switch (p) {
    case Part::PlusPlus: return "g_+^+";
    case Part::PlusMinus: return "g_+^-";
    case Part::MinusPlus: return "g_-^+";
    case Part::MinusMinus: return "g_-^-";
  }
  return "?";
}

namespace {

template <class T>
std::optional<std::pair<std::size_t, std::size_t>> first_nonzero(const Matrix<T>& m, double tol) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!Field<T>::is_zero(m(r, c), tol)) return std::make_pair(r, c);
  return std::nullopt;
}

template <class T>
void check_zero(Check& check, const Matrix<T>& m, double tol, const std::string& what) {
  if (auto rc = first_nonzero(m, tol)) {
    fail(check, {rc->first, rc->second}, what + " (entry " + std::to_string(rc->first) + "," +
                                             std::to_string(rc->second) + ")");
  }
}

template <class T>
FourGrading<T> compute_grading(const Matrix<T>& theta, const Matrix<T>& d, double tol) {
  const std::size_t n = theta.rows();
  const Matrix<T> id = Matrix<T>::identity(n);
  FourGrading<T> g;
  g.tau = id + T(2) * (d * d);
  const T half(T(1) / T(2));
  const std::array<Matrix<T>, 2> theta_proj{(id + theta) * half, (id - theta) * half};
  const std::array<Matrix<T>, 2> tau_proj{(id + g.tau) * half, (id - g.tau) * half};
  for (Part p : kAllParts) {
    const auto idx = static_cast<std::size_t>(p);
    const Matrix<T> proj = theta_proj[idx / 2] * tau_proj[idx % 2];
    g.projectors[idx] = proj;
    g.parts[idx] = Subspace<T>::span(proj, tol);
  }
  return g;
}

template <class T>
bool grading_preconditions(const Matrix<T>& theta, const Matrix<T>& d, double tol) {
  const std::size_t n = theta.rows();
  return is_zero(Matrix<T>(theta * theta - Matrix<T>::identity(n)), tol) && is_zero(Matrix<T>(d * d * d + d), tol);
}

template <class T>
Matrix<T> left_inverse(const Matrix<T>& basis, double tol) {
  const Matrix<T> bt = basis.transpose();
  auto g = inverse(Matrix<T>(bt * basis), tol);
  if (!g) throw Error(ErrorKind::Internal, "basis is not linearly independent");
  return *g * bt;
}

}  // namespace

template <class T>
ExtrinsicTriple<T>::ExtrinsicTriple(MetricLieAlgebra<T> alg, Matrix<T> theta, Matrix<T> dmat, bool weak,
                                    std::string name)
    : alg_(std::move(alg)), theta_(std::move(theta)), dmat_(std::move(dmat)), weak_(weak), name_(std::move(name)) {
  const std::size_t n = alg_.dim();
  require_dim(theta_.rows(), n, "theta rows");
  require_dim(theta_.cols(), n, "theta cols");
  require_dim(dmat_.rows(), n, "D rows");
  require_dim(dmat_.cols(), n, "D cols");
  if (grading_preconditions(theta_, dmat_, alg_.tolerance())) {
    grading_ = compute_grading(theta_, dmat_, alg_.tolerance());
  }
}

template <class T>
const FourGrading<T>& ExtrinsicTriple<T>::grading() const {
  if (!grading_) {
    throw InvalidTripleError("D cubic", "grading undefined: requires theta^2 = 1 and D^3 = -D");
  }
  return *grading_;
}

template <class T>
FourGrading<T> grading(const ExtrinsicTriple<T>& t) {
  const std::size_t n = t.dim();
  const double tol = t.tolerance();
  if (!is_zero(Matrix<T>(t.theta() * t.theta() - Matrix<T>::identity(n)), tol)) {
    throw InvalidTripleError("theta involution", "theta^2 != 1");
  }
  if (!is_zero(Matrix<T>(t.dmat() * t.dmat() * t.dmat() + t.dmat()), tol)) {
    throw InvalidTripleError("D cubic", "D^3 != -D");
  }
  FourGrading<T> g = compute_grading(t.theta(), t.dmat(), tol);
  Matrix<T> total(n, n);
  for (Part p : kAllParts) total += g.projector(p);
  if (!is_zero(Matrix<T>(total - Matrix<T>::identity(n)), tol)) {
    throw InvalidTripleError("D theta anticommute", "grading projectors do not sum to the identity");
  }
  return g;
}

template <class T>
ValidationReport validate_triple(const ExtrinsicTriple<T>& t) {
  const auto& alg = t.alg();
  const std::size_t n = t.dim();
  const double tol = t.tolerance();
  const Matrix<T>& th = t.theta();
  const Matrix<T>& d = t.dmat();
  const Matrix<T>& gram = alg.gram();
  const Matrix<T> id = Matrix<T>::identity(n);

  ValidationReport report = validate_algebra(alg);

  check_zero(report.add("theta involution"), Matrix<T>(th * th - id), tol, "theta^2 - 1 != 0");

  Check& aut = report.add("theta automorphism");
  Check& der = report.add("D derivation");
  for (std::size_t i = 0; i < n; ++i) {
    const Vec<T> bi = unit<T>(n, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec<T> bj = unit<T>(n, j);
      const Vec<T> br = alg.bracket(bi, bj);
      if (aut.passed) {
        const Vec<T> lhs = th * br;
        const Vec<T> rhs = alg.bracket(th.column(i), th.column(j));
        if (!is_zero(sub(lhs, rhs), tol)) {
          fail(aut, {i, j}, "theta[x,y] != [theta x, theta y] at (" + alg.labels()[i] + ", " + alg.labels()[j] + ")");
        }
      }
      if (der.passed) {
        const Vec<T> lhs = d * br;
        const Vec<T> rhs = add(alg.bracket(d.column(i), bj), alg.bracket(bi, d.column(j)));
        if (!is_zero(sub(lhs, rhs), tol)) {
          fail(der, {i, j}, "D[x,y] != [Dx,y] + [x,Dy] at (" + alg.labels()[i] + ", " + alg.labels()[j] + ")");
        }
      }
    }
  }

  check_zero(report.add("theta isometry"), Matrix<T>(th.transpose() * gram * th - gram), tol, "theta^T G theta != G");
  check_zero(report.add("D antisymmetric"), Matrix<T>(d.transpose() * gram + gram * d), tol, "D^T G + G D != 0");
  check_zero(report.add("D theta anticommute"), Matrix<T>(d * th + th * d), tol, "D theta + theta D != 0");
  check_zero(report.add("D cubic"), Matrix<T>(d * d * d + d), tol, "D^3 + D != 0");

  Check& gpp = report.add("g++ = [g+-, g+-]");
  Check& rad = report.add("metric radical location");
  if (!t.has_grading()) {
    fail(gpp, {}, "grading undefined (theta not an involution or D^3 != -D)");
    fail(rad, {}, "grading undefined (theta not an involution or D^3 != -D)");
    return report;
  }
  const auto& g = t.grading();
  const Subspace<T> generated = bracket_span(alg, g[Part::PlusMinus], g[Part::PlusMinus]);
  if (!equal(generated, g[Part::PlusPlus], tol)) {
    fail(gpp, {}, "dim g_+^+ = " + std::to_string(g[Part::PlusPlus].dim()) + " but [g_+^-, g_+^-] spans " +
                      std::to_string(generated.dim()) + " dimensions or a different subspace");
  }

  const Subspace<T> radical = form_radical(alg, gram);
  if (t.weak()) {
    if (!g.normal().contains(radical, tol)) {
      fail(rad, {}, "radical of dimension " + std::to_string(radical.dim()) + " is not contained in g_-^+");
    }
  } else if (radical.dim() != 0) {
    fail(rad, {}, "inner product is degenerate (radical dimension " + std::to_string(radical.dim()) +
                      ") on a non-weak triple");
  }
  return report;
}

template <class T>
bool is_full(const ExtrinsicTriple<T>& t) {
  const auto& g = t.grading();
  return equal(g.normal(), bracket_span(t.alg(), g[Part::PlusMinus], g.tangent()), t.tolerance());
}

template <class T>
Subspace<T> metric_radical(const ExtrinsicTriple<T>& t) {
  const Subspace<T> r = form_radical(t.alg(), t.alg().gram());
  if (r.dim() == 0) return r;
  if (!center(t.alg()).contains(r, t.tolerance())) {
    throw InvalidTripleError("metric radical location", "metric radical is not central");
  }
  if (!t.grading().normal().contains(r, t.tolerance())) {
    throw InvalidTripleError("metric radical location", "metric radical is not contained in g_-^+");
  }
  return r;
}

template <class T>
ExtrinsicTriple<T> quotient_triple(const ExtrinsicTriple<T>& t) {
  const Subspace<T> r = metric_radical(t);
  const std::size_t n = t.dim();
  const double tol = t.tolerance();
  if (r.dim() == 0) return ExtrinsicTriple<T>(t.alg(), t.theta(), t.dmat(), false, t.name());

  // Complement of R spanned by unit vectors, chosen greedily.
  std::vector<std::size_t> chosen;
  Matrix<T> current = r.basis();
  for (std::size_t i = 0; i < n && chosen.size() + r.dim() < n; ++i) {
    Matrix<T> trial = hconcat(current, Matrix<T>::from_columns({unit<T>(n, i)}, n));
    if (rank(trial, tol) == trial.cols()) {
      chosen.push_back(i);
      current = std::move(trial);
    }
  }
  const std::size_t m = chosen.size();
  Matrix<T> w(n, m);
  for (std::size_t j = 0; j < m; ++j) w.set_column(j, unit<T>(n, chosen[j]));
  auto full_inv = inverse(hconcat(w, r.basis()), tol);
  if (!full_inv) throw Error(ErrorKind::Internal, "quotient_triple: complement construction failed");
  auto project = [&](const Vec<T>& v) {
    Vec<T> c = *full_inv * v;
    c.resize(m);
    return c;
  };

  StructureConstants<T> c(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Vec<T> br = project(t.alg().bracket(w.column(i), w.column(j)));
      for (std::size_t k = 0; k < m; ++k) c(i, j, k) = br[k];
    }
  Matrix<T> th(m, m), d(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    th.set_column(j, project(t.theta() * w.column(j)));
    d.set_column(j, project(t.dmat() * w.column(j)));
  }
  std::vector<std::string> labels;
  for (auto i : chosen) labels.push_back(t.alg().labels()[i]);
  MetricLieAlgebra<T> alg(std::move(labels), std::move(c), Matrix<T>(w.transpose() * t.alg().gram() * w), tol);
  return ExtrinsicTriple<T>(std::move(alg), std::move(th), std::move(d), false,
                            t.name().empty() ? std::string() : t.name() + "/R");
}

template <class T>
std::optional<XiSolution<T>> find_xi(const ExtrinsicTriple<T>& t) {
  const std::size_t n = t.dim();
  const auto& c = t.alg().structure();
  // ad(xi) b_j = sum_i xi_i C_ij. must equal column j of D.
  Matrix<T> m(n * n, n);
  Vec<T> rhs(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) m(j * n + k, i) = c(i, j, k);
      rhs[j * n + k] = t.dmat()(k, j);
    }
  auto xi = solve(m, rhs, t.tolerance());
  if (!xi) return std::nullopt;
  XiSolution<T> out;
  out.xi = *xi;
  out.solution_dim = kernel(m, t.tolerance()).cols();
  if (t.has_grading()) {
    for (Part p : kAllParts) out.components[static_cast<std::size_t>(p)] = t.grading().projector(p) * out.xi;
  }
  return out;
}

template <class T>
QuadGrading<T> quad_grading_from_indices(std::size_t dim, const std::vector<std::size_t>& lstar,
                                         const std::vector<std::size_t>& a, const std::vector<std::size_t>& l) {
  auto make = [dim](const std::vector<std::size_t>& idx) {
    std::vector<Vec<T>> cols;
    for (auto i : idx) {
      if (i >= dim) throw Error(ErrorKind::DimensionMismatch, "quad grading index out of range");
      cols.push_back(unit<T>(dim, i));
    }
    return Subspace<T>::span(cols, dim, 0.0);
  };
  return QuadGrading<T>{make(lstar), make(a), make(l)};
}

template <class T>
ValidationReport check_quadratic_extension(const ExtrinsicTriple<T>& t, const QuadGrading<T>& q) {
  const std::size_t n = t.dim();
  const double tol = t.tolerance();
  const auto& alg = t.alg();
  const Matrix<T> all = hconcat(hconcat(q.lstar.basis(), q.a.basis()), q.l.basis());
  if (q.lstar.ambient_dim() != n || q.a.ambient_dim() != n || q.l.ambient_dim() != n ||
      all.cols() != n || rank(all, tol) != n) {
    throw Error(ErrorKind::DimensionMismatch, "quad grading is not a direct-sum decomposition of g");
  }

  ValidationReport report;
  Check& inv = report.add("theta/D invariance");
  const std::array<const Subspace<T>*, 3> pieces{&q.lstar, &q.a, &q.l};
  const std::array<const char*, 3> names{"l*", "a", "l"};
  for (std::size_t p = 0; p < 3 && inv.passed; ++p)
    for (std::size_t i = 0; i < pieces[p]->dim(); ++i) {
      const Vec<T> v = pieces[p]->vector(i);
      if (!pieces[p]->contains(t.theta() * v, tol) || !pieces[p]->contains(t.dmat() * v, tol)) {
        fail(inv, {p, i}, std::string(names[p]) + " is not invariant under theta and D");
        break;
      }
    }

  auto check_brackets = [&](Check& check, const Subspace<T>& u, const Subspace<T>& v, const Subspace<T>* target,
                            const std::string& what) {
    for (std::size_t i = 0; i < u.dim() && check.passed; ++i)
      for (std::size_t j = 0; j < v.dim(); ++j) {
        const Vec<T> br = alg.bracket(u.vector(i), v.vector(j));
        const bool ok = target ? target->contains(br, tol) : is_zero(br, tol);
        if (!ok) {
          fail(check, {i, j}, what);
          break;
        }
      }
  };
  check_brackets(report.add("[a,a] in l*"), q.a, q.a, &q.lstar, "[a,a] has a component outside l*");
  Check& central = report.add("[l*,l*+a] = 0");
  check_brackets(central, q.lstar, q.lstar, nullptr, "[l*,l*] != 0");
  check_brackets(central, q.lstar, q.a, nullptr, "[l*,a] != 0");
  check_brackets(report.add("[l*,l] in l*"), q.lstar, q.l, &q.lstar, "[l*,l] has a component outside l*");

  const Vec<T> h = mean_curvature(t);
  Check& hin = report.add("h in l*");
  if (!q.lstar.contains(h, tol)) fail(hin, {}, "mean curvature vector is not in l*");
  Check& nil = report.add("(ad h)^2 = 0");
  const Matrix<T> adh = alg.ad(h);
  if (!is_zero(Matrix<T>(adh * adh), tol)) fail(nil, {}, "(ad h)^2 != 0");
  return report;
}

template <class T>
ExtrinsicTriple<T> direct_sum(const ExtrinsicTriple<T>& a, const ExtrinsicTriple<T>& b) {
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  StructureConstants<T> c(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) c(i, j, k) = a.alg().structure()(i, j, k);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k) c(na + i, na + j, na + k) = b.alg().structure()(i, j, k);
  auto block = [&](const Matrix<T>& x, const Matrix<T>& y) {
    Matrix<T> m(n, n);
    for (std::size_t r = 0; r < na; ++r)
      for (std::size_t s = 0; s < na; ++s) m(r, s) = x(r, s);
    for (std::size_t r = 0; r < nb; ++r)
      for (std::size_t s = 0; s < nb; ++s) m(na + r, na + s) = y(r, s);
    return m;
  };
  std::vector<std::string> labels = a.alg().labels();
  labels.insert(labels.end(), b.alg().labels().begin(), b.alg().labels().end());
  MetricLieAlgebra<T> alg(std::move(labels), std::move(c), block(a.alg().gram(), b.alg().gram()),
                          std::min(a.tolerance(), b.tolerance()));
  std::string name = a.name().empty() && b.name().empty() ? std::string() : a.name() + "+" + b.name();
  return ExtrinsicTriple<T>(std::move(alg), block(a.theta(), b.theta()), block(a.dmat(), b.dmat()),
                            a.weak() || b.weak(), std::move(name));
}

template <class T>
ExtrinsicTriple<T> restrict_triple(const ExtrinsicTriple<T>& t, const Matrix<T>& basis) {
  const std::size_t m = basis.cols();
  const double tol = t.tolerance();
  const Subspace<T> span = Subspace<T>::span(basis, tol);
  if (span.dim() != m) throw Error(ErrorKind::DimensionMismatch, "restrict_triple: basis is not independent");
  const Matrix<T> linv = left_inverse(basis, tol);
  auto coords = [&](const Vec<T>& v, const char* what) {
    Vec<T> c = linv * v;
    if (!is_zero(sub(basis * c, v), tol)) throw InvalidTripleError(what, "subspace is not invariant");
    return c;
  };
  StructureConstants<T> c(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) c.set_bracket(i, j, coords(t.alg().bracket(basis.column(i), basis.column(j)), "closure under bracket"));
  Matrix<T> th(m, m), d(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    th.set_column(j, coords(t.theta() * basis.column(j), "theta invariance"));
    d.set_column(j, coords(t.dmat() * basis.column(j), "D invariance"));
  }
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < m; ++j) {
    const Vec<T> col = basis.column(j);
    std::optional<std::size_t> single;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < col.size(); ++i) {
      if (!Field<T>::is_zero(col[i], tol)) {
        ++nonzero;
        single = i;
      }
    }
    if (nonzero == 1 && col[*single] == T(1)) {
      labels.push_back(t.alg().labels()[*single]);
    } else {
      labels.push_back("v" + std::to_string(j + 1));
    }
  }
  MetricLieAlgebra<T> alg(std::move(labels), std::move(c), Matrix<T>(basis.transpose() * t.alg().gram() * basis), tol);
  return ExtrinsicTriple<T>(std::move(alg), std::move(th), std::move(d), t.weak(), t.name());
}

ExtrinsicTriple<double> to_float(const ExtrinsicTriple<Rational>& t, double tolerance) {
  return ExtrinsicTriple<double>(to_float(t.alg(), tolerance), to_float(t.theta()), to_float(t.dmat()), t.weak(),
                                 t.name());
}

template class ExtrinsicTriple<Rational>;
template class ExtrinsicTriple<double>;

#define EXSYM_INSTANTIATE(T)                                                                                \
  template FourGrading<T> grading(const ExtrinsicTriple<T>&);                                               \
  template ValidationReport validate_triple(const ExtrinsicTriple<T>&);                                     \
  template bool is_full(const ExtrinsicTriple<T>&);                                                         \
  template Subspace<T> metric_radical(const ExtrinsicTriple<T>&);                                           \
  template ExtrinsicTriple<T> quotient_triple(const ExtrinsicTriple<T>&);                                   \
  template std::optional<XiSolution<T>> find_xi(const ExtrinsicTriple<T>&);                                 \
  template QuadGrading<T> quad_grading_from_indices<T>(std::size_t, const std::vector<std::size_t>&,        \
                                                       const std::vector<std::size_t>&,                     \
                                                       const std::vector<std::size_t>&);                    \
  template ValidationReport check_quadratic_extension(const ExtrinsicTriple<T>&, const QuadGrading<T>&);    \
  template ExtrinsicTriple<T> direct_sum(const ExtrinsicTriple<T>&, const ExtrinsicTriple<T>&);             \
  template ExtrinsicTriple<T> restrict_triple(const ExtrinsicTriple<T>&, const Matrix<T>&);

EXSYM_INSTANTIATE(Rational)
EXSYM_INSTANTIATE(double)

}  // namespace exsym
