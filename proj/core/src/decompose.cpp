#include <Eigen/Eigenvalues>

#include <complex>
#include <random>

#include "exsym/triple.hpp"

namespace exsym {

namespace {

/// Best rational approximation with denominator <= max_den (continued fractions).
Rational rationalize(double x, long max_den) {
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(r);
    if (std::abs(a) > 1e15) break;
    const long ai = static_cast<long>(a);
    const long p2 = ai * p1 + p0;
    const long q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = r - a;
    if (std::abs(frac) < 1e-12) break;
    r = 1.0 / frac;
  }
  if (q1 == 0) return Rational(0);
  Rational q(p1, q1);
  q.canonicalize();
  return q;
}

template <class T>
Matrix<T> unflatten(const Vec<T>& v, std::size_t n) {
  Matrix<T> m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = v[r * n + c];
  return m;
}

template <class T>
Vec<T> flatten(const Matrix<T>& m) {
  return m.data();
}

/// Self-adjoint operators commuting with every ad(b_i), theta and D. Their
/// generalized eigenspaces are orthogonal, theta/D-invariant ideals.
template <class T>
std::vector<Matrix<T>> commutant(const ExtrinsicTriple<T>& t) {
  const std::size_t n = t.dim();
  const double tol = t.tolerance();
  std::vector<Vec<T>> basis;
  basis.reserve(n * n);
  for (std::size_t i = 0; i < n * n; ++i) basis.push_back(unit<T>(n * n, i));

  auto commutes_with = [n](const Matrix<T>& a) {
    return std::function<Vec<T>(const Vec<T>&)>([n, a](const Vec<T>& v) {
      const Matrix<T> p = unflatten(v, n);
      return flatten(Matrix<T>(p * a - a * p));
    });
  };
  basis = refine_kernel(basis, commutes_with(t.theta()), tol);
  basis = refine_kernel(basis, commutes_with(t.dmat()), tol);
  const Matrix<T>& g = t.alg().gram();
  basis = refine_kernel(basis,
                        std::function<Vec<T>(const Vec<T>&)>([n, &g](const Vec<T>& v) {
                          const Matrix<T> p = unflatten(v, n);
                          return flatten(Matrix<T>(g * p - p.transpose() * g));
                        }),
                        tol);
  for (std::size_t i = 0; i < n && basis.size() > 1; ++i) {
    basis = refine_kernel(basis, commutes_with(t.alg().ad_basis(i)), tol);
  }
  std::vector<Matrix<T>> out;
  out.reserve(basis.size());
  for (const auto& v : basis) out.push_back(unflatten(v, n));
  return out;
}

template <class T>
Matrix<T> matrix_power(const Matrix<T>& m, std::size_t k) {
  Matrix<T> r = Matrix<T>::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) r = r * m;
  return r;
}

/// Candidate real factors x - r or x^2 - s x + p of the characteristic polynomial.
template <class T>
std::vector<Matrix<T>> factor_candidates(const Matrix<T>& p) {
  const std::size_t n = p.rows();
  Eigen::MatrixXd m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = to_double(p(r, c));
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  const auto& ev = es.eigenvalues();
  auto convert = [](double x) -> T {
    if constexpr (Field<T>::exact) {
      return rationalize(x, 10000);
    } else {
      return x;
    }
  };
  std::vector<Matrix<T>> out;
  const Matrix<T> id = Matrix<T>::identity(n);
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const std::complex<double> z = ev(i);
    if (std::abs(z.imag()) < 1e-7) {
      out.push_back(p - id * convert(z.real()));
    } else if (z.imag() > 0) {
      const T s = convert(2.0 * z.real());
      const T q = convert(std::norm(z));
      out.push_back(Matrix<T>(p * p - p * s + id * q));
    }
  }
  return out;
}

template <class T>
class Decomposer {
 public:
  explicit Decomposer(const DecomposeOptions& opt) : rng_(opt.seed), budget_(opt.trials) {}

  std::size_t used() const { return used_; }

  void run(const ExtrinsicTriple<T>& t, const Matrix<T>& basis, std::vector<ExtrinsicTriple<T>>& blocks,
           std::vector<Matrix<T>>& bases) {
    if (t.dim() > 1) {
      if (auto split = try_split(t)) {
        const auto& [k, im] = *split;
        run(restrict_triple(t, k), basis * k, blocks, bases);
        run(restrict_triple(t, im), basis * im, blocks, bases);
        return;
      }
    }
    blocks.push_back(t);
    bases.push_back(basis);
  }

 private:
  std::optional<std::pair<Matrix<T>, Matrix<T>>> try_split(const ExtrinsicTriple<T>& t) {
    const std::size_t n = t.dim();
    const double tol = t.tolerance();
    const std::vector<Matrix<T>> comm = commutant(t);
    if (comm.size() <= 1) return std::nullopt;

    std::uniform_int_distribution<int> coeff(-2, 2);
    for (std::size_t k = 0; used_ < budget_; ++k) {
      ++used_;
      Matrix<T> p(n, n);
      if (k < comm.size()) {
        p = comm[k];
      } else {
        for (const auto& c : comm) p += c * T(coeff(rng_));
      }
      for (const Matrix<T>& f : factor_candidates(p)) {
        const Matrix<T> fm = matrix_power(f, n);
        const Matrix<T> ker = kernel(fm, tol);
        if (ker.cols() == 0 || ker.cols() == n) continue;
        const Matrix<T> im = column_basis(fm, tol);
        if (ker.cols() + im.cols() != n) continue;
        return std::make_pair(ker, im);
      }
    }
    return std::nullopt;
  }

  std::mt19937_64 rng_;
  std::size_t budget_;
  std::size_t used_ = 0;
};

}  // namespace

template <class T>
Decomposition<T> decompose(const ExtrinsicTriple<T>& t, const DecomposeOptions& options) {
  Decomposer<T> d(options);
  std::vector<Matrix<T>> bases;
  Decomposition<T> out;
  d.run(t, Matrix<T>::identity(t.dim()), out.blocks, bases);
  out.basis = Matrix<T>(t.dim(), 0);
  for (const auto& b : bases) out.basis = hconcat(out.basis, b);
  out.seed = options.seed;
  out.trials_used = d.used();
  return out;
}

template Decomposition<Rational> decompose(const ExtrinsicTriple<Rational>&, const DecomposeOptions&);
template Decomposition<double> decompose(const ExtrinsicTriple<double>&, const DecomposeOptions&);

}  // namespace exsym
