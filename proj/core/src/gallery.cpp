#include "exsym/gallery.hpp"

#include <random>

#include "exsym/shape.hpp"

namespace exsym {

namespace {

/// Expresses a commutator of elementary antisymmetric matrices in the L basis.
struct SoBasis {
  std::size_t size = 0;  // matrix size N
  std::vector<std::pair<std::size_t, std::size_t>> elems;  // (i, j) meaning L_ij, 0-based

  Vec<Rational> coords(const Matrix<Rational>& m) const {
    Vec<Rational> v = zeros<Rational>(elems.size());
    for (std::size_t a = 0; a < elems.size(); ++a) v[a] = m(elems[a].first, elems[a].second);
    return v;
  }

  Matrix<Rational> matrix(std::size_t a) const {
    Matrix<Rational> m(size, size);
    m(elems[a].first, elems[a].second) = 1;
    m(elems[a].second, elems[a].first) = -1;
    return m;
  }
};

std::string so_label(std::size_t i, std::size_t j) { return "L" + std::to_string(i + 1) + std::to_string(j + 1); }

ExtrinsicTriple<Rational> make(std::vector<std::string> labels, StructureConstants<Rational> c, Matrix<Rational> gram,
                               Matrix<Rational> theta, Matrix<Rational> d, std::string name) {
  MetricLieAlgebra<Rational> alg(std::move(labels), std::move(c), std::move(gram));
  return ExtrinsicTriple<Rational>(std::move(alg), std::move(theta), std::move(d), false, std::move(name));
}

}  // namespace

ExtrinsicTriple<Rational> sphere_triple(std::size_t n, std::optional<Rational> gram_scale) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "sphere_triple: n must be >= 1");
  const std::size_t size = n + 2;
  SoBasis so{size, {}};
  so.elems.emplace_back(0, 1);
  for (std::size_t j = 2; j < size; ++j) so.elems.emplace_back(0, j);
  for (std::size_t j = 2; j < size; ++j) so.elems.emplace_back(j, 1);
  for (std::size_t i = 2; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j) so.elems.emplace_back(i, j);
  const std::size_t dim = so.elems.size();

  std::vector<std::string> labels;
  for (auto [i, j] : so.elems) labels.push_back(so_label(i, j));
  if (n == 1) labels = {"e1", "e2", "e3"};

  StructureConstants<Rational> c(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    const Matrix<Rational> ma = so.matrix(a);
    for (std::size_t b = a + 1; b < dim; ++b) {
      const Matrix<Rational> mb = so.matrix(b);
      c.set_bracket(a, b, so.coords(ma * mb - mb * ma));
    }
  }
  // Killing form first, with a placeholder metric.
  const MetricLieAlgebra<Rational> bare(labels, c, Matrix<Rational>::identity(dim));
  const Rational scale = gram_scale.value_or(Rational(-1, 2 * static_cast<long>(n)));
  if (sgn(scale) == 0) throw Error(ErrorKind::InvalidArgument, "sphere_triple: gram_scale must be nonzero");
  const Matrix<Rational> gram = killing_form(bare) * scale;

  Matrix<Rational> conj = Matrix<Rational>::identity(size);
  conj(0, 0) = -1;
  Matrix<Rational> theta(dim, dim);
  for (std::size_t a = 0; a < dim; ++a) theta.set_column(a, so.coords(conj * so.matrix(a) * conj));
  const Matrix<Rational> d = bare.ad_basis(0);
  return make(std::move(labels), std::move(c), gram, std::move(theta), d, "sphere(" + std::to_string(n) + ")");
}

ExtrinsicTriple<Rational> sl2_triple(std::optional<Rational> gram_scale) {
  // H = 0, E = 1, F = 2
  StructureConstants<Rational> c(3);
  c.set_bracket(0, 1, {0, 2, 0});
  c.set_bracket(0, 2, {0, 0, -2});
  c.set_bracket(1, 2, {1, 0, 0});
  std::vector<std::string> labels{"H", "E", "F"};
  const MetricLieAlgebra<Rational> bare(labels, c, Matrix<Rational>::identity(3));
  const Rational scale = gram_scale.value_or(Rational(1, 8));
  if (sgn(scale) == 0) throw Error(ErrorKind::InvalidArgument, "sl2_triple: gram_scale must be nonzero");
  Matrix<Rational> theta = Matrix<Rational>::identity(3);
  theta(1, 1) = -1;
  theta(2, 2) = -1;
  const Matrix<Rational> d = bare.ad(Vec<Rational>{0, Rational(1, 2), Rational(-1, 2)});
  return make(std::move(labels), std::move(c), killing_form(bare) * scale, std::move(theta), d, "sl2");
}

ExtrinsicTriple<Rational> cotangent_so3_triple() {
  StructureConstants<Rational> c(6);
  const std::array<std::array<std::size_t, 3>, 3> cyc{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
  for (auto [i, j, k] : cyc) {
    c.set_bracket(i, j, unit<Rational>(6, k));
    c.set_bracket(i, j + 3, unit<Rational>(6, k + 3));
    c.set_bracket(j, i + 3, scaled(unit<Rational>(6, k + 3), Rational(-1)));
  }
  Matrix<Rational> gram(6, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    gram(i, i + 3) = 1;
    gram(i + 3, i) = 1;
  }
  Matrix<Rational> theta = Matrix<Rational>::identity(6);
  for (std::size_t i : {0, 1, 3, 4}) theta(i, i) = -1;
  std::vector<std::string> labels{"e1", "e2", "e3", "e1*", "e2*", "e3*"};
  const MetricLieAlgebra<Rational> bare(labels, c, gram);
  const Matrix<Rational> d = bare.ad_basis(0);
  return make(std::move(labels), std::move(c), std::move(gram), std::move(theta), d, "cotangent_so3");
}

ExtrinsicTriple<Rational> flat_triple(std::size_t k) {
  const std::size_t dim = 2 * k;
  Matrix<Rational> theta = Matrix<Rational>::identity(dim);
  Matrix<Rational> d(dim, dim);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < k; ++i) labels.push_back("u" + std::to_string(i + 1));
  for (std::size_t i = 0; i < k; ++i) {
    theta(k + i, k + i) = -1;
    d(k + i, i) = 1;
    d(i, k + i) = -1;
  }
  return make(std::move(labels), StructureConstants<Rational>(dim), Matrix<Rational>::identity(dim), std::move(theta),
              std::move(d), "flat(" + std::to_string(k) + ")");
}

ExtrinsicTriple<Rational> transform_triple(const ExtrinsicTriple<Rational>& t, const Matrix<Rational>& p) {
  const std::size_t n = t.dim();
  if (p.rows() != n || p.cols() != n) throw Error(ErrorKind::DimensionMismatch, "transform_triple: p must be dim x dim");
  auto inv = inverse(p, 0.0);
  if (!inv) throw Error(ErrorKind::InvalidArgument, "transform_triple: p is singular");
  StructureConstants<Rational> c(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) c.set_bracket(a, b, *inv * t.alg().bracket(p.column(a), p.column(b)));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i + 1));
  MetricLieAlgebra<Rational> alg(std::move(labels), std::move(c), Matrix<Rational>(p.transpose() * t.alg().gram() * p),
                                 t.tolerance());
  return ExtrinsicTriple<Rational>(std::move(alg), Matrix<Rational>(*inv * t.theta() * p),
                                   Matrix<Rational>(*inv * t.dmat() * p), t.weak(), t.name());
}

namespace {

enum Block { kLstar, kA, kL };

struct Shape {
  std::size_t m = 0, k = 0, n = 0;
  std::vector<Block> block;
  Vec<int> theta;  // diagonal of theta
  Matrix<Rational> d, gram;
  /// unknown index -> (i, j, k) with i < j
  std::vector<std::array<std::size_t, 3>> unknowns;
};

bool allowed(Block bi, Block bj, Block bk) {
  if (bi > bj) std::swap(bi, bj);
  if (bi == kLstar && (bj == kLstar || bj == kA)) return false;  // [l*, l* + a] = 0
  if (bi == kA && bj == kA) return bk == kLstar;                 // [a, a] in l*
  if (bi == kLstar && bj == kL) return bk == kLstar;             // [l*, l] in l*
  return true;
}

Shape draw_shape(std::size_t m, std::size_t k, std::mt19937_64& rng) {
  Shape s;
  s.m = m;
  s.k = k;
  s.n = 2 * m + k;
  const std::size_t n = s.n;
  s.d = Matrix<Rational>(n, n);
  s.gram = Matrix<Rational>(n, n);
  s.theta.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) s.block.push_back(i < m ? kLstar : (i < m + k ? kA : kL));

  std::uniform_int_distribution<int> coin(0, 1), three(-1, 1), quarter(0, 3);
  auto sign = [&] { return coin(rng) ? 1 : -1; };
  auto single_theta = [&] { return quarter(rng) == 0 ? 1 : -1; };

  // l and l*: rotation pairs, dual action on l*, pairing l* x l = Id, diagonal b on l.
  const std::size_t pairs_l = std::uniform_int_distribution<std::size_t>(0, m / 2)(rng);
  for (std::size_t i = 0; i < m; ++i) {
    s.gram(i, m + k + i) = 1;
    s.gram(m + k + i, i) = 1;
  }
  for (std::size_t i = 0; i < m;) {
    const std::size_t li = m + k + i;
    if (i / 2 < pairs_l && i + 1 < m) {
      const int t = sign();
      const Rational b = three(rng);
      for (std::size_t off : {std::size_t{0}, m + k}) {
        s.d(off + i + 1, off + i) = 1;
        s.d(off + i, off + i + 1) = -1;
        s.theta[off + i] = t;
        s.theta[off + i + 1] = -t;
      }
      s.gram(li, li) = b;
      s.gram(li + 1, li + 1) = b;
      i += 2;
    } else {
      const int t = single_theta();
      s.theta[i] = t;
      s.theta[li] = t;
      s.gram(li, li) = Rational(three(rng));
      i += 1;
    }
  }
  // a: diagonal metric, rotation pairs on equal signs.
  const std::size_t pairs_a = std::uniform_int_distribution<std::size_t>(0, k / 2)(rng);
  for (std::size_t i = 0; i < k;) {
    const std::size_t ai = m + i;
    if (i / 2 < pairs_a && i + 1 < k) {
      const int g = sign();
      const int t = sign();
      s.gram(ai, ai) = g;
      s.gram(ai + 1, ai + 1) = g;
      s.d(ai + 1, ai) = 1;
      s.d(ai, ai + 1) = -1;
      s.theta[ai] = t;
      s.theta[ai + 1] = -t;
      i += 2;
    } else {
      s.gram(ai, ai) = sign();
      s.theta[ai] = single_theta();
      i += 1;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t c = 0; c < n; ++c)
        if (allowed(s.block[i], s.block[j], s.block[c]) && s.theta[c] == s.theta[i] * s.theta[j])
          s.unknowns.push_back({i, j, c});
  return s;
}

StructureConstants<Rational> build(const Shape& s, const Vec<Rational>& x) {
  StructureConstants<Rational> c(s.n);
  for (std::size_t u = 0; u < x.size(); ++u) {
    if (sgn(x[u]) == 0) continue;
    const auto [i, j, k] = s.unknowns[u];
    c(i, j, k) = x[u];
    c(j, i, k) = -x[u];
  }
  return c;
}

std::vector<Matrix<Rational>> ad_matrices(const StructureConstants<Rational>& c) {
  const std::size_t n = c.dim();
  std::vector<Matrix<Rational>> ad(n, Matrix<Rational>(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(c(i, j, k)) != 0) ad[i](k, j) = c(i, j, k);
  return ad;
}

/// Invariance of the metric and the derivation property of D, linear in C.
std::vector<Vec<Rational>> linear_solutions(const Shape& s) {
  std::vector<Vec<Rational>> basis;
  for (std::size_t u = 0; u < s.unknowns.size(); ++u) basis.push_back(unit<Rational>(s.unknowns.size(), u));
  const std::size_t n = s.n;
  std::function<Vec<Rational>(const Vec<Rational>&)> invariance = [&s, n](const Vec<Rational>& x) {
    const auto ad = ad_matrices(build(s, x));
    Vec<Rational> out;
    out.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
      const Matrix<Rational> m = ad[i].transpose() * s.gram + s.gram * ad[i];
      out.insert(out.end(), m.data().begin(), m.data().end());
    }
    return out;
  };
  std::function<Vec<Rational>(const Vec<Rational>&)> derivation = [&s, n](const Vec<Rational>& x) {
    const auto ad = ad_matrices(build(s, x));
    Vec<Rational> out;
    out.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
      Matrix<Rational> m = s.d * ad[i] - ad[i] * s.d;
      for (std::size_t p = 0; p < n; ++p)
        if (sgn(s.d(p, i)) != 0) m -= ad[p] * s.d(p, i);
      out.insert(out.end(), m.data().begin(), m.data().end());
    }
    return out;
  };
  basis = refine_kernel(basis, invariance, 0.0);
  basis = refine_kernel(basis, derivation, 0.0);
  return basis;
}

}  // namespace

std::optional<SearchResult> search_nilpotent_instance(const SearchOptions& o) {
  if (o.budget == 0) return std::nullopt;
  const auto [m, k, ml] = o.dims;
  if (m != ml) throw Error(ErrorKind::InvalidArgument, "search_nilpotent_instance: dim l* must equal dim l");
  if (2 * m + k == 0) throw Error(ErrorKind::InvalidArgument, "search_nilpotent_instance: empty algebra");
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> coin(0, 1), value(0, 5);
  static const std::array<Rational, 6> values{Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2),
                                              Rational(-1, 2)};
  constexpr std::size_t kSamplesPerShape = 8;

  Shape shape;
  std::vector<Vec<Rational>> sols;
  for (std::size_t attempt = 0; attempt < o.budget; ++attempt) {
    if (attempt % kSamplesPerShape == 0) {
      shape = draw_shape(m, k, rng);
      sols = linear_solutions(shape);
    }
    Vec<Rational> x = zeros<Rational>(shape.unknowns.size());
    for (const auto& v : sols)
      if (coin(rng)) axpy(values[value(rng)], v, x);

    std::vector<std::string> labels;
    for (std::size_t i = 0; i < shape.n; ++i) {
      const char* prefix = shape.block[i] == kLstar ? "z" : (shape.block[i] == kA ? "a" : "l");
      const std::size_t local = shape.block[i] == kLstar ? i : (shape.block[i] == kA ? i - m : i - m - k);
      labels.push_back(prefix + std::to_string(local + 1));
    }
    Matrix<Rational> theta(shape.n, shape.n);
    for (std::size_t i = 0; i < shape.n; ++i) theta(i, i) = shape.theta[i];
    ExtrinsicTriple<Rational> t(MetricLieAlgebra<Rational>(labels, build(shape, x), shape.gram), theta, shape.d,
                                false, "search");
    if (!validate_triple(t).ok()) continue;
    if (is_semisimple(t.alg())) continue;
    if (o.require_nonzero_a_h && classify(t) == TriClass::Zero) continue;
    if (o.require_single_block && decompose(t).blocks.size() != 1) continue;

    SearchResult r;
    for (std::size_t i = 0; i < shape.n; ++i) {
      (shape.block[i] == kLstar ? r.lstar : (shape.block[i] == kA ? r.a : r.l)).push_back(i);
    }
    r.quad = quad_grading_from_indices<Rational>(shape.n, r.lstar, r.a, r.l);
    r.triple = t.with_name("search(seed=" + std::to_string(o.seed) + ")");
    r.seed = o.seed;
    r.attempts = attempt + 1;
    return r;
  }
  return std::nullopt;
}

}  // namespace exsym
