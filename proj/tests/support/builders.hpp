#pragma once

#include <initializer_list>
#include <string>

#include "exsym/exsym.hpp"

namespace exsym::testing {

inline Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

inline Vec<Rational> vec(std::initializer_list<long> xs) {
  Vec<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Matrix<Rational> mat(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix<Rational> m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline Matrix<Rational> diag(std::initializer_list<long> xs) {
  Matrix<Rational> m(xs.size(), xs.size());
  std::size_t i = 0;
  for (long x : xs) {
    m(i, i) = x;
    ++i;
  }
  return m;
}

inline std::vector<std::string> labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i + 1));
  return out;
}

// [e_i, e_j] = eps_ijk e_k, written out by hand
inline StructureConstants<Rational> so3_cyclic() {
  StructureConstants<Rational> c(3);
  c.set_bracket(0, 1, vec({0, 0, 1}));
  c.set_bracket(1, 2, vec({1, 0, 0}));
  c.set_bracket(2, 0, vec({0, 1, 0}));
  return c;
}

inline StructureConstants<Rational> heisenberg() {
  StructureConstants<Rational> c(3);
  c.set_bracket(0, 1, vec({0, 0, 1}));
  return c;
}

inline MetricLieAlgebra<Rational> algebra(StructureConstants<Rational> c, Matrix<Rational> gram) {
  const std::size_t n = c.dim();
  return MetricLieAlgebra<Rational>(labels(n), std::move(c), std::move(gram));
}

inline ExtrinsicTriple<Rational> abelian_triple(Matrix<Rational> gram, Matrix<Rational> theta, Matrix<Rational> d,
                                                bool weak = false) {
  const std::size_t n = gram.rows();
  return ExtrinsicTriple<Rational>(algebra(StructureConstants<Rational>(n), std::move(gram)), std::move(theta),
                                   std::move(d), weak, "abelian");
}

// 1-dim abelian triple sitting in g_-^+ (theta = -1, D = 0).
inline ExtrinsicTriple<Rational> normal_line() { return abelian_triple(diag({1}), diag({-1}), diag({0})); }

inline ExtrinsicTriple<Rational> with_gram(const ExtrinsicTriple<Rational>& t, const Matrix<Rational>& gram) {
  return ExtrinsicTriple<Rational>(MetricLieAlgebra<Rational>(t.alg().labels(), t.alg().structure(), gram), t.theta(),
                                   t.dmat(), t.weak(), t.name());
}

inline ExtrinsicTriple<Rational> with_dmat(const ExtrinsicTriple<Rational>& t, const Matrix<Rational>& d) {
  return ExtrinsicTriple<Rational>(t.alg(), t.theta(), d, t.weak(), t.name());
}

inline std::string fixture(const std::string& name) { return std::string(EXSYM_FIXTURE_DIR) + "/" + name; }

}  // namespace exsym::testing
