#include <gtest/gtest.h>

#include <random>

#include "builders.hpp"

using namespace exsym;
using namespace exsym::testing;

namespace {

std::vector<ExtrinsicTriple<Rational>> gallery() {
  return {sphere_triple(1), sphere_triple(2), sphere_triple(3), sl2_triple(), cotangent_so3_triple(), flat_triple(1),
          flat_triple(2)};
}

}  // namespace

TEST(SecondFundamentalForm, SphereOne) {
  const auto a = second_fundamental_form(sphere_triple(1));
  ASSERT_EQ(a.values.size(), 1u);
  // alpha(e2, e2) = [D e2, e2] = [e3, e2] = -e1
  EXPECT_EQ(a.values[0][0], vec({-1, 0, 0}));
}

TEST(SecondFundamentalForm, ValuesAreNormal) {
  for (const auto& t : gallery()) {
    const auto a = second_fundamental_form(t);
    for (const auto& row : a.values)
      for (const auto& v : row) EXPECT_TRUE(t.grading().normal().contains(v, 0.0)) << t.name();
  }
}

TEST(SecondFundamentalForm, AbelianIsZero) {
  const auto a = second_fundamental_form(flat_triple(2));
  for (const auto& row : a.values)
    for (const auto& v : row) EXPECT_TRUE(is_zero(v, 0.0));
}

TEST(ShapeOperator, SphereOne) {
  const auto t = sphere_triple(1);
  // A_{e1} e2 = -[D e2, e1] = -[e3, e1] = -e2
  EXPECT_EQ(shape_operator(t, vec({1, 0, 0})), mat({{-1}}));
  EXPECT_EQ(shape_operator(t, vec({0, 0, 0})), mat({{0}}));
  try {
    shape_operator(t, vec({0, 1, 0}));
    ADD_FAILURE() << "tangent eta accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}

TEST(ShapeOperator, SelfAdjoint) {
  for (const auto& t : gallery()) {
    const auto& g = t.grading();
    const auto& u = g.tangent().basis();
    const auto gt = u.transpose() * t.alg().gram() * u;
    for (std::size_t k = 0; k < g.normal().dim(); ++k) {
      const auto a = shape_operator(t, g.normal().vector(k));
      const auto m = gt * a;
      EXPECT_EQ(m, m.transpose()) << t.name() << " eta " << k;
    }
  }
}

TEST(MeanCurvature, SphereOne) { EXPECT_EQ(mean_curvature(sphere_triple(1)), vec({-1, 0, 0})); }

TEST(MeanCurvature, AbelianIsZero) {
  EXPECT_TRUE(is_zero(mean_curvature(flat_triple(1)), 0.0));
  EXPECT_TRUE(is_zero(mean_curvature(flat_triple(3)), 0.0));
}

TEST(MeanCurvature, IndependentOfTangentBasis) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-2, 2);
  for (const auto& t : gallery()) {
    const auto& u = t.grading().tangent().basis();
    const std::size_t n = u.cols();
    if (n == 0) continue;
    const auto h = mean_curvature(t);
    for (int trial = 0; trial < 5; ++trial) {
      Matrix<Rational> p(n, n);
      do {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) p(i, j) = d(rng);
      } while (sgn(determinant(p)) == 0);
      EXPECT_EQ(mean_curvature(t, u * p), h) << t.name();
    }
  }
}

TEST(MeanCurvature, SphereN) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto t = sphere_triple(n);
    Vec<Rational> expected(t.dim(), Rational(0));
    expected[0] = -1;  // h = -L_12
    EXPECT_EQ(mean_curvature(t), expected) << n;
  }
}

TEST(Classify, Examples) {
  const auto s1 = analyze_shape(sphere_triple(1));
  EXPECT_EQ(s1.tri_class, TriClass::Invertible);
  EXPECT_EQ(s1.a_h, mat({{1}}));
  EXPECT_EQ(classify(flat_triple(1)), TriClass::Zero);
  EXPECT_EQ(classify(direct_sum(sphere_triple(1), flat_triple(1))), TriClass::Mixed);
  EXPECT_EQ(classify(sphere_triple(2)), TriClass::Invertible);
  EXPECT_EQ(classify(sl2_triple()), TriClass::Invertible);
  EXPECT_EQ(classify(cotangent_so3_triple()), TriClass::TwoStepNilpotentNonzero);
}

TEST(Classify, MatrixRules) {
  EXPECT_EQ(classify(Matrix<Rational>(), 0.0), TriClass::Zero);
  EXPECT_EQ(classify(mat({{0, 1}, {0, 0}}), 0.0), TriClass::TwoStepNilpotentNonzero);
  EXPECT_EQ(classify(mat({{1, 0}, {0, 0}}), 0.0), TriClass::Mixed);
  EXPECT_EQ(classify(mat({{0, 1}, {-1, 0}}), 0.0), TriClass::Invertible);
  Matrix<double> small(2, 2);
  small(0, 1) = 1e-12;
  EXPECT_EQ(classify(small, 1e-9), TriClass::Zero);
  small(0, 1) = 1.0;
  EXPECT_EQ(classify(small, 1e-9), TriClass::TwoStepNilpotentNonzero);
}

TEST(ShapeInvariants, HoldOnGallery) {
  for (const auto& t : gallery()) {
    const auto r = analyze_shape(t);
    EXPECT_TRUE(r.invariants.passed("alpha symmetric")) << t.name();
    EXPECT_TRUE(r.invariants.passed("Weingarten identity")) << t.name();
  }
}

TEST(Lemma1, SphereOneNumbersByHand) {
  const auto t = sphere_triple(1);
  const auto b = killing_form(t.alg());
  const auto e2 = vec({0, 1, 0});
  const auto de2 = t.dmat() * e2;
  EXPECT_EQ(bilinear(e2, b, e2), -2);
  EXPECT_EQ(bilinear(de2, b, de2), -2);
  // -2n <A_h e2, e2> with n = 1 and A_h = 1
  EXPECT_EQ(analyze_shape(t).a_h, mat({{1}}));
  EXPECT_TRUE(verify_lemma1(t).ok());
}

TEST(Lemma1, HoldsOnGallery) {
  for (const auto& t : gallery()) EXPECT_TRUE(verify_lemma1(t).ok()) << t.name();
  EXPECT_TRUE(verify_lemma1(sphere_triple(4)).ok());
}

TEST(Prop1, SphereOne) {
  const auto r = verify_prop1(sphere_triple(1));
  EXPECT_EQ(r.status, Prop1Status::Verified);
  EXPECT_EQ(r.xi, vec({1, 0, 0}));
  ASSERT_TRUE(r.mu && r.lambda);
  EXPECT_EQ(*r.mu, q(-1, 2));
  EXPECT_EQ(*r.lambda, -1);
  EXPECT_EQ(r.h_residual, 0.0);
  EXPECT_EQ(r.a_h_residual, 0.0);
}

TEST(Prop1, LambdaFormulaOnSpheres) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto r = verify_prop1(sphere_triple(n));
    ASSERT_EQ(r.status, Prop1Status::Verified) << n;
    EXPECT_EQ(*r.mu, q(-1, static_cast<long>(2 * n)));
    EXPECT_EQ(*r.lambda, Rational(1 / (Rational(static_cast<long>(2 * n)) * *r.mu)));
  }
}

TEST(Prop1, ScalingTheMetric) {
  const auto t = sphere_triple(1);
  const auto base = verify_prop1(t);
  const auto base_h = mean_curvature(t);
  for (long c : {3L, -2L, 5L}) {
    const auto s = with_gram(t, t.alg().gram() * Rational(c));
    const auto r = verify_prop1(s);
    EXPECT_EQ(r.status, Prop1Status::Verified);
    EXPECT_EQ(*r.lambda, Rational(*base.lambda / c));
    EXPECT_EQ(r.xi, base.xi);
    EXPECT_EQ(mean_curvature(s), scaled(base_h, q(1, c)));
  }
}

TEST(Prop1, NeedsSemisimpleAlgebra) {
  try {
    verify_prop1(cotangent_so3_triple());
    ADD_FAILURE() << "accepted a non-semisimple algebra";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}

TEST(Theorem1, ConsistentOnGallery) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto r = verify_theorem1(sphere_triple(n));
    EXPECT_TRUE(r.semisimple && r.a_h_squared_nonzero && r.consistent) << n;
  }
  const auto c = verify_theorem1(cotangent_so3_triple());
  EXPECT_FALSE(c.semisimple);
  EXPECT_FALSE(c.a_h_squared_nonzero);
  EXPECT_TRUE(c.consistent);
  const auto f = verify_theorem1(flat_triple(1));
  EXPECT_TRUE(f.consistent);
}

TEST(Curvature, EqualArgumentsGiveZero) {
  const auto t = sphere_triple(2);
  const auto u = t.grading().tangent().vector(0);
  const auto eta = t.grading().normal().vector(0);
  const auto c = curvature(t, u, u, t.grading().tangent().vector(1), eta);
  EXPECT_TRUE(is_zero(c.tangent, 0.0));
  EXPECT_TRUE(is_zero(c.normal, 0.0));
}

TEST(Curvature, SphereTwoIsPositivelyCurved) {
  const auto t = sphere_triple(2);
  const auto& tan = t.grading().tangent();
  const auto eta = t.grading().normal().vector(0);
  for (std::size_t i = 0; i < tan.dim(); ++i)
    for (std::size_t j = 0; j < tan.dim(); ++j) {
      if (i == j) continue;
      const auto u = tan.vector(i);
      const auto v = tan.vector(j);
      const auto c = curvature(t, u, v, v, eta);
      EXPECT_GT(t.alg().inner(c.tangent, u), 0) << i << "," << j;
    }
}

TEST(Curvature, MeanCurvatureIsParallel) {
  for (const auto& t : gallery()) {
    const auto& tan = t.grading().tangent();
    const auto h = mean_curvature(t);
    for (std::size_t i = 0; i < tan.dim(); ++i)
      for (std::size_t j = 0; j < tan.dim(); ++j) {
        const auto c = curvature(t, tan.vector(i), tan.vector(j), tan.vector(i), h);
        EXPECT_TRUE(is_zero(c.normal, 0.0)) << t.name();
      }
  }
}
