#include <gtest/gtest.h>

#include "builders.hpp"

using namespace exsym;
using namespace exsym::testing;

TEST(Gallery, SpheresAreValidSemisimpleAndInvertible) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto t = sphere_triple(n);
    SCOPED_TRACE(t.name());
    EXPECT_EQ(t.dim(), (n + 2) * (n + 1) / 2);
    EXPECT_TRUE(validate_triple(t).ok());
    EXPECT_TRUE(is_semisimple(t.alg()));
    EXPECT_EQ(t.grading().tangent().dim(), n);
    EXPECT_EQ(classify(t), TriClass::Invertible);
  }
}

TEST(Gallery, SphereTwoWithStandardScale) {
  const auto t = sphere_triple(2, q(-1, 6));
  EXPECT_TRUE(validate_triple(t).ok());
  EXPECT_EQ(classify(t), TriClass::Invertible);
}

TEST(Gallery, SphereTangentGramIsIdentity) {
  // tangent basis L_1j, j = 3..n+2
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto t = sphere_triple(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        EXPECT_EQ(t.alg().gram()(1 + i, 1 + j), i == j ? 1 : 0) << n;
  }
}

TEST(Gallery, Sl2) {
  const auto t = sl2_triple();
  EXPECT_EQ(t.alg().labels(), (std::vector<std::string>{"H", "E", "F"}));
  EXPECT_TRUE(validate_triple(t).ok());
  EXPECT_TRUE(is_semisimple(t.alg()));
  EXPECT_EQ(classify(t), TriClass::Invertible);
  EXPECT_TRUE(verify_lemma1(t).ok());
  EXPECT_EQ(verify_prop1(t).status, Prop1Status::Verified);
  // <E+F, E+F> = 1 under the default scale
  EXPECT_EQ(t.alg().inner(vec({0, 1, 1}), vec({0, 1, 1})), 1);
}

TEST(Gallery, CotangentSo3IsNilpotentType) {
  const auto t = cotangent_so3_triple();
  EXPECT_TRUE(validate_triple(t).ok());
  EXPECT_FALSE(is_semisimple(t.alg()));
  EXPECT_EQ(classify(t), TriClass::TwoStepNilpotentNonzero);
  EXPECT_EQ(decompose(t).blocks.size(), 1u);
}

TEST(Gallery, TransformPreservesInvariants) {
  const auto t = sphere_triple(1);
  const auto p = mat({{1, 1, 0}, {0, 1, 1}, {1, 0, 2}});
  const auto s = transform_triple(t, p);
  EXPECT_TRUE(validate_triple(s).ok());
  EXPECT_EQ(classify(s), TriClass::Invertible);
  // h transforms as a vector: p * h_new = h_old
  EXPECT_EQ(p * mean_curvature(s), mean_curvature(t));
  EXPECT_THROW(transform_triple(t, mat({{1, 1, 0}, {1, 1, 0}, {0, 0, 1}})), Error);
}

TEST(Search, ZeroBudgetFindsNothing) {
  SearchOptions o;
  o.budget = 0;
  EXPECT_FALSE(search_nilpotent_instance(o).has_value());
}

TEST(Search, SmallInstanceIsValidNilpotentAndDeterministic) {
  SearchOptions o;
  o.seed = 7;
  const auto r = search_nilpotent_instance(o);
  ASSERT_TRUE(r.has_value());
  const auto& t = r->triple;
  EXPECT_EQ(t.dim(), 4u);
  EXPECT_TRUE(validate_triple(t).ok());
  EXPECT_FALSE(is_semisimple(t.alg()));
  const auto c = classify(t);
  EXPECT_TRUE(c == TriClass::Zero || c == TriClass::TwoStepNilpotentNonzero);
  EXPECT_TRUE(check_quadratic_extension(t, r->quad).ok());
  EXPECT_EQ(decompose(t).blocks.size(), 1u);
  const auto again = search_nilpotent_instance(o);
  ASSERT_TRUE(again.has_value());
  EXPECT_EQ(again->triple.alg().structure(), t.alg().structure());
  EXPECT_EQ(again->attempts, r->attempts);
}

TEST(Search, NonzeroShapeOperator) {
  SearchOptions o;
  o.dims = {3, 0, 3};
  o.seed = 7;
  o.require_nonzero_a_h = true;
  const auto r = search_nilpotent_instance(o);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(classify(r->triple), TriClass::TwoStepNilpotentNonzero);
  const auto q = check_quadratic_extension(r->triple, r->quad);
  EXPECT_TRUE(q.passed("h in l*"));
  EXPECT_TRUE(q.passed("(ad h)^2 = 0"));
  EXPECT_TRUE(verify_theorem1(r->triple).consistent);
}

TEST(Search, RejectsMismatchedDims) {
  SearchOptions o;
  o.dims = {1, 0, 2};
  EXPECT_THROW(search_nilpotent_instance(o), Error);
}
