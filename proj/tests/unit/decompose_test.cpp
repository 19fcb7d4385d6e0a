#include <gtest/gtest.h>

#include "builders.hpp"
#include "fuzz.hpp"

using namespace exsym;
using namespace exsym::testing;

namespace {

void expect_valid_blocks(const ExtrinsicTriple<Rational>& t, const Decomposition<Rational>& d) {
  std::size_t total = 0;
  for (const auto& b : d.blocks) {
    EXPECT_TRUE(validate_triple(b).ok()) << t.name();
    total += b.dim();
  }
  EXPECT_EQ(total, t.dim());
  EXPECT_EQ(rank(d.basis, 0.0), t.dim());
}

}  // namespace

TEST(Decompose, SimpleAlgebrasStayWhole) {
  for (const auto& t : {sphere_triple(1), sphere_triple(2), sphere_triple(3), sl2_triple()}) {
    EXPECT_EQ(decompose(t).blocks.size(), 1u) << t.name();
  }
}

TEST(Decompose, OrthogonalSumOfTwoCircles) {
  const auto t = direct_sum(sphere_triple(1), sphere_triple(1));
  const auto d = decompose(t);
  ASSERT_EQ(d.blocks.size(), 2u);
  for (const auto& b : d.blocks) EXPECT_EQ(b.dim(), 3u);
  expect_valid_blocks(t, d);
}

TEST(Decompose, AbelianIdentityThetaSplitsIntoLines) {
  // Not a valid triple (g_+^+ is not [g_+^-, g_+^-]) but the splitting is still defined.
  const auto t = abelian_triple(diag({1, 1}), diag({1, 1}), diag({0, 0}));
  const auto d = decompose(t);
  ASSERT_EQ(d.blocks.size(), 2u);
  EXPECT_EQ(d.blocks[0].dim(), 1u);
  EXPECT_EQ(d.blocks[1].dim(), 1u);
}

TEST(Decompose, RecoversBlocksAfterBasisChange) {
  const auto t = transform_triple(direct_sum(sphere_triple(1), flat_triple(1)),
                                  mat({{1, 1, 0, 0, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 0}, {1, 0, 0, 1, 0}, {0, 0, 1, 1, 1}}));
  ASSERT_TRUE(validate_triple(t).ok());
  const auto d = decompose(t);
  ASSERT_EQ(d.blocks.size(), 2u);
  expect_valid_blocks(t, d);
  std::vector<TriClass> classes;
  for (const auto& b : d.blocks) classes.push_back(classify(b));
  EXPECT_NE(std::find(classes.begin(), classes.end(), TriClass::Invertible), classes.end());
  EXPECT_NE(std::find(classes.begin(), classes.end(), TriClass::Zero), classes.end());
}

TEST(Decompose, DeterministicForSeed) {
  const auto t = direct_sum(sphere_triple(1), direct_sum(flat_triple(1), sl2_triple()));
  DecomposeOptions o;
  o.seed = 99;
  const auto a = decompose(t, o);
  const auto b = decompose(t, o);
  EXPECT_EQ(a.basis, b.basis);
  EXPECT_EQ(a.seed, 99u);
  EXPECT_EQ(a.trials_used, b.trials_used);
  EXPECT_EQ(a.blocks.size(), 3u);
}

// Either A_h is invertible or A_h^2 = 0 on every indecomposable piece.
TEST(Decompose, FuzzedTriplesHaveNoMixedBlocks) {
  TripleFuzzer fuzz(0xdec0);
  std::size_t valid = 0;
  for (int i = 0; i < 200 && valid < 60; ++i) {
    const auto c = fuzz.next();
    if (!validate_triple(c.triple).ok()) continue;
    ++valid;
    const auto d = decompose(c.triple);
    expect_valid_blocks(c.triple, d);
    for (const auto& b : d.blocks) EXPECT_NE(classify(b), TriClass::Mixed) << c.recipe;
  }
  EXPECT_EQ(valid, 60u);
}
