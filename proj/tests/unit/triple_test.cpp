#include <gtest/gtest.h>

#include "builders.hpp"

using namespace exsym;
using namespace exsym::testing;

namespace {

std::vector<ExtrinsicTriple<Rational>> gallery() {
  return {sphere_triple(1), sphere_triple(2), sphere_triple(3), sl2_triple(), cotangent_so3_triple(), flat_triple(1),
          flat_triple(2)};
}

std::size_t part_dim(const ExtrinsicTriple<Rational>& t, Part p) { return t.grading()[p].dim(); }

}  // namespace

TEST(Gallery, SphereOneIsTheHandWrittenCyclicTable) {
  const auto t = sphere_triple(1);
  EXPECT_EQ(t.alg().structure(), so3_cyclic());
  EXPECT_EQ(t.alg().gram(), diag({1, 1, 1}));
  EXPECT_EQ(t.theta(), diag({-1, -1, 1}));
  // D = ad(e1): e2 -> e3, e3 -> -e2
  EXPECT_EQ(t.dmat(), mat({{0, 0, 0}, {0, 0, -1}, {0, 1, 0}}));
}

TEST(Grading, SphereOneParts) {
  const auto t = sphere_triple(1);
  const auto& g = t.grading();
  EXPECT_EQ(g[Part::PlusPlus].dim(), 0u);
  EXPECT_TRUE(equal(g[Part::PlusMinus], Subspace<Rational>::span(mat({{0}, {0}, {1}}), 0.0), 0.0));
  EXPECT_TRUE(equal(g.normal(), Subspace<Rational>::span(mat({{1}, {0}, {0}}), 0.0), 0.0));
  EXPECT_TRUE(equal(g.tangent(), Subspace<Rational>::span(mat({{0}, {1}, {0}}), 0.0), 0.0));
}

TEST(Grading, ZeroDerivationIdentityTheta) {
  const auto t = abelian_triple(diag({1, 1}), diag({1, 1}), diag({0, 0}));
  EXPECT_EQ(t.grading().tau, Matrix<Rational>::identity(2));
  EXPECT_EQ(part_dim(t, Part::PlusPlus), 2u);
}

TEST(Grading, StructuralPropertiesOnGallery) {
  for (const auto& t : gallery()) {
    SCOPED_TRACE(t.name());
    const auto& g = t.grading();
    const std::size_t n = t.dim();
    Matrix<Rational> total(n, n);
    for (Part p : kAllParts) total += g.projector(p);
    EXPECT_EQ(total, Matrix<Rational>::identity(n));
    for (Part a : kAllParts)
      for (Part b : kAllParts) {
        if (a != b) EXPECT_TRUE(is_zero(g.projector(a) * g.projector(b), 0.0));
      }
    EXPECT_EQ(g.tau * g.tau, Matrix<Rational>::identity(n));
    EXPECT_EQ(g.tau * t.theta(), t.theta() * g.tau);
    EXPECT_EQ(part_dim(t, Part::PlusMinus), part_dim(t, Part::MinusMinus));
    // D^2 = -1 on g^-, so D maps g_+^- onto g_-^- and back
    const auto dpm = t.dmat() * g[Part::PlusMinus].basis();
    EXPECT_EQ(rank(dpm, 0.0), part_dim(t, Part::PlusMinus));
    for (std::size_t c = 0; c < dpm.cols(); ++c) EXPECT_TRUE(g.tangent().contains(dpm.column(c), 0.0));
    const auto dmm = t.dmat() * g.tangent().basis();
    for (std::size_t c = 0; c < dmm.cols(); ++c) EXPECT_TRUE(g[Part::PlusMinus].contains(dmm.column(c), 0.0));
  }
}

TEST(ValidateTriple, GalleryPasses) {
  for (const auto& t : gallery()) {
    const auto r = validate_triple(t);
    EXPECT_TRUE(r.ok()) << t.name();
    EXPECT_EQ(r.failures(), 0u);
  }
  EXPECT_TRUE(validate_triple(sphere_triple(4)).ok());
}

TEST(ValidateTriple, DoubledDerivationFailsCubic) {
  const auto t = sphere_triple(1);
  const auto r = validate_triple(with_dmat(t, t.dmat() * Rational(2)));
  EXPECT_FALSE(r.passed("D cubic"));
  EXPECT_TRUE(r.passed("jacobi"));
}

TEST(ValidateTriple, DegenerateTangentMetricFailsRadicalLocation) {
  // flat(1) with gram = 0: the radical contains g_-^-
  auto t = flat_triple(1);
  t = ExtrinsicTriple<Rational>(MetricLieAlgebra<Rational>(t.alg().labels(), t.alg().structure(), Matrix<Rational>(2, 2)),
                                t.theta(), t.dmat(), true, "flat(1) degenerate");
  const auto r = validate_triple(t);
  EXPECT_FALSE(r.passed("metric radical location"));
  EXPECT_TRUE(r.passed("D antisymmetric"));
}

TEST(ValidateTriple, ThetaThatIsNotAnAutomorphism) {
  const auto t = sphere_triple(1);
  const auto r = validate_triple(ExtrinsicTriple<Rational>(t.alg(), diag({1, -1, 1}), t.dmat()));
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.passed("theta automorphism"));
}

TEST(Fullness, Examples) {
  EXPECT_TRUE(is_full(sphere_triple(1)));
  EXPECT_FALSE(is_full(direct_sum(sphere_triple(1), normal_line())));
  EXPECT_TRUE(is_full(flat_triple(2)));  // g_-^+ = 0
}

TEST(Quotient, NondegenerateIsUnchanged) {
  const auto t = sphere_triple(1);
  EXPECT_EQ(metric_radical(t).dim(), 0u);
  const auto qt = quotient_triple(t);
  EXPECT_EQ(qt.alg().structure(), t.alg().structure());
  EXPECT_EQ(qt.alg().gram(), t.alg().gram());
}

TEST(Quotient, CentralIsotropicLineRoundTrip) {
  const auto base = sphere_triple(1);
  const auto iso = abelian_triple(diag({0}), diag({-1}), diag({0}), true);
  const auto ext = direct_sum(base, iso);
  ASSERT_TRUE(ext.weak());
  EXPECT_TRUE(validate_triple(ext).ok());
  EXPECT_EQ(metric_radical(ext).dim(), 1u);
  const auto qt = quotient_triple(ext);
  EXPECT_FALSE(qt.weak());
  EXPECT_EQ(qt.dim(), 3u);
  EXPECT_TRUE(validate_triple(qt).ok());
  EXPECT_EQ(qt.alg().structure(), base.alg().structure());
  EXPECT_EQ(qt.alg().gram(), base.alg().gram());
  EXPECT_EQ(qt.theta(), base.theta());
  EXPECT_EQ(qt.dmat(), base.dmat());
}

TEST(FindXi, SphereOneGivesE1InNormalSpace) {
  const auto xi = find_xi(sphere_triple(1));
  ASSERT_TRUE(xi.has_value());
  EXPECT_EQ(xi->xi, vec({1, 0, 0}));
  EXPECT_EQ(xi->solution_dim, 0u);
  EXPECT_EQ(xi->components[static_cast<std::size_t>(Part::MinusPlus)], vec({1, 0, 0}));
  EXPECT_TRUE(is_zero(xi->components[static_cast<std::size_t>(Part::PlusMinus)], 0.0));
}

TEST(FindXi, AbelianWithNonzeroDerivationHasNone) { EXPECT_FALSE(find_xi(flat_triple(1)).has_value()); }

TEST(FindXi, SemisimpleDerivationsAreInner) {
  for (const auto& t : {sphere_triple(1), sphere_triple(2), sphere_triple(3), sl2_triple()}) {
    const auto xi = find_xi(t);
    ASSERT_TRUE(xi.has_value()) << t.name();
    EXPECT_EQ(t.alg().ad(xi->xi), t.dmat()) << t.name();
    // ad(xi)^3 = -ad(xi)
    const auto a = t.alg().ad(xi->xi);
    EXPECT_EQ(a * a * a, -a) << t.name();
  }
}

TEST(QuadraticExtension, SimpleAlgebraHasNoSuchShape) {
  const auto t = sphere_triple(1);
  const auto r = check_quadratic_extension(t, quad_grading_from_indices<Rational>(3, {0}, {1}, {2}));
  EXPECT_FALSE(r.ok());
}

TEST(QuadraticExtension, CotangentSo3) {
  const auto t = cotangent_so3_triple();
  const auto r = check_quadratic_extension(t, quad_grading_from_indices<Rational>(6, {3, 4, 5}, {}, {0, 1, 2}));
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.passed("h in l*"));
  EXPECT_TRUE(r.passed("(ad h)^2 = 0"));
}

TEST(QuadraticExtension, NotADirectSumThrows) {
  const auto t = cotangent_so3_triple();
  EXPECT_THROW(check_quadratic_extension(t, quad_grading_from_indices<Rational>(6, {3, 4}, {}, {0, 1, 2})), Error);
}

TEST(DirectSum, BlockStructureAndRestriction) {
  const auto a = sphere_triple(1);
  const auto b = flat_triple(1);
  const auto s = direct_sum(a, b);
  EXPECT_EQ(s.dim(), 5u);
  EXPECT_TRUE(validate_triple(s).ok());
  Matrix<Rational> basis(5, 3);
  for (std::size_t i = 0; i < 3; ++i) basis(i, i) = 1;
  const auto r = restrict_triple(s, basis);
  EXPECT_EQ(r.alg().structure(), a.alg().structure());
  EXPECT_EQ(r.dmat(), a.dmat());
  EXPECT_EQ(r.theta(), a.theta());
}

TEST(RestrictTriple, RejectsNonSubalgebra) {
  Matrix<Rational> basis(3, 2);
  basis(0, 0) = 1;
  basis(1, 1) = 1;  // span(e1, e2) is not closed: [e1,e2] = e3
  EXPECT_THROW(restrict_triple(sphere_triple(1), basis), InvalidTripleError);
}

TEST(Triple, FloatBackendAgreesOnGrading) {
  for (const auto& t : gallery()) {
    const auto f = to_float(t);
    EXPECT_TRUE(validate_triple(f).ok()) << t.name();
    for (Part p : kAllParts) EXPECT_EQ(f.grading()[p].dim(), part_dim(t, p)) << t.name();
  }
}
