#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "exsym/triple.hpp"

namespace exsym {

/// so(n+2) with theta = conjugation by diag(-1, 1, ..., 1) and D = ad(L_12).
/// Basis: L_12, then L_1j (j = 3..n+2), then L_j2 (j = 3..n+2), then L_ij for
/// 3 <= i < j, where L_ij = E_ij - E_ji. For n = 1 this is so(3) in the cyclic
/// basis e1 = L_12, e2 = L_13, e3 = L_32. The default gram_scale -1/(2n) makes
/// the tangent Gram matrix the identity.
ExtrinsicTriple<Rational> sphere_triple(std::size_t n, std::optional<Rational> gram_scale = std::nullopt);

/// sl(2,R) with basis H, E, F, theta = diag(1, -1, -1) and D = ad((E - F)/2).
/// The default gram_scale 1/8 gives <E+F, E+F> = 1.
ExtrinsicTriple<Rational> sl2_triple(std::optional<Rational> gram_scale = std::nullopt);

/// so(3) + so(3)* with the coadjoint action and the natural pairing; theta and
/// D = ad(e1) act diagonally. Non-semisimple, A_h nonzero with A_h^2 = 0.
/// Basis e1, e2, e3, e1*, e2*, e3*; l* = {3,4,5}, l = {0,1,2}.
ExtrinsicTriple<Rational> cotangent_so3_triple();

/// Abelian R^{2k} with gram = Id, theta = diag(1..1, -1..-1) and D swapping
/// the halves: a flat k-plane, h = 0.
ExtrinsicTriple<Rational> flat_triple(std::size_t k);

/// The triple in the basis given by the columns of p (invertible).
ExtrinsicTriple<Rational> transform_triple(const ExtrinsicTriple<Rational>& t, const Matrix<Rational>& p);

struct SearchOptions {
  /// dim l*, dim a, dim l (dim l* must equal dim l).
  std::array<std::size_t, 3> dims{1, 2, 1};
  std::size_t budget = 200;
  std::uint64_t seed = 1;
  /// Reject instances that decompose into several blocks.
  bool require_single_block = true;
  /// Reject instances with A_h = 0.
  bool require_nonzero_a_h = false;
};

struct SearchResult {
  ExtrinsicTriple<Rational> triple;
  QuadGrading<Rational> quad;
  std::vector<std::size_t> lstar, a, l;
  std::uint64_t seed = 0;
  std::size_t attempts = 0;
};

/// Random weak-triple search constrained to the l* + a + l bracket shape
/// [a,a] in l*, [l*, l* + a] = 0, [l*, l] in l*. theta, D and the metric are
/// block-respecting; the linear axioms are solved exactly and Jacobi plus the
/// remaining axioms are filtered with validate_triple. nullopt if the budget
/// runs out (always for budget 0).
std::optional<SearchResult> search_nilpotent_instance(const SearchOptions& options);

}  // namespace exsym
