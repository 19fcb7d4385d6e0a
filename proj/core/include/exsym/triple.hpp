#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exsym/lie_algebra.hpp"

namespace exsym {

/// Index into the four-fold grading. The first sign is the theta eigenvalue,
/// the second the tau eigenvalue: PlusMinus is g_+^-.
enum class Part : std::size_t { PlusPlus = 0, PlusMinus = 1, MinusPlus = 2, MinusMinus = 3 };

inline constexpr std::array<Part, 4> kAllParts{Part::PlusPlus, Part::PlusMinus, Part::MinusPlus, Part::MinusMinus};

std::string_view part_name(Part p);

/// Joint eigenspaces of theta and tau = exp(pi D). Projectors are
/// (1 + s theta)/2 (1 + r tau)/2 for signs s, r.
template <class T>
struct FourGrading {
  Matrix<T> tau;
  std::array<Subspace<T>, 4> parts;
  std::array<Matrix<T>, 4> projectors;

  const Subspace<T>& operator[](Part p) const { return parts[static_cast<std::size_t>(p)]; }
  const Matrix<T>& projector(Part p) const { return projectors[static_cast<std::size_t>(p)]; }

  /// Normal space at the base point.
  const Subspace<T>& normal() const { return (*this)[Part::MinusPlus]; }
  /// Tangent space at the base point.
  const Subspace<T>& tangent() const { return (*this)[Part::MinusMinus]; }
};

/// A (weak) extrinsic symmetric triple: metric Lie algebra, involution theta and
/// derivation D. Construction does not validate; use validate_triple. The grading
/// is computed once at construction when theta^2 = 1 and D^3 = -D hold.
template <class T>
class ExtrinsicTriple {
 public:
  ExtrinsicTriple() = default;
  ExtrinsicTriple(MetricLieAlgebra<T> alg, Matrix<T> theta, Matrix<T> dmat, bool weak = false, std::string name = {});

  const MetricLieAlgebra<T>& alg() const noexcept { return alg_; }
  const Matrix<T>& theta() const noexcept { return theta_; }
  const Matrix<T>& dmat() const noexcept { return dmat_; }
  bool weak() const noexcept { return weak_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return alg_.dim(); }
  double tolerance() const noexcept { return alg_.tolerance(); }

  bool has_grading() const noexcept { return grading_.has_value(); }
  /// Throws InvalidTripleError if theta is not an involution or D^3 != -D.
  const FourGrading<T>& grading() const;

  ExtrinsicTriple with_name(std::string name) const {
    ExtrinsicTriple t(*this);
    t.name_ = std::move(name);
    return t;
  }

 private:
  MetricLieAlgebra<T> alg_;
  Matrix<T> theta_;
  Matrix<T> dmat_;
  bool weak_ = false;
  std::string name_;
  std::optional<FourGrading<T>> grading_;
};

/// Recomputes the grading, raising InvalidTripleError("theta involution" / "D cubic")
/// when the closed form tau = 1 + 2 D^2 does not apply.
template <class T>
FourGrading<T> grading(const ExtrinsicTriple<T>& t);

/// All algebra checks plus "theta involution", "theta automorphism", "theta isometry",
/// "D derivation", "D antisymmetric", "D theta anticommute", "D cubic",
/// "g++ = [g+-, g+-]" and "metric radical location".
template <class T>
ValidationReport validate_triple(const ExtrinsicTriple<T>& t);

/// g_-^+ = [g_+^-, g_-^-].
template <class T>
bool is_full(const ExtrinsicTriple<T>& t);

/// The kernel of the inner product. Raises InvalidTripleError if it is not central
/// or not contained in g_-^+.
template <class T>
Subspace<T> metric_radical(const ExtrinsicTriple<T>& t);

/// g / R with the induced bracket, metric, theta and D. The result is non-weak.
template <class T>
ExtrinsicTriple<T> quotient_triple(const ExtrinsicTriple<T>& t);

template <class T>
struct XiSolution {
  Vec<T> xi;
  /// Dimension of the affine solution space (the centre of g).
  std::size_t solution_dim = 0;
  /// Components of xi in g_+^+, g_+^-, g_-^+, g_-^- (indexed by Part).
  std::array<Vec<T>, 4> components;
};

/// Solves ad(xi) = D over all of g.
template <class T>
std::optional<XiSolution<T>> find_xi(const ExtrinsicTriple<T>& t);

/// Decomposition g = l* + a + l used by the quadratic-extension shape check.
template <class T>
struct QuadGrading {
  Subspace<T> lstar;
  Subspace<T> a;
  Subspace<T> l;
};

/// Builds a QuadGrading from basis index lists.
template <class T>
QuadGrading<T> quad_grading_from_indices(std::size_t dim, const std::vector<std::size_t>& lstar,
                                         const std::vector<std::size_t>& a, const std::vector<std::size_t>& l);

/// Checks the bracket shape [a,a] in l*, [l*, l* + a] = 0, [l*, l] in l*, theta/D
/// invariance of the three pieces, and then h in l* and (ad h)^2 = 0.
/// Throws Error(DimensionMismatch) if q is not a direct-sum decomposition of g.
template <class T>
ValidationReport check_quadratic_extension(const ExtrinsicTriple<T>& t, const QuadGrading<T>& q);

/// Orthogonal direct sum; the second summand's basis follows the first.
template <class T>
ExtrinsicTriple<T> direct_sum(const ExtrinsicTriple<T>& a, const ExtrinsicTriple<T>& b);

/// The triple restricted to a theta- and D-invariant subalgebra with the given
/// basis (columns). Throws InvalidTripleError if the span is not closed.
template <class T>
ExtrinsicTriple<T> restrict_triple(const ExtrinsicTriple<T>& t, const Matrix<T>& basis);

struct DecomposeOptions {
  std::size_t trials = 64;
  std::uint64_t seed = 0x5eed;
};

template <class T>
struct Decomposition {
  std::vector<ExtrinsicTriple<T>> blocks;
  /// Columns are the block bases, concatenated in block order, in coordinates of the input.
  Matrix<T> basis;
  std::uint64_t seed = 0;
  std::size_t trials_used = 0;
};

/// Heuristic splitting into orthogonal theta/D-invariant ideals. A single block
/// means no splitting was found within the budget, not that none exists.
template <class T>
Decomposition<T> decompose(const ExtrinsicTriple<T>& t, const DecomposeOptions& options = {});

ExtrinsicTriple<double> to_float(const ExtrinsicTriple<Rational>& t, double tolerance = kDefaultTolerance);

}  // namespace exsym
