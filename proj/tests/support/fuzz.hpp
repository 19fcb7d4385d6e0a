#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "exsym/exsym.hpp"

namespace exsym::testing {

/// Seed of the committed acceptance run.
inline constexpr std::uint64_t kAcceptanceFuzzSeed = 20261015;

struct FuzzCase {
  ExtrinsicTriple<Rational> triple;
  std::string recipe;
};

/// Random candidate triples: direct sums of gallery and search pieces with
/// rescaled metrics, conjugated by random unimodular basis changes. A share of
/// candidates is deliberately broken, so callers must filter with validate_triple.
class TripleFuzzer {
 public:
  explicit TripleFuzzer(std::uint64_t seed, std::size_t max_dim = 9);

  FuzzCase next();

  std::size_t pool_size() const { return pieces_.size(); }

 private:
  Rational pick_scale();
  Matrix<Rational> unimodular(std::size_t n);

  std::mt19937_64 rng_;
  std::size_t max_dim_;
  std::vector<std::pair<std::string, ExtrinsicTriple<Rational>>> pieces_;
};

}  // namespace exsym::testing
