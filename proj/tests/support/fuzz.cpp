#include "fuzz.hpp"

#include <algorithm>
#include <optional>

#include "builders.hpp"

namespace exsym::testing {

namespace {

std::optional<SearchResult> search(std::array<std::size_t, 3> dims, std::uint64_t seed, bool nonzero) {
  SearchOptions o;
  o.dims = dims;
  o.seed = seed;
  o.budget = 50;
  o.require_nonzero_a_h = nonzero;
  return search_nilpotent_instance(o);
}

}  // namespace

TripleFuzzer::TripleFuzzer(std::uint64_t seed, std::size_t max_dim) : rng_(seed), max_dim_(max_dim) {
  pieces_.emplace_back("sphere(1)", sphere_triple(1));
  pieces_.emplace_back("sphere(2)", sphere_triple(2));
  pieces_.emplace_back("sl2", sl2_triple());
  pieces_.emplace_back("flat(1)", flat_triple(1));
  pieces_.emplace_back("flat(2)", flat_triple(2));
  pieces_.emplace_back("cotangent_so3", cotangent_so3_triple());
  pieces_.emplace_back("normal_line", normal_line());
  for (std::uint64_t s : {1, 2, 3}) {
    if (auto r = search({1, 2, 1}, s, false)) pieces_.emplace_back("search121/" + std::to_string(s), r->triple);
  }
  if (auto r = search({3, 0, 3}, 7, true)) pieces_.emplace_back("search303/7", r->triple);
}

Rational TripleFuzzer::pick_scale() {
  static const long num[] = {1, -1, 2, -2, 1, -1};
  static const long den[] = {1, 1, 1, 1, 2, 2};
  std::uniform_int_distribution<int> pick(0, 5);
  const int i = pick(rng_);
  return q(num[i], den[i]);
}

Matrix<Rational> TripleFuzzer::unimodular(std::size_t n) {
  std::uniform_int_distribution<int> entry(-1, 1);
  Matrix<Rational> lower = Matrix<Rational>::identity(n);
  Matrix<Rational> upper = Matrix<Rational>::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = entry(rng_);
      upper(j, i) = entry(rng_);
    }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng_);
  const Matrix<Rational> lu = lower * upper;
  Matrix<Rational> p(n, n);
  for (std::size_t c = 0; c < n; ++c) p.set_column(c, lu.column(perm[c]));
  return p;
}

FuzzCase TripleFuzzer::next() {
  std::uniform_int_distribution<std::size_t> count(1, 3);
  std::uniform_int_distribution<std::size_t> which(0, pieces_.size() - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  const std::size_t k = count(rng_);
  std::optional<ExtrinsicTriple<Rational>> t;
  std::string recipe;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& [name, piece] = pieces_[which(rng_)];
    if (t && t->dim() + piece.dim() > max_dim_) continue;
    const Rational c = pick_scale();
    auto scaled_piece = with_gram(piece, piece.alg().gram() * c);
    recipe += (recipe.empty() ? "" : " + ") + name + "*" + format_rational(c);
    t = t ? direct_sum(*t, scaled_piece) : scaled_piece;
  }

  if (coin(rng_) < 0.7) {
    t = transform_triple(*t, unimodular(t->dim()));
    recipe += " | basis change";
  }

  if (coin(rng_) < 0.15) {
    const std::size_t n = t->dim();
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    switch (std::uniform_int_distribution<int>(0, 2)(rng_)) {
      case 0:
        t = with_dmat(*t, t->dmat() * Rational(2));
        recipe += " | D doubled";
        break;
      case 1: {
        auto g = t->alg().gram();
        const std::size_t a = idx(rng_);
        const std::size_t b = (a + 1) % n;
        g(a, b) += 1;
        t = with_gram(*t, g);
        recipe += " | gram perturbed";
        break;
      }
      default: {
        auto theta = t->theta();
        const std::size_t a = idx(rng_);
        for (std::size_t c = 0; c < n; ++c) theta(a, c) = -theta(a, c);
        t = ExtrinsicTriple<Rational>(t->alg(), theta, t->dmat(), t->weak(), t->name());
        recipe += " | theta row flipped";
        break;
      }
    }
  }
  return {t->with_name(recipe), recipe};
}

}  // namespace exsym::testing
