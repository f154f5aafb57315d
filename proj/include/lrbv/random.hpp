#pragma once

#include "lrbv/lie_rinehart.hpp"
#include "lrbv/polynomial.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace lrbv {

// Bounds for randomized identity checks.
struct SampleBounds {
  int degree_bound = 3;
  int coeff_bound = 9;
  int max_terms = 4;
};

// Seeded source of random polynomial data. Same seed, same sequence.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, SampleBounds bounds = {});

  // Derive an independent stream for a named sub-check.
  static std::uint64_t derive_seed(std::uint64_t seed, std::string_view label);

  const SampleBounds& bounds() const { return bounds_; }

  int uniform(int lo, int hi);
  Poly poly(std::size_t nvars);
  Poly nonzero_poly(std::size_t nvars);
  LElement element(std::size_t rank, std::size_t nvars);

 private:
  std::mt19937_64 engine_;
  SampleBounds bounds_;
};

}  // namespace lrbv
