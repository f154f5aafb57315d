#include "lrbv/random.hpp"

namespace lrbv {

RandomSource::RandomSource(std::uint64_t seed, SampleBounds bounds) : engine_(seed), bounds_(bounds) {}

std::uint64_t RandomSource::derive_seed(std::uint64_t seed, std::string_view label) {
  // FNV-1a over the label, mixed with the seed (splitmix64 finalizer).
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull + h;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int RandomSource::uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

Poly RandomSource::poly(std::size_t nvars) {
  Poly p(nvars);
  const int terms = uniform(1, bounds_.max_terms);
  for (int t = 0; t < terms; ++t) {
    Exponents e(nvars, 0);
    if (nvars > 0) {
      const int deg = uniform(0, bounds_.degree_bound);
      for (int d = 0; d < deg; ++d) e[static_cast<std::size_t>(uniform(0, static_cast<int>(nvars) - 1))] += 1;
    }
    int c = uniform(-bounds_.coeff_bound, bounds_.coeff_bound - 1);
    if (c >= 0) ++c;  // skip zero
    p += Poly::monomial(std::move(e), Rational(c));
  }
  return p;
}

Poly RandomSource::nonzero_poly(std::size_t nvars) {
  for (;;) {
    Poly p = poly(nvars);
    if (!p.is_zero()) return p;
  }
}

LElement RandomSource::element(std::size_t rank, std::size_t nvars) {
  LElement x = LElement::zero(rank, nvars);
  for (auto& c : x.coeffs) c = poly(nvars);
  return x;
}

}  // namespace lrbv
