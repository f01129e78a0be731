#include "lcps/random_text.hpp"

#include <stdexcept>

namespace lcps {

std::uint64_t mix_seed(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Text UniformTextSource::next(std::size_t n, std::uint32_t sigma) {
  if (n > 0 && sigma == 0) {
    throw std::invalid_argument("alphabet size must be at least 1 for non-empty strings");
  }
  Text out;
  out.reserve(n);
  for (std::size_t p = 0; p < n; ++p) {
    out.push_back(1 + engine_() % sigma);
  }
  return out;
}

Text random_text(std::uint64_t seed, std::size_t n, std::uint32_t sigma) {
  UniformTextSource source(seed);
  return source.next(n, sigma);
}

}  // namespace lcps
