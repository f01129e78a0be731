#pragma once

#include <cstdint>
#include <random>

#include "lcps/text.hpp"

namespace lcps {

// Deterministic cross-platform seed mixer (splitmix64 step); used to derive
// independent per-case seeds from a base seed.
std::uint64_t mix_seed(std::uint64_t& state);

// Streams uniform texts over the alphabet [1, sigma] from one seeded
// mt19937_64 engine: each symbol is 1 + (next() mod sigma). Both the engine
// and the mapping are fixed by the standard, so output is reproducible
// everywhere.
class UniformTextSource {
 public:
  explicit UniformTextSource(std::uint64_t seed) : engine_(seed) {}

  // Throws std::invalid_argument when n > 0 and sigma == 0.
  Text next(std::size_t n, std::uint32_t sigma);

 private:
  std::mt19937_64 engine_;
};

// Single text drawn from a fresh engine seeded with `seed`.
Text random_text(std::uint64_t seed, std::size_t n, std::uint32_t sigma);

}  // namespace lcps
