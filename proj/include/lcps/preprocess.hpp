#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lcps/text.hpp"

namespace lcps {

// The two inputs with their symbols rank-compressed to [1, sigma], keeping
// only symbols that occur in both strings. original_of maps a reduced symbol
// back to the original one; pos_map_* map reduced positions (0-based) to
// original positions (0-based).
struct ReducedInstance {
  Text a_hat;
  Text b_hat;
  std::uint32_t sigma = 0;
  std::vector<Symbol> original_of;  // indexed 1..sigma, slot 0 unused
  std::vector<std::uint32_t> pos_map_a;
  std::vector<std::uint32_t> pos_map_b;
};

// Rank-compresses both inputs over the symbols they share. Symbols private to
// one input are deleted from it; the survivors are renumbered densely as
// [1, sigma] in increasing order of original symbol value. Bucket-sort passes
// keep the running time linear for symbol values polynomial in the input
// length.
ReducedInstance reduce_alphabet(const Text& a, const Text& b);

// M = sum over symbols c of (#occurrences of c in a_hat) * (#occurrences of c
// in b_hat). Never materializes the pair list.
std::uint64_t count_matching_pairs(const ReducedInstance& inst);

// Per-symbol occurrence lists plus O(1) predecessor/successor tables over the
// 1-based positions of a_hat and b_hat, and per-position occurrence ranks.
// Query positions range over [0, length+1]; both extremes are legal virtual
// corners, so "no occurrence" is reported with the out-of-band marker kNone.
class OccurrenceIndex {
 public:
  static constexpr std::uint32_t kNone = 0xFFFFFFFFu;

  std::uint32_t sigma() const { return sigma_; }
  std::uint32_t len_a() const { return len_a_; }
  std::uint32_t len_b() const { return len_b_; }

  // Smallest c-position strictly greater than p, or kNone.
  std::uint32_t succ_a(std::uint32_t c, std::uint32_t p) const {
    return succ_a_[row(c, p, len_a_)];
  }
  std::uint32_t succ_b(std::uint32_t c, std::uint32_t p) const {
    return succ_b_[row(c, p, len_b_)];
  }

  // Largest c-position strictly smaller than p, or kNone.
  std::uint32_t pred_a(std::uint32_t c, std::uint32_t p) const {
    return pred_a_[row(c, p, len_a_)];
  }
  std::uint32_t pred_b(std::uint32_t c, std::uint32_t p) const {
    return pred_b_[row(c, p, len_b_)];
  }

  // 1-based rank of a position among occurrences of its own symbol.
  std::uint32_t rank_a(std::uint32_t i) const { return rank_a_[i]; }
  std::uint32_t rank_b(std::uint32_t k) const { return rank_b_[k]; }

  // Strictly increasing 1-based occurrence positions of c.
  const std::vector<std::uint32_t>& occurrences_a(std::uint32_t c) const {
    return occ_a_[c];
  }
  const std::vector<std::uint32_t>& occurrences_b(std::uint32_t c) const {
    return occ_b_[c];
  }

 private:
  friend OccurrenceIndex build_occurrence_index(const ReducedInstance&);

  static std::size_t row(std::uint32_t c, std::uint32_t p, std::uint32_t len) {
    return static_cast<std::size_t>(c - 1) * (len + 2) + p;
  }

  std::uint32_t sigma_ = 0;
  std::uint32_t len_a_ = 0;
  std::uint32_t len_b_ = 0;
  std::vector<std::vector<std::uint32_t>> occ_a_, occ_b_;  // [0] empty
  std::vector<std::uint32_t> succ_a_, pred_a_, succ_b_, pred_b_;
  std::vector<std::uint32_t> rank_a_, rank_b_;  // [0] unused
};

// Construction is O(sigma * (len_a + len_b)) time and space; throws
// size_error if the tables would exceed the dense-table byte budget.
OccurrenceIndex build_occurrence_index(const ReducedInstance& inst);

}  // namespace lcps
