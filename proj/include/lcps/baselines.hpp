#pragma once

#include <cstdint>
#include <vector>

#include "lcps/text.hpp"

namespace lcps {

// Independent reference solvers. These are deliberately simple and are used
// to cross-check the sparse solver and each other at small sizes.

// Enumerates every subsequence of the shorter input, keeps the palindromic
// ones that are subsequences of the other, and returns a longest
// (ties: lexicographically smallest). Guard: both inputs at most 14 symbols.
LcpsResult lcps_exhaustive(const Text& a, const Text& b);

// Interval table over (i, j, k, l): the LCPS length of a[i..j] vs b[k..l],
// 1-based closed intervals, 0 for empty ones. Values are monotone under
// widening and capped by the shorter interval length.
class DpTable4 {
 public:
  std::uint32_t len_a() const { return m_; }
  std::uint32_t len_b() const { return n_; }

  std::uint32_t value(std::uint32_t i, std::uint32_t j, std::uint32_t k,
                      std::uint32_t l) const {
    if (i > j || k > l) return 0;
    return cells_[(((static_cast<std::size_t>(i) - 1) * m_ + (j - 1)) * n_ + (k - 1)) * n_ +
                  (l - 1)];
  }

 private:
  friend DpTable4 dp4_table(const Text& a, const Text& b);

  std::uint32_t m_ = 0, n_ = 0;
  std::vector<std::uint32_t> cells_;
};

// Fills the interval table in increasing A-width, then B-width order: each
// cell is the max of its four one-step interval shrinkings, plus the
// equal-outer-symbol case (1 on a collapsed axis, else 2 + the inner cell).
// Throws size_error if the table would exceed the dense-table byte budget.
DpTable4 dp4_table(const Text& a, const Text& b);

// Exact LCPS via the interval table, with a witness recovered by repeatedly
// taking the smallest symbol whose extreme occurrences attain the value.
LcpsResult lcps_dp4(const Text& a, const Text& b);

struct LcsResult {
  std::uint64_t length = 0;
  Text witness;
};

// Classical 4-string LCS over prefixes with match/skip transitions.
LcsResult lcs4_dp(const Text& a, const Text& b, const Text& c, const Text& d);

// Enumerates subsequences of the shortest string; returns the longest length
// common to all. Guard: shortest string at most 12 symbols; at least one
// string required.
std::uint64_t lcs_k_exhaustive(const std::vector<Text>& strings);

}  // namespace lcps
