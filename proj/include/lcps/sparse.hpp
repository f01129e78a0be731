#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "lcps/preprocess.hpp"
#include "lcps/text.hpp"

namespace lcps {

// An ordered corner pair on the (a_hat position) x (b_hat position) grid.
// Corners are exclusive: the interior is a_lo < i < a_hi, b_lo < k < b_hi.
// Strict ordering a_lo < a_hi and b_lo < b_hi always holds; rectangles inside
// the recursion additionally have all four corner symbols equal.
struct Rectangle {
  std::uint32_t a_lo = 0;
  std::uint32_t b_lo = 0;
  std::uint32_t a_hi = 0;
  std::uint32_t b_hi = 0;

  bool operator==(const Rectangle&) const = default;
};

enum class ProbeKind {
  empty,       // some axis has no occurrence strictly inside
  degenerate,  // both axes non-empty, at least one collapsed to a single spot
  proper,      // two distinct extreme occurrences on both axes
};

// Result of locating the extreme occurrences of one symbol strictly inside a
// rectangle. For degenerate and proper probes, rect holds the extremes found
// (for degenerate ones the collapsed axis has equal corners).
struct SubRectProbe {
  ProbeKind kind = ProbeKind::empty;
  Rectangle rect;
};

// Locates the unique maximal sub-rectangle of symbol c strictly inside r with
// two successor and two predecessor lookups. O(1).
SubRectProbe maximal_subrectangle(const Rectangle& r, std::uint32_t c,
                                  const OccurrenceIndex& idx);

// Sum over symbols c of (occurrences in a_hat * occurrences in b_hat)^2 --
// the total key space of the per-symbol memo tables. Saturates at the
// uint64 maximum.
std::uint64_t memo_key_space(const OccurrenceIndex& idx);

// Per-symbol tables keyed by the occurrence ranks of a rectangle's four
// corners, holding the solved interior length of each rectangle. Entries are
// write-once; rewriting one is an internal error. The root rectangle has no
// associated symbol and its value lives in a separate slot.
//
// Backend choice: a dense table realizing O(1) lookups when the full key
// space fits the entry budget, otherwise per-symbol hash maps that only
// allocate touched keys. Both are semantically identical.
class MemoStore {
 public:
  static constexpr std::uint32_t kUnprocessed = 0xFFFFFFFFu;

  using RankKey = std::array<std::uint32_t, 4>;  // a_lo, b_lo, a_hi, b_hi ranks

  MemoStore(const OccurrenceIndex& idx, std::uint64_t dense_entry_budget);

  std::uint32_t lookup(std::uint32_t c, const RankKey& key) const;
  void store(std::uint32_t c, const RankKey& key, std::uint32_t value);

  std::uint32_t root() const { return root_; }
  void set_root(std::uint32_t value);

  bool is_dense() const { return dense_; }
  std::uint64_t key_space() const { return key_space_; }

 private:
  std::size_t dense_index(std::uint32_t c, const RankKey& key) const;
  static std::uint64_t pack(const RankKey& key);

  bool dense_ = false;
  std::uint64_t key_space_ = 0;
  std::uint32_t root_ = kUnprocessed;
  std::vector<std::uint32_t> occ_count_a_, occ_count_b_;  // indexed by symbol
  std::vector<std::uint64_t> offset_;                     // dense backend
  std::vector<std::uint32_t> table_;
  std::vector<std::unordered_map<std::uint64_t, std::uint32_t>> maps_;
};

struct SparseOptions {
  std::uint64_t dense_entry_budget;  // memo backend switch point, in entries
};

// Runs the rectangle recursion from the virtual root <(0,0),(m+1,n+1)> with
// an explicit work stack and fills memo with every solved rectangle. Returns
// the root value, which is the LCPS length of the reduced instance.
//
// Each expanded rectangle probes all sigma symbols exactly once: an empty
// probe contributes 0, a degenerate one contributes 1 (a lone palindrome
// center), and a proper one contributes 2 + the solved interior value.
// Probes that find an already-stored rectangle reuse its value instead of
// recursing. Counters in stats cover this solving phase.
std::uint32_t solve_nesting(const OccurrenceIndex& idx, MemoStore& memo,
                            SolverStats& stats);

// Walks the solved recursion from the root, choosing at every step the
// smallest symbol whose contribution attains the stored value, and emits the
// witness in the original alphabet. Throws internal_error if the memo is
// inconsistent.
Witness reconstruct_witness(const ReducedInstance& inst, const OccurrenceIndex& idx,
                            const MemoStore& memo);

// Solve + reconstruct for a reduced instance. The options overload lets
// callers pin the memo backend.
LcpsResult solve_sparse(const ReducedInstance& inst, const OccurrenceIndex& idx);
LcpsResult solve_sparse(const ReducedInstance& inst, const OccurrenceIndex& idx,
                        const SparseOptions& options);

// Full pipeline: reduce the alphabet, build the occurrence index, solve.
LcpsResult lcps_sparse(const Text& a, const Text& b);

}  // namespace lcps
