#include "lcps/sparse.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

#include "lcps/config.hpp"

namespace lcps {

SubRectProbe maximal_subrectangle(const Rectangle& r, std::uint32_t c,
                                  const OccurrenceIndex& idx) {
  const std::uint32_t a_lo = idx.succ_a(c, r.a_lo);
  const std::uint32_t a_hi = idx.pred_a(c, r.a_hi);
  const std::uint32_t b_lo = idx.succ_b(c, r.b_lo);
  const std::uint32_t b_hi = idx.pred_b(c, r.b_hi);
  if (a_lo == OccurrenceIndex::kNone || a_hi == OccurrenceIndex::kNone ||
      b_lo == OccurrenceIndex::kNone || b_hi == OccurrenceIndex::kNone ||
      a_lo > a_hi || b_lo > b_hi) {
    return {ProbeKind::empty, {}};
  }
  const Rectangle found{a_lo, b_lo, a_hi, b_hi};
  if (a_lo == a_hi || b_lo == b_hi) return {ProbeKind::degenerate, found};
  return {ProbeKind::proper, found};
}

namespace {

std::uint64_t saturating_key_space(const std::vector<std::uint32_t>& count_a,
                                   const std::vector<std::uint32_t>& count_b,
                                   std::uint32_t sigma) {
  unsigned __int128 total = 0;
  for (std::uint32_t c = 1; c <= sigma; ++c) {
    const unsigned __int128 pairs =
        static_cast<unsigned __int128>(count_a[c]) * count_b[c];
    total += pairs * pairs;
  }
  constexpr std::uint64_t cap = 0xFFFFFFFFFFFFFFFFull;
  return total > cap ? cap : static_cast<std::uint64_t>(total);
}

}  // namespace

std::uint64_t memo_key_space(const OccurrenceIndex& idx) {
  std::vector<std::uint32_t> count_a(idx.sigma() + 1), count_b(idx.sigma() + 1);
  for (std::uint32_t c = 1; c <= idx.sigma(); ++c) {
    count_a[c] = static_cast<std::uint32_t>(idx.occurrences_a(c).size());
    count_b[c] = static_cast<std::uint32_t>(idx.occurrences_b(c).size());
  }
  return saturating_key_space(count_a, count_b, idx.sigma());
}

MemoStore::MemoStore(const OccurrenceIndex& idx, std::uint64_t dense_entry_budget) {
  const std::uint32_t sigma = idx.sigma();
  occ_count_a_.assign(sigma + 1, 0);
  occ_count_b_.assign(sigma + 1, 0);
  for (std::uint32_t c = 1; c <= sigma; ++c) {
    occ_count_a_[c] = static_cast<std::uint32_t>(idx.occurrences_a(c).size());
    occ_count_b_[c] = static_cast<std::uint32_t>(idx.occurrences_b(c).size());
  }
  key_space_ = saturating_key_space(occ_count_a_, occ_count_b_, sigma);
  dense_ = key_space_ <= dense_entry_budget;
  if (dense_) {
    offset_.assign(sigma + 1, 0);
    std::uint64_t running = 0;
    for (std::uint32_t c = 1; c <= sigma; ++c) {
      offset_[c] = running;
      const std::uint64_t pairs =
          static_cast<std::uint64_t>(occ_count_a_[c]) * occ_count_b_[c];
      running += pairs * pairs;
    }
    table_.assign(running, kUnprocessed);
  } else {
    maps_.resize(sigma + 1);
  }
}

std::size_t MemoStore::dense_index(std::uint32_t c, const RankKey& key) const {
  const std::uint64_t na = occ_count_a_[c];
  const std::uint64_t nb = occ_count_b_[c];
  const std::uint64_t flat = (((key[0] - 1) * nb + (key[1] - 1)) * na + (key[2] - 1)) * nb +
                             (key[3] - 1);
  return static_cast<std::size_t>(offset_[c] + flat);
}

std::uint64_t MemoStore::pack(const RankKey& key) {
  return (static_cast<std::uint64_t>(key[0]) << 48) |
         (static_cast<std::uint64_t>(key[1]) << 32) |
         (static_cast<std::uint64_t>(key[2]) << 16) | key[3];
}

std::uint32_t MemoStore::lookup(std::uint32_t c, const RankKey& key) const {
  if (dense_) return table_[dense_index(c, key)];
  const auto& m = maps_[c];
  const auto it = m.find(pack(key));
  return it == m.end() ? kUnprocessed : it->second;
}

void MemoStore::store(std::uint32_t c, const RankKey& key, std::uint32_t value) {
  if (dense_) {
    std::uint32_t& slot = table_[dense_index(c, key)];
    if (slot != kUnprocessed) throw internal_error("memo entry rewritten");
    slot = value;
    return;
  }
  const auto [it, inserted] = maps_[c].emplace(pack(key), value);
  if (!inserted) throw internal_error("memo entry rewritten");
}

void MemoStore::set_root(std::uint32_t value) {
  if (root_ != kUnprocessed) throw internal_error("root value rewritten");
  root_ = value;
}

namespace {

MemoStore::RankKey rank_key(const Rectangle& r, const OccurrenceIndex& idx) {
  return {idx.rank_a(r.a_lo), idx.rank_b(r.b_lo), idx.rank_a(r.a_hi),
          idx.rank_b(r.b_hi)};
}

struct Frame {
  Rectangle rect;
  std::uint32_t symbol = 0;  // 0 marks the root
  std::uint32_t next_symbol = 1;
  std::uint32_t best = 0;
  MemoStore::RankKey key{};
};

Rectangle root_rectangle(const OccurrenceIndex& idx) {
  return {0, 0, idx.len_a() + 1, idx.len_b() + 1};
}

}  // namespace

std::uint32_t solve_nesting(const OccurrenceIndex& idx, MemoStore& memo,
                            SolverStats& stats) {
  const std::uint32_t sigma = idx.sigma();
  std::vector<Frame> stack;
  stack.push_back(Frame{root_rectangle(idx), 0, 1, 0, {}});
  std::uint32_t returned = 0;
  bool have_return = false;
  while (!stack.empty()) {
    Frame& frame = stack.back();
    if (have_return) {
      // A child finished; its stored value feeds this frame as a nested pair.
      frame.best = std::max(frame.best, returned + 2);
      have_return = false;
    }
    bool pushed = false;
    while (frame.next_symbol <= sigma) {
      const std::uint32_t c = frame.next_symbol++;
      const SubRectProbe probe = maximal_subrectangle(frame.rect, c, idx);
      ++stats.probes;
      if (probe.kind == ProbeKind::empty) continue;
      if (probe.kind == ProbeKind::degenerate) {
        frame.best = std::max(frame.best, 1u);
        continue;
      }
      const MemoStore::RankKey key = rank_key(probe.rect, idx);
      const std::uint32_t seen = memo.lookup(c, key);
      if (seen != MemoStore::kUnprocessed) {
        ++stats.memo_hits;
        frame.best = std::max(frame.best, seen + 2);
        continue;
      }
      stack.push_back(Frame{probe.rect, c, 1, 0, key});
      pushed = true;
      break;
    }
    if (pushed) continue;
    if (frame.symbol == 0)
      memo.set_root(frame.best);
    else
      memo.store(frame.symbol, frame.key, frame.best);
    ++stats.memo_entries;
    returned = frame.best;
    have_return = true;
    stack.pop_back();
  }
  return memo.root();
}

Witness reconstruct_witness(const ReducedInstance& inst, const OccurrenceIndex& idx,
                            const MemoStore& memo) {
  if (memo.root() == MemoStore::kUnprocessed)
    throw internal_error("witness requested before solving");
  Rectangle cur = root_rectangle(idx);
  std::uint32_t remaining = memo.root();
  std::vector<std::uint32_t> left;
  std::optional<std::uint32_t> center;
  while (remaining > 0) {
    bool advanced = false;
    for (std::uint32_t c = 1; c <= idx.sigma() && !advanced; ++c) {
      const SubRectProbe probe = maximal_subrectangle(cur, c, idx);
      if (probe.kind == ProbeKind::empty) continue;
      if (probe.kind == ProbeKind::degenerate) {
        if (remaining == 1) {
          center = c;
          remaining = 0;
          advanced = true;
        }
        continue;
      }
      const std::uint32_t stored = memo.lookup(c, rank_key(probe.rect, idx));
      if (stored == MemoStore::kUnprocessed)
        throw internal_error("interior rectangle left unsolved");
      if (stored + 2 == remaining) {
        left.push_back(c);
        cur = probe.rect;
        remaining = stored;
        advanced = true;
      }
    }
    if (!advanced) throw internal_error("no symbol attains the stored value");
  }
  Witness w;
  w.reserve(2 * left.size() + (center ? 1 : 0));
  for (std::uint32_t c : left) w.push_back(inst.original_of[c]);
  if (center) w.push_back(inst.original_of[*center]);
  for (auto it = left.rbegin(); it != left.rend(); ++it)
    w.push_back(inst.original_of[*it]);
  return w;
}

LcpsResult solve_sparse(const ReducedInstance& inst, const OccurrenceIndex& idx,
                        const SparseOptions& options) {
  // Memo keys pack each occurrence rank into 16 bits.
  if (idx.len_a() >= 0xFFFF || idx.len_b() >= 0xFFFF)
    throw size_error("reduced instance too large for the sparse solver");
  const auto start = std::chrono::steady_clock::now();
  LcpsResult result;
  result.stats.sigma = inst.sigma;
  result.stats.matches = count_matching_pairs(inst);
  MemoStore memo(idx, options.dense_entry_budget);
  result.length = solve_nesting(idx, memo, result.stats);
  result.witness = reconstruct_witness(inst, idx, memo);
  const auto stop = std::chrono::steady_clock::now();
  result.stats.elapsed_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
  return result;
}

LcpsResult solve_sparse(const ReducedInstance& inst, const OccurrenceIndex& idx) {
  return solve_sparse(inst, idx, SparseOptions{memo_dense_entry_budget()});
}

LcpsResult lcps_sparse(const Text& a, const Text& b) {
  const auto start = std::chrono::steady_clock::now();
  const ReducedInstance inst = reduce_alphabet(a, b);
  const OccurrenceIndex idx = build_occurrence_index(inst);
  LcpsResult result = solve_sparse(inst, idx);
  const auto stop = std::chrono::steady_clock::now();
  result.stats.elapsed_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
  return result;
}

}  // namespace lcps
