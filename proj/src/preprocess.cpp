#include "lcps/preprocess.hpp"

#include <algorithm>
#include <numeric>

#include "lcps/config.hpp"

namespace lcps {
namespace {

struct TaggedSymbol {
  Symbol sym;
  std::uint32_t pos;
  std::uint8_t source;  // 0 = first input, 1 = second input
};

// Stable LSD radix sort by symbol value. Base is at least 256, so byte
// alphabets sort in one pass; larger values take one extra pass per digit.
void radix_sort(std::vector<TaggedSymbol>& items) {
  if (items.empty()) return;
  Symbol max_sym = 0;
  for (const TaggedSymbol& it : items) max_sym = std::max(max_sym, it.sym);
  const std::uint64_t base = std::max<std::uint64_t>(256, items.size());
  std::vector<TaggedSymbol> scratch(items.size());
  std::vector<std::size_t> bucket(base);
  std::uint64_t divisor = 1;
  for (;;) {
    std::fill(bucket.begin(), bucket.end(), std::size_t{0});
    for (const TaggedSymbol& it : items) ++bucket[(it.sym / divisor) % base];
    std::size_t offset = 0;
    for (std::size_t d = 0; d < base; ++d) {
      const std::size_t count = bucket[d];
      bucket[d] = offset;
      offset += count;
    }
    for (const TaggedSymbol& it : items) scratch[bucket[(it.sym / divisor) % base]++] = it;
    items.swap(scratch);
    if (divisor > max_sym / base) break;
    divisor *= base;
  }
}

}  // namespace

ReducedInstance reduce_alphabet(const Text& a, const Text& b) {
  std::vector<TaggedSymbol> items;
  items.reserve(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    items.push_back({a[i], static_cast<std::uint32_t>(i), 0});
  for (std::size_t k = 0; k < b.size(); ++k)
    items.push_back({b[k], static_cast<std::uint32_t>(k), 1});
  radix_sort(items);

  ReducedInstance inst;
  inst.original_of.push_back(0);  // slot 0 unused

  // Per-position reduced symbol, 0 meaning "deleted".
  std::vector<std::uint32_t> red_a(a.size(), 0), red_b(b.size(), 0);
  std::size_t i = 0;
  while (i < items.size()) {
    std::size_t j = i;
    bool in_a = false, in_b = false;
    while (j < items.size() && items[j].sym == items[i].sym) {
      (items[j].source == 0 ? in_a : in_b) = true;
      ++j;
    }
    if (in_a && in_b) {
      ++inst.sigma;
      inst.original_of.push_back(items[i].sym);
      for (std::size_t t = i; t < j; ++t) {
        if (items[t].source == 0)
          red_a[items[t].pos] = inst.sigma;
        else
          red_b[items[t].pos] = inst.sigma;
      }
    }
    i = j;
  }

  for (std::size_t p = 0; p < red_a.size(); ++p) {
    if (red_a[p] != 0) {
      inst.a_hat.push_back(red_a[p]);
      inst.pos_map_a.push_back(static_cast<std::uint32_t>(p));
    }
  }
  for (std::size_t p = 0; p < red_b.size(); ++p) {
    if (red_b[p] != 0) {
      inst.b_hat.push_back(red_b[p]);
      inst.pos_map_b.push_back(static_cast<std::uint32_t>(p));
    }
  }
  return inst;
}

std::uint64_t count_matching_pairs(const ReducedInstance& inst) {
  std::vector<std::uint64_t> count_a(inst.sigma + 1, 0), count_b(inst.sigma + 1, 0);
  for (Symbol c : inst.a_hat) ++count_a[static_cast<std::size_t>(c)];
  for (Symbol c : inst.b_hat) ++count_b[static_cast<std::size_t>(c)];
  std::uint64_t total = 0;
  for (std::uint32_t c = 1; c <= inst.sigma; ++c) total += count_a[c] * count_b[c];
  return total;
}

namespace {

// succ[c][p] = smallest c-position > p; pred[c][p] = largest c-position < p.
// Rows cover query positions 0..len+1.
void fill_tables(const Text& s, std::uint32_t sigma, std::vector<std::uint32_t>& succ,
                 std::vector<std::uint32_t>& pred, std::vector<std::uint32_t>& rank,
                 std::vector<std::vector<std::uint32_t>>& occ) {
  const std::uint32_t len = static_cast<std::uint32_t>(s.size());
  const std::size_t width = len + 2;
  succ.assign(static_cast<std::size_t>(sigma) * width, OccurrenceIndex::kNone);
  pred.assign(static_cast<std::size_t>(sigma) * width, OccurrenceIndex::kNone);
  rank.assign(len + 1, 0);
  occ.assign(sigma + 1, {});

  std::vector<std::uint32_t> seen(sigma + 1, 0);
  for (std::uint32_t p = 1; p <= len; ++p) {
    const auto c = static_cast<std::uint32_t>(s[p - 1]);
    occ[c].push_back(p);
    rank[p] = ++seen[c];
  }
  for (std::uint32_t c = 1; c <= sigma; ++c) {
    std::uint32_t* srow = succ.data() + static_cast<std::size_t>(c - 1) * width;
    std::uint32_t* prow = pred.data() + static_cast<std::size_t>(c - 1) * width;
    for (std::uint32_t p = len + 1; p-- > 0;) {
      const bool next_is_c = p + 1 <= len && static_cast<std::uint32_t>(s[p]) == c;
      srow[p] = next_is_c ? p + 1 : srow[p + 1];
    }
    for (std::uint32_t p = 1; p <= len + 1; ++p) {
      const bool prev_is_c = p >= 2 && static_cast<std::uint32_t>(s[p - 2]) == c;
      prow[p] = prev_is_c ? p - 1 : prow[p - 1];
    }
  }
}

}  // namespace

OccurrenceIndex build_occurrence_index(const ReducedInstance& inst) {
  const std::uint64_t table_bytes =
      4ull * inst.sigma *
      (static_cast<std::uint64_t>(inst.a_hat.size()) + inst.b_hat.size() + 4) *
      sizeof(std::uint32_t);
  if (table_bytes > mem_budget_bytes())
    throw size_error("occurrence index tables exceed the memory budget");

  OccurrenceIndex idx;
  idx.sigma_ = inst.sigma;
  idx.len_a_ = static_cast<std::uint32_t>(inst.a_hat.size());
  idx.len_b_ = static_cast<std::uint32_t>(inst.b_hat.size());
  fill_tables(inst.a_hat, inst.sigma, idx.succ_a_, idx.pred_a_, idx.rank_a_, idx.occ_a_);
  fill_tables(inst.b_hat, inst.sigma, idx.succ_b_, idx.pred_b_, idx.rank_b_, idx.occ_b_);
  return idx;
}

}  // namespace lcps
