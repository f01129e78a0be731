#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "lcps/baselines.hpp"
#include "lcps/preprocess.hpp"
#include "lcps/random_text.hpp"
#include "lcps/text.hpp"
#include "oracles.hpp"

using lcps::OccurrenceIndex;
using lcps::ReducedInstance;
using lcps::Text;

namespace {

Text T(const std::string& s) { return lcps::text_from_bytes(s); }

// Reduced text translated back to original symbols.
Text mapped_back(const Text& hat, const ReducedInstance& inst) {
  Text out;
  for (lcps::Symbol c : hat) out.push_back(inst.original_of[static_cast<std::size_t>(c)]);
  return out;
}

}  // namespace

TEST_CASE("reduce_alphabet: disjoint alphabets vanish") {
  const ReducedInstance inst = lcps::reduce_alphabet(T("abc"), T("def"));
  CHECK(inst.sigma == 0);
  CHECK(inst.a_hat.empty());
  CHECK(inst.b_hat.empty());
  CHECK(inst.pos_map_a.empty());
  CHECK(inst.pos_map_b.empty());
}

TEST_CASE("reduce_alphabet: shared symbols are ranked by value") {
  const ReducedInstance inst = lcps::reduce_alphabet(T("aba"), T("aab"));
  CHECK(inst.sigma == 2);
  CHECK(inst.a_hat == Text{1, 2, 1});
  CHECK(inst.b_hat == Text{1, 1, 2});
  CHECK(inst.original_of[1] == 'a');
  CHECK(inst.original_of[2] == 'b');
  CHECK(inst.pos_map_a == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(inst.pos_map_b == std::vector<std::uint32_t>{0, 1, 2});
}

TEST_CASE("reduce_alphabet: private symbols are deleted") {
  const ReducedInstance inst = lcps::reduce_alphabet(T("axbyc"), T("azbwc"));
  CHECK(inst.sigma == 3);
  CHECK(inst.a_hat == Text{1, 2, 3});
  CHECK(inst.b_hat == Text{1, 2, 3});
  CHECK(inst.pos_map_a == std::vector<std::uint32_t>{0, 2, 4});
  CHECK(inst.pos_map_b == std::vector<std::uint32_t>{0, 2, 4});
  // removal preserves the answer
  CHECK(lcps::lcps_exhaustive(T("axbyc"), T("azbwc")).length ==
        lcps::lcps_exhaustive(mapped_back(inst.a_hat, inst), mapped_back(inst.b_hat, inst))
            .length);
}

TEST_CASE("reduce_alphabet: replay reproduces the kept positions") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 200; ++it) {
    const Text a = lcps::random_text(rng(), it % 14, 1 + it % 5);
    const Text b = lcps::random_text(rng(), (it * 7) % 14, 1 + it % 5);
    const ReducedInstance inst = lcps::reduce_alphabet(a, b);

    REQUIRE(inst.a_hat.size() == inst.pos_map_a.size());
    REQUIRE(inst.b_hat.size() == inst.pos_map_b.size());
    for (std::size_t p = 0; p < inst.a_hat.size(); ++p) {
      if (p > 0) CHECK(inst.pos_map_a[p - 1] < inst.pos_map_a[p]);
      CHECK(a[inst.pos_map_a[p]] == inst.original_of[inst.a_hat[p]]);
    }
    for (std::size_t p = 0; p < inst.b_hat.size(); ++p) {
      if (p > 0) CHECK(inst.pos_map_b[p - 1] < inst.pos_map_b[p]);
      CHECK(b[inst.pos_map_b[p]] == inst.original_of[inst.b_hat[p]]);
    }

    // every reduced symbol occurs on both sides; sigma bounds hold
    std::vector<bool> in_a(inst.sigma + 1, false), in_b(inst.sigma + 1, false);
    for (lcps::Symbol c : inst.a_hat) in_a[c] = true;
    for (lcps::Symbol c : inst.b_hat) in_b[c] = true;
    for (std::uint32_t c = 1; c <= inst.sigma; ++c) {
      CHECK(in_a[c]);
      CHECK(in_b[c]);
    }
    CHECK(inst.sigma <= std::min(inst.a_hat.size(), inst.b_hat.size()));
    CHECK(inst.a_hat.size() <= a.size());
    CHECK(inst.b_hat.size() <= b.size());
  }
}

TEST_CASE("reduce_alphabet preserves the LCPS length") {
  std::mt19937_64 rng(22);
  for (int it = 0; it < 150; ++it) {
    const Text a = lcps::random_text(rng(), it % 11, 1 + it % 6);
    const Text b = lcps::random_text(rng(), (it * 3) % 11, 1 + it % 6);
    const ReducedInstance inst = lcps::reduce_alphabet(a, b);
    CHECK(lcps::lcps_exhaustive(a, b).length ==
          lcps::lcps_exhaustive(mapped_back(inst.a_hat, inst), mapped_back(inst.b_hat, inst))
              .length);
  }
}

TEST_CASE("count_matching_pairs: examples") {
  CHECK(lcps::count_matching_pairs(lcps::reduce_alphabet(T("abc"), T("def"))) == 0);
  CHECK(lcps::count_matching_pairs(lcps::reduce_alphabet(T("aba"), T("aab"))) == 5);
  CHECK(lcps::count_matching_pairs(lcps::reduce_alphabet(T("aaa"), T("aaa"))) == 9);
}

TEST_CASE("count_matching_pairs equals the double-loop count") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 200; ++it) {
    const Text a = lcps::random_text(rng(), it % 16, 1 + it % 4);
    const Text b = lcps::random_text(rng(), (it * 5) % 16, 1 + it % 4);
    const ReducedInstance inst = lcps::reduce_alphabet(a, b);
    // private symbols never match, so the original-pair count carries over
    CHECK(lcps::count_matching_pairs(inst) == test_oracle::matching_pairs(a, b));
    if (inst.sigma > 0) {
      CHECK(std::max(inst.a_hat.size(), inst.b_hat.size()) <=
            lcps::count_matching_pairs(inst));
    }
  }
}

TEST_CASE("occurrence index: worked example lookups") {
  const ReducedInstance inst = lcps::reduce_alphabet(T("aba"), T("aab"));
  const OccurrenceIndex idx = lcps::build_occurrence_index(inst);
  CHECK(idx.succ_a(1, 0) == 1);
  CHECK(idx.succ_a(1, 1) == 3);
  CHECK(idx.succ_a(1, 3) == OccurrenceIndex::kNone);
  CHECK(idx.pred_a(2, 4) == 2);
  CHECK(idx.pred_a(2, 2) == OccurrenceIndex::kNone);
  CHECK(idx.rank_a(1) == 1);
  CHECK(idx.rank_a(2) == 1);
  CHECK(idx.rank_a(3) == 2);
  CHECK(idx.occurrences_a(1) == std::vector<std::uint32_t>{1, 3});
  CHECK(idx.occurrences_b(2) == std::vector<std::uint32_t>{3});
}

TEST_CASE("occurrence index agrees with linear scans everywhere") {
  std::mt19937_64 rng(24);
  for (int it = 0; it < 120; ++it) {
    const Text a = lcps::random_text(rng(), it % 30, 1 + it % 5);
    const Text b = lcps::random_text(rng(), (it * 11) % 30, 1 + it % 5);
    const ReducedInstance inst = lcps::reduce_alphabet(a, b);
    const OccurrenceIndex idx = lcps::build_occurrence_index(inst);

    const auto len_a = static_cast<std::uint32_t>(inst.a_hat.size());
    const auto len_b = static_cast<std::uint32_t>(inst.b_hat.size());
    std::size_t occ_total_a = 0, occ_total_b = 0;
    for (std::uint32_t c = 1; c <= inst.sigma; ++c) {
      occ_total_a += idx.occurrences_a(c).size();
      occ_total_b += idx.occurrences_b(c).size();
      for (std::uint32_t p = 0; p <= len_a + 1; ++p) {
        CHECK(idx.succ_a(c, p) == test_oracle::scan_succ(inst.a_hat, c, p));
        CHECK(idx.pred_a(c, p) == test_oracle::scan_pred(inst.a_hat, c, p));
        if (idx.succ_a(c, p) != OccurrenceIndex::kNone) CHECK(idx.succ_a(c, p) > p);
        if (idx.pred_a(c, p) != OccurrenceIndex::kNone) CHECK(idx.pred_a(c, p) < p);
      }
      for (std::uint32_t p = 0; p <= len_b + 1; ++p) {
        CHECK(idx.succ_b(c, p) == test_oracle::scan_succ(inst.b_hat, c, p));
        CHECK(idx.pred_b(c, p) == test_oracle::scan_pred(inst.b_hat, c, p));
      }
    }
    CHECK(occ_total_a == len_a);
    CHECK(occ_total_b == len_b);
    for (std::uint32_t p = 1; p <= len_a; ++p) {
      CHECK(idx.rank_a(p) == test_oracle::scan_rank(inst.a_hat, p));
    }
    for (std::uint32_t p = 1; p <= len_b; ++p) {
      CHECK(idx.rank_b(p) == test_oracle::scan_rank(inst.b_hat, p));
    }
  }
}

TEST_CASE("occurrence index: empty instance") {
  const ReducedInstance inst = lcps::reduce_alphabet(T(""), T(""));
  const OccurrenceIndex idx = lcps::build_occurrence_index(inst);
  CHECK(idx.sigma() == 0);
  CHECK(idx.len_a() == 0);
  CHECK(idx.len_b() == 0);
}

TEST_CASE("occurrence index: oversized tables are rejected up front") {
  // ~70k distinct shared symbols would need tens of gigabytes of tables.
  Text a(70000), b(70000);
  std::iota(a.begin(), a.end(), 1);
  std::iota(b.begin(), b.end(), 1);
  const ReducedInstance inst = lcps::reduce_alphabet(a, b);
  CHECK(inst.sigma == 70000);
  CHECK_THROWS_AS(lcps::build_occurrence_index(inst), lcps::size_error);
}

TEST_CASE("reduce_alphabet handles huge symbol values") {
  const Text a{1ull << 40, 5, 1ull << 40, 99999999999ull};
  const Text b{99999999999ull, 1ull << 40, 7};
  const ReducedInstance inst = lcps::reduce_alphabet(a, b);
  CHECK(inst.sigma == 2);
  CHECK(inst.original_of[1] == 99999999999ull);  // 99999999999 < 2^40
  CHECK(inst.original_of[2] == (1ull << 40));
  CHECK(inst.a_hat == Text{2, 2, 1});
  CHECK(inst.b_hat == Text{1, 2});
}
