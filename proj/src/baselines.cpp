#include "lcps/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>

#include "lcps/config.hpp"
#include "lcps/preprocess.hpp"

namespace lcps {
namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t ns_since(Clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
}

void fill_instance_stats(const Text& a, const Text& b, SolverStats& stats) {
  ReducedInstance inst = reduce_alphabet(a, b);
  stats.sigma = inst.sigma;
  stats.matches = count_matching_pairs(inst);
}

// Sorted distinct symbols of s[i..j] (1-based closed interval).
std::vector<Symbol> window_symbols(const Text& s, std::uint32_t i, std::uint32_t j) {
  std::vector<Symbol> out(s.begin() + (i - 1), s.begin() + j);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

LcpsResult lcps_exhaustive(const Text& a, const Text& b) {
  constexpr std::size_t kMaxLen = 14;
  if (a.size() > kMaxLen || b.size() > kMaxLen) {
    throw size_error("exhaustive solver limited to inputs of at most " +
                     std::to_string(kMaxLen) + " symbols");
  }
  const auto start = Clock::now();

  const Text& shorter = a.size() <= b.size() ? a : b;
  const Text& other = a.size() <= b.size() ? b : a;

  // The empty subsequence is always a valid witness.
  Text best;
  const std::size_t k = shorter.size();
  Text cand;
  cand.reserve(k);
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    cand.clear();
    for (std::size_t p = 0; p < k; ++p) {
      if (mask & (1u << p)) cand.push_back(shorter[p]);
    }
    if (cand.size() < best.size()) continue;
    if (!is_palindrome(cand)) continue;
    if (!is_subsequence(cand, other)) continue;
    if (cand.size() > best.size() || (cand.size() == best.size() && cand < best)) {
      best = cand;
    }
  }

  LcpsResult result;
  result.length = static_cast<std::uint64_t>(best.size());
  result.witness = std::move(best);
  fill_instance_stats(a, b, result.stats);
  result.stats.elapsed_ns = ns_since(start);
  return result;
}

DpTable4 dp4_table(const Text& a, const Text& b) {
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  const std::size_t cell_count = m * m * n * n;
  if (m > 0 && n > 0 &&
      cell_count / (m * m) / n != n) {
    throw size_error("interval table dimensions overflow");
  }
  if (cell_count > mem_budget_bytes() / sizeof(std::uint32_t)) {
    throw size_error("interval table exceeds the memory budget");
  }

  DpTable4 t;
  t.m_ = static_cast<std::uint32_t>(m);
  t.n_ = static_cast<std::uint32_t>(n);
  t.cells_.assign(cell_count, 0);

  auto cell = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) -> std::uint32_t& {
    return t.cells_[(((i - 1) * m + (j - 1)) * n + (k - 1)) * n + (l - 1)];
  };

  for (std::size_t wa = 0; wa < m; ++wa) {
    for (std::size_t i = 1; i + wa <= m; ++i) {
      const std::size_t j = i + wa;
      for (std::size_t wb = 0; wb < n; ++wb) {
        for (std::size_t k = 1; k + wb <= n; ++k) {
          const std::size_t l = k + wb;
          std::uint32_t v = std::max(
              std::max(t.value(i + 1, j, k, l), t.value(i, j - 1, k, l)),
              std::max(t.value(i, j, k + 1, l), t.value(i, j, k, l - 1)));
          if (a[i - 1] == a[j - 1] && a[i - 1] == b[k - 1] && a[i - 1] == b[l - 1]) {
            if (i == j || k == l) {
              v = std::max(v, 1u);
            } else {
              v = std::max(v, 2u + t.value(i + 1, j - 1, k + 1, l - 1));
            }
          }
          cell(i, j, k, l) = v;
        }
      }
    }
  }
  return t;
}

namespace {

Witness dp4_backtrack(const Text& a, const Text& b, const DpTable4& t) {
  std::uint32_t i = 1, j = t.len_a(), k = 1, l = t.len_b();
  std::uint32_t v = t.value(i, j, k, l);

  std::vector<Symbol> left;
  std::optional<Symbol> center;
  while (v > 0) {
    // Candidate symbols present in both windows, smallest first.
    std::vector<Symbol> in_a = window_symbols(a, i, j);
    std::vector<Symbol> in_b = window_symbols(b, k, l);
    std::vector<Symbol> cands;
    std::set_intersection(in_a.begin(), in_a.end(), in_b.begin(), in_b.end(),
                          std::back_inserter(cands));

    bool advanced = false;
    for (Symbol c : cands) {
      if (v == 1) {
        center = c;
        v = 0;
        advanced = true;
        break;
      }
      // Extreme occurrences of c inside the current windows.
      std::uint32_t ai = i, aj = j, bk = k, bl = l;
      while (a[ai - 1] != c) ++ai;
      while (a[aj - 1] != c) --aj;
      while (b[bk - 1] != c) ++bk;
      while (b[bl - 1] != c) --bl;
      if (ai < aj && bk < bl && t.value(ai + 1, aj - 1, bk + 1, bl - 1) + 2 == v) {
        left.push_back(c);
        i = ai + 1;
        j = aj - 1;
        k = bk + 1;
        l = bl - 1;
        v -= 2;
        advanced = true;
        break;
      }
    }
    if (!advanced) throw internal_error("interval-table backtrack found no attaining symbol");
  }

  Witness w = left;
  if (center) w.push_back(*center);
  w.insert(w.end(), left.rbegin(), left.rend());
  return w;
}

}  // namespace

LcpsResult lcps_dp4(const Text& a, const Text& b) {
  const auto start = Clock::now();
  DpTable4 t = dp4_table(a, b);

  LcpsResult result;
  result.length = t.value(1, t.len_a(), 1, t.len_b());
  result.witness = dp4_backtrack(a, b, t);
  fill_instance_stats(a, b, result.stats);
  result.stats.elapsed_ns = ns_since(start);
  return result;
}

LcsResult lcs4_dp(const Text& a, const Text& b, const Text& c, const Text& d) {
  const std::size_t da = a.size() + 1, db = b.size() + 1, dc = c.size() + 1, dd = d.size() + 1;
  const std::size_t cell_count = da * db * dc * dd;
  if (cell_count / da / db / dc != dd) {
    throw size_error("prefix table dimensions overflow");
  }
  if (cell_count > mem_budget_bytes() / sizeof(std::uint32_t)) {
    throw size_error("prefix table exceeds the memory budget");
  }

  std::vector<std::uint32_t> cells(cell_count, 0);
  auto cell = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) -> std::uint32_t& {
    return cells[((i * db + j) * dc + k) * dd + l];
  };

  for (std::size_t i = 1; i < da; ++i) {
    for (std::size_t j = 1; j < db; ++j) {
      for (std::size_t k = 1; k < dc; ++k) {
        for (std::size_t l = 1; l < dd; ++l) {
          std::uint32_t v = std::max(std::max(cell(i - 1, j, k, l), cell(i, j - 1, k, l)),
                                     std::max(cell(i, j, k - 1, l), cell(i, j, k, l - 1)));
          if (a[i - 1] == b[j - 1] && a[i - 1] == c[k - 1] && a[i - 1] == d[l - 1]) {
            v = std::max(v, cell(i - 1, j - 1, k - 1, l - 1) + 1);
          }
          cell(i, j, k, l) = v;
        }
      }
    }
  }

  LcsResult result;
  result.length = cell(da - 1, db - 1, dc - 1, dd - 1);

  // Walk back from the full prefixes, emitting matched symbols.
  std::size_t i = da - 1, j = db - 1, k = dc - 1, l = dd - 1;
  Text rev;
  while (i > 0 && j > 0 && k > 0 && l > 0 && cell(i, j, k, l) > 0) {
    const std::uint32_t v = cell(i, j, k, l);
    if (a[i - 1] == b[j - 1] && a[i - 1] == c[k - 1] && a[i - 1] == d[l - 1] &&
        v == cell(i - 1, j - 1, k - 1, l - 1) + 1) {
      rev.push_back(a[i - 1]);
      --i, --j, --k, --l;
    } else if (cell(i - 1, j, k, l) == v) {
      --i;
    } else if (cell(i, j - 1, k, l) == v) {
      --j;
    } else if (cell(i, j, k - 1, l) == v) {
      --k;
    } else {
      --l;
    }
  }
  result.witness.assign(rev.rbegin(), rev.rend());
  return result;
}

std::uint64_t lcs_k_exhaustive(const std::vector<Text>& strings) {
  if (strings.empty()) throw size_error("k-string LCS needs at least one string");
  constexpr std::size_t kMaxLen = 12;

  std::size_t shortest = 0;
  for (std::size_t s = 1; s < strings.size(); ++s) {
    if (strings[s].size() < strings[shortest].size()) shortest = s;
  }
  const Text& base = strings[shortest];
  if (base.size() > kMaxLen) {
    throw size_error("exhaustive k-string LCS limited to a shortest string of at most " +
                     std::to_string(kMaxLen) + " symbols");
  }

  std::uint64_t best = 0;
  Text cand;
  cand.reserve(base.size());
  for (std::uint32_t mask = 0; mask < (1u << base.size()); ++mask) {
    cand.clear();
    for (std::size_t p = 0; p < base.size(); ++p) {
      if (mask & (1u << p)) cand.push_back(base[p]);
    }
    if (cand.size() <= best) continue;
    bool common = true;
    for (const Text& s : strings) {
      if (!is_subsequence(cand, s)) {
        common = false;
        break;
      }
    }
    if (common) best = cand.size();
  }
  return best;
}

}  // namespace lcps
