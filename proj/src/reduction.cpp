#include "lcps/reduction.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace lcps {

ReductionInstance build_reduction(const Text& a, const Text& b, const Text& c, const Text& d) {
  Symbol max_sym = 0;
  for (const Text* s : {&a, &b, &c, &d}) {
    for (Symbol v : *s) max_sym = std::max(max_sym, v);
  }
  if (max_sym == std::numeric_limits<Symbol>::max()) {
    throw std::invalid_argument("no fresh sentinel symbol available");
  }

  ReductionInstance inst;
  inst.sentinel = max_sym + 1;
  inst.z_len = std::max(a.size() + b.size(), c.size() + d.size()) + 1;
  inst.len_a = a.size();
  inst.len_b = b.size();
  inst.len_c = c.size();
  inst.len_d = d.size();

  inst.x.reserve(a.size() + inst.z_len + b.size());
  inst.x.insert(inst.x.end(), a.rbegin(), a.rend());
  inst.x.insert(inst.x.end(), inst.z_len, inst.sentinel);
  inst.x.insert(inst.x.end(), b.begin(), b.end());

  inst.y.reserve(c.size() + inst.z_len + d.size());
  inst.y.insert(inst.y.end(), c.rbegin(), c.rend());
  inst.y.insert(inst.y.end(), inst.z_len, inst.sentinel);
  inst.y.insert(inst.y.end(), d.begin(), d.end());
  return inst;
}

LcsResult extract_lcs4(const LcpsResult& result, const ReductionInstance& inst) {
  const std::size_t z = inst.z_len;
  if (result.witness.size() != result.length) {
    throw malformed_result_error("witness length disagrees with the reported length");
  }
  if (result.length < z) {
    throw malformed_result_error("palindrome shorter than the sentinel block");
  }
  if ((result.length - z) % 2 != 0) {
    throw malformed_result_error("palindrome length has the wrong parity");
  }

  const std::size_t t_len = (result.length - z) / 2;
  const Witness& w = result.witness;
  for (std::size_t p = 0; p < t_len; ++p) {
    if (w[p] == inst.sentinel || w[p] != w[w.size() - 1 - p]) {
      throw malformed_result_error("witness does not have the rev(T)-sentinels-T shape");
    }
  }
  for (std::size_t p = t_len; p < t_len + z; ++p) {
    if (w[p] != inst.sentinel) {
      throw malformed_result_error("witness sentinel block is not contiguous");
    }
  }

  LcsResult out;
  out.length = t_len;
  out.witness.assign(w.begin() + (t_len + z), w.end());
  return out;
}

LcsResult solve_4lcs_via_2lcps(const Text& a, const Text& b, const Text& c, const Text& d,
                               Algo algo) {
  ReductionInstance inst = build_reduction(a, b, c, d);
  LcpsResult lcps = solve_lcps(inst.x, inst.y, algo);
  LcsResult out = extract_lcs4(lcps, inst);
  for (const Text* s : {&a, &b, &c, &d}) {
    if (!is_subsequence(out.witness, *s)) {
      throw malformed_result_error("extracted subsequence is not common to all four inputs");
    }
  }
  return out;
}

}  // namespace lcps
