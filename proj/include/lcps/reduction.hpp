#pragma once

#include <cstddef>

#include "lcps/baselines.hpp"
#include "lcps/solve.hpp"
#include "lcps/text.hpp"

namespace lcps {

// Four-string LCS is solved by palindromizing: x = rev(a)·Z·b, y = rev(c)·Z·d
// where Z repeats a fresh sentinel symbol often enough that any LCPS of (x, y)
// must swallow Z whole and therefore has the shape rev(T)·Z·T for an LCS T.
struct ReductionInstance {
  Text x, y;
  Symbol sentinel = 0;
  std::size_t z_len = 0;
  std::size_t len_a = 0, len_b = 0, len_c = 0, len_d = 0;
};

// sentinel = 1 + max symbol across inputs (1 when all inputs are empty);
// z_len = max(|a|+|b|, |c|+|d|) + 1.
ReductionInstance build_reduction(const Text& a, const Text& b, const Text& c, const Text& d);

// Recovers (LCS length, witness T) from an LCPS result for (inst.x, inst.y).
// Throws malformed_result_error unless the witness has the guaranteed shape
// rev(T) · sentinel^z_len · T.
LcsResult extract_lcs4(const LcpsResult& result, const ReductionInstance& inst);

// build_reduction -> chosen 2-LCPS solver -> extract_lcs4, then checks the
// witness against all four inputs.
LcsResult solve_4lcs_via_2lcps(const Text& a, const Text& b, const Text& c, const Text& d,
                               Algo algo);

}  // namespace lcps
