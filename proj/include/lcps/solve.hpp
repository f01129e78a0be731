#pragma once

#include <string>

#include "lcps/text.hpp"

namespace lcps {

enum class Algo { sparse, dp, brute };

// Maps "sparse" / "dp" / "brute" to an Algo; throws std::invalid_argument otherwise.
Algo algo_from_name(const std::string& name);
const char* algo_name(Algo algo);

// Runs the selected solver on (a, b).
LcpsResult solve_lcps(const Text& a, const Text& b, Algo algo);

}  // namespace lcps
