#include "lcps/solve.hpp"

#include <stdexcept>

#include "lcps/baselines.hpp"
#include "lcps/sparse.hpp"

namespace lcps {

Algo algo_from_name(const std::string& name) {
  if (name == "sparse") return Algo::sparse;
  if (name == "dp") return Algo::dp;
  if (name == "brute") return Algo::brute;
  throw std::invalid_argument("unknown algorithm: " + name);
}

const char* algo_name(Algo algo) {
  switch (algo) {
    case Algo::sparse: return "sparse";
    case Algo::dp: return "dp";
    case Algo::brute: return "brute";
  }
  throw std::invalid_argument("unknown algorithm value");
}

LcpsResult solve_lcps(const Text& a, const Text& b, Algo algo) {
  switch (algo) {
    case Algo::sparse: return lcps_sparse(a, b);
    case Algo::dp: return lcps_dp4(a, b);
    case Algo::brute: return lcps_exhaustive(a, b);
  }
  throw std::invalid_argument("unknown algorithm value");
}

}  // namespace lcps
