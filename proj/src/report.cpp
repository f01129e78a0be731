#include "lcps/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace lcps {

RunReport make_report(const std::string& algorithm, const LcpsResult& result, std::size_t n_a,
                      std::size_t n_b, bool include_witness) {
  RunReport r;
  r.algorithm = algorithm;
  r.length = result.length;
  if (include_witness) r.witness = result.witness;
  r.n_a = n_a;
  r.n_b = n_b;
  r.sigma = result.stats.sigma;
  r.matches = result.stats.matches;
  r.probes = result.stats.probes;
  r.memo_hits = result.stats.memo_hits;
  r.memo_entries = result.stats.memo_entries;
  r.elapsed_ns = result.stats.elapsed_ns;
  return r;
}

std::string report_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["algorithm"] = report.algorithm;
  j["length"] = report.length;
  if (report.witness) j["witness"] = *report.witness;
  j["n_a"] = report.n_a;
  j["n_b"] = report.n_b;
  j["sigma"] = report.sigma;
  j["matches"] = report.matches;
  j["probes"] = report.probes;
  j["memo_hits"] = report.memo_hits;
  j["memo_entries"] = report.memo_entries;
  j["elapsed_ns"] = report.elapsed_ns;
  return j.dump();
}

std::string report_line(const RunReport& report) {
  std::string line = std::to_string(report.length);
  if (report.witness && !report.witness->empty()) {
    line += ' ';
    line += witness_to_display(*report.witness);
  }
  return line;
}

std::string witness_to_display(const Witness& witness) {
  const bool fits_bytes =
      std::all_of(witness.begin(), witness.end(), [](Symbol v) { return v <= 255; });
  if (fits_bytes) return to_byte_string(witness);
  std::string out;
  for (std::size_t p = 0; p < witness.size(); ++p) {
    if (p > 0) out += ' ';
    out += std::to_string(witness[p]);
  }
  return out;
}

}  // namespace lcps
