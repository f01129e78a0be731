#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lcps/text.hpp"

namespace lcps {

// One solver run, flattened for machine-readable output. Field names in the
// JSON form are part of the tool's interface and must stay stable.
struct RunReport {
  std::string algorithm;
  std::uint64_t length = 0;
  std::optional<Witness> witness;
  std::uint64_t n_a = 0;
  std::uint64_t n_b = 0;
  std::uint32_t sigma = 0;
  std::uint64_t matches = 0;
  std::uint64_t probes = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t memo_entries = 0;
  std::uint64_t elapsed_ns = 0;
};

RunReport make_report(const std::string& algorithm, const LcpsResult& result, std::size_t n_a,
                      std::size_t n_b, bool include_witness);

// One JSON object on a single line, fields in declaration order; the witness
// is a symbol array and is omitted entirely when not requested.
std::string report_json(const RunReport& report);

// "length[ witness-as-tokens]" human-readable form.
std::string report_line(const RunReport& report);

// Witness rendered for humans: bytes when every symbol fits a printable-safe
// byte value, otherwise space-separated decimal tokens.
std::string witness_to_display(const Witness& witness);

}  // namespace lcps
