#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lcps {

// Symbols are plain non-negative integers. Byte input maps every byte to its
// value; token input parses decimal integers. Reductions mint fresh sentinel
// symbols as max+1, hence the wide type.
using Symbol = std::uint64_t;

// A string over Symbol; the empty text is legal everywhere.
using Text = std::vector<Symbol>;

// A Text expected to read the same forward and backward, expressed in the
// original (pre-reduction) alphabet.
using Witness = Text;

// Counters describing one solver run.
struct SolverStats {
  std::uint64_t matches = 0;       // matching position pairs between the inputs
  std::uint32_t sigma = 0;         // distinct symbols occurring in both inputs
  std::uint64_t probes = 0;        // maximal-sub-rectangle lookups while solving
  std::uint64_t memo_hits = 0;     // probes answered by an already-stored value
  std::uint64_t memo_entries = 0;  // rectangles assigned a final value
  std::uint64_t elapsed_ns = 0;
};

struct LcpsResult {
  std::uint64_t length = 0;
  Witness witness;  // witness.size() == length always
  SolverStats stats;
};

// An input exceeds an enumeration guard or a dense-table memory budget.
class size_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A solver state is structurally impossible; indicates a bug, not bad input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A result handed to an extraction step lacks its guaranteed shape.
class malformed_result_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Text reverse(const Text& t);

bool is_palindrome(const Text& t);

// True iff s can be obtained by deleting zero or more symbols of t.
// Single greedy left-to-right scan.
bool is_subsequence(const Text& s, const Text& t);

// True iff w is a palindrome and a subsequence of both a and b.
bool verify_witness(const Witness& w, const Text& a, const Text& b);

Text text_from_bytes(std::string_view bytes);

// Inverse of text_from_bytes; throws std::invalid_argument if any symbol
// exceeds 255.
std::string to_byte_string(const Text& t);

}  // namespace lcps
