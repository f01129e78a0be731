#include "lcps/text.hpp"

#include <algorithm>

namespace lcps {

Text reverse(const Text& t) {
  return Text(t.rbegin(), t.rend());
}

bool is_palindrome(const Text& t) {
  std::size_t lo = 0;
  std::size_t hi = t.size();
  while (lo + 1 < hi) {
    if (t[lo] != t[hi - 1]) return false;
    ++lo;
    --hi;
  }
  return true;
}

bool is_subsequence(const Text& s, const Text& t) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < t.size() && i < s.size(); ++j) {
    if (t[j] == s[i]) ++i;
  }
  return i == s.size();
}

bool verify_witness(const Witness& w, const Text& a, const Text& b) {
  return is_palindrome(w) && is_subsequence(w, a) && is_subsequence(w, b);
}

Text text_from_bytes(std::string_view bytes) {
  Text t;
  t.reserve(bytes.size());
  for (unsigned char ch : bytes) t.push_back(static_cast<Symbol>(ch));
  return t;
}

std::string to_byte_string(const Text& t) {
  std::string s;
  s.reserve(t.size());
  for (Symbol sym : t) {
    if (sym > 255) throw std::invalid_argument("symbol out of byte range");
    s.push_back(static_cast<char>(static_cast<unsigned char>(sym)));
  }
  return s;
}

}  // namespace lcps
