#include "lcps/config.hpp"

#include <cstdint>
#include <cstdlib>
#include <optional>

namespace lcps {
namespace {

std::optional<std::uint64_t> env_budget() {
  const char* raw = std::getenv("LCPS_MEM_BUDGET");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') return std::nullopt;
  return static_cast<std::uint64_t>(v);
}

}  // namespace

std::uint64_t mem_budget_bytes() {
  static const std::uint64_t value = env_budget().value_or(1ull << 30);
  return value;
}

std::uint64_t memo_dense_entry_budget() {
  static const std::uint64_t value = [] {
    if (auto bytes = env_budget()) return *bytes / sizeof(std::uint32_t);
    return std::uint64_t{1} << 26;
  }();
  return value;
}

}  // namespace lcps
