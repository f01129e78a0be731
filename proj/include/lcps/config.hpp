#pragma once

#include <cstdint>

namespace lcps {

// Byte budget applied to any dense table (DP tables, occurrence index
// tables). Defaults to 1 GiB; the LCPS_MEM_BUDGET environment variable
// (bytes) overrides it. Read once per process.
std::uint64_t mem_budget_bytes();

// Entry budget below which the sparse memo uses its dense backend instead of
// hash maps. Defaults to 1 << 26 entries; when LCPS_MEM_BUDGET is set, it is
// rescaled to bytes / sizeof(entry).
std::uint64_t memo_dense_entry_budget();

}  // namespace lcps
