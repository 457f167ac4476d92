// kernels.hpp -- batched set-relation scans over packed bitset rows
//
// An acceptance table is stored as `rows` bitsets of `width` 64-bit words
// laid out contiguously. The scans answer "does some row stand in relation
// `test` to the query set", which is the inner loop of every acceptance
// check. Scalar and AVX2 variants exist; any_row() picks one at startup.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace omega::kernels {

enum class RowTest {
  kMeets,              // row ∩ query ≠ ∅
  kQuerySubsetRow,     // query ⊆ row
  kEqual,              // query = row
  kRowSubsetQuery,     // row ⊆ query
  kRowNotSubsetQuery,  // row ⊄ query
};

struct PackedRows {
  const std::uint64_t* data = nullptr;
  std::size_t rows = 0;
  std::size_t width = 0;
};

enum class Isa { kScalar, kAvx2 };

bool any_row_scalar(RowTest test, PackedRows table, const std::uint64_t* query);
bool any_row_avx2(RowTest test, PackedRows table, const std::uint64_t* query);

/// True if the running CPU can execute the given variant.
bool isa_available(Isa isa);
Isa active_isa();
std::string_view isa_name(Isa isa);

/// Dispatched entry point.
bool any_row(RowTest test, PackedRows table, const std::uint64_t* query);

}  // namespace omega::kernels
