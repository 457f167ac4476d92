// setrel_scalar.cpp -- reference implementation of the table scans

#include "omega/kernels.hpp"

namespace omega::kernels {

namespace {

bool row_passes(RowTest test, const std::uint64_t* row, const std::uint64_t* q,
                std::size_t width) {
  switch (test) {
    case RowTest::kMeets:
      for (std::size_t i = 0; i < width; ++i)
        if ((row[i] & q[i]) != 0) return true;
      return false;
    case RowTest::kQuerySubsetRow:
      for (std::size_t i = 0; i < width; ++i)
        if ((q[i] & ~row[i]) != 0) return false;
      return true;
    case RowTest::kEqual:
      for (std::size_t i = 0; i < width; ++i)
        if (q[i] != row[i]) return false;
      return true;
    case RowTest::kRowSubsetQuery:
      for (std::size_t i = 0; i < width; ++i)
        if ((row[i] & ~q[i]) != 0) return false;
      return true;
    case RowTest::kRowNotSubsetQuery:
      for (std::size_t i = 0; i < width; ++i)
        if ((row[i] & ~q[i]) != 0) return true;
      return false;
  }
  return false;
}

}  // namespace

bool any_row_scalar(RowTest test, PackedRows table, const std::uint64_t* query) {
  for (std::size_t r = 0; r < table.rows; ++r)
    if (row_passes(test, table.data + r * table.width, query, table.width)) return true;
  return false;
}

}  // namespace omega::kernels
