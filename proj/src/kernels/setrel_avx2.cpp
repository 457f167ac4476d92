// setrel_avx2.cpp -- AVX2 table scans; compiled with -mavx2 for this file only
//
// Narrow tables (width 1, i.e. at most 64 states) are scanned four rows per
// vector. Wider tables are scanned one row at a time, four words per vector.

#include "omega/kernels.hpp"

#include <immintrin.h>

namespace omega::kernels {

namespace {

// Lane mask (one bit per 64-bit lane) of lanes that are all-zero.
inline int zero_lanes(__m256i v) {
  return _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(v, _mm256_setzero_si256())));
}

bool scan_width1(RowTest test, const std::uint64_t* rows, std::size_t n, std::uint64_t q) {
  const __m256i qv = _mm256_set1_epi64x(static_cast<long long>(q));
  std::size_t r = 0;
  for (; r + 4 <= n; r += 4) {
    const __m256i rv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + r));
    int hit = 0;
    switch (test) {
      case RowTest::kMeets:
        hit = zero_lanes(_mm256_and_si256(rv, qv)) != 0xF;
        break;
      case RowTest::kQuerySubsetRow:
        hit = zero_lanes(_mm256_andnot_si256(rv, qv)) != 0;
        break;
      case RowTest::kEqual:
        hit = zero_lanes(_mm256_xor_si256(rv, qv)) != 0;
        break;
      case RowTest::kRowSubsetQuery:
        hit = zero_lanes(_mm256_andnot_si256(qv, rv)) != 0;
        break;
      case RowTest::kRowNotSubsetQuery:
        hit = zero_lanes(_mm256_andnot_si256(qv, rv)) != 0xF;
        break;
    }
    if (hit) return true;
  }
  PackedRows tail{rows + r, n - r, 1};
  return any_row_scalar(test, tail, &q);
}

// Per-row test over `width` words. `acc` collects the bits whose presence
// decides the test.
bool row_wide(RowTest test, const std::uint64_t* row, const std::uint64_t* q, std::size_t width) {
  __m256i acc = _mm256_setzero_si256();
  std::uint64_t tail = 0;
  std::size_t i = 0;
  for (; i + 4 <= width; i += 4) {
    const __m256i rv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    const __m256i qv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(q + i));
    switch (test) {
      case RowTest::kMeets: acc = _mm256_or_si256(acc, _mm256_and_si256(rv, qv)); break;
      case RowTest::kQuerySubsetRow: acc = _mm256_or_si256(acc, _mm256_andnot_si256(rv, qv)); break;
      case RowTest::kEqual: acc = _mm256_or_si256(acc, _mm256_xor_si256(rv, qv)); break;
      case RowTest::kRowSubsetQuery:
      case RowTest::kRowNotSubsetQuery:
        acc = _mm256_or_si256(acc, _mm256_andnot_si256(qv, rv));
        break;
    }
  }
  for (; i < width; ++i) {
    switch (test) {
      case RowTest::kMeets: tail |= row[i] & q[i]; break;
      case RowTest::kQuerySubsetRow: tail |= q[i] & ~row[i]; break;
      case RowTest::kEqual: tail |= q[i] ^ row[i]; break;
      case RowTest::kRowSubsetQuery:
      case RowTest::kRowNotSubsetQuery: tail |= row[i] & ~q[i]; break;
    }
  }
  const bool nonzero = !_mm256_testz_si256(acc, acc) || tail != 0;
  switch (test) {
    case RowTest::kMeets:
    case RowTest::kRowNotSubsetQuery:
      return nonzero;
    default:
      return !nonzero;
  }
}

}  // namespace

bool any_row_avx2(RowTest test, PackedRows table, const std::uint64_t* query) {
  if (table.width == 1) return scan_width1(test, table.data, table.rows, query[0]);
  for (std::size_t r = 0; r < table.rows; ++r)
    if (row_wide(test, table.data + r * table.width, query, table.width)) return true;
  return false;
}

}  // namespace omega::kernels
