// setrel_dispatch.cpp -- runtime selection between scan variants

#include "omega/kernels.hpp"

namespace omega::kernels {

#ifndef OMEGA_HAVE_AVX2
bool any_row_avx2(RowTest test, PackedRows table, const std::uint64_t* query) {
  return any_row_scalar(test, table, query);
}
#endif

namespace {

using ScanFn = bool (*)(RowTest, PackedRows, const std::uint64_t*);

ScanFn resolve() {
  return isa_available(Isa::kAvx2) ? &any_row_avx2 : &any_row_scalar;
}

const ScanFn g_scan = resolve();

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(OMEGA_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() { return g_scan == &any_row_avx2 ? Isa::kAvx2 : Isa::kScalar; }

std::string_view isa_name(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

bool any_row(RowTest test, PackedRows table, const std::uint64_t* query) {
  if (table.rows == 0) return false;
  return g_scan(test, table, query);
}

}  // namespace omega::kernels
