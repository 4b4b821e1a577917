#include <cstdlib>
#include <string>

#include "entrance/kernels.hpp"
#include "kernels_internal.hpp"

namespace entrance::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(ENTRANCE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& choose() {
  const auto usable = available();
  if (const char* env = std::getenv("ENTRANCE_SIMD")) {
    const std::string want(env);
    for (auto isa : usable) {
      if (to_string(isa) == want) return *table_for(isa);
    }
    return scalar_table();
  }
  return *table_for(usable.back());
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

const KernelTable* table_for(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return &scalar_table();
    case Isa::kAvx2:
#if defined(ENTRANCE_HAVE_AVX2)
      if (cpu_has_avx2()) return &avx2_table();
#endif
      return nullptr;
    case Isa::kNeon:
#if defined(ENTRANCE_HAVE_NEON)
      return &neon_table();  // mandatory on AArch64
#else
      return nullptr;
#endif
  }
  return nullptr;
}

std::vector<Isa> available() {
  std::vector<Isa> out{Isa::kScalar};
  for (auto isa : {Isa::kAvx2, Isa::kNeon}) {
    if (table_for(isa) != nullptr) out.push_back(isa);
  }
  return out;
}

const KernelTable& active() {
  static const KernelTable& table = choose();
  return table;
}

std::vector<double> to_columns(std::span<const double> row_major, std::size_t dims) {
  const std::size_t n = dims == 0 ? 0 : row_major.size() / dims;
  std::vector<double> cols(row_major.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t f = 0; f < dims; ++f) cols[f * n + i] = row_major[i * dims + f];
  }
  return cols;
}

}  // namespace entrance::kernels
