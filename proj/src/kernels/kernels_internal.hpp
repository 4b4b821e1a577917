#pragma once

#include <cstddef>

#include "entrance/kernels.hpp"

namespace entrance::kernels {

#if defined(ENTRANCE_HAVE_AVX2)
const KernelTable& avx2_table();
#endif
#if defined(ENTRANCE_HAVE_NEON)
const KernelTable& neon_table();
#endif

namespace detail {

// Scalar reference loops starting at row `first`; the SIMD variants reuse
// them for the remainder rows.

inline void squared_distances_tail(const double* columns, std::size_t n, std::size_t dims,
                                   const double* query, double* out, std::size_t first) {
  for (std::size_t i = first; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t f = 0; f < dims; ++f) {
      const double diff = columns[f * n + i] - query[f];
      acc = acc + diff * diff;
    }
    out[i] = acc;
  }
}

inline void affine_tail(const double* columns, std::size_t n, std::size_t dims,
                        const double* weights, double bias, double* out, std::size_t first) {
  for (std::size_t i = first; i < n; ++i) {
    double acc = bias;
    for (std::size_t f = 0; f < dims; ++f) acc = acc + weights[f] * columns[f * n + i];
    out[i] = acc;
  }
}

inline void gaussian_loglik_tail(const double* columns, std::size_t n, std::size_t dims,
                                 const double* means, const double* half_inv_var,
                                 const double* log_norm, double base, double* out,
                                 std::size_t first) {
  for (std::size_t i = first; i < n; ++i) {
    double acc = base;
    for (std::size_t f = 0; f < dims; ++f) {
      const double diff = columns[f * n + i] - means[f];
      acc = acc + (log_norm[f] - diff * diff * half_inv_var[f]);
    }
    out[i] = acc;
  }
}

}  // namespace detail
}  // namespace entrance::kernels
