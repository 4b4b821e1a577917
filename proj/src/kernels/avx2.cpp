#include <immintrin.h>

#include "kernels_internal.hpp"

namespace entrance::kernels {

namespace {

void squared_distances(const double* columns, std::size_t n, std::size_t dims,
                       const double* query, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t f = 0; f < dims; ++f) {
      const __m256d diff =
          _mm256_sub_pd(_mm256_loadu_pd(columns + f * n + i), _mm256_set1_pd(query[f]));
      acc = _mm256_add_pd(acc, _mm256_mul_pd(diff, diff));
    }
    _mm256_storeu_pd(out + i, acc);
  }
  detail::squared_distances_tail(columns, n, dims, query, out, i);
}

void affine(const double* columns, std::size_t n, std::size_t dims, const double* weights,
            double bias, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_set1_pd(bias);
    for (std::size_t f = 0; f < dims; ++f) {
      acc = _mm256_add_pd(
          acc, _mm256_mul_pd(_mm256_set1_pd(weights[f]), _mm256_loadu_pd(columns + f * n + i)));
    }
    _mm256_storeu_pd(out + i, acc);
  }
  detail::affine_tail(columns, n, dims, weights, bias, out, i);
}

void gaussian_loglik(const double* columns, std::size_t n, std::size_t dims, const double* means,
                     const double* half_inv_var, const double* log_norm, double base,
                     double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_set1_pd(base);
    for (std::size_t f = 0; f < dims; ++f) {
      const __m256d diff =
          _mm256_sub_pd(_mm256_loadu_pd(columns + f * n + i), _mm256_set1_pd(means[f]));
      const __m256d quad =
          _mm256_mul_pd(_mm256_mul_pd(diff, diff), _mm256_set1_pd(half_inv_var[f]));
      acc = _mm256_add_pd(acc, _mm256_sub_pd(_mm256_set1_pd(log_norm[f]), quad));
    }
    _mm256_storeu_pd(out + i, acc);
  }
  detail::gaussian_loglik_tail(columns, n, dims, means, half_inv_var, log_norm, base, out, i);
}

constexpr KernelTable kAvx2Table{Isa::kAvx2, squared_distances, affine, gaussian_loglik};

}  // namespace

const KernelTable& avx2_table() { return kAvx2Table; }

}  // namespace entrance::kernels
