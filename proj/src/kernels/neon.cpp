#include <arm_neon.h>

#include "kernels_internal.hpp"

namespace entrance::kernels {

namespace {

void squared_distances(const double* columns, std::size_t n, std::size_t dims,
                       const double* query, double* out) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t f = 0; f < dims; ++f) {
      const float64x2_t diff = vsubq_f64(vld1q_f64(columns + f * n + i), vdupq_n_f64(query[f]));
      acc = vaddq_f64(acc, vmulq_f64(diff, diff));
    }
    vst1q_f64(out + i, acc);
  }
  detail::squared_distances_tail(columns, n, dims, query, out, i);
}

void affine(const double* columns, std::size_t n, std::size_t dims, const double* weights,
            double bias, double* out) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t acc = vdupq_n_f64(bias);
    for (std::size_t f = 0; f < dims; ++f) {
      acc = vaddq_f64(acc, vmulq_f64(vdupq_n_f64(weights[f]), vld1q_f64(columns + f * n + i)));
    }
    vst1q_f64(out + i, acc);
  }
  detail::affine_tail(columns, n, dims, weights, bias, out, i);
}

void gaussian_loglik(const double* columns, std::size_t n, std::size_t dims, const double* means,
                     const double* half_inv_var, const double* log_norm, double base,
                     double* out) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t acc = vdupq_n_f64(base);
    for (std::size_t f = 0; f < dims; ++f) {
      const float64x2_t diff = vsubq_f64(vld1q_f64(columns + f * n + i), vdupq_n_f64(means[f]));
      const float64x2_t quad = vmulq_f64(vmulq_f64(diff, diff), vdupq_n_f64(half_inv_var[f]));
      acc = vaddq_f64(acc, vsubq_f64(vdupq_n_f64(log_norm[f]), quad));
    }
    vst1q_f64(out + i, acc);
  }
  detail::gaussian_loglik_tail(columns, n, dims, means, half_inv_var, log_norm, base, out, i);
}

constexpr KernelTable kNeonTable{Isa::kNeon, squared_distances, affine, gaussian_loglik};

}  // namespace

const KernelTable& neon_table() { return kNeonTable; }

}  // namespace entrance::kernels
