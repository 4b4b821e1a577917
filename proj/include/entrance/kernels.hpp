#pragma once

// Data-parallel inner loops shared by the classifiers. Inputs are laid out
// column-major ("structure of arrays"): feature f of row i lives at
// columns[f * n + i]. Each variant vectorizes across rows and performs the
// per-row arithmetic in the same order as the scalar reference, so every
// variant produces bit-identical output.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace entrance::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view to_string(Isa isa);

struct KernelTable {
  Isa isa;

  // out[i] = sum_f (columns[f][i] - query[f])^2, accumulated from 0 in
  // ascending f.
  void (*squared_distances)(const double* columns, std::size_t n, std::size_t dims,
                            const double* query, double* out);

  // out[i] = bias + w[0] x[0][i] + w[1] x[1][i] + ..., left to right.
  void (*affine)(const double* columns, std::size_t n, std::size_t dims, const double* weights,
                 double bias, double* out);

  // out[i] = base + sum_f (log_norm[f] - (x[f][i] - mean[f])^2 * half_inv_var[f]),
  // left to right.
  void (*gaussian_loglik)(const double* columns, std::size_t n, std::size_t dims,
                          const double* means, const double* half_inv_var,
                          const double* log_norm, double base, double* out);
};

const KernelTable& scalar_table();

/// Table for `isa`, or nullptr when it is not compiled in or the CPU lacks it.
const KernelTable* table_for(Isa isa);

/// Variants usable on this machine, scalar first.
std::vector<Isa> available();

/// Best available variant; ENTRANCE_SIMD=scalar|avx2|neon overrides the
/// choice (falling back to scalar when the requested one is unavailable).
const KernelTable& active();

/// Transposes row-major values (n rows of `dims`) into the column layout.
std::vector<double> to_columns(std::span<const double> row_major, std::size_t dims);

}  // namespace entrance::kernels
