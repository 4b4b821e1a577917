#include "entrance/kernels.hpp"

#include "kernels_internal.hpp"

namespace entrance::kernels {

namespace {

void squared_distances(const double* columns, std::size_t n, std::size_t dims,
                       const double* query, double* out) {
  detail::squared_distances_tail(columns, n, dims, query, out, 0);
}

void affine(const double* columns, std::size_t n, std::size_t dims, const double* weights,
            double bias, double* out) {
  detail::affine_tail(columns, n, dims, weights, bias, out, 0);
}

void gaussian_loglik(const double* columns, std::size_t n, std::size_t dims, const double* means,
                     const double* half_inv_var, const double* log_norm, double base,
                     double* out) {
  detail::gaussian_loglik_tail(columns, n, dims, means, half_inv_var, log_norm, base, out, 0);
}

constexpr KernelTable kScalarTable{Isa::kScalar, squared_distances, affine, gaussian_loglik};

}  // namespace

const KernelTable& scalar_table() { return kScalarTable; }

}  // namespace entrance::kernels
