#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>

#include "entrance/kernels.hpp"

using namespace entrance::kernels;

namespace {

std::vector<double> random_values(std::size_t n, std::mt19937_64& gen) {
  std::normal_distribution<double> dist(0.0, 10.0);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(gen);
  return v;
}

void check_bitwise(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(std::bit_cast<std::uint64_t>(a[i]) == std::bit_cast<std::uint64_t>(b[i]));
  }
}

}  // namespace

TEST_CASE("dispatcher") {
  const auto isas = available();
  REQUIRE_FALSE(isas.empty());
  CHECK(isas.front() == Isa::kScalar);
  CHECK(std::find(isas.begin(), isas.end(), active().isa) != isas.end());
  CHECK(table_for(Isa::kScalar) == &scalar_table());
  for (auto isa : isas) MESSAGE("kernel variant available: " << to_string(isa));
  MESSAGE("active kernel variant: " << to_string(active().isa));
}

TEST_CASE("to_columns transposes") {
  const std::vector<double> rows{1, 2, 3, 4, 5, 6};  // 2 rows x 3
  CHECK(to_columns(rows, 3) == std::vector<double>{1, 4, 2, 5, 3, 6});
  CHECK(to_columns(rows, 2) == std::vector<double>{1, 3, 5, 2, 4, 6});
}

TEST_CASE("scalar kernels match the textbook formulas") {
  std::mt19937_64 gen(1);
  const std::size_t n = 9, d = 3;
  const auto cols = random_values(n * d, gen);
  const auto q = random_values(d, gen);
  const auto w = random_values(d, gen);
  const std::vector<double> var{0.5, 2.0, 7.0};
  std::vector<double> hiv(d), ln(d), mean = random_values(d, gen);
  for (std::size_t f = 0; f < d; ++f) hiv[f] = 0.5 / var[f], ln[f] = -0.3 * static_cast<double>(f);

  std::vector<double> dist(n), aff(n), ll(n);
  const auto& s = scalar_table();
  s.squared_distances(cols.data(), n, d, q.data(), dist.data());
  s.affine(cols.data(), n, d, w.data(), 0.25, aff.data());
  s.gaussian_loglik(cols.data(), n, d, mean.data(), hiv.data(), ln.data(), -1.5, ll.data());
  for (std::size_t i = 0; i < n; ++i) {
    double e_dist = 0, e_aff = 0.25, e_ll = -1.5;
    for (std::size_t f = 0; f < d; ++f) {
      const double x = cols[f * n + i];
      e_dist += (x - q[f]) * (x - q[f]);
      e_aff += w[f] * x;
      e_ll += ln[f] - (x - mean[f]) * (x - mean[f]) / (2.0 * var[f]);
    }
    CHECK(dist[i] == doctest::Approx(e_dist).epsilon(1e-14));
    CHECK(aff[i] == doctest::Approx(e_aff).epsilon(1e-12));
    CHECK(ll[i] == doctest::Approx(e_ll).epsilon(1e-12));
  }
}

TEST_CASE("every available variant is bit-identical to the scalar reference") {
  std::mt19937_64 gen(2024);
  const auto& ref = scalar_table();
  for (auto isa : available()) {
    const KernelTable& k = *table_for(isa);
    CAPTURE(to_string(isa));
    for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 13u, 64u, 1001u}) {
      for (std::size_t d : {1u, 3u, 6u}) {
        CAPTURE(n);
        CAPTURE(d);
        const auto cols = random_values(n * d, gen);
        const auto q = random_values(d, gen);
        const auto w = random_values(d, gen);
        const auto mean = random_values(d, gen);
        auto hiv = random_values(d, gen);
        for (auto& h : hiv) h = std::abs(h) + 0.01;
        const auto ln = random_values(d, gen);

        std::vector<double> a(n), b(n);
        ref.squared_distances(cols.data(), n, d, q.data(), a.data());
        k.squared_distances(cols.data(), n, d, q.data(), b.data());
        check_bitwise(a, b);

        ref.affine(cols.data(), n, d, w.data(), -0.7, a.data());
        k.affine(cols.data(), n, d, w.data(), -0.7, b.data());
        check_bitwise(a, b);

        ref.gaussian_loglik(cols.data(), n, d, mean.data(), hiv.data(), ln.data(), 0.3, a.data());
        k.gaussian_loglik(cols.data(), n, d, mean.data(), hiv.data(), ln.data(), 0.3, b.data());
        check_bitwise(a, b);
      }
    }
  }
}

TEST_CASE("single-row calls agree with batched calls") {
  // Predictors call the kernels with n = 1 per query and n = rows in batch.
  std::mt19937_64 gen(8);
  const std::size_t n = 37, d = 3;
  const auto rows = random_values(n * d, gen);
  const auto cols = to_columns(rows, d);
  const auto q = random_values(d, gen);
  const auto& k = active();
  std::vector<double> batch(n);
  k.affine(cols.data(), n, d, q.data(), 1.25, batch.data());
  for (std::size_t i = 0; i < n; ++i) {
    double single = 0.0;
    k.affine(rows.data() + i * d, 1, d, q.data(), 1.25, &single);
    CHECK(std::bit_cast<std::uint64_t>(single) == std::bit_cast<std::uint64_t>(batch[i]));
  }
}
