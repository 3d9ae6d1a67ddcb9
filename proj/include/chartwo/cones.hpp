// Consecutive-ones binary expansion n = 2^b1 - 2^b2 + 2^b3 - ... with the
// minimal number of terms.
#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "jordan_type.hpp"

namespace chartwo {

struct ConesExpansion {
  count_t n = 0;
  /// Exponents, strictly decreasing.
  std::vector<unsigned> betas;
  /// suffix[k] = sum_{i >= k} (-1)^(i-k) 2^betas[i] (0-based), with a
  /// trailing zero: suffix.front() == n, suffix.back() == 0.
  std::vector<count_t> suffix;

  std::size_t terms() const { return betas.size(); }

  /// The band k (0-based) containing 1 <= s <= n, i.e. suffix[k] > n - s >= suffix[k+1].
  std::size_t band_of(count_t s) const {
    if (s < 1 || s > n) throw std::out_of_range("band_of: s out of range");
    const count_t gap = n - s;
    std::size_t k = 0;
    while (!(suffix[k] > gap && gap >= suffix[k + 1])) ++k;
    return k;
  }
};

/// Smallest power of two >= n, as an exponent.
inline unsigned ceil_log2(count_t n) { return n <= 1 ? 0u : static_cast<unsigned>(std::bit_width(n - 1)); }

/// Suffix values n_k computed directly from the alternating sums.
inline std::vector<count_t> suffix_values(const std::vector<unsigned>& betas) {
  const std::size_t r = betas.size();
  std::vector<count_t> out(r + 1, 0);
  for (std::size_t k = 0; k < r; ++k) {
    std::int64_t acc = 0;
    for (std::size_t i = k; i < r; ++i) {
      const std::int64_t term = std::int64_t{1} << betas[i];
      acc += ((i - k) % 2 == 0) ? term : -term;
    }
    out[k] = static_cast<count_t>(acc);
  }
  return out;
}

inline std::vector<count_t> suffix_values(const ConesExpansion& e) { return suffix_values(e.betas); }

/// n_1 = n, beta_k = ceil(log2 n_k), n_{k+1} = 2^beta_k - n_k. Each step
/// takes the unique power of two q with q/2 < n_k <= q, so n_{k+1} < n_k / 2
/// and r stays minimal.
inline ConesExpansion cones_expansion(count_t n) {
  if (n == 0) throw std::invalid_argument("cones_expansion: n must be positive");
  if (n > (count_t{1} << 62)) throw std::out_of_range("cones_expansion: n too large");
  ConesExpansion e;
  e.n = n;
  count_t rest = n;
  while (rest > 0) {
    e.suffix.push_back(rest);
    const unsigned b = ceil_log2(rest);
    e.betas.push_back(b);
    rest = (count_t{1} << b) - rest;
  }
  e.suffix.push_back(0);
  return e;
}

}  // namespace chartwo
