#pragma once

#include <cstdint>
#include <vector>

#include "sepclass/bigint.hpp"
#include "sepclass/series.hpp"

namespace sepclass {

/// (q^k; q^k)_n = (1 - q^k)(1 - q^{2k})...(1 - q^{nk}); n = 0 gives 1.
Series pochhammer(std::uint32_t k, std::uint32_t n, const Shape& shape);

/// Gaussian polynomial [A, B] in base q^k, or zero unless A >= B >= 0.
///
/// Counts partitions into at most B parts, each divisible by k and at most
/// k(A - B). Built from the recurrence
///   [A, B] = [A-1, B] + q^{k(A-B)} [A-1, B-1]
/// and memoized per thread.
Series gaussian(std::int64_t A, std::int64_t B, std::uint32_t k, const Shape& shape);

/// Dense coefficients 0..trunc of the Gaussian polynomial.
const std::vector<BigInt>& gaussian_coefficients(std::int64_t A, std::int64_t B, std::uint32_t k,
                                                 std::uint32_t trunc);

/// g_{k,r}(h, s) = sum_i (-1)^i q^{rk(i^2-i)/2} [s, i]_{rk} [h - ri + s - 1, s - 1]_k.
///
/// Equals q^{-hd} times the generating function of h-part partitions into
/// parts = d (mod k), each at most k(s-1)+d, no part repeated r or more times.
/// Requires s >= 1; a negative h gives zero (the partition set is empty).
Series g_poly(std::uint32_t k, std::uint32_t r, std::int64_t h, std::uint32_t s, const Shape& shape);

}  // namespace sepclass
