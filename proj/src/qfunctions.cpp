#include "sepclass/qfunctions.hpp"

#include <map>
#include <tuple>

#include "sepclass/errors.hpp"

namespace sepclass {

namespace {

using GaussKey = std::tuple<std::int64_t, std::int64_t, std::uint32_t, std::uint32_t>;

std::map<GaussKey, std::vector<BigInt>>& gaussian_cache() {
  thread_local std::map<GaussKey, std::vector<BigInt>> cache;
  return cache;
}

Series lift(const std::vector<BigInt>& dense, const Shape& shape) {
  Series s(shape);
  for (std::uint32_t e = 0; e < dense.size() && e <= shape.trunc; ++e) {
    s.add_term(TermKey{e, {}}, dense[e]);
  }
  return s;
}

}  // namespace

Series pochhammer(std::uint32_t k, std::uint32_t n, const Shape& shape) {
  if (k == 0) throw InvalidArgument("pochhammer: base exponent k must be positive");
  Series out = Series::one(shape);
  for (std::uint32_t i = 1; i <= n; ++i) {
    const std::uint64_t e = std::uint64_t{k} * i;
    if (e > shape.trunc) break;  // remaining factors are 1 modulo truncation
    out -= out.scaled(static_cast<std::uint32_t>(e), Marks{});
  }
  return out;
}

const std::vector<BigInt>& gaussian_coefficients(std::int64_t A, std::int64_t B, std::uint32_t k,
                                                 std::uint32_t trunc) {
  if (k == 0) throw InvalidArgument("gaussian: base exponent k must be positive");
  auto& cache = gaussian_cache();
  if (A < B || B < 0) {
    // every out-of-range pair shares one zero entry
    A = -1;
    B = 0;
  }
  const GaussKey key{A, B, k, trunc};
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  std::vector<BigInt> dense(std::size_t{trunc} + 1);
  if (A >= 0) {
    if (B == 0 || B == A) {
      dense[0] = 1;
    } else {
      const auto& upper = gaussian_coefficients(A - 1, B, k, trunc);
      const auto& lower = gaussian_coefficients(A - 1, B - 1, k, trunc);
      const std::int64_t shift = std::int64_t{k} * (A - B);
      for (std::size_t e = 0; e <= trunc; ++e) {
        dense[e] = upper[e];
        if (static_cast<std::int64_t>(e) >= shift) dense[e] += lower[e - shift];
      }
    }
  }
  return cache.emplace(key, std::move(dense)).first->second;
}

Series gaussian(std::int64_t A, std::int64_t B, std::uint32_t k, const Shape& shape) {
  return lift(gaussian_coefficients(A, B, k, shape.trunc), shape);
}

Series g_poly(std::uint32_t k, std::uint32_t r, std::int64_t h, std::uint32_t s, const Shape& shape) {
  if (s == 0) throw InvalidArgument("g_poly: s must be at least 1");
  if (k == 0 || r == 0) throw InvalidArgument("g_poly: k and r must be positive");
  Series out(shape);
  if (h < 0) return out;
  const std::int64_t rk = std::int64_t{r} * k;
  for (std::int64_t i = 0; i <= s && h - std::int64_t{r} * i >= 0; ++i) {
    const std::int64_t e = rk * (i * i - i) / 2;
    if (e > shape.trunc) break;
    Series term = gaussian(s, i, static_cast<std::uint32_t>(rk), shape) *
                  gaussian(h - std::int64_t{r} * i + s - 1, std::int64_t{s} - 1, k, shape);
    term = term.scaled(static_cast<std::uint32_t>(e), Marks{});
    if (i % 2 == 0) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

}  // namespace sepclass
