#include <functional>
#include <map>

#include "doctest.h"
#include "sepclass/classes.hpp"
#include "sepclass/errors.hpp"
#include "sepclass/qfunctions.hpp"

using namespace sepclass;

namespace {

// Partitions into at most B parts, each divisible by k and at most k(A-B),
// counted by weight.
Series box_count(int A, int B, std::uint32_t k, std::uint32_t N) {
  Series out(Shape::plain(N));
  if (A < B || B < 0) return out;
  const int top = A - B;
  std::function<void(int, int, std::uint32_t)> rec = [&](int left, int cap, std::uint32_t w) {
    if (w > N) return;
    out.add_term(TermKey{w, {}}, 1);
    if (left == 0) return;
    for (int x = 1; x <= cap; ++x) rec(left - 1, x, w + k * x);
  };
  rec(B, top, 0);
  return out;
}

// h-part partitions into parts = d (mod k), each <= k(s-1)+d, every
// multiplicity below r; returns the weight minus hd.
Series naive_g(std::uint32_t d, std::uint32_t k, std::uint32_t r, std::uint32_t h, std::uint32_t s, std::uint32_t N) {
  Series out(Shape::plain(N));
  std::function<void(std::uint32_t, std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t j, std::uint32_t left,
                                                                             std::uint32_t w) {
    // j = index of the largest allowed value k*j+d still available
    if (left == 0) {
      if (w <= N) out.add_term(TermKey{w, {}}, 1);
      return;
    }
    if (j == 0xffffffffu) return;
    for (std::uint32_t mult = 0; mult < r && mult <= left; ++mult) {
      rec(j - 1, left - mult, w + mult * k * j);
    }
  };
  if (s >= 1) rec(s - 1, h, 0);
  return out;
}

}  // namespace

TEST_CASE("gaussian matches the box-partition count") {
  for (std::uint32_t k : {1u, 2u, 3u}) {
    for (int A = -1; A <= 9; ++A) {
      for (int B = -1; B <= A + 1; ++B) {
        CAPTURE(k); CAPTURE(A); CAPTURE(B);
        CHECK(gaussian(A, B, k, Shape::plain(40)) == box_count(A, B, k, 40));
      }
    }
  }
}

TEST_CASE("gaussian boundary values") {
  const Shape sh = Shape::plain(10);
  CHECK(gaussian(5, 0, 2, sh) == Series::one(sh));
  CHECK(gaussian(5, 5, 2, sh) == Series::one(sh));
  CHECK(gaussian(0, 0, 1, sh) == Series::one(sh));
  CHECK(gaussian(3, 4, 1, sh).is_zero());
  CHECK(gaussian(3, -1, 1, sh).is_zero());
  CHECK(gaussian(-2, 0, 1, sh).is_zero());
}

TEST_CASE("gaussian equals the pochhammer quotient") {
  const std::uint32_t N = 30;
  const Shape sh = Shape::plain(N);
  for (std::uint32_t k : {1u, 2u}) {
    for (std::uint32_t A = 0; A <= 8; ++A) {
      for (std::uint32_t B = 0; B <= A; ++B) {
        // [A,B] (q^k;q^k)_B (q^k;q^k)_{A-B} = (q^k;q^k)_A
        CHECK(gaussian(A, B, k, sh) * pochhammer(k, B, sh) * pochhammer(k, A - B, sh) == pochhammer(k, A, sh));
      }
    }
  }
}

TEST_CASE("pochhammer small cases") {
  const Shape sh = Shape::plain(6);
  CHECK(pochhammer(1, 0, sh) == Series::one(sh));
  Series expect(sh);  // (1-q^2)(1-q^4) = 1 - q^2 - q^4 + q^6
  expect.add_term(TermKey{0, {}}, 1);
  expect.add_term(TermKey{2, {}}, -1);
  expect.add_term(TermKey{4, {}}, -1);
  expect.add_term(TermKey{6, {}}, 1);
  CHECK(pochhammer(2, 2, sh) == expect);
}

TEST_CASE("g matches the restricted-multiplicity count") {
  const std::uint32_t N = 40;
  for (std::uint32_t k = 1; k <= 3; ++k) {
    for (std::uint32_t r = 1; r <= 4; ++r) {
      for (std::uint32_t h = 0; h <= 6; ++h) {
        for (std::uint32_t s = 1; s <= 4; ++s) {
          CAPTURE(k); CAPTURE(r); CAPTURE(h); CAPTURE(s);
          CHECK(g_poly(k, r, h, s, Shape::plain(N)) == naive_g(1, k, r, h, s, N));
        }
      }
    }
  }
}

TEST_CASE("g edge cases") {
  const Shape sh = Shape::plain(10);
  CHECK(g_poly(2, 2, -1, 3, sh).is_zero());
  CHECK(g_poly(2, 2, 0, 3, sh) == Series::one(sh));
  CHECK_THROWS_AS(g_poly(1, 1, 1, 0, sh), InvalidArgument);
  // h > (r-1)s forces zero
  CHECK(g_poly(2, 3, 7, 2, sh).is_zero());
}

TEST_CASE("G set enumeration agrees with the naive count") {
  for (std::uint32_t k = 1; k <= 3; ++k) {
    for (std::uint32_t d = 1; d <= k; ++d) {
      for (std::uint32_t r : {1u, 2u, 3u}) {
        for (std::uint32_t h = 0; h <= 4; ++h) {
          for (std::uint32_t s = 1; s <= 3; ++s) {
            const auto G = ClassSpec::G(d, k, r, h, s);
            Series shifted(Shape::plain(60));
            for (const auto& p : enumerate_G(G)) {
              CHECK(p.size() == h);
              shifted.add_term(TermKey{static_cast<std::uint32_t>(p.weight() - std::uint64_t{h} * d), {}}, 1);
            }
            CHECK(shifted == naive_g(d, k, r, h, s, 60));
          }
        }
      }
    }
  }
}

TEST_CASE("gaussian memo is consistent across truncations") {
  const auto& long_form = gaussian_coefficients(10, 4, 1, 30);
  const auto& short_form = gaussian_coefficients(10, 4, 1, 5);
  REQUIRE(short_form.size() == 6);
  for (std::size_t i = 0; i < short_form.size(); ++i) CHECK(short_form[i] == long_form[i]);
  CHECK(long_form[24] == 1);  // top degree B(A-B)
}
