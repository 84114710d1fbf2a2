#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sepclass/bigint.hpp"

namespace sepclass {

inline constexpr std::size_t kMaxMarkers = 3;

/// Marker exponents; slots past the series arity are always zero.
using Marks = std::array<std::uint32_t, kMaxMarkers>;

struct TermKey {
  std::uint32_t q = 0;
  Marks marks{};

  auto operator<=>(const TermKey&) const = default;
};

/// Truncation data shared by every operand of a ring operation.
///
/// `names` is display metadata only; two shapes are compatible when their
/// truncation order and marker caps agree.
struct Shape {
  std::uint32_t trunc = 0;
  std::vector<std::uint32_t> caps;
  std::vector<std::string> names;

  std::size_t arity() const { return caps.size(); }
  bool compatible(const Shape& other) const {
    return trunc == other.trunc && caps == other.caps;
  }

  static Shape plain(std::uint32_t trunc);
  /// One marker per name, each capped at `trunc`.
  static Shape with_markers(std::uint32_t trunc, std::vector<std::string> names);
};

/// Truncated formal power series in q with up to three marker variables and
/// exact integer coefficients. Terms beyond the truncation order or a marker
/// cap are discarded; zero coefficients are never stored.
class Series {
 public:
  using TermMap = std::map<TermKey, BigInt>;

  explicit Series(Shape shape);

  static Series zero(const Shape& shape) { return Series(shape); }
  static Series one(const Shape& shape);
  /// `marks.size()` must equal the shape's arity.
  static Series monomial(std::uint32_t q_exp, std::span<const std::uint32_t> marks,
                         const BigInt& coeff, const Shape& shape);

  const Shape& shape() const { return shape_; }
  std::uint32_t trunc() const { return shape_.trunc; }
  std::size_t arity() const { return shape_.arity(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigInt coeff(const TermKey& key) const;
  BigInt coeff(std::uint32_t q_exp, std::span<const std::uint32_t> marks = {}) const;

  /// Adds `coeff` to the term at `key`; out-of-range keys are ignored.
  void add_term(const TermKey& key, const BigInt& coeff);

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const Series& other);

  /// Multiplication by the monomial coeff * q^q_exp * markers^marks.
  Series scaled(std::uint32_t q_exp, const Marks& marks, const BigInt& coeff = 1) const;

  /// Image under every marker -> 1, as a series without markers.
  Series collapse_markers() const;
  /// Dense q-coefficients 0..trunc of collapse_markers().
  std::vector<BigInt> q_coefficients() const;

  friend bool operator==(const Series& lhs, const Series& rhs);

 private:
  bool admits(const TermKey& key) const;
  void require_compatible(const Series& other, const char* op) const;

  Shape shape_;
  TermMap terms_;
};

Series operator+(Series lhs, const Series& rhs);
Series operator-(Series lhs, const Series& rhs);
Series operator-(const Series& s);
Series operator*(const Series& lhs, const Series& rhs);

/// s / (1 - q^e), i.e. s times 1 + q^e + q^{2e} + ... ; e = 0 is rejected.
Series div_one_minus(const Series& s, std::uint32_t e);

/// s / (1 - q^q_exp * markers^marks) for a non-constant monomial.
Series div_one_minus_monomial(const Series& s, std::uint32_t q_exp, const Marks& marks);

}  // namespace sepclass
