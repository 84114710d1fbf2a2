#include "sepclass/series.hpp"

#include <string>

#include "sepclass/errors.hpp"

namespace sepclass {

Shape Shape::plain(std::uint32_t trunc) { return Shape{trunc, {}, {}}; }

Shape Shape::with_markers(std::uint32_t trunc, std::vector<std::string> names) {
  if (names.size() > kMaxMarkers) {
    throw InvalidArgument("at most " + std::to_string(kMaxMarkers) + " markers supported");
  }
  Shape shape{trunc, std::vector<std::uint32_t>(names.size(), trunc), std::move(names)};
  return shape;
}

Series::Series(Shape shape) : shape_(std::move(shape)) {
  if (shape_.arity() > kMaxMarkers) {
    throw InvalidArgument("at most " + std::to_string(kMaxMarkers) + " markers supported");
  }
  if (!shape_.names.empty() && shape_.names.size() != shape_.caps.size()) {
    throw InvalidArgument("marker names and caps differ in length");
  }
}

Series Series::one(const Shape& shape) {
  Series s(shape);
  s.add_term(TermKey{}, 1);
  return s;
}

Series Series::monomial(std::uint32_t q_exp, std::span<const std::uint32_t> marks,
                        const BigInt& coeff, const Shape& shape) {
  if (marks.size() != shape.arity()) {
    throw ShapeMismatch("monomial: expected " + std::to_string(shape.arity()) +
                        " marker exponents, got " + std::to_string(marks.size()));
  }
  Series s(shape);
  TermKey key{q_exp, {}};
  for (std::size_t i = 0; i < marks.size(); ++i) key.marks[i] = marks[i];
  s.add_term(key, coeff);
  return s;
}

bool Series::admits(const TermKey& key) const {
  if (key.q > shape_.trunc) return false;
  for (std::size_t i = 0; i < kMaxMarkers; ++i) {
    if (i < shape_.arity()) {
      if (key.marks[i] > shape_.caps[i]) return false;
    } else if (key.marks[i] != 0) {
      return false;
    }
  }
  return true;
}

void Series::require_compatible(const Series& other, const char* op) const {
  if (!shape_.compatible(other.shape_)) {
    throw ShapeMismatch(std::string(op) + ": operands have different truncation or marker caps");
  }
}

BigInt Series::coeff(const TermKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt Series::coeff(std::uint32_t q_exp, std::span<const std::uint32_t> marks) const {
  TermKey key{q_exp, {}};
  for (std::size_t i = 0; i < marks.size() && i < kMaxMarkers; ++i) key.marks[i] = marks[i];
  return coeff(key);
}

void Series::add_term(const TermKey& key, const BigInt& coeff) {
  if (coeff == 0 || !admits(key)) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Series& Series::operator+=(const Series& other) {
  require_compatible(other, "add");
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

Series& Series::operator-=(const Series& other) {
  require_compatible(other, "sub");
  for (const auto& [key, c] : other.terms_) add_term(key, -c);
  return *this;
}

Series& Series::operator*=(const Series& other) {
  *this = *this * other;
  return *this;
}

Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }

Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }

Series operator-(const Series& s) {
  Series out(s.shape());
  for (const auto& [key, c] : s.terms()) out.add_term(key, -c);
  return out;
}

Series operator*(const Series& lhs, const Series& rhs) {
  if (!lhs.shape().compatible(rhs.shape())) {
    throw ShapeMismatch("mul: operands have different truncation or marker caps");
  }
  Series out(lhs.shape());
  const auto n = lhs.trunc();
  for (const auto& [lk, lc] : lhs.terms()) {
    for (const auto& [rk, rc] : rhs.terms()) {
      // rhs terms are ordered by q, so the rest of the row is truncated too
      if (lk.q + rk.q > n) break;
      TermKey key{lk.q + rk.q, {}};
      for (std::size_t i = 0; i < kMaxMarkers; ++i) key.marks[i] = lk.marks[i] + rk.marks[i];
      out.add_term(key, lc * rc);
    }
  }
  return out;
}

Series Series::scaled(std::uint32_t q_exp, const Marks& marks, const BigInt& coeff) const {
  Series out(shape_);
  if (coeff == 0) return out;
  for (const auto& [key, c] : terms_) {
    TermKey shifted{key.q + q_exp, {}};
    for (std::size_t i = 0; i < kMaxMarkers; ++i) shifted.marks[i] = key.marks[i] + marks[i];
    out.add_term(shifted, c * coeff);
  }
  return out;
}

Series Series::collapse_markers() const {
  Series out(Shape::plain(shape_.trunc));
  for (const auto& [key, c] : terms_) out.add_term(TermKey{key.q, {}}, c);
  return out;
}

std::vector<BigInt> Series::q_coefficients() const {
  std::vector<BigInt> dense(std::size_t{shape_.trunc} + 1);
  for (const auto& [key, c] : terms_) dense[key.q] += c;
  return dense;
}

bool operator==(const Series& lhs, const Series& rhs) {
  return lhs.shape_.compatible(rhs.shape_) && lhs.terms_ == rhs.terms_;
}

Series div_one_minus(const Series& s, std::uint32_t e) {
  if (e == 0) throw InvalidArgument("div_one_minus: 1 - q^0 is not invertible");
  return div_one_minus_monomial(s, e, Marks{});
}

Series div_one_minus_monomial(const Series& s, std::uint32_t q_exp, const Marks& marks) {
  bool constant = q_exp == 0;
  for (auto m : marks) constant = constant && m == 0;
  if (constant) throw InvalidArgument("div_one_minus_monomial: monomial must be non-constant");

  // out = s + monomial * out, solved in increasing key order: every key of
  // monomial * out is strictly larger than the key it came from.
  Series out(s.shape());
  std::map<TermKey, BigInt> pending(s.terms().begin(), s.terms().end());
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const TermKey& key = node.key();
    const BigInt& c = node.mapped();
    if (c == 0) continue;
    out.add_term(key, c);
    TermKey next{key.q + q_exp, {}};
    for (std::size_t i = 0; i < kMaxMarkers; ++i) next.marks[i] = key.marks[i] + marks[i];
    bool in_range = next.q <= s.trunc();
    for (std::size_t i = 0; i < s.arity(); ++i) in_range = in_range && next.marks[i] <= s.shape().caps[i];
    if (in_range) pending[next] += c;
  }
  return out;
}

}  // namespace sepclass
