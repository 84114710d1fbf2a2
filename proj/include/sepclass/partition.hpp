#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace sepclass {

using Part = std::uint32_t;

/// Non-increasing sequence of positive integers. The empty partition is the
/// unique partition of zero.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgument unless `parts` is non-increasing and positive.
  explicit Partition(std::vector<Part> parts);

  std::span<const Part> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  Part operator[](std::size_t i) const { return parts_[i]; }
  std::uint64_t weight() const;

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<Part> parts_;
};

/// Which repeated occurrence of a magnitude may carry the overline.
enum class Convention { First, Last };

struct OverPart {
  Part magnitude = 0;
  bool overlined = false;

  auto operator<=>(const OverPart&) const = default;
};

/// Overpartition in canonical order: magnitudes non-increasing, at most one
/// overlined part per magnitude, and that part placed first (First
/// convention) or last (Last convention) among its equal magnitudes.
class Overpartition {
 public:
  explicit Overpartition(Convention convention = Convention::First) : convention_(convention) {}
  /// Throws InvalidArgument unless `parts` is already canonical.
  Overpartition(std::vector<OverPart> parts, Convention convention);

  /// Sorts and moves overlines into canonical position. Throws
  /// InvalidArgument if some magnitude carries two overlines or is zero.
  static Overpartition canonicalize(std::vector<OverPart> parts, Convention convention);

  std::span<const OverPart> parts() const { return parts_; }
  Convention convention() const { return convention_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  const OverPart& operator[](std::size_t i) const { return parts_[i]; }
  std::uint64_t weight() const;
  std::size_t overline_count() const;

  /// "(4',3,1')" with a trailing apostrophe marking an overline.
  std::string to_string() const;

  auto operator<=>(const Overpartition&) const = default;

 private:
  std::vector<OverPart> parts_;
  Convention convention_ = Convention::First;
};

using ClassObject = std::variant<Partition, Overpartition>;

/// True iff `parts` is non-increasing with positive entries.
bool is_partition_sequence(std::span<const Part> parts);
/// True iff `parts` is a canonical overpartition under `convention`.
bool is_canonical_overpartition(std::span<const OverPart> parts, Convention convention);

std::uint64_t weight(const Partition& p);
std::uint64_t weight(const Overpartition& p);
std::uint64_t weight(const ClassObject& obj);

/// Number of parts congruent to d modulo k (d is reduced modulo k).
std::size_t residue_count(const Partition& p, std::uint32_t k, std::uint32_t d);

std::string to_string(const ClassObject& obj);
std::string to_string(Convention convention);

/// Parses "5,2,2" or "3',1" (apostrophe = overline). Empty text is the empty
/// object.
Partition parse_partition(const std::string& text);
Overpartition parse_overpartition(const std::string& text, Convention convention);

}  // namespace sepclass
