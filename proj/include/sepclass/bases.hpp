#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sepclass/class_spec.hpp"
#include "sepclass/partition.hpp"
#include "sepclass/series.hpp"

namespace sepclass {

/// A class member written as basis element plus padding: part i of the
/// member is basis[i] + padding[i], overlines carried by the basis part.
struct Decomposition {
  ClassObject basis;
  std::vector<Part> padding;
};

// Basis membership, i.e. whether the object lies in the basis B(m) of the
// class in the spec (m = number of parts). Gset has no basis.
bool is_basis_member(const ClassSpec& spec, const Partition& p);
bool is_basis_member(const ClassSpec& spec, const Overpartition& p);
bool is_basis_member(const ClassSpec& spec, const ClassObject& obj);

// Raw-sequence forms. Every suffix of a basis element is again a basis
// element, which the bottom-up enumeration relies on.
bool satisfies_basis(const ClassSpec& spec, std::span<const Part> parts);
bool satisfies_basis(const ClassSpec& spec, std::span<const OverPart> parts);

/// B(m), optionally restricted to weight <= max_weight. Ordered by the
/// parts read from the smallest upwards.
std::vector<ClassObject> enumerate_basis(const ClassSpec& spec, std::uint32_t m,
                                         std::optional<std::uint64_t> max_weight = std::nullopt);

/// Unique basis-plus-padding form of a member, assigned greedily from the
/// smallest part upwards. Throws NotAMember if obj is not in the class.
Decomposition decompose(const ClassSpec& spec, const ClassObject& obj);

/// Part-wise sum of a decomposition. Throws InvalidArgument if the padding
/// is not non-increasing, not divisible by the modulus, has the wrong
/// length, or the basis is not in B(m).
ClassObject reconstruct(const ClassSpec& spec, const Decomposition& d);

/// True iff padding is non-increasing with every entry divisible by the
/// class modulus.
bool is_valid_padding(const ClassSpec& spec, std::span<const Part> padding);

/// Marker-refined polynomial of B(m), truncated at N.
Series basis_gf(const ClassSpec& spec, std::uint32_t m, std::uint32_t N);

/// Smallest part of a basis element of a P-type class: a or b.
Part smallest_part(const Partition& p);

/// Residue-swapping bijection between P and Pprime bases with the same
/// (a, b, k, r). A basis element with smallest part b loses k-b+a on every
/// part = a (mod k) and b-a on every part = b (mod k); one with smallest
/// part a gains b-a on a-parts and k-b+a on b-parts. The first map takes
/// BP(m, b) to BP'(m, a), the second BP(m, a) to BP'(m, b), and each is the
/// inverse of the other. Throws InvalidArgument unless p is in the basis of
/// `from` and the image lands in the basis of `to`.
Partition residue_shift(const ClassSpec& from, const ClassSpec& to, const Partition& p);

}  // namespace sepclass
