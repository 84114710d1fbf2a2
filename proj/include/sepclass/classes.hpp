#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sepclass/class_spec.hpp"
#include "sepclass/partition.hpp"
#include "sepclass/series.hpp"

namespace sepclass {

// Membership. Partition classes (P, Pprime, R, Rr, Gset) take a Partition;
// overpartition classes take an Overpartition with the matching convention.
// Any other pairing throws KindMismatch.
bool is_member(const ClassSpec& spec, const Partition& p);
bool is_member(const ClassSpec& spec, const Overpartition& p);
bool is_member(const ClassSpec& spec, const ClassObject& obj);

// Membership on raw sequences. For every class except Gset the conditions
// only look at neighbouring positions, so any prefix of a member is again a
// member; enumeration prunes with these.
bool satisfies_class(const ClassSpec& spec, std::span<const Part> parts);
bool satisfies_class(const ClassSpec& spec, std::span<const OverPart> parts);

/// All members of weight n, in lexicographically decreasing order. For
/// overpartitions a plain part sorts before the overlined part of the same
/// magnitude, so (4) precedes (4').
std::vector<ClassObject> enumerate(const ClassSpec& spec, std::uint32_t n);

/// Visits every member of weight <= max_weight (Gset: every member).
void for_each_member(const ClassSpec& spec, std::uint32_t max_weight,
                     const std::function<void(const ClassObject&)>& visit);

/// Marker exponents of an object: (l_{k,a}, l_{k,b}) for P-type,
/// (l_{k,a}, l_{k,b}, l_{k,c}) for R-type, (overline count) for
/// overpartition classes.
Marks marker_exponents(const ClassSpec& spec, const ClassObject& obj);

/// Brute-force refined generating function over members of weight <= N.
Series refined_gf(const ClassSpec& spec, std::uint32_t N);

/// The set G_{d,k,r}(h, s) of a Gset spec.
std::vector<Partition> enumerate_G(const ClassSpec& spec);

/// Generating function sum q^{|pi|} over G_{d,k,r}(h, s), truncated at N.
Series G_gf(const ClassSpec& spec, std::uint32_t N);

}  // namespace sepclass
