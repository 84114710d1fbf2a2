#include "sepclass/classes.hpp"

#include <algorithm>

#include "sepclass/errors.hpp"

namespace sepclass {

namespace {

bool congruent(Part x, std::uint32_t residue, std::uint32_t k) { return x % k == residue % k; }

// Length of the run of trailing parts satisfying pred.
template <class T, class Pred>
std::size_t trailing_run(std::span<const T> parts, Pred pred) {
  std::size_t run = 0;
  for (auto it = parts.rbegin(); it != parts.rend() && pred(*it); ++it) ++run;
  return run;
}

// Conditions of the class that involve the last part and the parts before
// it. A sequence is a member iff every non-empty prefix passes.
bool tail_ok(const ClassSpec& spec, std::span<const Part> parts) {
  const std::size_t n = parts.size();
  const Part last = parts[n - 1];
  if (last == 0) return false;
  if (n > 1 && parts[n - 2] < last) return false;
  const auto k = spec.k();

  switch (spec.kind()) {
    case ClassKind::P:
    case ClassKind::Pprime: {
      if (!congruent(last, spec.a(), k) && !congruent(last, spec.b(), k)) return false;
      const auto target = spec.kind() == ClassKind::P ? spec.b() : spec.a();
      return trailing_run(parts, [&](Part x) { return congruent(x, target, k); }) <= spec.r();
    }
    case ClassKind::R:
    case ClassKind::Rr: {
      if (!congruent(last, spec.a(), k) && !congruent(last, spec.b(), k) &&
          !congruent(last, spec.c(), k)) {
        return false;
      }
      if (n > 1) {
        const Part prev = parts[n - 2];
        if (congruent(last, spec.c(), k) && prev == last) return false;
        if (congruent(prev, spec.a(), k) && !congruent(last, spec.a(), k) &&
            !congruent(last, spec.c(), k)) {
          return false;
        }
      }
      if (spec.kind() == ClassKind::Rr) {
        return trailing_run(parts, [&](Part x) { return congruent(x, spec.b(), k); }) < spec.r();
      }
      return true;
    }
    case ClassKind::Gset: {
      if (n > spec.h()) return false;
      if (!congruent(last, spec.d(), k)) return false;
      if (last > k * (spec.s() - 1) + spec.d()) return false;
      return trailing_run(parts, [&](Part x) { return x == last; }) < spec.r();
    }
    default:
      throw KindMismatch(spec.name() + " is an overpartition class; got a partition");
  }
}

bool tail_ok(const ClassSpec& spec, std::span<const OverPart> parts) {
  if (!spec.is_overpartition_class()) {
    throw KindMismatch(spec.name() + " is a partition class; got an overpartition");
  }
  const std::size_t n = parts.size();
  const OverPart& last = parts[n - 1];
  if (last.magnitude == 0) return false;
  if (n > 1 && !is_canonical_overpartition(parts.subspan(n - 2), spec.convention())) return false;
  switch (spec.kind()) {
    case ClassKind::Fbar:
    case ClassKind::Lbar:
      return !(n > 1 && last.overlined && parts[n - 2].overlined);
    default:
      return trailing_run(parts, [](const OverPart& p) { return !p.overlined; }) < spec.r();
  }
}

template <class T>
bool all_prefixes_ok(const ClassSpec& spec, std::span<const T> parts) {
  for (std::size_t len = 1; len <= parts.size(); ++len) {
    if (!tail_ok(spec, parts.first(len))) return false;
  }
  return true;
}

void require_partition_class(const ClassSpec& spec) {
  if (spec.is_overpartition_class()) {
    throw KindMismatch(spec.name() + " is an overpartition class; got a partition");
  }
}

void require_overpartition_class(const ClassSpec& spec) {
  if (!spec.is_overpartition_class()) {
    throw KindMismatch(spec.name() + " is a partition class; got an overpartition");
  }
}

// Depth-first search over non-increasing sequences. `exact` selects members
// of weight exactly `budget`; otherwise every member of weight <= budget.
class PartitionSearch {
 public:
  PartitionSearch(const ClassSpec& spec, std::uint32_t budget, bool exact,
                  const std::function<void(const ClassObject&)>& visit)
      : spec_(spec), budget_(budget), exact_(exact), visit_(visit) {}

  void run() {
    if (!exact_ || budget_ == 0) emit();
    descend(budget_, budget_);
  }

 private:
  void descend(std::uint32_t remaining, Part cap) {
    for (Part x = std::min(cap, remaining); x >= 1; --x) {
      parts_.push_back(x);
      if (tail_ok(spec_, std::span<const Part>(parts_))) {
        if (!exact_ || remaining == x) emit();
        descend(remaining - x, x);
      }
      parts_.pop_back();
    }
  }

  void emit() { visit_(Partition(parts_)); }

  const ClassSpec& spec_;
  std::uint32_t budget_;
  bool exact_;
  const std::function<void(const ClassObject&)>& visit_;
  std::vector<Part> parts_;
};

class OverpartitionSearch {
 public:
  OverpartitionSearch(const ClassSpec& spec, std::uint32_t budget, bool exact,
                      const std::function<void(const ClassObject&)>& visit)
      : spec_(spec), budget_(budget), exact_(exact), visit_(visit) {}

  void run() {
    if (!exact_ || budget_ == 0) emit();
    descend(budget_, budget_);
  }

 private:
  void descend(std::uint32_t remaining, Part cap) {
    for (Part x = std::min(cap, remaining); x >= 1; --x) {
      for (bool over : {false, true}) {
        parts_.push_back(OverPart{x, over});
        if (tail_ok(spec_, std::span<const OverPart>(parts_))) {
          if (!exact_ || remaining == x) emit();
          descend(remaining - x, x);
        }
        parts_.pop_back();
      }
    }
  }

  void emit() { visit_(Overpartition(parts_, spec_.convention())); }

  const ClassSpec& spec_;
  std::uint32_t budget_;
  bool exact_;
  const std::function<void(const ClassObject&)>& visit_;
  std::vector<OverPart> parts_;
};

void search(const ClassSpec& spec, std::uint32_t budget, bool exact,
            const std::function<void(const ClassObject&)>& visit) {
  if (spec.is_overpartition_class()) {
    OverpartitionSearch(spec, budget, exact, visit).run();
  } else {
    PartitionSearch(spec, budget, exact, visit).run();
  }
}

void collect_G(const ClassSpec& spec, std::vector<Part>& parts, Part cap, std::vector<Partition>& out) {
  if (parts.size() == spec.h()) {
    out.emplace_back(parts);
    return;
  }
  // Candidates are d, d+k, ..., d+k(s-1), tried largest first.
  for (std::int64_t x = cap; x >= static_cast<std::int64_t>(spec.d()); x -= spec.k()) {
    parts.push_back(static_cast<Part>(x));
    if (tail_ok(spec, std::span<const Part>(parts))) collect_G(spec, parts, static_cast<Part>(x), out);
    parts.pop_back();
  }
}

}  // namespace

bool satisfies_class(const ClassSpec& spec, std::span<const Part> parts) {
  require_partition_class(spec);
  if (!all_prefixes_ok(spec, parts)) return false;
  return spec.kind() != ClassKind::Gset || parts.size() == spec.h();
}

bool satisfies_class(const ClassSpec& spec, std::span<const OverPart> parts) {
  require_overpartition_class(spec);
  return all_prefixes_ok(spec, parts);
}

bool is_member(const ClassSpec& spec, const Partition& p) {
  return satisfies_class(spec, p.parts());
}

bool is_member(const ClassSpec& spec, const Overpartition& p) {
  require_overpartition_class(spec);
  if (p.convention() != spec.convention()) {
    throw KindMismatch(spec.name() + " uses the " + to_string(spec.convention()) +
                       "-occurrence convention; got a " + to_string(p.convention()) +
                       "-occurrence overpartition");
  }
  return satisfies_class(spec, p.parts());
}

bool is_member(const ClassSpec& spec, const ClassObject& obj) {
  return std::visit([&](const auto& o) { return is_member(spec, o); }, obj);
}

std::vector<ClassObject> enumerate(const ClassSpec& spec, std::uint32_t n) {
  std::vector<ClassObject> out;
  if (spec.kind() == ClassKind::Gset) {
    for (auto& p : enumerate_G(spec)) {
      if (p.weight() == n) out.emplace_back(std::move(p));
    }
    return out;
  }
  search(spec, n, true, [&](const ClassObject& obj) { out.push_back(obj); });
  return out;
}

void for_each_member(const ClassSpec& spec, std::uint32_t max_weight,
                     const std::function<void(const ClassObject&)>& visit) {
  if (spec.kind() == ClassKind::Gset) {
    for (const auto& p : enumerate_G(spec)) visit(p);
    return;
  }
  search(spec, max_weight, false, visit);
}

Marks marker_exponents(const ClassSpec& spec, const ClassObject& obj) {
  Marks marks{};
  if (spec.is_overpartition_class()) {
    const auto* op = std::get_if<Overpartition>(&obj);
    if (!op) throw KindMismatch(spec.name() + " expects an overpartition");
    marks[0] = static_cast<std::uint32_t>(op->overline_count());
    return marks;
  }
  const auto* p = std::get_if<Partition>(&obj);
  if (!p) throw KindMismatch(spec.name() + " expects a partition");
  if (spec.is_p_type() || spec.is_r_type()) {
    marks[0] = static_cast<std::uint32_t>(residue_count(*p, spec.k(), spec.a()));
    marks[1] = static_cast<std::uint32_t>(residue_count(*p, spec.k(), spec.b()));
  }
  if (spec.is_r_type()) marks[2] = static_cast<std::uint32_t>(residue_count(*p, spec.k(), spec.c()));
  return marks;
}

Series refined_gf(const ClassSpec& spec, std::uint32_t N) {
  Series out(spec.series_shape(N));
  for_each_member(spec, N, [&](const ClassObject& obj) {
    const auto w = weight(obj);
    if (w <= N) out.add_term(TermKey{static_cast<std::uint32_t>(w), marker_exponents(spec, obj)}, 1);
  });
  return out;
}

std::vector<Partition> enumerate_G(const ClassSpec& spec) {
  if (spec.kind() != ClassKind::Gset) throw KindMismatch("enumerate_G expects a G spec, got " + spec.name());
  std::vector<Partition> out;
  std::vector<Part> parts;
  collect_G(spec, parts, spec.k() * (spec.s() - 1) + spec.d(), out);
  return out;
}

Series G_gf(const ClassSpec& spec, std::uint32_t N) {
  Series out(Shape::plain(N));
  for (const auto& p : enumerate_G(spec)) {
    if (p.weight() <= N) out.add_term(TermKey{static_cast<std::uint32_t>(p.weight()), {}}, 1);
  }
  return out;
}

}  // namespace sepclass
