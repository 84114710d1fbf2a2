#include "sepclass/bases.hpp"

#include <algorithm>

#include "sepclass/classes.hpp"
#include "sepclass/errors.hpp"

namespace sepclass {

namespace {

bool congruent(Part x, std::uint32_t residue, std::uint32_t k) { return x % k == residue % k; }

bool p_type_basis(const ClassSpec& spec, std::span<const Part> parts) {
  const auto k = spec.k();
  const auto a = spec.a(), b = spec.b();
  const std::size_t m = parts.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (!congruent(parts[i], a, k) && !congruent(parts[i], b, k)) return false;
    if (i + 1 < m && parts[i] - parts[i + 1] >= k) return false;
  }
  if (parts[m - 1] != a && parts[m - 1] != b) return false;

  // A run of r equal parts in the restricted residue must sit directly
  // below a part of the other residue (or at the top).
  const auto run_residue = spec.kind() == ClassKind::P ? b : a;
  const auto guard_residue = spec.kind() == ClassKind::P ? a : b;
  const std::size_t r = spec.r();
  for (std::size_t i = 0; i + r < m; ++i) {
    bool run = true;
    for (std::size_t j = i + 1; j <= i + r && run; ++j) {
      run = parts[j] == parts[i + 1] && congruent(parts[j], run_residue, k);
    }
    if (run && !congruent(parts[i], guard_residue, k)) return false;
  }
  return true;
}

bool r_type_basis(const ClassSpec& spec, std::span<const Part> parts) {
  if (!satisfies_class(spec, parts)) return false;
  const auto k = spec.k();
  const std::size_t m = parts.size();
  const Part last = parts[m - 1];
  if (last != spec.a() && last != spec.b() && last != spec.c()) return false;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const Part gap = parts[i] - parts[i + 1];
    const bool strict = congruent(parts[i + 1], spec.a(), k) || congruent(parts[i + 1], spec.b(), k);
    if (strict ? gap >= k : gap > k) return false;
  }
  return true;
}

bool overpartition_basis(const ClassSpec& spec, std::span<const OverPart> parts) {
  const std::size_t m = parts.size();
  if (!is_canonical_overpartition(parts, spec.convention())) return false;
  if (parts[m - 1].magnitude != 1) return false;
  const bool first = spec.convention() == Convention::First;
  const bool bar = spec.kind() == ClassKind::Fbar || spec.kind() == ClassKind::Lbar;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const auto& hi = parts[i];
    const auto& lo = parts[i + 1];
    // The step up from part i+1 to part i is 1 exactly at an overline: the
    // lower part's under First, the upper part's under Last.
    const bool step = first ? lo.overlined : hi.overlined;
    if (hi.magnitude != lo.magnitude + (step ? 1 : 0)) return false;
    if (bar && hi.overlined && lo.overlined) return false;
  }
  if (!bar) {
    // r-1 plain parts directly below position i force an overline at i.
    const std::size_t r = spec.r();
    for (std::size_t i = 0; i + r <= m; ++i) {
      bool plain_run = true;
      for (std::size_t j = i + 1; j < i + r && plain_run; ++j) plain_run = !parts[j].overlined;
      if (plain_run && !parts[i].overlined) return false;
    }
  }
  return true;
}

template <class T>
class BasisSearch {
 public:
  BasisSearch(const ClassSpec& spec, std::uint32_t m, std::optional<std::uint64_t> max_weight,
              std::vector<ClassObject>& out)
      : spec_(spec), max_weight_(max_weight), parts_(m), out_(out) {}

  void run() {
    if (parts_.empty()) return;
    extend(parts_.size() - 1, 0);
  }

 private:
  std::vector<T> candidates(std::size_t i) const {
    std::vector<T> c;
    if constexpr (std::is_same_v<T, Part>) {
      const Part lo = i + 1 == parts_.size() ? 1 : parts_[i + 1];
      const Part hi = i + 1 == parts_.size() ? spec_.k() : parts_[i + 1] + spec_.k();
      for (Part x = lo; x <= hi; ++x) c.push_back(x);
    } else {
      const Part lo = i + 1 == parts_.size() ? 1 : parts_[i + 1].magnitude;
      const Part hi = i + 1 == parts_.size() ? 1 : lo + 1;
      for (Part x = lo; x <= hi; ++x) {
        c.push_back(OverPart{x, false});
        c.push_back(OverPart{x, true});
      }
    }
    return c;
  }

  static Part magnitude(const T& x) {
    if constexpr (std::is_same_v<T, Part>) {
      return x;
    } else {
      return x.magnitude;
    }
  }

  void extend(std::size_t i, std::uint64_t weight_below) {
    for (const T& cand : candidates(i)) {
      const std::uint64_t w = weight_below + magnitude(cand);
      // the i parts still to place are each at least as large as cand
      if (max_weight_ && w + std::uint64_t{i} * magnitude(cand) > *max_weight_) continue;
      parts_[i] = cand;
      const std::span<const T> suffix = std::span<const T>(parts_).subspan(i);
      if (!satisfies_basis(spec_, suffix)) continue;
      if (i == 0) {
        emit();
      } else {
        extend(i - 1, w);
      }
    }
  }

  void emit() {
    if constexpr (std::is_same_v<T, Part>) {
      out_.emplace_back(Partition(parts_));
    } else {
      out_.emplace_back(Overpartition(parts_, spec_.convention()));
    }
  }

  const ClassSpec& spec_;
  std::optional<std::uint64_t> max_weight_;
  std::vector<T> parts_;
  std::vector<ClassObject>& out_;
};

void require_basis_kind(const ClassSpec& spec) {
  if (spec.kind() == ClassKind::Gset) throw KindMismatch("G sets have no basis");
}

}  // namespace

bool satisfies_basis(const ClassSpec& spec, std::span<const Part> parts) {
  require_basis_kind(spec);
  if (spec.is_overpartition_class()) {
    throw KindMismatch(spec.name() + " is an overpartition class; got a partition");
  }
  if (parts.empty() || !is_partition_sequence(parts)) return false;
  return spec.is_p_type() ? p_type_basis(spec, parts) : r_type_basis(spec, parts);
}

bool satisfies_basis(const ClassSpec& spec, std::span<const OverPart> parts) {
  if (!spec.is_overpartition_class()) {
    throw KindMismatch(spec.name() + " is a partition class; got an overpartition");
  }
  if (parts.empty()) return false;
  return overpartition_basis(spec, parts);
}

bool is_basis_member(const ClassSpec& spec, const Partition& p) {
  return satisfies_basis(spec, p.parts());
}

bool is_basis_member(const ClassSpec& spec, const Overpartition& p) {
  if (spec.is_overpartition_class() && p.convention() != spec.convention()) {
    throw KindMismatch(spec.name() + " uses the " + to_string(spec.convention()) +
                       "-occurrence convention");
  }
  return satisfies_basis(spec, p.parts());
}

bool is_basis_member(const ClassSpec& spec, const ClassObject& obj) {
  return std::visit([&](const auto& o) { return is_basis_member(spec, o); }, obj);
}

std::vector<ClassObject> enumerate_basis(const ClassSpec& spec, std::uint32_t m,
                                         std::optional<std::uint64_t> max_weight) {
  require_basis_kind(spec);
  std::vector<ClassObject> out;
  if (spec.is_overpartition_class()) {
    BasisSearch<OverPart>(spec, m, max_weight, out).run();
  } else {
    BasisSearch<Part>(spec, m, max_weight, out).run();
  }
  return out;
}

bool is_valid_padding(const ClassSpec& spec, std::span<const Part> padding) {
  for (std::size_t i = 0; i < padding.size(); ++i) {
    if (padding[i] % spec.k() != 0) return false;
    if (i + 1 < padding.size() && padding[i] < padding[i + 1]) return false;
  }
  return true;
}

Decomposition decompose(const ClassSpec& spec, const ClassObject& obj) {
  require_basis_kind(spec);
  if (!is_member(spec, obj)) throw NotAMember(to_string(obj) + " is not in " + spec.name());

  Decomposition d;
  // the empty member is its own basis element with empty padding
  if (weight(obj) == 0) {
    d.basis = obj;
    return d;
  }
  if (const auto* p = std::get_if<Partition>(&obj)) {
    const auto parts = p->parts();
    const std::size_t m = parts.size();
    const auto k = spec.k();
    std::vector<Part> basis(m);
    for (std::size_t j = m; j-- > 0;) {
      if (j + 1 == m) {
        basis[j] = (parts[j] - 1) % k + 1;
        continue;
      }
      // least value >= the part below that has the residue of parts[j];
      // c-parts of R-type bases are distinct, so a repeat jumps by k
      const Part below = basis[j + 1];
      Part v = below + (parts[j] % k + k - below % k) % k;
      if (spec.is_r_type() && v == below && congruent(below, spec.c(), k)) v += k;
      basis[j] = v;
    }
    d.padding.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
      if (basis[j] > parts[j]) {
        throw DecompositionFailure("decompose: basis part exceeds member part for " + p->to_string());
      }
      d.padding[j] = parts[j] - basis[j];
    }
    if (!satisfies_basis(spec, basis) || !is_valid_padding(spec, d.padding)) {
      throw DecompositionFailure("decompose: no consistent assignment for " + p->to_string());
    }
    d.basis = Partition(std::move(basis));
  } else {
    const auto& op = std::get<Overpartition>(obj);
    const auto parts = op.parts();
    const std::size_t m = parts.size();
    const bool first = spec.convention() == Convention::First;
    std::vector<OverPart> basis(m);
    for (std::size_t j = m; j-- > 0;) {
      basis[j].overlined = parts[j].overlined;
      if (j + 1 == m) {
        basis[j].magnitude = 1;
      } else {
        const bool step = first ? parts[j + 1].overlined : parts[j].overlined;
        basis[j].magnitude = basis[j + 1].magnitude + (step ? 1 : 0);
      }
    }
    d.padding.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
      if (basis[j].magnitude > parts[j].magnitude) {
        throw DecompositionFailure("decompose: basis part exceeds member part for " + op.to_string());
      }
      d.padding[j] = parts[j].magnitude - basis[j].magnitude;
    }
    if (!satisfies_basis(spec, basis) || !is_valid_padding(spec, d.padding)) {
      throw DecompositionFailure("decompose: no consistent assignment for " + op.to_string());
    }
    d.basis = Overpartition(std::move(basis), spec.convention());
  }
  return d;
}

ClassObject reconstruct(const ClassSpec& spec, const Decomposition& d) {
  require_basis_kind(spec);
  if (weight(d.basis) == 0 && d.padding.empty() && is_member(spec, d.basis)) return d.basis;
  if (!is_basis_member(spec, d.basis)) {
    throw InvalidArgument(to_string(d.basis) + " is not a basis element of " + spec.name());
  }
  const std::size_t m = std::visit([](const auto& o) { return o.size(); }, d.basis);
  if (d.padding.size() != m) throw InvalidArgument("reconstruct: padding length differs from basis length");
  if (!is_valid_padding(spec, d.padding)) {
    throw InvalidArgument("reconstruct: padding must be non-increasing with entries divisible by " +
                          std::to_string(spec.k()));
  }

  ClassObject result;
  try {
    if (const auto* p = std::get_if<Partition>(&d.basis)) {
      std::vector<Part> parts(m);
      for (std::size_t j = 0; j < m; ++j) parts[j] = (*p)[j] + d.padding[j];
      result = Partition(std::move(parts));
    } else {
      const auto& op = std::get<Overpartition>(d.basis);
      std::vector<OverPart> parts(op.parts().begin(), op.parts().end());
      for (std::size_t j = 0; j < m; ++j) parts[j].magnitude += d.padding[j];
      result = Overpartition(std::move(parts), op.convention());
    }
  } catch (const InvalidArgument& e) {
    throw InternalError(std::string("reconstruct produced a malformed object: ") + e.what());
  }
  if (!is_member(spec, result)) {
    throw InternalError("reconstruct: " + to_string(result) + " escaped " + spec.name());
  }
  return result;
}

Series basis_gf(const ClassSpec& spec, std::uint32_t m, std::uint32_t N) {
  Series out(spec.series_shape(N));
  for (const auto& obj : enumerate_basis(spec, m, N)) {
    out.add_term(TermKey{static_cast<std::uint32_t>(weight(obj)), marker_exponents(spec, obj)}, 1);
  }
  return out;
}

Part smallest_part(const Partition& p) {
  if (p.empty()) throw InvalidArgument("empty partition has no smallest part");
  return p[p.size() - 1];
}

Partition residue_shift(const ClassSpec& from, const ClassSpec& to, const Partition& p) {
  if (!from.is_p_type() || !to.is_p_type() || from.kind() == to.kind() || from.a() != to.a() ||
      from.b() != to.b() || from.k() != to.k() || from.r() != to.r()) {
    throw InvalidArgument("residue_shift maps between P and Pprime bases with equal (a, b, k, r)");
  }
  if (!is_basis_member(from, p)) {
    throw InvalidArgument(p.to_string() + " is not a basis element of " + from.name());
  }
  const auto a = from.a(), b = from.b(), k = from.k();
  const bool lower = smallest_part(p) == b;
  std::vector<Part> image(p.parts().begin(), p.parts().end());
  for (auto& x : image) {
    const bool a_part = congruent(x, a, k);
    if (lower) {
      x -= a_part ? k - b + a : b - a;
    } else {
      x += a_part ? b - a : k - b + a;
    }
  }
  Partition out(std::move(image));
  if (!is_basis_member(to, out)) {
    throw InternalError("residue_shift: image " + out.to_string() + " is not in the basis of " + to.name());
  }
  return out;
}

}  // namespace sepclass
