#pragma once

// Brute-force reference implementations used only by the tests. They are
// written straight from the class and basis definitions on whole sequences,
// without the prefix/suffix pruning the library relies on.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sepclass/bases.hpp"
#include "sepclass/class_spec.hpp"
#include "sepclass/classes.hpp"
#include "sepclass/partition.hpp"
#include "sepclass/series.hpp"

namespace oracle {

using sepclass::ClassKind;
using sepclass::ClassSpec;
using sepclass::Convention;
using sepclass::OverPart;
using Parts = std::vector<std::uint32_t>;
using OParts = std::vector<OverPart>;

inline bool same_residue(std::uint32_t x, std::uint32_t y, std::uint32_t k) { return x % k == y % k; }

// All partitions of n, largest part first.
inline std::vector<Parts> partitions_of(std::uint32_t n) {
  std::vector<Parts> out;
  Parts cur;
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t rest, std::uint32_t cap) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t x = std::min(rest, cap); x >= 1; --x) {
      cur.push_back(x);
      rec(rest - x, x);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// All partitions of n into exactly m parts.
inline std::vector<Parts> partitions_of(std::uint32_t n, std::size_t m) {
  std::vector<Parts> out;
  for (auto& p : partitions_of(n)) {
    if (p.size() == m) out.push_back(std::move(p));
  }
  return out;
}

// Every overpartition of n: each distinct magnitude overlined or not, the
// overline sitting on its first or last occurrence.
inline std::vector<OParts> overpartitions_of(std::uint32_t n, Convention conv) {
  std::vector<OParts> out;
  for (const auto& p : partitions_of(n)) {
    std::vector<std::uint32_t> distinct;
    for (auto x : p) {
      if (distinct.empty() || distinct.back() != x) distinct.push_back(x);
    }
    for (std::uint32_t mask = 0; mask < (1u << distinct.size()); ++mask) {
      OParts op;
      for (auto x : p) op.push_back(OverPart{x, false});
      for (std::size_t d = 0; d < distinct.size(); ++d) {
        if (!(mask >> d & 1)) continue;
        auto first = std::find_if(op.begin(), op.end(), [&](const OverPart& o) { return o.magnitude == distinct[d]; });
        auto last = std::find_if(op.rbegin(), op.rend(), [&](const OverPart& o) { return o.magnitude == distinct[d]; });
        (conv == Convention::First ? *first : *last).overlined = true;
      }
      out.push_back(op);
    }
  }
  return out;
}

inline bool window_all(const Parts& p, std::size_t len, const std::function<bool(std::uint32_t)>& pred) {
  if (len == 0) return true;
  for (std::size_t i = 0; i + len <= p.size(); ++i) {
    bool all = true;
    for (std::size_t j = i; j < i + len; ++j) all = all && pred(p[j]);
    if (all) return true;
  }
  return false;
}

inline bool is_member(const ClassSpec& s, const Parts& p) {
  const auto k = s.k();
  auto is_a = [&](std::uint32_t x) { return same_residue(x, s.a(), k); };
  auto is_b = [&](std::uint32_t x) { return same_residue(x, s.b(), k); };
  auto is_c = [&](std::uint32_t x) { return same_residue(x, s.c(), k); };
  switch (s.kind()) {
    case ClassKind::P:
    case ClassKind::Pprime: {
      for (auto x : p) {
        if (!is_a(x) && !is_b(x)) return false;
      }
      if (s.kind() == ClassKind::P) return !window_all(p, s.r() + 1, is_b);
      return !window_all(p, s.r() + 1, is_a);
    }
    case ClassKind::R:
    case ClassKind::Rr: {
      for (auto x : p) {
        if (!is_a(x) && !is_b(x) && !is_c(x)) return false;
      }
      std::set<std::uint32_t> cs;
      for (auto x : p) {
        if (is_c(x) && !cs.insert(x).second) return false;
      }
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (is_a(p[i]) && !is_a(p[i + 1]) && !is_c(p[i + 1])) return false;
      }
      if (s.kind() == ClassKind::Rr) return !window_all(p, s.r(), is_b);
      return true;
    }
    default:
      return false;
  }
}

inline bool is_canonical(const OParts& p, Convention conv) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].magnitude == 0) return false;
    if (i + 1 < p.size() && p[i].magnitude < p[i + 1].magnitude) return false;
  }
  std::map<std::uint32_t, std::vector<std::size_t>> pos;
  for (std::size_t i = 0; i < p.size(); ++i) pos[p[i].magnitude].push_back(i);
  for (const auto& [mag, idx] : pos) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const bool allowed = conv == Convention::First ? j == 0 : j + 1 == idx.size();
      if (p[idx[j]].overlined && !allowed) return false;
    }
  }
  return true;
}

inline bool is_member(const ClassSpec& s, const OParts& p) {
  if (!is_canonical(p, s.convention())) return false;
  switch (s.kind()) {
    case ClassKind::Fbar:
    case ClassKind::Lbar:
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (p[i].overlined && p[i + 1].overlined) return false;
      }
      return true;
    case ClassKind::Fr:
    case ClassKind::Lr:
      for (std::size_t i = 0; i + s.r() <= p.size(); ++i) {
        bool all_plain = true;
        for (std::size_t j = i; j < i + s.r(); ++j) all_plain = all_plain && !p[j].overlined;
        if (all_plain) return false;
      }
      return true;
    default:
      return false;
  }
}

// Basis membership straight from the printed basis definitions (indices
// 1-based in the definitions, 0-based here).
inline bool is_basis(const ClassSpec& s, const Parts& p) {
  const std::size_t m = p.size();
  if (m == 0) return false;
  const auto k = s.k();
  auto is_a = [&](std::uint32_t x) { return same_residue(x, s.a(), k); };
  auto is_b = [&](std::uint32_t x) { return same_residue(x, s.b(), k); };
  auto is_c = [&](std::uint32_t x) { return same_residue(x, s.c(), k); };
  if (s.is_p_type()) {
    for (auto x : p) {
      if (!is_a(x) && !is_b(x)) return false;
    }
    if (p.back() != s.a() && p.back() != s.b()) return false;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      if (p[i] < p[i + 1] || p[i] - p[i + 1] >= k) return false;
    }
    const bool prime = s.kind() == ClassKind::Pprime;
    auto run_res = prime ? std::function<bool(std::uint32_t)>(is_a) : std::function<bool(std::uint32_t)>(is_b);
    auto head_res = prime ? std::function<bool(std::uint32_t)>(is_b) : std::function<bool(std::uint32_t)>(is_a);
    const std::size_t r = s.r();
    for (std::size_t i = 0; i + r < m; ++i) {
      bool run = true;
      for (std::size_t j = i + 1; j <= i + r; ++j) run = run && run_res(p[j]) && p[j] == p[i + 1];
      if (run && !head_res(p[i])) return false;
    }
    return true;
  }
  if (s.is_r_type()) {
    if (!is_member(s, p)) return false;
    if (p.back() != s.a() && p.back() != s.b() && p.back() != s.c()) return false;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      if (p[i] < p[i + 1]) return false;
      const std::uint32_t gap = p[i] - p[i + 1];
      if (gap > k) return false;
      if ((is_a(p[i + 1]) || is_b(p[i + 1])) && gap == k) return false;
    }
    return true;
  }
  return false;
}

inline bool is_basis(const ClassSpec& s, const OParts& p) {
  const std::size_t m = p.size();
  if (m == 0 || !is_canonical(p, s.convention())) return false;
  if (p.back().magnitude != 1) return false;
  const bool first = s.convention() == Convention::First;
  const bool bar = s.kind() == ClassKind::Fbar || s.kind() == ClassKind::Lbar;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    // F: the step is decided by part i+1; L: by part i
    const bool key = first ? p[i + 1].overlined : p[i].overlined;
    if (!key && p[i].magnitude != p[i + 1].magnitude) return false;
    if (key && p[i].magnitude != p[i + 1].magnitude + 1) return false;
    if (bar && key && (first ? p[i].overlined : p[i + 1].overlined)) return false;
  }
  if (!bar) {
    const std::size_t r = s.r();
    for (std::size_t i = 0; i + r <= m; ++i) {
      bool plain_tail = true;
      for (std::size_t j = i + 1; j < i + r; ++j) plain_tail = plain_tail && !p[j].overlined;
      if (plain_tail && !p[i].overlined) return false;
    }
  }
  return true;
}

// Marker exponents from the definitions.
inline sepclass::Marks marks_of(const ClassSpec& s, const Parts& p) {
  sepclass::Marks out{};
  for (auto x : p) {
    if (same_residue(x, s.a(), s.k())) ++out[0];
    else if (same_residue(x, s.b(), s.k())) ++out[1];
    else if (s.is_r_type() && same_residue(x, s.c(), s.k())) ++out[2];
  }
  return out;
}

inline sepclass::Marks marks_of(const OParts& p) {
  sepclass::Marks out{};
  for (const auto& x : p) out[0] += x.overlined ? 1 : 0;
  return out;
}

inline std::uint64_t weight(const Parts& p) {
  std::uint64_t w = 0;
  for (auto x : p) w += x;
  return w;
}

inline std::uint64_t weight(const OParts& p) {
  std::uint64_t w = 0;
  for (const auto& x : p) w += x.magnitude;
  return w;
}

// Refined generating function summed over the naive member lists.
inline sepclass::Series refined_gf(const ClassSpec& s, std::uint32_t N) {
  sepclass::Series out(s.series_shape(N));
  for (std::uint32_t n = 0; n <= N; ++n) {
    if (s.is_overpartition_class()) {
      for (const auto& p : overpartitions_of(n, s.convention())) {
        if (is_member(s, p)) out.add_term(sepclass::TermKey{n, marks_of(p)}, 1);
      }
    } else {
      for (const auto& p : partitions_of(n)) {
        if (p.empty() || is_member(s, p)) out.add_term(sepclass::TermKey{n, marks_of(s, p)}, 1);
      }
    }
  }
  return out;
}

// Every (basis, padding) pair that sums to obj, searching all m-part basis
// candidates of weight <= |obj| by brute force.
inline std::size_t count_reconstructions(const ClassSpec& s, const sepclass::ClassObject& obj,
                                         sepclass::Decomposition* found = nullptr) {
  std::size_t count = 0;
  const auto k = s.k();
  if (const auto* p = std::get_if<sepclass::Partition>(&obj)) {
    const Parts target(p->parts().begin(), p->parts().end());
    const std::size_t m = target.size();
    for (std::uint32_t w = 0; w <= weight(target); ++w) {
      for (const auto& b : partitions_of(w, m)) {
        if (!is_basis(s, b)) continue;
        std::vector<std::uint32_t> pad(m);
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
          ok = target[i] >= b[i] && (target[i] - b[i]) % k == 0 && (i == 0 || target[i] - b[i] <= pad[i - 1]);
          if (ok) pad[i] = target[i] - b[i];
        }
        if (!ok) continue;
        ++count;
        if (found) *found = sepclass::Decomposition{sepclass::Partition(b), pad};
      }
    }
    return count;
  }
  const auto& op = std::get<sepclass::Overpartition>(obj);
  const OParts target(op.parts().begin(), op.parts().end());
  const std::size_t m = target.size();
  for (std::uint32_t w = 0; w <= weight(target); ++w) {
    for (const auto& mags : partitions_of(w, m)) {
      OParts b;
      for (std::size_t i = 0; i < m; ++i) b.push_back(OverPart{mags[i], target[i].overlined});
      if (!is_basis(s, b)) continue;
      std::vector<std::uint32_t> pad(m);
      bool ok = true;
      for (std::size_t i = 0; i < m && ok; ++i) {
        ok = target[i].magnitude >= b[i].magnitude &&
             (i == 0 || target[i].magnitude - b[i].magnitude <= pad[i - 1]);
        if (ok) pad[i] = target[i].magnitude - b[i].magnitude;
      }
      if (!ok) continue;
      ++count;
      if (found) *found = sepclass::Decomposition{sepclass::Overpartition(b, s.convention()), pad};
    }
  }
  return count;
}

// "k+a,2k+b,b" with the spec's a, b, c, k substituted.
inline std::vector<std::uint32_t> substitute(const std::string& text, std::uint32_t a, std::uint32_t b,
                                             std::uint32_t c, std::uint32_t k) {
  std::vector<std::uint32_t> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::uint32_t v = 0;
    const auto plus = tok.find('+');
    std::string res = tok;
    if (plus != std::string::npos) {
      const std::string mult = tok.substr(0, plus);  // "k" or "2k"
      v = (mult == "k" ? 1u : static_cast<std::uint32_t>(std::stoul(mult))) * k;
      res = tok.substr(plus + 1);
    }
    v += res == "a" ? a : res == "b" ? b : res == "c" ? c : 0;
    out.push_back(v);
  }
  return out;
}

}  // namespace oracle
