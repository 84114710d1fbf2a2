#include "sepclass/theorems.hpp"

#include <chrono>
#include <future>
#include <set>

#include "sepclass/bases.hpp"
#include "sepclass/classes.hpp"
#include "sepclass/errors.hpp"
#include "sepclass/json_io.hpp"
#include "sepclass/qfunctions.hpp"

namespace sepclass {

namespace {

using i64 = std::int64_t;

Marks marks_of(i64 x, i64 y = 0, i64 z = 0) {
  return Marks{static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(z)};
}

// acc += sign * q^e * markers^marks * factor. The exponent may come out
// negative only when the factor vanishes.
void accumulate(Series& acc, i64 e, const Marks& marks, const Series& factor, int sign = 1) {
  if (factor.is_zero()) return;
  if (e < 0) throw InternalError("negative q-exponent on a non-vanishing term");
  if (e > acc.trunc()) return;
  acc += factor.scaled(static_cast<std::uint32_t>(e), marks, sign);
}

// s / (q^k; q^k)_m
Series over_pochhammer(Series s, std::uint32_t k, std::uint32_t m) {
  for (std::uint64_t i = 1; i <= m && std::uint64_t{k} * i <= s.trunc(); ++i) {
    s = div_one_minus(s, static_cast<std::uint32_t>(k * i));
  }
  return s;
}

// sum_i (-1)^i q^{r(i^2-i)/2} [top, i]_r [row - r i, col]_1
Series alternating_sum(std::uint32_t r, i64 top, i64 row, i64 col, const Shape& sh) {
  Series out(sh);
  for (i64 i = 0; i <= top && row - i64{r} * i >= col; ++i) {
    const i64 e = i64{r} * (i * i - i) / 2;
    if (e > sh.trunc) break;
    accumulate(out, e, Marks{}, gaussian(top, i, r, sh) * gaussian(row - i64{r} * i, col, 1, sh),
               i % 2 == 0 ? 1 : -1);
  }
  return out;
}

void require_kind(const ClassSpec& spec, std::initializer_list<ClassKind> kinds, const std::string& what) {
  for (auto k : kinds) {
    if (spec.kind() == k) return;
  }
  throw KindMismatch(what + " does not apply to " + spec.name());
}

// ---- partition classes: the bracketed m-part polynomials ----

// mu^m q^{ma} + sum_{s>=1,h>=0} mu^{m-h-s} nu^{h+s} q^{(m-h-s)a+(h+s)b+k(s^2-s)}
//   [m-h-s+1, s]_k g_{k,r}(h, s)
Series p_braces(const ClassSpec& spec, std::uint32_t m, const Shape& sh) {
  const i64 a = spec.a(), b = spec.b(), k = spec.k();
  Series out(sh);
  accumulate(out, m * a, marks_of(m, 0), Series::one(sh));
  for (i64 s = 1; s <= m; ++s) {
    for (i64 h = 0; h + s <= m; ++h) {
      const i64 e = (m - h - s) * a + (h + s) * b + k * (s * s - s);
      if (e > sh.trunc) continue;
      Series gauss = gaussian(m - h - s + 1, s, spec.k(), sh);
      if (gauss.is_zero()) continue;
      accumulate(out, e, marks_of(m - h - s, h + s), gauss * g_poly(spec.k(), spec.r(), h, s, sh));
    }
  }
  return out;
}

// nu^m q^{mb} + sum mu^{h+s} nu^{m-h-s} q^{(h+s)a+(m-h-s)b+k(s-1)^2}
//   ([m-h-s, s-1]_k + q^{k(h+2s-1)} [m-h-s, s]_k) g_{k,r}(h, s)
Series pprime_braces(const ClassSpec& spec, std::uint32_t m, const Shape& sh) {
  const i64 a = spec.a(), b = spec.b(), k = spec.k();
  Series out(sh);
  accumulate(out, m * b, marks_of(0, m), Series::one(sh));
  for (i64 s = 1; s <= m; ++s) {
    for (i64 h = 0; h + s <= m; ++h) {
      const i64 e = (h + s) * a + (m - h - s) * b + k * (s - 1) * (s - 1);
      if (e > sh.trunc) continue;
      Series bracket(sh);
      accumulate(bracket, 0, Marks{}, gaussian(m - h - s, s - 1, spec.k(), sh));
      accumulate(bracket, k * (h + 2 * s - 1), Marks{}, gaussian(m - h - s, s, spec.k(), sh));
      if (bracket.is_zero()) continue;
      accumulate(out, e, marks_of(h + s, m - h - s), bracket * g_poly(spec.k(), spec.r(), h, s, sh));
    }
  }
  return out;
}

// sum_{s,h>=0} mu^{m-h-s} nu^h omega^s q^{(m-h-s)a+hb+sc+k(s^2-s)/2} [m-h, s]_k
//   times [h+s, s]_k (R) or g_{k,r}(h, s+1) (Rr)
Series r_braces(const ClassSpec& spec, std::uint32_t m, const Shape& sh) {
  const i64 a = spec.a(), b = spec.b(), c = spec.c(), k = spec.k();
  const bool restricted = spec.kind() == ClassKind::Rr;
  Series out(sh);
  for (i64 s = 0; s <= m; ++s) {
    for (i64 h = 0; h + s <= m; ++h) {
      const i64 e = (m - h - s) * a + h * b + s * c + k * (s * s - s) / 2;
      if (e > sh.trunc) continue;
      Series gauss = gaussian(m - h, s, spec.k(), sh);
      if (gauss.is_zero()) continue;
      Series second = restricted ? g_poly(spec.k(), spec.r(), h, static_cast<std::uint32_t>(s + 1), sh)
                                 : gaussian(h + s, s, spec.k(), sh);
      accumulate(out, e, marks_of(m - h - s, h, s), gauss * second);
    }
  }
  return out;
}

// ---- overpartition classes, printed forms: m-part bodies before 1/(q;q)_m ----

Series fbar_body(std::uint32_t m, const Shape& sh) {
  Series out(sh);
  for (i64 s = 0; s <= m; ++s) accumulate(out, m + s * s - s, marks_of(s), gaussian(m - s + 1, s, 1, sh));
  return out;
}

Series lbar_body(std::uint32_t m, const Shape& sh) {
  Series out(sh);
  for (i64 s = 0; s <= m; ++s) {
    accumulate(out, m + (s - 1) * (s - 1), marks_of(s), gaussian(m - s, s - 1, 1, sh));
    accumulate(out, m + (s - 1) * (s - 1) + 2 * s - 1, marks_of(s), gaussian(m - s, s, 1, sh));
  }
  return out;
}

Series fr_body(std::uint32_t r, std::uint32_t m, const Shape& sh) {
  Series out(sh);
  for (i64 s = 0; s <= m; ++s) {
    accumulate(out, m + (s * s - s) / 2, marks_of(s), alternating_sum(r, s + 1, m, s, sh));
  }
  return out;
}

// q^m [r-m-1, 0] + sum_{s>=1} z^s q^{m+(s^2-s)/2 + extra}
//   (sum_i ... [m-ri-1, s-1] + sum_{j=1}^{r-1} q^{m-j} sum_i ... [m-j-ri-1, s-1])
// extra = 0 for the corrected form, m for the form as typeset.
Series lr_body(std::uint32_t r, std::uint32_t m, bool literal, const Shape& sh) {
  Series out(sh);
  accumulate(out, m, Marks{}, gaussian(i64{r} - m - 1, 0, 1, sh));
  const i64 extra = literal ? m : 0;
  for (i64 s = 1; s <= m; ++s) {
    Series inner = alternating_sum(r, s, i64{m} - 1, s - 1, sh);
    for (i64 j = 1; j < r; ++j) {
      accumulate(inner, i64{m} - j, Marks{}, alternating_sum(r, s, i64{m} - j - 1, s - 1, sh));
    }
    accumulate(out, m + (s * s - s) / 2 + extra, marks_of(s), inner);
  }
  return out;
}

// ---- lemma-level basis polynomials ----

Series bp_small_a(const ClassSpec& spec, std::uint32_t m, const Shape& sh) {
  const i64 a = spec.a(), b = spec.b(), k = spec.k();
  Series out(sh);
  accumulate(out, m * a, marks_of(m, 0), Series::one(sh));
  for (i64 s = 1; s <= m; ++s) {
    for (i64 h = 0; h + s <= m; ++h) {
      const i64 e = (m - h - s) * a + (h + s) * b + k * (s * s - s);
      if (e > sh.trunc) continue;
      Series gauss = gaussian(m - h - s, s, spec.k(), sh);
      if (gauss.is_zero()) continue;
      accumulate(out, e, marks_of(m - h - s, h + s), gauss * g_poly(spec.k(), spec.r(), h, s, sh));
    }
  }
  return out;
}

Series bp_small_b(const ClassSpec& spec, std::uint32_t m, const Shape& sh) {
  const i64 a = spec.a(), b = spec.b(), k = spec.k();
  Series out(sh);
  for (i64 s = 1; s <= m; ++s) {
    for (i64 h = 0; h + s <= m; ++h) {
      Series gauss = gaussian(m - h - s, s - 1, spec.k(), sh);
      if (gauss.is_zero()) continue;
      const i64 e = (m - h - s) * a + (h + s) * b + k * (s * s - s) + k * (m - h - 2 * s + 1);
      if (e > sh.trunc) continue;
      accumulate(out, e, marks_of(m - h - s, h + s), gauss * g_poly(spec.k(), spec.r(), h, s, sh));
    }
  }
  return out;
}

Series bpprime_small_a(const ClassSpec& spec, std::uint32_t m, const Shape& sh) {
  const i64 a = spec.a(), b = spec.b(), k = spec.k();
  Series out(sh);
  for (i64 s = 1; s <= m; ++s) {
    for (i64 h = 0; h + s <= m; ++h) {
      const i64 e = (h + s) * a + (m - h - s) * b + k * (s - 1) * (s - 1);
      if (e > sh.trunc) continue;
      Series gauss = gaussian(m - h - s, s - 1, spec.k(), sh);
      if (gauss.is_zero()) continue;
      accumulate(out, e, marks_of(h + s, m - h - s), gauss * g_poly(spec.k(), spec.r(), h, s, sh));
    }
  }
  return out;
}

Series bpprime_small_b(const ClassSpec& spec, std::uint32_t m, const Shape& sh) {
  const i64 a = spec.a(), b = spec.b(), k = spec.k();
  Series out(sh);
  accumulate(out, m * b, marks_of(0, m), Series::one(sh));
  for (i64 s = 1; s <= m; ++s) {
    for (i64 h = 0; h + s <= m; ++h) {
      const i64 e = (h + s) * a + (m - h - s) * b + k * s * s + k * h;
      if (e > sh.trunc) continue;
      Series gauss = gaussian(m - h - s, s, spec.k(), sh);
      if (gauss.is_zero()) continue;
      accumulate(out, e, marks_of(h + s, m - h - s), gauss * g_poly(spec.k(), spec.r(), h, s, sh));
    }
  }
  return out;
}

Series bfbar_slice(std::uint32_t m, i64 s, const Shape& sh) {
  Series out(sh);
  accumulate(out, m + s * s - s, marks_of(s), gaussian(m - s + 1, s, 1, sh));
  return out;
}

Series bfr_slice(std::uint32_t r, std::uint32_t m, i64 s, const Shape& sh) {
  Series out(sh);
  accumulate(out, m + (s * s - s) / 2, marks_of(s), g_poly(1, r, i64{m} - s, static_cast<std::uint32_t>(s + 1), sh));
  return out;
}

Series blbar_slice(std::uint32_t m, i64 s, const Shape& sh) {
  Series out(sh);
  accumulate(out, m + (s - 1) * (s - 1), marks_of(s), gaussian(m - s, s - 1, 1, sh));
  accumulate(out, m + s * s, marks_of(s), gaussian(m - s, s, 1, sh));
  return out;
}

Series blr_slice(std::uint32_t r, std::uint32_t m, i64 s, const Shape& sh) {
  Series out(sh);
  if (s == 0) {
    accumulate(out, m, Marks{}, gaussian(i64{r} - m - 1, 0, 1, sh));
    return out;
  }
  const auto su = static_cast<std::uint32_t>(s);
  Series inner = g_poly(1, r, i64{m} - s, su, sh);
  for (i64 j = 1; j < r; ++j) accumulate(inner, i64{m} - j, Marks{}, g_poly(1, r, i64{m} - j - s, su, sh));
  accumulate(out, m + (s * s - s) / 2, marks_of(s), inner);
  return out;
}

std::chrono::steady_clock::time_point now() { return std::chrono::steady_clock::now(); }

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(now() - start).count();
}

}  // namespace

Theorem default_theorem(const ClassSpec& spec) {
  switch (spec.kind()) {
    case ClassKind::P: return Theorem::P;
    case ClassKind::Pprime: return Theorem::Pprime;
    case ClassKind::R: return Theorem::R;
    case ClassKind::Rr: return Theorem::Rr;
    case ClassKind::Fbar: return Theorem::Fbar;
    case ClassKind::Lbar: return Theorem::Lbar;
    case ClassKind::Fr: return Theorem::Fr;
    case ClassKind::Lr: return Theorem::Lr;
    case ClassKind::Gset: break;
  }
  throw KindMismatch("G sets have no closed-form class generating function");
}

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::P: return "P";
    case Theorem::Pprime: return "Pprime";
    case Theorem::R: return "R";
    case Theorem::Rr: return "Rr";
    case Theorem::Fbar: return "Fbar";
    case Theorem::Lbar: return "Lbar";
    case Theorem::Fr: return "Fr";
    case Theorem::Lr: return "Lr";
    case Theorem::LrLiteral: return "Lr-literal";
  }
  return "?";
}

std::string to_string(BasisFormula f) {
  switch (f) {
    case BasisFormula::BP: return "BP";
    case BasisFormula::BPSmallA: return "BP-small-a";
    case BasisFormula::BPSmallB: return "BP-small-b";
    case BasisFormula::BPprime: return "BPprime";
    case BasisFormula::BPprimeSmallA: return "BPprime-small-a";
    case BasisFormula::BPprimeSmallB: return "BPprime-small-b";
    case BasisFormula::BR: return "BR";
    case BasisFormula::BRr: return "BRr";
    case BasisFormula::BFbar: return "BFbar";
    case BasisFormula::BFr: return "BFr";
    case BasisFormula::BLbar: return "BLbar";
    case BasisFormula::BLr: return "BLr";
  }
  return "?";
}

Series closed_form_gf(Theorem theorem, const ClassSpec& spec, std::uint32_t N) {
  switch (theorem) {
    case Theorem::P: require_kind(spec, {ClassKind::P}, to_string(theorem)); break;
    case Theorem::Pprime: require_kind(spec, {ClassKind::Pprime}, to_string(theorem)); break;
    case Theorem::R: require_kind(spec, {ClassKind::R}, to_string(theorem)); break;
    case Theorem::Rr: require_kind(spec, {ClassKind::Rr}, to_string(theorem)); break;
    case Theorem::Fbar: require_kind(spec, {ClassKind::Fbar}, to_string(theorem)); break;
    case Theorem::Lbar: require_kind(spec, {ClassKind::Lbar}, to_string(theorem)); break;
    case Theorem::Fr: require_kind(spec, {ClassKind::Fr}, to_string(theorem)); break;
    case Theorem::Lr:
    case Theorem::LrLiteral: require_kind(spec, {ClassKind::Lr}, to_string(theorem)); break;
  }
  const Shape sh = spec.series_shape(N);
  Series total = Series::one(sh);
  for (std::uint32_t m = 1; spec.min_weight(m) <= N; ++m) {
    Series body(sh);
    switch (theorem) {
      case Theorem::P: body = p_braces(spec, m, sh); break;
      case Theorem::Pprime: body = pprime_braces(spec, m, sh); break;
      case Theorem::R:
      case Theorem::Rr: body = r_braces(spec, m, sh); break;
      case Theorem::Fbar: body = fbar_body(m, sh); break;
      case Theorem::Lbar: body = lbar_body(m, sh); break;
      case Theorem::Fr: body = fr_body(spec.r(), m, sh); break;
      case Theorem::Lr: body = lr_body(spec.r(), m, false, sh); break;
      case Theorem::LrLiteral: body = lr_body(spec.r(), m, true, sh); break;
    }
    total += over_pochhammer(std::move(body), spec.k(), m);
  }
  return total;
}

Series closed_form_gf(const ClassSpec& spec, std::uint32_t N) {
  return closed_form_gf(default_theorem(spec), spec, N);
}

Series basis_closed_form(BasisFormula formula, const ClassSpec& spec, std::uint32_t m, std::uint32_t N,
                         std::optional<std::uint32_t> s) {
  if (m == 0) throw InvalidArgument("basis polynomials need m >= 1");
  const Shape sh = spec.series_shape(N);
  const std::string what = to_string(formula);
  auto slices = [&](auto slice) {
    if (s) return slice(i64{*s});
    Series out(sh);
    for (i64 t = 0; t <= m; ++t) out += slice(t);
    return out;
  };
  auto no_slice = [&] {
    if (s) throw InvalidArgument(what + " has no overline slices");
  };
  switch (formula) {
    case BasisFormula::BP:
      require_kind(spec, {ClassKind::P}, what), no_slice();
      return p_braces(spec, m, sh);
    case BasisFormula::BPSmallA:
      require_kind(spec, {ClassKind::P}, what), no_slice();
      return bp_small_a(spec, m, sh);
    case BasisFormula::BPSmallB:
      require_kind(spec, {ClassKind::P}, what), no_slice();
      return bp_small_b(spec, m, sh);
    case BasisFormula::BPprime:
      require_kind(spec, {ClassKind::Pprime}, what), no_slice();
      return bpprime_small_a(spec, m, sh) + bpprime_small_b(spec, m, sh);
    case BasisFormula::BPprimeSmallA:
      require_kind(spec, {ClassKind::Pprime}, what), no_slice();
      return bpprime_small_a(spec, m, sh);
    case BasisFormula::BPprimeSmallB:
      require_kind(spec, {ClassKind::Pprime}, what), no_slice();
      return bpprime_small_b(spec, m, sh);
    case BasisFormula::BR:
      require_kind(spec, {ClassKind::R}, what), no_slice();
      return r_braces(spec, m, sh);
    case BasisFormula::BRr:
      require_kind(spec, {ClassKind::Rr}, what), no_slice();
      return r_braces(spec, m, sh);
    case BasisFormula::BFbar:
      require_kind(spec, {ClassKind::Fbar}, what);
      return slices([&](i64 t) { return bfbar_slice(m, t, sh); });
    case BasisFormula::BFr:
      require_kind(spec, {ClassKind::Fr}, what);
      return slices([&](i64 t) { return bfr_slice(spec.r(), m, t, sh); });
    case BasisFormula::BLbar:
      require_kind(spec, {ClassKind::Lbar}, what);
      return slices([&](i64 t) { return blbar_slice(m, t, sh); });
    case BasisFormula::BLr:
      require_kind(spec, {ClassKind::Lr}, what);
      return slices([&](i64 t) { return blr_slice(spec.r(), m, t, sh); });
  }
  throw InvalidArgument("unknown basis formula");
}

Series basis_driven_gf(const ClassSpec& spec, std::uint32_t N) {
  if (spec.kind() == ClassKind::Gset) throw KindMismatch("G sets have no basis");
  Series total = Series::one(spec.series_shape(N));
  for (std::uint32_t m = 1; spec.min_weight(m) <= N; ++m) {
    total += over_pochhammer(basis_gf(spec, m, N), spec.k(), m);
  }
  return total;
}

VerificationReport compare_routes(const std::vector<std::string>& names, const std::vector<Series>& series) {
  if (names.size() != series.size() || series.empty()) {
    throw InvalidArgument("compare_routes: need one name per series");
  }
  VerificationReport report;
  report.routes = names;
  report.N = series.front().trunc();
  report.marker_names = series.front().shape().names;
  for (const auto& s : series) {
    if (!s.shape().compatible(series.front().shape())) {
      throw ShapeMismatch("compare_routes: routes have different shapes");
    }
  }
  std::set<TermKey> keys;
  for (const auto& s : series) {
    for (const auto& [key, c] : s.terms()) keys.insert(key);
  }
  for (const auto& key : keys) {
    std::vector<BigInt> coeffs;
    for (const auto& s : series) coeffs.push_back(s.coeff(key));
    for (const auto& c : coeffs) {
      if (c != coeffs.front()) {
        report.status = Status::Mismatch;
        report.first_discrepancy = Discrepancy{key, coeffs};
        return report;
      }
    }
  }
  report.status = Status::Match;
  return report;
}

VerificationReport verify(const ClassSpec& spec, Theorem theorem, std::uint32_t N) {
  const auto start = now();
  std::vector<Series> routes;
  routes.push_back(refined_gf(spec, N));
  routes.push_back(basis_driven_gf(spec, N));
  routes.push_back(closed_form_gf(theorem, spec, N));
  auto report = compare_routes({"oracle", "basis", "closed"}, routes);
  report.spec = to_json(spec);
  if (theorem != default_theorem(spec)) report.spec["formula"] = to_string(theorem);
  report.elapsed_ms = ms_since(start);
  return report;
}

VerificationReport verify(const ClassSpec& spec, std::uint32_t N) {
  return verify(spec, default_theorem(spec), N);
}

std::vector<VerificationReport> verify_all(const std::vector<ClassSpec>& specs, std::uint32_t N, unsigned jobs) {
  std::vector<VerificationReport> reports(specs.size());
  if (jobs <= 1 || specs.size() <= 1) {
    for (std::size_t i = 0; i < specs.size(); ++i) reports[i] = verify(specs[i], N);
    return reports;
  }
  // strided split; each worker owns disjoint report slots
  std::vector<std::future<void>> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < specs.size(); i += jobs) reports[i] = verify(specs[i], N);
    }));
  }
  for (auto& f : workers) f.get();
  return reports;
}

std::string to_string(Identity id) {
  switch (id) {
    case Identity::Theorem22: return "thm2.2";
    case Identity::Corollary23: return "cor2.3";
    case Identity::Theorem25: return "thm2.5";
    case Identity::Corollary26: return "cor2.6";
    case Identity::Cauchy1: return "cauchy1";
    case Identity::Cauchy2: return "cauchy2";
    case Identity::QBinomialRecurrence: return "recurrence";
  }
  return "?";
}

Identity parse_identity(const std::string& text) {
  for (auto id : {Identity::Theorem22, Identity::Corollary23, Identity::Theorem25, Identity::Corollary26,
                  Identity::Cauchy1, Identity::Cauchy2, Identity::QBinomialRecurrence}) {
    if (text == to_string(id)) return id;
  }
  throw InvalidArgument("unknown identity \"" + text +
                        "\" (expected thm2.2, cor2.3, thm2.5, cor2.6, cauchy1, cauchy2 or recurrence)");
}

VerificationReport check_identity(Identity id, const IdentityParams& p, std::uint32_t N) {
  const auto start = now();
  const Shape plain = Shape::plain(N);
  Json subject = {{"identity", to_string(id)}};
  std::vector<std::string> names;
  std::vector<Series> sides;

  switch (id) {
    case Identity::Theorem22: {
      const auto G = ClassSpec::G(p.d, p.k, p.r, p.h, p.s);
      subject.update({{"d", p.d}, {"k", p.k}, {"r", p.r}, {"h", p.h}, {"s", p.s}});
      names = {"enumeration", "q^(hd) g"};
      sides.push_back(G_gf(G, N));
      Series rhs(plain);
      accumulate(rhs, i64{p.h} * p.d, Marks{}, g_poly(p.k, p.r, p.h, p.s, plain));
      sides.push_back(std::move(rhs));
      break;
    }
    case Identity::Corollary23: {
      if (p.k < 1 || p.r < 1 || p.s < 1) throw InvalidArgument("cor2.3 needs k, r, s >= 1");
      if (i64{p.h} <= i64{p.r - 1} * p.s) throw InvalidArgument("cor2.3 needs h > (r-1)s");
      subject.update({{"k", p.k}, {"r", p.r}, {"h", p.h}, {"s", p.s}});
      names = {"g", "zero"};
      sides.push_back(g_poly(p.k, p.r, p.h, p.s, plain));
      sides.push_back(Series::zero(plain));
      break;
    }
    case Identity::Theorem25: {
      const auto G = ClassSpec::G(p.d, p.k, 2, p.h, p.s);
      subject.update({{"d", p.d}, {"k", p.k}, {"h", p.h}, {"s", p.s}});
      names = {"enumeration", "q^(hd+k(h^2-h)/2) [s,h]"};
      sides.push_back(G_gf(G, N));
      Series rhs(plain);
      const i64 h = p.h;
      accumulate(rhs, h * p.d + i64{p.k} * (h * h - h) / 2, Marks{}, gaussian(p.s, h, p.k, plain));
      sides.push_back(std::move(rhs));
      break;
    }
    case Identity::Corollary26: {
      if (p.k < 1 || p.s < 1) throw InvalidArgument("cor2.6 needs k, s >= 1");
      subject.update({{"k", p.k}, {"h", p.h}, {"s", p.s}});
      names = {"g_{k,2}", "q^(k(h^2-h)/2) [s,h]"};
      sides.push_back(g_poly(p.k, 2, p.h, p.s, plain));
      Series rhs(plain);
      const i64 h = p.h;
      accumulate(rhs, i64{p.k} * (h * h - h) / 2, Marks{}, gaussian(p.s, h, p.k, plain));
      sides.push_back(std::move(rhs));
      break;
    }
    case Identity::Cauchy1: {
      subject.update({{"s", p.s}});
      const Shape sh = Shape::with_markers(N, {"z"});
      names = {"product", "sum"};
      Series product = Series::one(sh);
      for (std::uint32_t j = 0; j < p.s; ++j) product -= product.scaled(j, marks_of(1));
      Series sum(sh);
      for (i64 i = 0; i <= p.s; ++i) {
        accumulate(sum, (i * i - i) / 2, marks_of(i), gaussian(p.s, i, 1, sh), i % 2 == 0 ? 1 : -1);
      }
      sides.push_back(std::move(product));
      sides.push_back(std::move(sum));
      break;
    }
    case Identity::Cauchy2: {
      if (p.s < 1) throw InvalidArgument("cauchy2 needs s >= 1");
      subject.update({{"s", p.s}});
      const Shape sh = Shape::with_markers(N, {"z"});
      names = {"product", "sum"};
      Series product = Series::one(sh);
      for (std::uint32_t j = 0; j < p.s; ++j) product = div_one_minus_monomial(product, j, marks_of(1));
      Series sum(sh);
      for (i64 i = 0; i <= sh.caps[0]; ++i) accumulate(sum, 0, marks_of(i), gaussian(i + p.s - 1, i64{p.s} - 1, 1, sh));
      sides.push_back(std::move(product));
      sides.push_back(std::move(sum));
      break;
    }
    case Identity::QBinomialRecurrence: {
      if (p.k < 1 || !(1 <= p.B && p.B < p.A)) throw InvalidArgument("recurrence needs 1 <= B < A and k >= 1");
      subject.update({{"A", p.A}, {"B", p.B}, {"k", p.k}});
      names = {"[A,B]", "[A-1,B] + q^(k(A-B)) [A-1,B-1]"};
      sides.push_back(gaussian(p.A, p.B, p.k, plain));
      Series rhs = gaussian(p.A - 1, p.B, p.k, plain);
      accumulate(rhs, i64{p.k} * (p.A - p.B), Marks{}, gaussian(p.A - 1, p.B - 1, p.k, plain));
      sides.push_back(std::move(rhs));
      break;
    }
  }
  auto report = compare_routes(names, sides);
  report.spec = std::move(subject);
  report.elapsed_ms = ms_since(start);
  return report;
}

}  // namespace sepclass
