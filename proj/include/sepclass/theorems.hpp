#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sepclass/class_spec.hpp"
#include "sepclass/series.hpp"

namespace sepclass {

using Json = nlohmann::ordered_json;

/// Closed-form product sides of the class generating functions.
enum class Theorem {
  P,         // sum over P_{a,b,k,r}, markers (mu, nu)
  Pprime,    // sum over P'_{a,b,k,r}
  R,         // sum over R_{a,b,c,k}, markers (mu, nu, omega)
  Rr,        // sum over R_{a,b,c,k,r}
  Fbar,      // z^s q^{m+s^2-s} [m-s+1, s] / (q;q)_m
  Lbar,      // z^s q^{m+(s-1)^2} ([m-s, s-1] + q^{2s-1} [m-s, s]) / (q;q)_m
  Fr,        // z^s q^{m+(s^2-s)/2} sum_i ... / (q;q)_m
  Lr,        // L_r with the s >= 1 block weighted q^{m+(s^2-s)/2}
  LrLiteral, // L_r as typeset, whose s >= 1 block carries a second q^m
};

/// Polynomials for the basis sets B(m) and their slices.
enum class BasisFormula {
  BP,         // BP(m), markers (mu, nu)
  BPSmallA,   // BP(m, a): smallest part a
  BPSmallB,   // BP(m, b): smallest part b
  BPprime,    // BP'(m)
  BPprimeSmallA,
  BPprimeSmallB,
  BR,         // BR(m), markers (mu, nu, omega)
  BRr,        // BR_r(m)
  BFbar,      // BFbar(m, s), marker z
  BFr,        // BF_r(m, s)
  BLbar,      // BLbar(m, s)
  BLr,        // BL_r(m, s)
};

/// Formula matching the class of a spec (Lr maps to the corrected form).
Theorem default_theorem(const ClassSpec& spec);
std::string to_string(Theorem t);
std::string to_string(BasisFormula f);

/// Evaluates a product side as a series in the spec's marker shape.
/// Throws KindMismatch if the formula does not belong to the spec's class.
Series closed_form_gf(Theorem theorem, const ClassSpec& spec, std::uint32_t N);
Series closed_form_gf(const ClassSpec& spec, std::uint32_t N);

/// Basis polynomial of m-part basis elements. For the overpartition
/// formulas, `s` selects the slice with s overlined parts (times z^s);
/// without it all slices are summed. `s` is rejected for partition formulas.
Series basis_closed_form(BasisFormula formula, const ClassSpec& spec, std::uint32_t m, std::uint32_t N,
                         std::optional<std::uint32_t> s = std::nullopt);

/// 1 + sum_m basis_gf(spec, m) / (q^k; q^k)_m, summed while m-part members
/// can still have weight <= N.
Series basis_driven_gf(const ClassSpec& spec, std::uint32_t N);

enum class Status { Match, Mismatch };

struct Discrepancy {
  TermKey key;
  std::vector<BigInt> coeffs;  // one per route
};

struct VerificationReport {
  Json spec;  // class spec, or identity name plus parameters
  std::uint32_t N = 0;
  std::vector<std::string> routes;
  std::vector<std::string> marker_names;
  Status status = Status::Match;
  std::optional<Discrepancy> first_discrepancy;
  double elapsed_ms = 0;
};

/// Compares named series term by term. The reported discrepancy is the
/// least key (q exponent, then markers) where any two routes disagree.
/// Throws ShapeMismatch if the series do not share a shape.
VerificationReport compare_routes(const std::vector<std::string>& names, const std::vector<Series>& series);

/// Oracle (brute-force), basis-driven and closed-form series of a class,
/// compared at truncation N.
VerificationReport verify(const ClassSpec& spec, std::uint32_t N);
/// As verify, with an explicit closed-form formula.
VerificationReport verify(const ClassSpec& spec, Theorem theorem, std::uint32_t N);

/// Verifies every spec; `jobs` > 1 spreads the work over threads. Reports
/// come back in input order regardless of scheduling.
std::vector<VerificationReport> verify_all(const std::vector<ClassSpec>& specs, std::uint32_t N,
                                           unsigned jobs = 1);

enum class Identity {
  Theorem22,          // q^{hd} g_{k,r}(h, s) = GF of G_{d,k,r}(h, s)
  Corollary23,        // g_{k,r}(h, s) = 0 for h > (r-1)s
  Theorem25,          // GF of G_{d,k,2}(h, s) = q^{hd + k(h^2-h)/2} [s, h]_k
  Corollary26,        // g_{k,2}(h, s) = q^{k(h^2-h)/2} [s, h]_k
  Cauchy1,            // (z;q)_s = sum_i (-1)^i z^i q^{(i^2-i)/2} [s, i]
  Cauchy2,            // 1/(z;q)_s = sum_i z^i [i+s-1, s-1]
  QBinomialRecurrence // [A,B]_k = [A-1,B]_k + q^{k(A-B)} [A-1,B-1]_k
};

struct IdentityParams {
  std::uint32_t d = 1, k = 1, r = 1, h = 0, s = 0;
  std::int64_t A = 0, B = 0;
};

std::string to_string(Identity id);
/// Accepts thm2.2, cor2.3, thm2.5, cor2.6, cauchy1, cauchy2, recurrence.
Identity parse_identity(const std::string& text);

/// Both sides of an identity as series, compared exactly. Parameters
/// outside an identity's hypotheses raise InvalidArgument.
VerificationReport check_identity(Identity id, const IdentityParams& params, std::uint32_t N);

}  // namespace sepclass
