#ifndef CPPFORGE_CRITERIA_HPP
#define CPPFORGE_CRITERIA_HPP

#include <vector>

#include "cppforge/field.hpp"
#include "cppforge/permutation.hpp"
#include "cppforge/poly.hpp"
#include "cppforge/report.hpp"

namespace cppforge {

struct CriterionOptions {
  bool cross_check = true;
  ExhaustiveOptions exhaustive;
};

// Records brute's verdict as the cross-check of r. If the two disagree, r
// becomes an error carrying a discrepancy event.
void attach_cross_check(VerificationReport& r, const VerificationReport& brute);

// x -> x^r f(x^s)
FieldMap index_form_map(u64 r, const DensePoly& f, u64 s);

/// P(x) = x^r f(x^s) over f.ctx() with s | q - 1, l = (q - 1)/s.
/// Verdict: gcd(r, s) = 1 and x -> x^r f(x)^s permutes mu_l. A root of f in
/// mu_l fails with that root as witness. With cross_check, brute force over
/// GF(q) must agree; disagreement yields an error verdict and a discrepancy
/// event.
VerificationReport check_index_criterion(u64 r, const DensePoly& f, u64 s, const CriterionOptions& opts = {});

/// Power case: if f(zeta^i)^s = 1 on all of mu_l, x^r f(x^s) permutes GF(q)
/// iff gcd(r, q - 1) = 1. A violated hypothesis is reported as a fail tagged
/// with the offending root.
VerificationReport check_power_case(u64 r, const DensePoly& f, u64 s, const CriterionOptions& opts = {});

// (p^{nk} - 1)/(p^k - 1) + 1
BigInt binomial_exponent(u64 p, unsigned k, unsigned n);

/// Subfield polynomial for x^d + a x over GF(p^{nk}): with s = (p^{nk}-1)/(p^k-1)
/// and d - 1 = t s (mod p^{nk} - 1), it is x * prod_i (x^t + a^{p^{ik}}) over
/// GF(p^k), which permutes GF(p^k) iff x^d + a x permutes GF(p^{nk}).
/// Throws std::invalid_argument if s does not divide d - 1 modulo p^{nk} - 1.
DensePoly binomial_subfield_poly(u64 p, unsigned k, unsigned n, const Elem& a, const BigInt& d);

/// x^d + a x over GF(p^{nk}) versus its subfield polynomial over GF(p^k).
/// The big field is brute-forced when it fits the budget; the two verdicts
/// must agree.
VerificationReport reduce_binomial(u64 p, unsigned k, unsigned n, const Elem& a, const BigInt& d,
                                   const CriterionOptions& opts = {});

// reduce_binomial at d = (p^{nk}-1)/(p^k-1) + 1, where the subfield
// polynomial is h_a.
VerificationReport reduce_binomial_to_subfield(u64 p, unsigned k, unsigned n, const Elem& a,
                                               const CriterionOptions& opts = {});

/// Piecewise map x -> A_i x^r on C_i = gamma^i <gamma^l>, 0 -> 0.
struct CyclotomicSpec {
  const FieldCtx* ctx = nullptr;
  u64 ell = 0;
  u64 s = 0;
  u64 r = 0;
  std::vector<Elem> branch_constants;
  Elem gamma;
};

// Validates l s = q - 1, r >= 1, nonzero constants (one per coset) and that
// gamma generates GF(q)*. gamma defaults to ctx.generator().
CyclotomicSpec make_cyclotomic_spec(const FieldCtx& ctx, u64 ell, u64 r, std::vector<Elem> branch_constants,
                                    std::optional<Elem> gamma = std::nullopt);

struct CyclotomicResult {
  FieldMap map;
  VerificationReport report;
};

// Verdict: gcd(r, s) = 1 and zeta^i -> A_i^s zeta^{ir} permutes mu_l.
CyclotomicResult cyclotomic_map(const CyclotomicSpec& spec, const CriterionOptions& opts = {});

}  // namespace cppforge

#endif  // CPPFORGE_CRITERIA_HPP
