#ifndef CPPFORGE_CONSTRUCTIONS_HPP
#define CPPFORGE_CONSTRUCTIONS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cppforge/criteria.hpp"
#include "cppforge/field.hpp"
#include "cppforge/poly.hpp"
#include "cppforge/report.hpp"

namespace cppforge {

enum class Family { kThm1_2, kLem2_1, kThm2_2, kThm2_3, kThm2_4, kCor2_5, kAdhoc };

// "thm1_2", "lem2_1", ..., "adhoc"
std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view tag);

/// Exponent attached to a family at (p, k, n), q = p^k:
///   thm2_2, lem2_1: (p^{(p-1)k} - 1)/(q - 1) + 1
///   thm2_3:         (p^{(q-1)k} - 1)/(q - 1) + 1
///   otherwise:      (p^{nk} - 1)/(q - 1) + 1
BigInt family_exponent(Family f, u64 p, unsigned k, unsigned n);

class HypothesisViolation : public std::invalid_argument {
 public:
  explicit HypothesisViolation(std::string clause)
      : std::invalid_argument("hypothesis violated: " + clause), clause_(std::move(clause)) {}
  const std::string& clause() const { return clause_; }

 private:
  std::string clause_;
};

/// Candidate complete permutation monomial a^{-1} x^d over GF(p^{nk}).
struct CPPInstance {
  u64 p = 0;
  unsigned k = 0;
  unsigned n = 0;
  BigInt d;
  Elem a;
  Family family = Family::kAdhoc;
};

// Fills d from family_exponent unless given. a must lie in GF(p^{nk}).
CPPInstance make_instance(Family family, u64 p, unsigned k, unsigned n, const Elem& a,
                          std::optional<BigInt> d = std::nullopt);

Json to_json(const CPPInstance& inst);

struct Conj1Witness {
  CPPInstance instance;
  Elem b;     // in GF(p^k)
  Elem zeta;  // primitive 4(n+1)-th root of unity in GF(p^{nk})
  Elem c;     // c^2 = b, in GF(p^{2k}) viewed inside GF(p^{nk})
  bool odd_half_case = false;  // p = 3 mod 4 and n/2 odd
  DensePoly h_a;
  DensePoly dickson;
  bool matches_dickson = false;
};

/// a = c (zeta + zeta^{-1}) with zeta the first primitive 4(n+1)-th root of
/// unity in GF(p^{nk}) and c the first square root of b. When p = 3 mod 4
/// and n/2 is odd, c must lie outside GF(p^k), so b has to be a non-square.
/// Throws HypothesisViolation naming the failed clause, NoSuchRoot when
/// 4(n+1) does not divide p^{nk} - 1.
Conj1Witness conj1_witness(u64 p, unsigned k, unsigned n, const Elem& b);

/// x (x^n - c)^{(p-1)/n} over GF(p^m): exhaustive permutation test plus the
/// AGW diagram with lambda = x^n - c, lambda_bar = x^n,
/// f_bar = (x + c) x^{p-1} on A = GF(p^m)*. An AGW failure turns the verdict
/// into an error and carries the falsification event.
VerificationReport exceptional_lemma_pp(u64 p, unsigned m, unsigned n, const Elem& c,
                                        const ExhaustiveOptions& opts = {});

// x (x^n - c)^{(p-1)/n}
DensePoly exceptional_poly(u64 p, unsigned n, const Elem& c);

/// Every a in GF(p^{nk})* with a^{p^k-1} in mu_n \ {1}, ascending by index,
/// as thm2_2 instances. Throws HypothesisViolation if n does not divide p - 1
/// or p is even, BudgetExceeded if GF(p^{nk}) exceeds the budget.
std::vector<CPPInstance> conj2_family(u64 p, unsigned k, unsigned n, const ExhaustiveOptions& opts = {});

// As conj2_family with n | p^k - 1 and the thm2_3 exponent.
std::vector<CPPInstance> thm2_3_family(u64 p, unsigned k, unsigned n, const ExhaustiveOptions& opts = {});

/// Every a in GF(p^{nk})* for which a^{p^k-1} has order exactly n, as
/// instances of `family` (thm2_4 or cor2_5).
std::vector<CPPInstance> primitive_orbit_family(Family family, u64 p, unsigned k, unsigned n,
                                                const ExhaustiveOptions& opts = {});

// The coefficient B with h_a = x^{n+1} + B x when a^{p^k-1} has order n.
Elem binomial_h_coefficient(u64 p, unsigned k, unsigned n, const Elem& a);

/// Pair condition for x^d + a x, d = (p^{nk}-1)/(p^k-1) + 1, with
/// h_a = x^{n+1} + B x over GF(q), l = (q-1)/n and c the first primitive
/// l-th root of unity in GF(q): (-B)^l != 1 and
/// ((B + c^i)/(B + c^j))^n != c^{j-i} for all 0 <= i < j < l.
/// The verdict is the condition; with cross_check it is compared against
/// brute-force CPP testing of a^{-1} x^d, and a disagreement is recorded as a
/// discrepancy event with an error verdict.
VerificationReport thm2_4_iff(u64 p, unsigned k, unsigned n, const Elem& a, const CriterionOptions& opts = {});

/// Searches lambda in [0, 2l) with (z + B/z)^n = z^lambda for all z in
/// mu_{2l} (inside GF(p^{2k})). Not applicable when no lambda exists;
/// otherwise the verdict is gcd(2 + n + lambda, 2l) <= 2, cross-checked as in
/// thm2_4_iff.
VerificationReport cor2_5_check(u64 p, unsigned k, unsigned n, const Elem& a, const CriterionOptions& opts = {});

struct CertifyOptions {
  ExhaustiveOptions exhaustive;
  bool brute_force = true;
};

struct ReductionTrace {
  BigInt d_raw;
  u64 d_reduced = 0;  // d mod (p^{nk} - 1)
  std::optional<DensePoly> h_a;
  std::optional<DensePoly> subfield_poly;
  Verdict subfield_verdict = Verdict::kNotApplicable;
};

struct Route {
  std::string name;
  VerificationReport report;
};

struct Certificate {
  CPPInstance instance;
  std::vector<NamedCheck> hypothesis_checks;
  VerificationReport verdict;
  ReductionTrace trace;
  std::vector<Route> routes;
  bool budget_exceeded = false;
};

/// Runs the hypothesis ledger, the family route, the exact subfield reduction
/// and (within budget) brute force. Passing requires every hypothesis (unless
/// adhoc) and agreement of every route that reached a verdict. Never throws
/// for mathematical failures.
Certificate certify(const CPPInstance& inst, const CertifyOptions& opts = {});

Json to_json(const Certificate& cert, bool include_timing = false);

struct SummaryRow {
  std::string family;
  u64 p = 0;
  unsigned k = 0;
  unsigned n = 0;
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

// One row per (family, p, k, n), in order of first appearance.
std::vector<SummaryRow> summarize(const std::vector<Certificate>& certs);
Json to_json(const SummaryRow& row);

}  // namespace cppforge

#endif  // CPPFORGE_CONSTRUCTIONS_HPP
