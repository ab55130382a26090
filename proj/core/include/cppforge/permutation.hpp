#ifndef CPPFORGE_PERMUTATION_HPP
#define CPPFORGE_PERMUTATION_HPP

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "cppforge/field.hpp"
#include "cppforge/poly.hpp"
#include "cppforge/report.hpp"

namespace cppforge {

inline constexpr u64 kDefaultBudget = u64{1} << 21;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(u64 needed, u64 budget)
      : std::runtime_error("field of " + std::to_string(needed) + " elements exceeds the exhaustive budget of " +
                           std::to_string(budget)),
        needed_(needed),
        budget_(budget) {}
  u64 needed() const { return needed_; }
  u64 budget() const { return budget_; }

 private:
  u64 needed_;
  u64 budget_;
};

struct ExhaustiveOptions {
  u64 budget = kDefaultBudget;
  unsigned jobs = 1;
};

void require_budget(const FieldCtx& ctx, const ExhaustiveOptions& opts);

/// A map of a field to itself, evaluated pointwise. Monomials with huge
/// exponents stay closures; `poly` is set when a dense form is available.
struct FieldMap {
  std::string label;
  std::function<Elem(const Elem&)> fn;
  std::optional<DensePoly> poly;

  Elem operator()(const Elem& x) const { return fn(x); }

  static FieldMap from_poly(DensePoly f);
  // x -> coef * x^exponent, exponent reduced mod (q - 1) on nonzero inputs.
  static FieldMap monomial(const Elem& coef, const BigInt& exponent);
  // x -> x^exponent + a x
  static FieldMap binomial(const BigInt& exponent, const Elem& a);
};

// x -> f(x) + x
FieldMap plus_identity(const FieldMap& f);

// First collision over `domain` in enumeration order, or nullopt if f is
// injective there.
std::optional<Collision> first_collision(std::span<const Elem> domain, const std::function<Elem(const Elem&)>& f);

// Exhaustive image test over ctx. Throws BudgetExceeded.
VerificationReport is_permutation(const FieldCtx& ctx, const FieldMap& f, const ExhaustiveOptions& opts = {});

// Both f and f + id must permute ctx; the witness tag names the failing half.
VerificationReport is_cpp(const FieldCtx& ctx, const FieldMap& f, const ExhaustiveOptions& opts = {});

}  // namespace cppforge

#endif  // CPPFORGE_PERMUTATION_HPP
