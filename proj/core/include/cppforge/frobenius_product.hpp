#ifndef CPPFORGE_FROBENIUS_PRODUCT_HPP
#define CPPFORGE_FROBENIUS_PRODUCT_HPP

#include "cppforge/field.hpp"
#include "cppforge/poly.hpp"

namespace cppforge {

/// x * prod_{i < terms} (x^inner + a^{p^{ik}}) for a in GF(p^{nk}), expanded in
/// the big field and re-expressed over GF(p^k).
///
/// Every coefficient must be fixed by frobenius(., k); a coefficient outside
/// the subfield raises std::logic_error. That happens exactly when the
/// conjugate multiset is not Frobenius-stable, i.e. when n does not divide
/// `terms` and a is not in a smaller subfield, so callers must pass a
/// multiple of the orbit length.
DensePoly frobenius_product_poly(u64 p, unsigned k, unsigned n, const Elem& a, unsigned terms, unsigned inner);

// h_a(x) = x prod_{i < n} (x + a^{p^{ik}}) over GF(p^k). Requires a != 0 in
// GF(p^{nk}); the result has degree n + 1.
DensePoly h_a_poly(u64 p, unsigned k, unsigned n, const Elem& a);

}  // namespace cppforge

#endif  // CPPFORGE_FROBENIUS_PRODUCT_HPP
