#ifndef CPPFORGE_DETAIL_GFP_POLY_HPP
#define CPPFORGE_DETAIL_GFP_POLY_HPP

#include <vector>

#include "cppforge/number_theory.hpp"

// Minimal polynomial arithmetic over the prime field GF(p), used only to select
// and certify field moduli. Polynomials are little-endian coefficient vectors
// with no trailing zeros.
namespace cppforge::detail {

using PrimePoly = std::vector<u64>;

void trim(PrimePoly& f);
PrimePoly poly_mod(PrimePoly a, const PrimePoly& m, u64 p);
PrimePoly poly_mul_mod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m, u64 p);
PrimePoly poly_sub(PrimePoly a, const PrimePoly& b, u64 p);
PrimePoly poly_gcd(PrimePoly a, PrimePoly b, u64 p);

// Ben-Or: f of degree m is irreducible iff gcd(x^{p^i} - x, f) = 1 for i <= m/2.
bool is_irreducible(const PrimePoly& f, u64 p);

// Lexicographically smallest monic irreducible of degree m, comparing the
// coefficient tuple (c_0, c_1, ..., c_{m-1}) from the constant term upward.
PrimePoly smallest_irreducible(u64 p, unsigned m);

}  // namespace cppforge::detail

#endif  // CPPFORGE_DETAIL_GFP_POLY_HPP
