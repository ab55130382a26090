#ifndef CPPFORGE_DICKSON_HPP
#define CPPFORGE_DICKSON_HPP

#include <string>
#include <vector>

#include "cppforge/field.hpp"
#include "cppforge/poly.hpp"

namespace cppforge {

// D_n(x, a) of the first kind: D_0 = 2, D_1 = x, D_j = x D_{j-1} - a D_{j-2}.
DensePoly dickson_first_kind(unsigned n, const Elem& a);

/// Roots of D_degree(x, b) in `splitting`, where b lives in a subfield of it.
///
/// Writing degree = p^e * n' with p the characteristic and p not dividing n',
/// the roots are c(zeta^{2i+1} + zeta^{-(2i+1)}) for 0 <= i < n', with c^2 = b
/// and zeta a primitive 4n'-th root of unity, each repeated p^e times (in
/// characteristic p, D_{p^e n'} = D_{n'}^{p^e}). For p not dividing the
/// degree this is the plain list of degree roots. Throws NoSuchRoot when the
/// splitting field lacks the root of unity or a square root of b.
std::vector<Elem> dickson_root_set(unsigned degree, const Elem& b, const FieldCtx& splitting);

// Least extension degree r of b's field such that GF(q^r) holds every root
// produced by dickson_root_set, i.e. a primitive 4n'-th root of unity and a
// square root of b.
unsigned dickson_splitting_degree(unsigned degree, const Elem& b);

/// Clique parameters for the divisor d of the Dickson degree n over GF(q).
struct DicksonFactorInfo {
  unsigned d = 0;
  unsigned m_d = 0;      // least m with q^m = +-1 (mod 4d)
  unsigned N_d = 0;      // factor degree
  unsigned count = 0;    // phi(4d) / (2 N_d)
  std::string rule;      // "linear" (d = 1), "half", "double" or "otherwise"
  bool ambiguous = false;  // more than one case of the rule fired
};

// Throws std::invalid_argument if d does not divide n, n/d is even, q is even,
// a is zero, or count is not integral; NoSuchRoot if no m_d exists (p | d).
DicksonFactorInfo dickson_factor_params(unsigned n, unsigned d, const Elem& a);

struct DicksonCensus {
  unsigned degree = 0;
  unsigned p_power = 1;  // p^e stripped from the degree
  std::vector<DicksonFactorInfo> cliques;  // over divisors of the p-free part
  unsigned total = 0;  // p_power * sum(count * N_d)
};

DicksonCensus dickson_degree_census(unsigned degree, const Elem& a);

}  // namespace cppforge

#endif  // CPPFORGE_DICKSON_HPP
