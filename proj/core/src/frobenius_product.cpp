#include "cppforge/frobenius_product.hpp"

#include <stdexcept>

#include "cppforge/embedding.hpp"

namespace cppforge {

DensePoly frobenius_product_poly(u64 p, unsigned k, unsigned n, const Elem& a, unsigned terms, unsigned inner) {
  const FieldCtx& big = a.ctx();
  if (big.characteristic() != p || k == 0 || n == 0 || big.degree() != n * k) {
    throw std::invalid_argument("frobenius_product_poly: a must lie in GF(p^{nk})");
  }
  const FieldCtx& small = make_field(p, k);
  const SubfieldEmbedding& emb = subfield_embedding(small, big);

  const DensePoly x_inner = DensePoly::monomial(big.one(), inner);
  DensePoly product = DensePoly::x(big);
  Elem conj = a;
  for (unsigned i = 0; i < terms; ++i) {
    product = product * (x_inner + DensePoly::constant(conj));
    conj = frobenius(conj, k);
  }
  for (const Elem& c : product.coeffs()) {
    if (!emb.contains(c)) {
      throw std::logic_error("frobenius_product_poly: coefficient " + c.to_string() + " is not fixed by frobenius^" +
                             std::to_string(k));
    }
  }
  return product.restrict(emb);
}

DensePoly h_a_poly(u64 p, unsigned k, unsigned n, const Elem& a) {
  if (a.is_zero()) throw std::invalid_argument("h_a_poly: a must be nonzero");
  return frobenius_product_poly(p, k, n, a, n, 1);
}

}  // namespace cppforge
