#ifndef CPPFORGE_POLY_HPP
#define CPPFORGE_POLY_HPP

#include <span>
#include <string>
#include <vector>

#include "cppforge/embedding.hpp"
#include "cppforge/field.hpp"

namespace cppforge {

/// Dense univariate polynomial over a FieldCtx, little-endian coefficients.
/// The zero polynomial has no coefficients; otherwise the leading coefficient
/// is nonzero.
class DensePoly {
 public:
  explicit DensePoly(const FieldCtx& ctx) : ctx_(&ctx) {}
  DensePoly(const FieldCtx& ctx, std::vector<Elem> coeffs);

  static DensePoly constant(const Elem& c);
  static DensePoly x(const FieldCtx& ctx);
  // c * x^degree
  static DensePoly monomial(const Elem& c, std::size_t degree);
  // Coefficients given as integers reduced mod p into the prime subfield.
  static DensePoly from_ints(const FieldCtx& ctx, std::initializer_list<std::int64_t> coeffs);

  const FieldCtx& ctx() const { return *ctx_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Elem> coeffs() const { return coeffs_; }
  Elem coeff(std::size_t i) const;
  Elem leading() const;

  Elem operator()(const Elem& x) const;

  DensePoly operator+(const DensePoly& rhs) const;
  DensePoly operator-(const DensePoly& rhs) const;
  DensePoly operator*(const DensePoly& rhs) const;
  DensePoly operator*(const Elem& scalar) const;
  DensePoly operator-() const;
  DensePoly pow(unsigned e) const;
  // f(x^t)
  DensePoly inflate(unsigned t) const;

  bool operator==(const DensePoly& rhs) const { return ctx_ == rhs.ctx_ && coeffs_ == rhs.coeffs_; }

  // Coefficient-wise image under an embedding into a larger field.
  DensePoly embed(const SubfieldEmbedding& emb) const;
  // Inverse of embed; throws FieldError if a coefficient leaves the subfield.
  DensePoly restrict(const SubfieldEmbedding& emb) const;

  // Human-readable, highest degree first, e.g. "x^3 + 2*x".
  std::string to_string() const;

 private:
  void normalize();

  const FieldCtx* ctx_;
  std::vector<Elem> coeffs_;
};

Elem poly_eval(const DensePoly& f, const Elem& x);
// Evaluates f (over emb.small()) at x in emb.big().
Elem poly_eval(const DensePoly& f, const Elem& x, const SubfieldEmbedding& emb);

// Monic prod (x - r_i). The empty product is the constant 1.
DensePoly poly_from_roots(const FieldCtx& ctx, std::span<const Elem> roots);

}  // namespace cppforge

#endif  // CPPFORGE_POLY_HPP
