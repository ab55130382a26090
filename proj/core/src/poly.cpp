#include "cppforge/poly.hpp"

#include <algorithm>

namespace cppforge {

DensePoly::DensePoly(const FieldCtx& ctx, std::vector<Elem> coeffs) : ctx_(&ctx), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.ctx_ptr() != ctx_) throw ContextMismatch();
  }
  normalize();
}

DensePoly DensePoly::constant(const Elem& c) { return DensePoly(c.ctx(), {c}); }

DensePoly DensePoly::x(const FieldCtx& ctx) { return DensePoly(ctx, {ctx.zero(), ctx.one()}); }

DensePoly DensePoly::monomial(const Elem& c, std::size_t degree) {
  std::vector<Elem> cs(degree + 1, c.ctx().zero());
  cs[degree] = c;
  return DensePoly(c.ctx(), std::move(cs));
}

DensePoly DensePoly::from_ints(const FieldCtx& ctx, std::initializer_list<std::int64_t> coeffs) {
  std::vector<Elem> cs;
  cs.reserve(coeffs.size());
  for (auto v : coeffs) cs.push_back(ctx.from_int(v));
  return DensePoly(ctx, std::move(cs));
}

void DensePoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Elem DensePoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ctx_->zero(); }

Elem DensePoly::leading() const { return coeffs_.empty() ? ctx_->zero() : coeffs_.back(); }

Elem DensePoly::operator()(const Elem& x) const { return poly_eval(*this, x); }

DensePoly DensePoly::operator+(const DensePoly& rhs) const {
  if (ctx_ != rhs.ctx_) throw ContextMismatch();
  std::vector<Elem> out(std::max(coeffs_.size(), rhs.coeffs_.size()), ctx_->zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + rhs.coeff(i);
  return DensePoly(*ctx_, std::move(out));
}

DensePoly DensePoly::operator-(const DensePoly& rhs) const { return *this + (-rhs); }

DensePoly DensePoly::operator-() const {
  std::vector<Elem> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(-c);
  return DensePoly(*ctx_, std::move(out));
}

DensePoly DensePoly::operator*(const DensePoly& rhs) const {
  if (ctx_ != rhs.ctx_) throw ContextMismatch();
  if (is_zero() || rhs.is_zero()) return DensePoly(*ctx_);
  std::vector<Elem> out(coeffs_.size() + rhs.coeffs_.size() - 1, ctx_->zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return DensePoly(*ctx_, std::move(out));
}

DensePoly DensePoly::operator*(const Elem& scalar) const {
  std::vector<Elem> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c * scalar);
  return DensePoly(*ctx_, std::move(out));
}

DensePoly DensePoly::pow(unsigned e) const {
  DensePoly result = constant(ctx_->one());
  DensePoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

DensePoly DensePoly::inflate(unsigned t) const {
  if (t == 0) {
    Elem sum = ctx_->zero();
    for (const auto& c : coeffs_) sum += c;
    return constant(sum);
  }
  if (is_zero()) return *this;
  std::vector<Elem> out(static_cast<std::size_t>(degree()) * t + 1, ctx_->zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * t] = coeffs_[i];
  return DensePoly(*ctx_, std::move(out));
}

DensePoly DensePoly::embed(const SubfieldEmbedding& emb) const {
  if (ctx_ != &emb.small()) throw ContextMismatch();
  std::vector<Elem> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(emb.embed(c));
  return DensePoly(emb.big(), std::move(out));
}

DensePoly DensePoly::restrict(const SubfieldEmbedding& emb) const {
  if (ctx_ != &emb.big()) throw ContextMismatch();
  std::vector<Elem> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(emb.restrict_or_throw(c));
  return DensePoly(emb.small(), std::move(out));
}

std::string DensePoly::to_string() const {
  if (is_zero()) return "0";
  const bool prime_field = ctx_->degree() == 1;
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Elem& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string cs = prime_field ? std::to_string(c.index()) : "(" + c.to_string() + ")";
    if (i == 0) {
      out += cs;
      continue;
    }
    if (!c.is_one()) out += cs + "*";
    out += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return out;
}

Elem poly_eval(const DensePoly& f, const Elem& x) {
  if (x.ctx_ptr() != &f.ctx()) throw ContextMismatch();
  Elem acc = f.ctx().zero();
  const auto cs = f.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) acc = acc * x + cs[i];
  return acc;
}

Elem poly_eval(const DensePoly& f, const Elem& x, const SubfieldEmbedding& emb) {
  if (&f.ctx() != &emb.small() || x.ctx_ptr() != &emb.big()) throw ContextMismatch();
  Elem acc = emb.big().zero();
  const auto cs = f.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) acc = acc * x + emb.embed(cs[i]);
  return acc;
}

DensePoly poly_from_roots(const FieldCtx& ctx, std::span<const Elem> roots) {
  std::vector<Elem> cs{ctx.one()};
  for (const auto& r : roots) {
    if (r.ctx_ptr() != &ctx) throw ContextMismatch();
    // Multiply the running product by (x - r) in place.
    cs.push_back(ctx.zero());
    for (std::size_t i = cs.size() - 1; i > 0; --i) cs[i] = cs[i - 1] - r * cs[i];
    cs[0] = -(r * cs[0]);
  }
  return DensePoly(ctx, std::move(cs));
}

}  // namespace cppforge
