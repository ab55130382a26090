#ifndef CPPFORGE_FIELD_HPP
#define CPPFORGE_FIELD_HPP

#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cppforge/number_theory.hpp"

namespace cppforge {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ContextMismatch : public FieldError {
 public:
  ContextMismatch() : FieldError("operands belong to different fields") {}
};

class NoSuchRoot : public FieldError {
 public:
  using FieldError::FieldError;
};

class FieldCtx;

/// An element of GF(p^m).
///
/// The element is stored by its enumeration index: the coefficient vector
/// (c_0, ..., c_{m-1}) in the power basis of the modulus root, read as a
/// little-endian base-p number. Index order is the field's enumeration order.
class Elem {
 public:
  Elem() = default;

  const FieldCtx& ctx() const;
  const FieldCtx* ctx_ptr() const { return ctx_; }
  bool valid() const { return ctx_ != nullptr; }

  u64 index() const { return index_; }
  std::vector<u64> coeffs() const;

  bool is_zero() const { return index_ == 0; }
  bool is_one() const { return index_ == 1; }

  Elem operator+(const Elem& rhs) const;
  Elem operator-(const Elem& rhs) const;
  Elem operator*(const Elem& rhs) const;
  Elem operator/(const Elem& rhs) const;
  Elem operator-() const;
  Elem& operator+=(const Elem& rhs) { return *this = *this + rhs; }
  Elem& operator-=(const Elem& rhs) { return *this = *this - rhs; }
  Elem& operator*=(const Elem& rhs) { return *this = *this * rhs; }

  Elem inv() const;
  // Negative exponents invert first. 0^0 = 1.
  Elem pow(std::int64_t e) const;
  Elem pow(const BigInt& e) const;

  // "p^m:[c0,c1,...]"
  std::string to_string() const;

  bool operator==(const Elem& rhs) const { return ctx_ == rhs.ctx_ && index_ == rhs.index_; }
  bool operator!=(const Elem& rhs) const { return !(*this == rhs); }

 private:
  friend class FieldCtx;
  Elem(const FieldCtx* ctx, u64 index) : ctx_(ctx), index_(index) {}

  const FieldCtx* ctx_ = nullptr;
  u64 index_ = 0;
};

/// A concrete finite field GF(p^m) = GF(p)[t]/(modulus).
///
/// Instances are interned: make_field returns the same object for the same
/// (p, m), and they live for the rest of the process. Elements refer to their
/// field by address. Fields with at most kTableLimit elements carry
/// discrete log/exp tables; larger ones use schoolbook arithmetic.
class FieldCtx {
 public:
  static constexpr u64 kTableLimit = u64{1} << 21;

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  u64 characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  u64 order() const { return order_; }
  // Monic modulus c_0..c_{m-1},1 for m >= 2; empty for prime fields.
  const std::vector<u64>& modulus() const { return modulus_; }
  bool has_tables() const { return !exp_.empty(); }
  // "p^m"
  std::string tag() const;

  Elem zero() const { return Elem(this, 0); }
  Elem one() const { return Elem(this, 1); }
  Elem from_index(u64 index) const;
  Elem from_coeffs(std::span<const u64> coeffs) const;
  // The prime-subfield constant v mod p.
  Elem from_int(std::int64_t v) const;
  // The modulus root t (the element with coefficient vector [0, 1]).
  Elem t() const;

  // First element of multiplicative order p^m - 1 in enumeration order.
  Elem generator() const;
  const std::vector<PrimePower>& group_order_factors() const;

  bool operator==(const FieldCtx& rhs) const { return this == &rhs; }

 private:
  friend class Elem;
  friend const FieldCtx& make_field(u64 p, unsigned m);

  FieldCtx(u64 p, unsigned m);

  u64 add(u64 a, u64 b) const;
  u64 add_slow(u64 a, u64 b) const;
  u64 sub(u64 a, u64 b) const;
  u64 neg(u64 a) const;
  u64 mul(u64 a, u64 b) const;
  u64 mul_slow(u64 a, u64 b) const;
  u64 pow_index(u64 a, u64 e) const;
  void ensure_generator() const;

  u64 p_;
  unsigned m_;
  u64 order_;
  std::vector<u64> modulus_;
  std::vector<u64> digit_weight_;  // p^i

  std::vector<std::uint32_t> exp_;  // exp_[i] = index of g^i
  std::vector<std::uint32_t> log_;  // log_[index] for index != 0
  std::vector<std::uint32_t> zech_;  // zech_[d] = log of 1 + g^d, or kNoLog
  static constexpr std::uint32_t kNoLog = UINT32_MAX;

  mutable std::once_flag generator_once_;
  mutable u64 generator_index_ = 0;
  mutable std::vector<PrimePower> group_factors_;
};

/// Canonical GF(p^m). The modulus is the lexicographically smallest monic
/// irreducible of degree m (compared from the constant term upward).
/// Throws std::invalid_argument for non-prime p, m < 1, or p^m >= 2^63.
const FieldCtx& make_field(u64 p, unsigned m);

// x^{p^j}, computed by repeated p-th powering.
Elem frobenius(const Elem& x, unsigned j);

// Least t >= 1 with x^t = 1. Throws FieldError for x = 0.
u64 multiplicative_order(const Elem& x);

// First element (enumeration order) of multiplicative order exactly t.
// Throws NoSuchRoot when t does not divide p^m - 1.
Elem primitive_root_of_unity(const FieldCtx& ctx, u64 t);

// All t-th roots of unity, in the order zeta^0, zeta^1, ... for zeta returned
// by primitive_root_of_unity(ctx, t).
std::vector<Elem> roots_of_unity(const FieldCtx& ctx, u64 t);

// Square root with the smaller enumeration index, or nullopt for non-squares.
std::optional<Elem> sqrt(const Elem& x);

struct SqrtResult {
  Elem root;
  bool in_subfield;
};

/// c with c^2 = b for b in the subfield GF(p^sub_degree) of b's field. The
/// ambient degree must be an even multiple of sub_degree so the root always
/// exists. in_subfield reports whether c is fixed by frobenius(., sub_degree).
SqrtResult sqrt_in_ext(const Elem& b, unsigned sub_degree);

bool is_in_subfield(const Elem& x, unsigned sub_degree);

// Every element of ctx in enumeration order.
std::vector<Elem> elements(const FieldCtx& ctx);

// Parses "[c0,c1,...]" (optionally prefixed by the "p^m:" tag) into an element.
Elem parse_elem(const FieldCtx& ctx, std::string_view text);

}  // namespace cppforge

#endif  // CPPFORGE_FIELD_HPP
