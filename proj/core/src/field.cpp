#include "cppforge/field.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <numeric>

#include "cppforge/detail/gfp_poly.hpp"

namespace cppforge {

// ---------------------------------------------------------------------------
// FieldCtx

FieldCtx::FieldCtx(u64 p, unsigned m) : p_(p), m_(m) {
  const auto order = checked_pow(p, m);
  if (!order || *order >= (u64{1} << 63)) {
    throw std::invalid_argument("make_field: p^m does not fit the native element index");
  }
  order_ = *order;
  digit_weight_.resize(m);
  u64 w = 1;
  for (unsigned i = 0; i < m; ++i) {
    digit_weight_[i] = w;
    w *= p;
  }
  if (m >= 2) {
    modulus_ = detail::smallest_irreducible(p, m);
    if (!detail::is_irreducible(modulus_, p)) {
      throw std::logic_error("make_field: selected modulus is reducible");
    }
  }
  if (order_ <= kTableLimit && order_ > 2) {
    ensure_generator();
    const u64 n = order_ - 1;
    exp_.resize(2 * n);
    log_.assign(order_, 0);
    u64 x = 1;
    for (u64 i = 0; i < n; ++i) {
      exp_[i] = static_cast<std::uint32_t>(x);
      exp_[i + n] = static_cast<std::uint32_t>(x);
      log_[x] = static_cast<std::uint32_t>(i);
      x = mul_slow(x, generator_index_);
    }
    if (x != 1) throw std::logic_error("make_field: generator has wrong order");
    if (m >= 2) {
      zech_.resize(n);
      for (u64 d = 0; d < n; ++d) {
        const u64 s = add_slow(1, exp_[d]);
        zech_[d] = s == 0 ? kNoLog : log_[s];
      }
    }
  }
}

std::string FieldCtx::tag() const { return std::to_string(p_) + "^" + std::to_string(m_); }

Elem FieldCtx::from_index(u64 index) const {
  if (index >= order_) throw std::out_of_range("FieldCtx::from_index: index outside field");
  return Elem(this, index);
}

Elem FieldCtx::from_coeffs(std::span<const u64> coeffs) const {
  if (coeffs.size() > m_) throw std::invalid_argument("FieldCtx::from_coeffs: too many coefficients");
  u64 index = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= p_) throw std::invalid_argument("FieldCtx::from_coeffs: coefficient out of range");
    index += coeffs[i] * digit_weight_[i];
  }
  return Elem(this, index);
}

Elem FieldCtx::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return Elem(this, static_cast<u64>(r));
}

Elem FieldCtx::t() const {
  if (m_ == 1) throw FieldError("FieldCtx::t: prime field has no adjoined root");
  return Elem(this, p_);
}

Elem FieldCtx::generator() const {
  ensure_generator();
  return Elem(this, generator_index_);
}

const std::vector<PrimePower>& FieldCtx::group_order_factors() const {
  ensure_generator();
  return group_factors_;
}

void FieldCtx::ensure_generator() const {
  std::call_once(generator_once_, [this] {
    const u64 n = order_ - 1;
    group_factors_ = n > 1 ? factorize(n) : std::vector<PrimePower>{};
    for (u64 candidate = 1; candidate < order_; ++candidate) {
      bool primitive = true;
      for (const auto& pp : group_factors_) {
        if (pow_index(candidate, n / pp.prime) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        generator_index_ = candidate;
        return;
      }
    }
    throw std::logic_error("FieldCtx: no primitive element found");
  });
}

u64 FieldCtx::add(u64 a, u64 b) const {
  if (p_ == 2) return a ^ b;
  if (m_ == 1) {
    const u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (zech_.empty()) return add_slow(a, b);
  if (a == 0) return b;
  if (b == 0) return a;
  const u64 n = order_ - 1;
  const u64 la = log_[a];
  const u64 lb = log_[b];
  const std::uint32_t z = zech_[lb >= la ? lb - la : lb + n - la];
  return z == kNoLog ? 0 : exp_[la + z];
}

u64 FieldCtx::add_slow(u64 a, u64 b) const {
  u64 r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    u64 s = a % p_ + b % p_;
    a /= p_;
    b /= p_;
    if (s >= p_) s -= p_;
    r += s * digit_weight_[i];
  }
  return r;
}

u64 FieldCtx::neg(u64 a) const {
  if (p_ == 2 || a == 0) return a;
  if (m_ == 1) return p_ - a;
  if (!zech_.empty()) return exp_[log_[a] + (order_ - 1) / 2];
  u64 r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    const u64 d = a % p_;
    a /= p_;
    if (d != 0) r += (p_ - d) * digit_weight_[i];
  }
  return r;
}

u64 FieldCtx::sub(u64 a, u64 b) const { return add(a, neg(b)); }

u64 FieldCtx::mul(u64 a, u64 b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[log_[a] + log_[b]];
  return mul_slow(a, b);
}

u64 FieldCtx::mul_slow(u64 a, u64 b) const {
  if (a == 0 || b == 0) return 0;
  if (m_ == 1) return static_cast<u64>(static_cast<u128>(a) * b % p_);
  std::vector<u64> da(m_), db(m_);
  for (unsigned i = 0; i < m_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  std::vector<u64> prod(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) {
      prod[i + j] = static_cast<u64>((prod[i + j] + static_cast<u128>(da[i]) * db[j]) % p_);
    }
  }
  // Reduce with the monic modulus: t^m = -(c_0 + ... + c_{m-1} t^{m-1}).
  for (std::size_t k = prod.size(); k-- > m_;) {
    const u64 c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    const std::size_t shift = k - m_;
    for (unsigned i = 0; i < m_; ++i) {
      const u64 sub = static_cast<u64>(static_cast<u128>(c) * modulus_[i] % p_);
      prod[shift + i] = (prod[shift + i] + p_ - sub) % p_;
    }
  }
  u64 r = 0;
  for (unsigned i = 0; i < m_; ++i) r += prod[i] * digit_weight_[i];
  return r;
}

u64 FieldCtx::pow_index(u64 a, u64 e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!exp_.empty()) {
    const u64 n = order_ - 1;
    return exp_[static_cast<u64>(static_cast<u128>(log_[a]) * (e % n) % n)];
  }
  u64 result = 1;
  u64 base = a;
  while (e > 0) {
    if (e & 1) result = mul_slow(result, base);
    base = mul_slow(base, base);
    e >>= 1;
  }
  return result;
}

const FieldCtx& make_field(u64 p, unsigned m) {
  if (m < 1) throw std::invalid_argument("make_field: extension degree must be at least 1");
  if (!is_prime(p)) throw std::invalid_argument("make_field: " + std::to_string(p) + " is not prime");
  static std::mutex mutex;
  static std::map<std::pair<u64, unsigned>, std::unique_ptr<FieldCtx>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[{p, m}];
  if (!slot) {
    try {
      slot.reset(new FieldCtx(p, m));
    } catch (...) {
      registry.erase({p, m});
      throw;
    }
  }
  return *slot;
}

// ---------------------------------------------------------------------------
// Elem

const FieldCtx& Elem::ctx() const {
  if (ctx_ == nullptr) throw FieldError("Elem: uninitialised element");
  return *ctx_;
}

std::vector<u64> Elem::coeffs() const {
  const FieldCtx& f = ctx();
  std::vector<u64> out(f.degree());
  u64 v = index_;
  for (auto& c : out) {
    c = v % f.characteristic();
    v /= f.characteristic();
  }
  return out;
}

namespace {

const FieldCtx& common(const Elem& a, const Elem& b) {
  if (a.ctx_ptr() == nullptr || a.ctx_ptr() != b.ctx_ptr()) throw ContextMismatch();
  return *a.ctx_ptr();
}

}  // namespace

Elem Elem::operator+(const Elem& rhs) const {
  const FieldCtx& f = common(*this, rhs);
  return Elem(&f, f.add(index_, rhs.index_));
}

Elem Elem::operator-(const Elem& rhs) const {
  const FieldCtx& f = common(*this, rhs);
  return Elem(&f, f.sub(index_, rhs.index_));
}

Elem Elem::operator*(const Elem& rhs) const {
  const FieldCtx& f = common(*this, rhs);
  return Elem(&f, f.mul(index_, rhs.index_));
}

Elem Elem::operator/(const Elem& rhs) const { return *this * rhs.inv(); }

Elem Elem::operator-() const { return Elem(ctx_, ctx().neg(index_)); }

Elem Elem::inv() const {
  const FieldCtx& f = ctx();
  if (index_ == 0) throw FieldError("Elem::inv: zero has no inverse");
  return Elem(&f, f.pow_index(index_, f.order() - 2));
}

Elem Elem::pow(std::int64_t e) const {
  const FieldCtx& f = ctx();
  if (e == 0) return f.one();
  if (index_ == 0) {
    if (e < 0) throw FieldError("Elem::pow: negative power of zero");
    return f.zero();
  }
  const auto n = static_cast<std::int64_t>(f.order() - 1);
  std::int64_t r = e % n;
  if (r < 0) r += n;
  if (r == 0) return f.one();
  return Elem(&f, f.pow_index(index_, static_cast<u64>(r)));
}

Elem Elem::pow(const BigInt& e) const {
  const FieldCtx& f = ctx();
  if (e == 0) return f.one();
  if (index_ == 0) {
    if (e < 0) throw FieldError("Elem::pow: negative power of zero");
    return f.zero();
  }
  const u64 n = f.order() - 1;
  const u64 reduced = reduce_mod(e, n);
  if (reduced == 0) return f.one();
  return Elem(&f, f.pow_index(index_, reduced));
}

std::string Elem::to_string() const {
  std::string out = ctx().tag() + ":[";
  const auto cs = coeffs();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(cs[i]);
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// Free functions

Elem frobenius(const Elem& x, unsigned j) {
  const FieldCtx& f = x.ctx();
  Elem y = x;
  for (unsigned i = 0; i < j % f.degree(); ++i) y = y.pow(static_cast<std::int64_t>(f.characteristic()));
  return y;
}

u64 multiplicative_order(const Elem& x) {
  if (x.is_zero()) throw FieldError("multiplicative_order: zero has no multiplicative order");
  const FieldCtx& f = x.ctx();
  u64 order = f.order() - 1;
  for (const auto& pp : f.group_order_factors()) {
    for (unsigned e = 0; e < pp.exponent; ++e) {
      if (!x.pow(static_cast<std::int64_t>(order / pp.prime)).is_one()) break;
      order /= pp.prime;
    }
  }
  return order;
}

Elem primitive_root_of_unity(const FieldCtx& ctx, u64 t) {
  if (t == 0) throw std::invalid_argument("primitive_root_of_unity: order must be positive");
  const u64 n = ctx.order() - 1;
  if (n % t != 0) {
    throw NoSuchRoot("no primitive " + std::to_string(t) + "-th root of unity in GF(" + ctx.tag() + ")");
  }
  if (t == 1) return ctx.one();
  const Elem h = ctx.generator().pow(static_cast<std::int64_t>(n / t));
  Elem best;
  Elem cur = ctx.one();
  for (u64 j = 1; j < t; ++j) {
    cur *= h;
    if (std::gcd(j, t) != 1) continue;
    if (!best.valid() || cur.index() < best.index()) best = cur;
  }
  return best;
}

std::vector<Elem> roots_of_unity(const FieldCtx& ctx, u64 t) {
  const Elem zeta = primitive_root_of_unity(ctx, t);
  std::vector<Elem> out;
  out.reserve(t);
  Elem cur = ctx.one();
  for (u64 i = 0; i < t; ++i) {
    out.push_back(cur);
    cur *= zeta;
  }
  return out;
}

std::optional<Elem> sqrt(const Elem& x) {
  const FieldCtx& f = x.ctx();
  if (x.is_zero()) return x;
  const u64 q = f.order();
  if (f.characteristic() == 2) return x.pow(static_cast<std::int64_t>(q / 2));
  const u64 n = q - 1;
  if (!x.pow(static_cast<std::int64_t>(n / 2)).is_one()) return std::nullopt;
  // Tonelli-Shanks with the generator as the quadratic non-residue.
  u64 odd = n;
  unsigned s = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++s;
  }
  Elem z = f.generator().pow(static_cast<std::int64_t>(odd));
  Elem r = x.pow(static_cast<std::int64_t>((odd + 1) / 2));
  Elem t = x.pow(static_cast<std::int64_t>(odd));
  unsigned m = s;
  while (!t.is_one()) {
    unsigned i = 0;
    Elem t2 = t;
    while (!t2.is_one()) {
      t2 *= t2;
      ++i;
    }
    Elem b = z;
    for (unsigned j = 0; j + i + 1 < m; ++j) b *= b;
    r *= b;
    z = b * b;
    t *= z;
    m = i;
  }
  const Elem other = -r;
  return other.index() < r.index() ? other : r;
}

bool is_in_subfield(const Elem& x, unsigned sub_degree) {
  if (sub_degree == 0 || x.ctx().degree() % sub_degree != 0) {
    throw std::invalid_argument("is_in_subfield: degree does not divide the field degree");
  }
  return frobenius(x, sub_degree) == x;
}

SqrtResult sqrt_in_ext(const Elem& b, unsigned sub_degree) {
  const FieldCtx& f = b.ctx();
  if (sub_degree == 0 || f.degree() % sub_degree != 0 || (f.degree() / sub_degree) % 2 != 0) {
    throw std::invalid_argument("sqrt_in_ext: field must be an even-degree extension of the subfield");
  }
  if (!is_in_subfield(b, sub_degree)) {
    throw std::invalid_argument("sqrt_in_ext: value does not lie in the subfield");
  }
  const auto root = sqrt(b);
  if (!root) throw std::logic_error("sqrt_in_ext: subfield element without square root");
  return {*root, is_in_subfield(*root, sub_degree)};
}

std::vector<Elem> elements(const FieldCtx& ctx) {
  std::vector<Elem> out;
  out.reserve(ctx.order());
  for (u64 i = 0; i < ctx.order(); ++i) out.push_back(ctx.from_index(i));
  return out;
}

Elem parse_elem(const FieldCtx& ctx, std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    if (trim(text.substr(0, colon)) != ctx.tag()) {
      throw std::invalid_argument("parse_elem: context tag does not match GF(" + ctx.tag() + ")");
    }
    text = trim(text.substr(colon + 1));
  }
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("parse_elem: expected a coefficient list like [c0,c1]");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<u64> coeffs;
  while (!trim(text).empty()) {
    const auto comma = text.find(',');
    const std::string_view token = trim(text.substr(0, comma));
    u64 v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("parse_elem: bad coefficient '" + std::string(token) + "'");
    }
    coeffs.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return ctx.from_coeffs(coeffs);
}

}  // namespace cppforge
