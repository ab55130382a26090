#include "cppforge/dickson.hpp"

#include <stdexcept>

#include "cppforge/embedding.hpp"

namespace cppforge {

DensePoly dickson_first_kind(unsigned n, const Elem& a) {
  const FieldCtx& f = a.ctx();
  DensePoly prev = DensePoly::constant(f.from_int(2));
  if (n == 0) return prev;
  DensePoly cur = DensePoly::x(f);
  const DensePoly x = DensePoly::x(f);
  for (unsigned j = 2; j <= n; ++j) {
    DensePoly next = x * cur - prev * a;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

struct DegreeSplit {
  unsigned p_power;
  unsigned free_part;
};

DegreeSplit split_degree(unsigned degree, u64 p) {
  DegreeSplit s{1, degree};
  while (s.free_part % p == 0) {
    s.free_part /= static_cast<unsigned>(p);
    s.p_power *= static_cast<unsigned>(p);
  }
  return s;
}

}  // namespace

std::vector<Elem> dickson_root_set(unsigned degree, const Elem& b, const FieldCtx& splitting) {
  if (degree == 0) throw std::invalid_argument("dickson_root_set: D_0 = 2 has no roots");
  const FieldCtx& base = b.ctx();
  const Elem b_big = embed_subfield(base, splitting, b);
  const auto [p_power, free_part] = split_degree(degree, splitting.characteristic());
  const Elem zeta = primitive_root_of_unity(splitting, 4 * static_cast<u64>(free_part));
  const auto c = sqrt(b_big);
  if (!c) throw NoSuchRoot("dickson_root_set: b has no square root in GF(" + splitting.tag() + ")");
  std::vector<Elem> roots;
  roots.reserve(degree);
  for (unsigned i = 0; i < free_part; ++i) {
    const std::int64_t e = 2 * static_cast<std::int64_t>(i) + 1;
    const Elem root = *c * (zeta.pow(e) + zeta.pow(-e));
    for (unsigned rep = 0; rep < p_power; ++rep) roots.push_back(root);
  }
  return roots;
}

unsigned dickson_splitting_degree(unsigned degree, const Elem& b) {
  const FieldCtx& base = b.ctx();
  const u64 q = base.order();
  const u64 modulus = 4 * static_cast<u64>(split_degree(degree, base.characteristic()).free_part);
  const auto ord = multiplicative_order_mod(q % modulus, modulus);
  if (!ord) throw NoSuchRoot("dickson_splitting_degree: characteristic divides 4n'");
  u64 r = *ord;
  // b is a square in GF(q^r) iff it is a square in GF(q) or r is even.
  if (r % 2 == 1 && !sqrt(b)) r *= 2;
  return static_cast<unsigned>(r);
}

DicksonFactorInfo dickson_factor_params(unsigned n, unsigned d, const Elem& a) {
  const FieldCtx& f = a.ctx();
  const u64 q = f.order();
  if (q % 2 == 0) throw std::invalid_argument("dickson_factor_params: q must be odd");
  if (a.is_zero()) throw std::invalid_argument("dickson_factor_params: a must be nonzero");
  if (d == 0 || n % d != 0 || (n / d) % 2 == 0) {
    throw std::invalid_argument("dickson_factor_params: need d | n with n/d odd");
  }
  const u64 mod = 4 * static_cast<u64>(d);
  DicksonFactorInfo info;
  info.d = d;
  u64 power = 1;
  for (unsigned m = 1; m <= mod; ++m) {
    power = static_cast<u64>(static_cast<u128>(power) * (q % mod) % mod);
    if (power == 1 % mod || power == mod - 1) {
      info.m_d = m;
      break;
    }
  }
  if (info.m_d == 0) throw NoSuchRoot("dickson_factor_params: q^m is never +-1 mod 4d");

  if (d == 1) {
    // zeta + zeta^{-1} = 0 for zeta of order 4, so this clique is the factor x.
    info.N_d = 1;
    info.count = 1;
    info.rule = "linear";
    return info;
  }
  const bool sqrt_in_field = sqrt(a).has_value();
  bool half = false;
  if (!sqrt_in_field && info.m_d % 4 == 2) {
    const u64 r = pow_mod(q, info.m_d / 2, mod);
    half = (r == (2 * d + 1) % mod) || (r == (2 * d + mod - 1) % mod);
  }
  const bool doubled = !sqrt_in_field && info.m_d % 2 == 1;
  info.ambiguous = half && doubled;
  if (half) {
    info.N_d = info.m_d / 2;
    info.rule = "half";
  } else if (doubled) {
    info.N_d = 2 * info.m_d;
    info.rule = "double";
  } else {
    info.N_d = info.m_d;
    info.rule = "otherwise";
  }
  const u64 phi = euler_phi(mod);
  if (phi % (2 * info.N_d) != 0) {
    throw std::invalid_argument("dickson_factor_params: phi(4d) is not divisible by 2 N_d");
  }
  info.count = static_cast<unsigned>(phi / (2 * info.N_d));
  return info;
}

DicksonCensus dickson_degree_census(unsigned degree, const Elem& a) {
  DicksonCensus census;
  census.degree = degree;
  const auto [p_power, free_part] = split_degree(degree, a.ctx().characteristic());
  census.p_power = p_power;
  unsigned sum = 0;
  for (u64 d : divisors(free_part)) {
    if ((free_part / d) % 2 == 0) continue;
    census.cliques.push_back(dickson_factor_params(free_part, static_cast<unsigned>(d), a));
    sum += census.cliques.back().count * census.cliques.back().N_d;
  }
  census.total = p_power * sum;
  return census;
}

}  // namespace cppforge
