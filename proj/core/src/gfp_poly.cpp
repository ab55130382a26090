#include "cppforge/detail/gfp_poly.hpp"

#include <stdexcept>

namespace cppforge::detail {

void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PrimePoly poly_mod(PrimePoly a, const PrimePoly& m, u64 p) {
  trim(a);
  if (m.empty()) throw std::invalid_argument("poly_mod: zero modulus");
  const u64 lead_inv = pow_mod(m.back(), p - 2, p);
  while (a.size() >= m.size()) {
    const u64 c = static_cast<u64>(static_cast<u128>(a.back()) * lead_inv % p);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      const u64 sub = static_cast<u64>(static_cast<u128>(c) * m[i] % p);
      a[shift + i] = (a[shift + i] + p - sub) % p;
    }
    trim(a);
  }
  return a;
}

PrimePoly poly_mul_mod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<u64>((prod[i + j] + static_cast<u128>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(prod), m, p);
}

PrimePoly poly_sub(PrimePoly a, const PrimePoly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i] % p) % p;
  trim(a);
  return a;
}

PrimePoly poly_gcd(PrimePoly a, PrimePoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

namespace {

// x^(p) mod f computed as base^p by square-and-multiply.
PrimePoly pow_mod_poly(PrimePoly base, u64 e, const PrimePoly& f, u64 p) {
  PrimePoly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mul_mod(result, base, f, p);
    base = poly_mul_mod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_irreducible(const PrimePoly& f, u64 p) {
  if (f.size() < 2) return false;
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  const PrimePoly x{0, 1};
  PrimePoly frob = poly_mod(x, f, p);
  for (std::size_t i = 1; i <= m / 2; ++i) {
    frob = pow_mod_poly(frob, p, f, p);
    const PrimePoly g = poly_gcd(f, poly_sub(frob, x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

PrimePoly smallest_irreducible(u64 p, unsigned m) {
  if (m == 0) throw std::invalid_argument("smallest_irreducible: degree must be positive");
  if (m == 1) return {0, 1};
  // digits[0] is the most significant position of the lexicographic counter.
  std::vector<u64> digits(m, 0);
  while (true) {
    if (digits[0] != 0) {
      PrimePoly candidate(digits.begin(), digits.end());
      candidate.push_back(1);
      if (is_irreducible(candidate, p)) return candidate;
    }
    std::size_t pos = m;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < p) break;
      digits[pos] = 0;
      if (pos == 0) throw std::logic_error("smallest_irreducible: search exhausted");
    }
  }
}

}  // namespace cppforge::detail
