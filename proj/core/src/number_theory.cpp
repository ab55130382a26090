#include "cppforge/number_theory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cppforge {

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = static_cast<u64>(static_cast<u128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
  std::vector<PrimePower> out;
  auto strip = [&](u64 f) {
    unsigned e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    if (e > 0) out.push_back({f, e});
  };
  strip(2);
  for (u64 f = 3; f <= n / f; f += 2) strip(f);
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (const auto& [prime, exponent] : factorize(n)) {
    const std::size_t base_count = out.size();
    u64 power = 1;
    for (unsigned e = 1; e <= exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base_count; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 euler_phi(u64 n) {
  u64 phi = n;
  for (const auto& pp : factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

u64 pow_mod(u64 base, u64 exp, u64 mod) {
  if (mod == 1) return 0;
  u64 result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = static_cast<u64>(static_cast<u128>(result) * base % mod);
    base = static_cast<u64>(static_cast<u128>(base) * base % mod);
    exp >>= 1;
  }
  return result;
}

std::optional<u64> multiplicative_order_mod(u64 base, u64 mod) {
  if (mod == 1) return 1;
  if (std::gcd(base % mod, mod) != 1) return std::nullopt;
  u64 order = euler_phi(mod);
  for (const auto& pp : factorize(order)) {
    for (unsigned e = 0; e < pp.exponent; ++e) {
      if (pow_mod(base, order / pp.prime, mod) != 1) break;
      order /= pp.prime;
    }
  }
  return order;
}

std::optional<u64> checked_pow(u64 base, unsigned exp) {
  u64 result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
    result *= base;
  }
  return result;
}

BigInt big_pow(u64 base, u64 exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

u64 reduce_mod(const BigInt& value, u64 mod) {
  BigInt r = value % mod;
  if (r < 0) r += mod;
  return static_cast<u64>(r);
}

}  // namespace cppforge
