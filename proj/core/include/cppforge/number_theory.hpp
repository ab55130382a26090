#ifndef CPPFORGE_NUMBER_THEORY_HPP
#define CPPFORGE_NUMBER_THEORY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cppforge {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

// Arbitrary-precision integer used for exponents such as (p^{nk}-1)/(p^k-1)+1.
using BigInt = boost::multiprecision::cpp_int;

struct PrimePower {
  u64 prime;
  unsigned exponent;

  bool operator==(const PrimePower&) const = default;
};

bool is_prime(u64 n);

// Trial division. Intended for the desk-scale group orders used here (< 2^40),
// correct but slow for larger inputs.
std::vector<PrimePower> factorize(u64 n);

std::vector<u64> divisors(u64 n);

u64 euler_phi(u64 n);

u64 pow_mod(u64 base, u64 exp, u64 mod);

// Least e >= 1 with base^e == 1 (mod mod), if base is a unit.
std::optional<u64> multiplicative_order_mod(u64 base, u64 mod);

// p^e, or nullopt on overflow of 64 bits.
std::optional<u64> checked_pow(u64 base, unsigned exp);

BigInt big_pow(u64 base, u64 exp);

// Reduces a (possibly negative) big integer into [0, mod).
u64 reduce_mod(const BigInt& value, u64 mod);

}  // namespace cppforge

#endif  // CPPFORGE_NUMBER_THEORY_HPP
