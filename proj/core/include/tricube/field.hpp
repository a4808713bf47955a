#pragma once

#include <cstdint>
#include <vector>

#include "tricube/common.hpp"

namespace tricube {

/// Element of a prime field, stored as its canonical representative in [0, p).
/// The modulus lives in PrimeField; mixing elements from different fields is
/// the caller's bug and is not detected here.
struct Fp {
  uint64_t v = 0;
  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
  friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }
};

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m);

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

/// Prime factorization via trial division + Pollard-Brent rho.
/// Returns distinct prime factors in ascending order.
std::vector<uint64_t> prime_factors_u64(uint64_t n);

/// Arithmetic context for F_p with p an odd prime below 2^62.
/// All element operations go through an explicit context object; there is no
/// thread-local or global modulus.
class PrimeField {
 public:
  explicit PrimeField(uint64_t p);

  uint64_t modulus() const { return p_; }
  /// Largest k with 2^k dividing p-1.
  int two_adicity() const { return two_adicity_; }
  /// A fixed primitive root mod p (smallest one).
  Fp generator() const { return gen_; }
  /// Element of exact multiplicative order 2^k. Throws precondition_error if
  /// k exceeds two_adicity().
  Fp root_of_unity(int k) const;
  /// Distinct prime factors of p-1, ascending.
  const std::vector<uint64_t>& pm1_prime_factors() const { return pm1_factors_; }

  Fp zero() const { return Fp{0}; }
  Fp one() const { return Fp{1 % p_}; }
  Fp from_uint(uint64_t x) const { return Fp{x % p_}; }
  Fp from_int(int64_t x) const {
    int64_t r = x % static_cast<int64_t>(p_);
    if (r < 0) r += static_cast<int64_t>(p_);
    return Fp{static_cast<uint64_t>(r)};
  }

  Fp add(Fp a, Fp b) const {
    uint64_t s = a.v + b.v;
    if (s >= p_) s -= p_;
    return Fp{s};
  }
  Fp sub(Fp a, Fp b) const {
    uint64_t s = a.v >= b.v ? a.v - b.v : a.v + p_ - b.v;
    return Fp{s};
  }
  Fp neg(Fp a) const { return Fp{a.v == 0 ? 0 : p_ - a.v}; }
  Fp mul(Fp a, Fp b) const {
    return Fp{static_cast<uint64_t>(
        (static_cast<unsigned __int128>(a.v) * b.v) % p_)};
  }
  Fp pow(Fp a, uint64_t e) const { return Fp{powmod_u64(a.v, e, p_)}; }
  /// Throws precondition_error on zero.
  Fp inv(Fp a) const;
  bool is_zero(Fp a) const { return a.v == 0; }

 private:
  uint64_t p_;
  int two_adicity_;
  Fp gen_;
  std::vector<uint64_t> pm1_factors_;
};

/// 998244353 = 119 * 2^23 + 1: a 30-bit prime whose multiplicative group has
/// 2-adicity 23, comfortable for power-of-two evaluation grids.
inline constexpr uint64_t kDefaultFftPrime = 998244353;

}  // namespace tricube
