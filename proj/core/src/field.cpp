#include "tricube/field.hpp"

#include <algorithm>
#include <numeric>

namespace tricube {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
  if (m == 1) return 0;
  uint64_t r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                     29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all n < 2^64.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                     29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

uint64_t pollard_brent(uint64_t n) {
  if ((n & 1) == 0) return 2;
  uint64_t x0 = 2, c = 1;
  while (true) {
    uint64_t x = x0, y = x0, d = 1;
    uint64_t ys = y, q = 1;
    const uint64_t m = 128;
    uint64_t r = 1;
    while (d == 1) {
      x = y;
      for (uint64_t i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
      uint64_t k = 0;
      while (k < r && d == 1) {
        ys = y;
        uint64_t lim = std::min(m, r - k);
        for (uint64_t i = 0; i < lim; ++i) {
          y = (mulmod_u64(y, y, n) + c) % n;
          q = mulmod_u64(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
        k += m;
      }
      r <<= 1;
    }
    if (d == n) {
      // Backtrack one step at a time.
      do {
        ys = (mulmod_u64(ys, ys, n) + c) % n;
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (d == 1);
    }
    if (d != n) return d;
    // Bad parameters for this n; retry with a different increment.
    ++c;
    ++x0;
  }
}

void factor_rec(uint64_t n, std::vector<uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  uint64_t d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<uint64_t> prime_factors_u64(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  factor_rec(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PrimeField::PrimeField(uint64_t p) : p_(p) {
  if (p < 3 || p >= (1ull << 62) || !is_prime_u64(p))
    throw precondition_error("modulus must be an odd prime below 2^62: " +
                             std::to_string(p));
  uint64_t m = p - 1;
  two_adicity_ = 0;
  while ((m & 1) == 0) {
    m >>= 1;
    ++two_adicity_;
  }
  pm1_factors_ = prime_factors_u64(p - 1);
  // Smallest primitive root; fine since factorization of p-1 is known.
  for (uint64_t g = 2;; ++g) {
    bool ok = true;
    for (uint64_t q : pm1_factors_) {
      if (powmod_u64(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen_ = Fp{g};
      break;
    }
  }
}

Fp PrimeField::root_of_unity(int k) const {
  if (k < 0 || k > two_adicity_)
    throw precondition_error("no 2^" + std::to_string(k) +
                             " root of unity mod " + std::to_string(p_) +
                             " (2-adicity " + std::to_string(two_adicity_) + ")");
  return pow(gen_, (p_ - 1) >> k);
}

Fp PrimeField::inv(Fp a) const {
  if (a.v == 0) throw precondition_error("inverse of zero");
  return pow(a, p_ - 2);
}

}  // namespace tricube
