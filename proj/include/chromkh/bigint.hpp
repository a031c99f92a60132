#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>

namespace chromkh {

using BigInt = mpz_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }

inline BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline long to_long(const BigInt& x) { return x.get_si(); }

/// Splits |x| >= 2 into prime powers, e.g. 12 -> {3:1, 4:1}.
/// Trial division up to 2^20; a leftover cofactor is kept whole (it is prime
/// with overwhelming probability for the sizes that occur in practice).
inline std::map<BigInt, int> prime_power_factors(BigInt x) {
  std::map<BigInt, int> out;
  if (x < 0) x = -x;
  if (x < 2) return out;
  for (unsigned long p = 2; p < (1ul << 20); p = (p == 2 ? 3 : p + 2)) {
    if (BigInt(p) * p > x) break;
    if (mpz_divisible_ui_p(x.get_mpz_t(), p) == 0) continue;
    BigInt power = 1;
    while (mpz_divisible_ui_p(x.get_mpz_t(), p) != 0) {
      x /= p;
      power *= p;
    }
    ++out[power];
  }
  if (x > 1) ++out[x];
  return out;
}

}  // namespace chromkh
