#include "fsig/prime_field.hpp"

#include <array>
#include <string>

#include "fsig/errors.hpp"

namespace fsig {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases = {
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 3.3e24.
  for (std::uint64_t b : kBases) {
    std::uint64_t x = pow_mod(b, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) {
  if (p < 2 || p > kMaxPrime || !is_prime(p)) {
    throw ValidationError("characteristic " + std::to_string(p) +
                          " is not a prime in [2, 2^31 - 1]");
  }
  p_ = static_cast<Coeff>(p);
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw DomainError("division by zero in F_" + std::to_string(p_));
  // Extended Euclid on (a, p).
  std::int64_t r0 = p_, r1 = a % p_;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  return from_int(s0);
}

Coeff PrimeField::pow(Coeff a, std::uint64_t n) const {
  return static_cast<Coeff>(pow_mod(a, n, p_));
}

Coeff PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

std::int64_t PrimeField::to_signed(Coeff a) const {
  if (a > p_ / 2) return static_cast<std::int64_t>(a) - static_cast<std::int64_t>(p_);
  return a;
}

}  // namespace fsig
