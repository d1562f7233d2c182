#ifndef FSIG_PRIME_FIELD_HPP
#define FSIG_PRIME_FIELD_HPP

#include <cstdint>

namespace fsig {

using Coeff = std::uint32_t;

/// Deterministic primality test valid for every 64-bit input.
bool is_prime(std::uint64_t n);

/// The field F_p for a prime 2 <= p <= 2^31 - 1. Elements are plain
/// `Coeff` values kept in [0, p).
class PrimeField {
public:
  static constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

  /// Throws ValidationError unless p is a prime in the supported range.
  explicit PrimeField(std::uint64_t p);

  Coeff characteristic() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Throws DomainError on a == 0.
  Coeff inv(Coeff a) const;
  Coeff pow(Coeff a, std::uint64_t n) const;

  /// Reduces an arbitrary signed integer into [0, p).
  Coeff from_int(std::int64_t v) const;

  /// Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t to_signed(Coeff a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
  Coeff p_;
};

}  // namespace fsig

#endif  // FSIG_PRIME_FIELD_HPP
