#ifndef FSIG_MONOMIAL_HPP
#define FSIG_MONOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace fsig {

using Exponent = std::uint64_t;

/// Largest exponent any single variable may carry.
inline constexpr Exponent kMaxExponent = Exponent{1} << 20;
/// Largest supported number of ring variables.
inline constexpr std::size_t kMaxVariables = 64;

/// A power product x_0^e_0 ... x_{n-1}^e_{n-1}. The exponent vector length
/// is the ambient variable count; the total degree is cached.
class Monomial {
public:
  Monomial() = default;
  /// The monomial 1 in `nvars` variables.
  explicit Monomial(std::size_t nvars);
  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index,
                           Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }
  Exponent degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// Bit i set iff the exponent of variable i is positive (i < 64).
  std::uint64_t support_mask() const;

  /// Weighted degree sum_i w_i e_i.
  Exponent weighted_degree(std::span<const Exponent> weights) const;

  /// Throws DomainError on a variable-count mismatch and
  /// ResourceLimitError when an exponent would exceed kMaxExponent.
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires `other` to divide *this.
  Monomial operator/(const Monomial& other) const;
  Monomial pow(Exponent n) const;

  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  /// Sets variable `i` to exponent `e` (used by enumeration code).
  void set(std::size_t i, Exponent e);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }

private:
  std::vector<Exponent> exps_;
  Exponent degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace fsig

#endif  // FSIG_MONOMIAL_HPP
