#ifndef FSIG_POLYNOMIAL_HPP
#define FSIG_POLYNOMIAL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fsig/monomial.hpp"
#include "fsig/prime_field.hpp"
#include "fsig/term_order.hpp"

namespace fsig {

struct Term {
  Monomial monomial;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in F_p[x_0..x_{n-1}].
///
/// Terms are stored with nonzero coefficients, sorted strictly descending in
/// grevlex, so equal polynomials have identical representations.
class Polynomial {
public:
  Polynomial(PrimeField field, std::size_t nvars)
      : field_(field), nvars_(nvars) {}

  /// Builds a polynomial from arbitrary terms: sorts, merges duplicates and
  /// drops zero coefficients.
  static Polynomial from_terms(PrimeField field, std::size_t nvars,
                               std::vector<Term> terms);
  static Polynomial constant(PrimeField field, std::size_t nvars, Coeff c);
  static Polynomial monomial(PrimeField field, const Monomial& m,
                             Coeff c = 1);
  static Polynomial variable(PrimeField field, std::size_t nvars,
                             std::size_t index);

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
  }

  /// Leading term under grevlex; requires a nonzero polynomial.
  const Term& leading_term() const { return terms_.front(); }
  /// Leading term under an arbitrary order.
  const Term& leading_term(const TermOrder& order) const;

  Exponent degree() const;
  /// True when every term has the same weighted degree (zero counts).
  bool is_homogeneous(std::span<const Exponent> weights) const;
  Exponent weighted_degree(std::span<const Exponent> weights) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  Polynomial scale(Coeff c) const;
  Polynomial mul_term(const Monomial& m, Coeff c) const;
  /// Same polynomial divided by its grevlex leading coefficient.
  Polynomial monic() const;

  /// f^n. Uses the base-p digit expansion of n together with the
  /// Frobenius identity f^p = sum c_i m_i^p, valid over F_p.
  Polynomial pow(std::uint64_t n) const;
  /// f^q for q = p^e computed term-wise; throws unless q is a power of p.
  Polynomial frobenius(std::uint64_t q) const;

  /// Exact quotient f / g in the polynomial ring, or nullopt when g does not
  /// divide f. Throws DomainError when g is zero.
  std::optional<Polynomial> divide_exact(const Polynomial& g) const;

  /// Embeds into a ring with `extra` new variables placed before the
  /// existing ones.
  Polynomial prepend_variables(std::size_t extra) const;
  /// Drops the first `count` variables; all their exponents must be zero.
  Polynomial drop_leading_variables(std::size_t count) const;

  /// Human-readable form with the given variable names, terms in descending
  /// grevlex order, e.g. "x*y - z^2".
  std::string to_string(std::span<const std::string> names) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

private:
  void check_compatible(const Polynomial& g) const;

  PrimeField field_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// True iff q = p^e for some e >= 0.
bool is_power_of(std::uint64_t q, std::uint64_t p);

/// Default variable names x0, x1, ... used when none are supplied.
std::vector<std::string> default_variable_names(std::size_t nvars);

}  // namespace fsig

#endif  // FSIG_POLYNOMIAL_HPP
