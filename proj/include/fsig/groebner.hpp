#ifndef FSIG_GROEBNER_HPP
#define FSIG_GROEBNER_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fsig/limits.hpp"
#include "fsig/polynomial.hpp"
#include "fsig/term_order.hpp"

namespace fsig {

/// A reduced Gröbner basis: monic elements sorted by ascending leading
/// monomial, no term of any element divisible by another leading monomial.
class GroebnerBasis {
public:
  /// Basis of the zero ideal.
  GroebnerBasis(PrimeField field, std::size_t nvars, TermOrder order);

  /// Wraps elements that already form a reduced basis under `order`
  /// (normalizes to monic and sorts; does not run Buchberger).
  static GroebnerBasis from_reduced(PrimeField field, std::size_t nvars, TermOrder order,
                                    std::vector<Polynomial> elements);

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const TermOrder& order() const { return order_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  std::span<const Polynomial> elements() const { return elements_; }
  std::span<const Monomial> leading_monomials() const { return leads_; }
  /// True iff the ideal is the whole ring.
  bool is_unit() const { return elements_.size() == 1 && elements_[0].is_constant(); }

  /// Index of the first element whose leading monomial divides m, or size().
  std::size_t find_divisor(const Monomial& m) const;

  /// Full multivariate division remainder of f.
  Polynomial normal_form(const Polynomial& f) const;

  /// Checks the defining properties: reducedness and S-pair criterion.
  bool verify() const;

  /// One element per line, used for fingerprints and reports.
  std::string to_string(std::span<const std::string> names) const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.order_ == b.order_ && a.elements_ == b.elements_;
  }

private:
  friend class BuchbergerEngine;

  PrimeField field_;
  std::size_t nvars_;
  TermOrder order_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leads_;
  std::vector<std::uint64_t> masks_;
  // Terms of each element sorted descending under order_.
  std::vector<std::vector<Term>> ordered_;
};

/// Reduced Gröbner basis of the ideal generated by `generators` using
/// Buchberger's algorithm with the normal selection strategy and the
/// Gebauer–Möller pair criteria. Deterministic for fixed input order.
GroebnerBasis buchberger(std::span<const Polynomial> generators, PrimeField field,
                         std::size_t nvars, const TermOrder& order,
                         const ResourceLimits& limits = {});

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
  return g.normal_form(f);
}

}  // namespace fsig

#endif  // FSIG_GROEBNER_HPP
