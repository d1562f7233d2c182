#ifndef FSIG_RING_HPP
#define FSIG_RING_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fsig/limits.hpp"
#include "fsig/monomial.hpp"
#include "fsig/polynomial.hpp"
#include "fsig/prime_field.hpp"

namespace fsig {

/// R = F_p[x_0..x_{n-1}] / P, studied locally at the ideal of all variables.
///
/// Weights define the grading used to split linear algebra into degree
/// blocks; they default to 1. Relations need not be homogeneous.
class Ring {
public:
  Ring(PrimeField field, std::vector<std::string> names,
       std::vector<Polynomial> relations, std::vector<Exponent> weights = {},
       ResourceLimits limits = {});

  /// Parses relation strings over the declared variable names.
  static std::shared_ptr<const Ring> create(std::uint64_t p,
                                            std::vector<std::string> names,
                                            const std::vector<std::string>& relations,
                                            std::vector<Exponent> weights = {},
                                            ResourceLimits limits = {});

  const PrimeField& field() const { return field_; }
  Coeff characteristic() const { return field_.characteristic(); }
  std::size_t nvars() const { return names_.size(); }
  std::span<const std::string> names() const { return names_; }
  std::span<const Polynomial> relations() const { return relations_; }
  std::span<const Exponent> weights() const { return weights_; }
  const ResourceLimits& limits() const { return limits_; }

  Polynomial zero() const { return Polynomial(field_, nvars()); }
  Polynomial one() const { return Polynomial::constant(field_, nvars(), 1); }
  Polynomial variable(std::size_t i) const { return Polynomial::variable(field_, nvars(), i); }
  std::vector<Polynomial> variables() const;

  /// Parses a polynomial over this ring's variables.
  Polynomial parse(std::string_view text) const;
  /// Parses a comma-separated list of polynomials.
  std::vector<Polynomial> parse_list(std::string_view text) const;
  std::string format(const Polynomial& f) const { return f.to_string(names_); }

  /// True when every relation is homogeneous for the weights.
  bool is_graded() const;

  bool same_ring(const Ring& other) const;

private:
  PrimeField field_;
  std::vector<std::string> names_;
  std::vector<Polynomial> relations_;
  std::vector<Exponent> weights_;
  ResourceLimits limits_;
};

using RingPtr = std::shared_ptr<const Ring>;

}  // namespace fsig

#endif  // FSIG_RING_HPP
