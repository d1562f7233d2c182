#ifndef FSIG_QUOTIENT_HPP
#define FSIG_QUOTIENT_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "fsig/groebner.hpp"
#include "fsig/monomial.hpp"

namespace fsig {

/// Exponent bound per variable when the leading-term ideal contains a pure
/// power of every variable; nullopt otherwise.
std::optional<std::vector<Exponent>> pure_power_bounds(const GroebnerBasis& g);

/// Number of standard monomials of a zero-dimensional basis, or nullopt when
/// the quotient is infinite. Throws ResourceLimitError past `max_count`.
std::optional<std::uint64_t> count_standard_monomials(const GroebnerBasis& g,
                                                      std::size_t max_count);

/// Standard monomials of a zero-dimensional basis with an index lookup.
/// Monomials are sorted ascending under the basis order.
class Staircase {
public:
  /// nullopt when the quotient is infinite.
  static std::optional<Staircase> build(const GroebnerBasis& g, std::size_t max_size);

  std::span<const Monomial> monomials() const { return monos_; }
  std::size_t size() const { return monos_.size(); }
  std::optional<std::size_t> index(const Monomial& m) const;

  /// Dense coordinate vector of a polynomial already in normal form.
  std::vector<Coeff> coordinates(const Polynomial& normal_form) const;

private:
  std::vector<Monomial> monos_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

/// Reduced Gröbner basis (same order as `g`) of (I : f), where `g` is a
/// zero-dimensional reduced basis of I.
///
/// The kernel of multiplication by f on the standard-monomial basis is the
/// image of (I : f) in S/I. Its echelon form under the term order yields the
/// new leading monomials; the reduced basis is read off from normal forms of
/// the minimal generators of the enlarged leading-term ideal. When `g` and
/// f are homogeneous for `weights` the linear algebra splits by degree.
GroebnerBasis colon_zero_dimensional(const GroebnerBasis& g, const Polynomial& f,
                                     std::span<const Exponent> weights,
                                     std::size_t max_staircase);

}  // namespace fsig

#endif  // FSIG_QUOTIENT_HPP
