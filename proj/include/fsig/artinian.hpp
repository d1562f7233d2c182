#ifndef FSIG_ARTINIAN_HPP
#define FSIG_ARTINIAN_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsig/ideal.hpp"

namespace fsig {

/// λ(R/I), or infinite when the quotient is not Artinian.
class Length {
public:
  static Length finite(std::uint64_t v) { return Length(v); }
  static Length infinite() { return Length(std::nullopt); }

  bool is_finite() const { return value_.has_value(); }
  /// Throws ValidationError when infinite.
  std::uint64_t value() const;
  std::string to_string() const { return value_ ? std::to_string(*value_) : "INFINITE"; }

  friend bool operator==(const Length&, const Length&) = default;

private:
  explicit Length(std::optional<std::uint64_t> v) : value_(v) {}
  std::optional<std::uint64_t> value_;
};

/// Monomials outside the leading-term ideal of I + P.
struct StandardMonomialBasis {
  TermOrder order;
  std::vector<Monomial> monomials;
};

/// nullopt when the quotient S/(I+P) is infinite-dimensional.
std::optional<StandardMonomialBasis> standard_monomials(const Ideal& i,
                                                        const TermOrder& order = TermOrder::grevlex());

/// Number of standard monomials of I + P under `order`.
Length length(const Ideal& i, const TermOrder& order = TermOrder::grevlex());

/// dim S/(I+P): the largest set of variables U such that no leading monomial
/// is supported inside U.
/// Returns -1 for the unit ideal.
int krull_dimension(const Ideal& i);
/// Krull dimension of the ring itself.
int ring_dimension(const RingPtr& ring);

/// True when R/I has finite length and every variable is nilpotent modulo I,
/// i.e. I is primary to the ideal of all variables.
bool is_m_primary(const Ideal& i);
/// Throws ValidationError naming `what` unless is_m_primary(i).
void require_m_primary(const Ideal& i, const std::string& what);

/// Independent length oracle: dimension of the span of all monomials of
/// weighted degree < cap modulo the span of all products m·g (g a generator
/// of I or a relation) of weighted degree < cap, by Gaussian elimination.
///
/// Requires homogeneous generators. Throws ValidationError ("cap too small")
/// unless every monomial of degree in [cap, cap + max weight) lies in I + P,
/// which certifies that R/I vanishes from degree cap on.
std::uint64_t length_dense_oracle(const Ideal& i, Exponent degree_cap);

/// F_p-basis of (I : m)/I as normal-form representatives, computed as the
/// common kernel of the multiplication-by-variable maps on R/I.
/// Throws ValidationError when R/I is not Artinian.
std::vector<Polynomial> socle(const Ideal& i);

/// True iff the socle of R/I is one-dimensional.
bool is_irreducible(const Ideal& i);

/// u ∉ I and x_j u ∈ I for every variable.
bool is_socle_element(const Ideal& i, const Polynomial& u);

}  // namespace fsig

#endif  // FSIG_ARTINIAN_HPP
