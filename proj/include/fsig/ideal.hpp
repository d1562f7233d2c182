#ifndef FSIG_IDEAL_HPP
#define FSIG_IDEAL_HPP

#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "fsig/groebner.hpp"
#include "fsig/ring.hpp"

namespace fsig {

/// A finitely generated ideal of R = S/P, stored as its preimage in S:
/// the listed generators together with the ring relations.
///
/// Gröbner bases are cached per term order. Copies share the cache; the
/// cache is filled compute-then-publish, so concurrent readers may compute
/// the same basis twice but never observe a partial one.
class Ideal {
public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  /// The ideal generated by all variables.
  static Ideal maximal(RingPtr ring);
  /// Parses comma-separated generators.
  static Ideal parse(RingPtr ring, std::string_view text);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  std::span<const Polynomial> generators() const { return gens_; }
  /// Generators followed by the ring relations.
  std::vector<Polynomial> generators_with_relations() const;

  /// Reduced basis of generators + relations.
  const GroebnerBasis& groebner(const TermOrder& order = TermOrder::grevlex()) const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const { return groebner().is_unit(); }
  bool is_zero() const;

  /// Canonical text of the reduced grevlex basis.
  std::string canonical_string() const;
  /// 16-hex-digit FNV-1a hash of canonical_string().
  std::string fingerprint() const;

  std::string to_string() const;

private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::shared_ptr<const GroebnerBasis>> bases;
  };

  void check_polynomial(const Polynomial& f) const;

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;

  friend Ideal ideal_from_basis(RingPtr ring, GroebnerBasis basis);
};

/// Wraps a basis (which must already include the relations) as an ideal
/// with a pre-filled cache.
Ideal ideal_from_basis(RingPtr ring, GroebnerBasis basis);

/// Equality via identical reduced grevlex bases.
bool ideal_equal(const Ideal& a, const Ideal& b);
bool ideal_member(const Polynomial& f, const Ideal& i);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// a^n by products of generators.
Ideal ideal_power(const Ideal& a, unsigned n);

/// I ∩ J via elimination of an auxiliary variable w from
/// w·(I + P) + (1 - w)·(J + P).
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

/// (I : f) = { g : g f ∈ I }. Zero-dimensional I goes through linear
/// algebra on the staircase; otherwise (I + P) ∩ fS is computed by
/// elimination and every generator is divided exactly by f. Every result
/// generator g is checked to satisfy g f ∈ I. Throws DomainError when f is
/// zero in R.
Ideal colon(const Ideal& i, const Polynomial& f);

/// (I : f) computed only by the elimination route; exposed so tests can
/// compare the two routes.
Ideal colon_by_elimination(const Ideal& i, const Polynomial& f);

/// (I : J) as the intersection of (I : g) over the generators g of J.
Ideal colon_ideal(const Ideal& i, const Ideal& j);

struct Saturation {
  Ideal ideal;
  /// Smallest n with (I : f^n) = (I : f^{n+1}).
  unsigned exponent;
};

/// (I : f^∞) by iterating colon(·, f) until two successive results agree.
Saturation saturation(const Ideal& i, const Polynomial& f, unsigned max_steps = 256);

}  // namespace fsig

#endif  // FSIG_IDEAL_HPP
