#ifndef FSIG_CONDITIONS_HPP
#define FSIG_CONDITIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsig/ideal.hpp"
#include "fsig/tower.hpp"

namespace fsig {

/// Throws ValidationError unless, for t = 1..t_check, I_t is m-primary with
/// a one-dimensional socle represented by u_t, and I_{t+1} ⊆ I_t.
void validate_tower(const IdealTower& tower, unsigned t_check = 3);

/// I_t = (x_1^t, ..., x_d^t). When u1 is omitted it is taken from the socle
/// of I_1. The tower is validated at t = 1, 2, 3.
IdealTower build_parameter_tower(RingPtr ring, std::vector<Polynomial> params,
                                 std::optional<Polynomial> u1 = std::nullopt,
                                 std::string label = "parameter");

struct SymbolicPower {
  Ideal ideal;
  /// Smallest k with (J^n : c^k) = (J^n : c^{k+1}).
  unsigned saturation_exponent = 0;
  std::string warning;
};

/// J^(n) computed as (J^n : c^∞). The result is only the symbolic power
/// when c lies in every embedded prime of J^n and in no minimal prime of J;
/// that is trusted, and the warning says so. Throws ValidationError on c = 0.
SymbolicPower symbolic_power(const Ideal& j, unsigned n, const Polynomial& c);

struct QGorensteinData {
  RingPtr ring;
  /// Generators of the canonical-type ideal J (height one, unmixed: trusted).
  std::vector<Polynomial> canonical;
  unsigned h = 1;
  /// x_2 J ⊆ aR.
  Polynomial a;
  /// x_1, ..., x_d.
  std::vector<Polynomial> parameters;
  /// a_3, ..., a_d with x_i J^(h) ⊆ a_i R.
  std::vector<Polynomial> a_rest;
  /// Saturating element for symbolic powers of J.
  Polynomial saturator;
};

/// Checks x_1 ∈ J, x_2 J ⊆ aR, x_i J^(h) ⊆ a_i R for i ≥ 3, and that
/// (x_1, ..., x_d) is m-primary with d = dim R. Throws ValidationError
/// naming the first failed containment.
void validate_qgorenstein_data(const QGorensteinData& data);

/// I_t = (x_1^{t-1} J, x_2^t, ..., x_d^t) with u_1 read off the socle of
/// I_1; validated like a parameter tower.
IdealTower build_qgorenstein_tower(const QGorensteinData& data,
                                   std::string label = "qgorenstein");

struct ColonStep {
  unsigned t;
  std::uint64_t length;
  std::string fingerprint;
};

struct StabilizationRow {
  unsigned e;
  std::uint64_t q;
  std::vector<ColonStep> steps;
  /// Minimal t with equal colons from t through t_max; empty when the
  /// plateau has length one (NOT_STABLE).
  std::optional<unsigned> t0;
  /// Colength of the plateau ideal (of the t_max colon when not stable).
  std::uint64_t kernel_length = 0;
  bool ascending = true;
};

struct StabilizationReport {
  std::string label;
  unsigned e_max = 0;
  unsigned t_max = 0;
  std::vector<StabilizationRow> rows;
  /// Max of t0 over e; empty if any row is not stable.
  std::optional<unsigned> uniform_t0;
  bool ascending = true;
  std::string scope() const;
};

/// Condition (A) over the window e = 1..e_max, t = 1..t_max.
StabilizationReport condition_a_check(const IdealTower& tower, unsigned e_max, unsigned t_max);

struct KernelLevel {
  unsigned e;
  std::uint64_t q;
  /// Colength of the stable colon (of the t_max colon when not stable).
  std::uint64_t length;
  /// First t of the first pair of equal consecutive colons.
  unsigned t;
  bool stable;
  Ideal ideal;
};

/// Condition (B) at one e: the union of the ascending colon chain, taken as
/// the first value repeated at consecutive t. Throws ValidationError if the
/// chain is not ascending.
KernelLevel condition_b_level(const IdealTower& tower, unsigned e, unsigned t_max);

struct EquivalenceRow {
  unsigned e;
  std::uint64_t q;
  std::optional<unsigned> t_a;
  std::optional<unsigned> t_b;
  bool ideals_equal = false;
  bool consistent = false;
  std::string note;
};

struct EquivalenceReport {
  std::string label;
  unsigned e_max = 0;
  unsigned t_max = 0;
  std::vector<EquivalenceRow> rows;
  bool holds = true;
  std::string scope() const;
};

/// Per e: the (B) stabilization index is at most the (A) plateau start and
/// both give the same colon ideal.
EquivalenceReport condition_equivalence_check(const IdealTower& tower, unsigned e_max,
                                              unsigned t_max);

struct ColonSaturationCheck {
  unsigned n = 0;
  unsigned N = 0;
  unsigned i = 0;
  bool holds = false;
  /// On failure: an element of the saturation outside the n-th colon.
  std::optional<Polynomial> witness;
  unsigned saturation_exponent = 0;
  std::string warning;
};

/// With K = (J^(nh), x_j^N for 2 ≤ j ≤ d, j ≠ i), compares K : x_i^∞ with
/// K : x_i^n. The data is not validated here so corrupted inputs can be
/// probed. Throws ValidationError unless 2 ≤ i ≤ d and n, N ≥ 1.
ColonSaturationCheck verify_colon_saturation_identity(const QGorensteinData& data, unsigned n,
                                                      unsigned N, unsigned i);

}  // namespace fsig

#endif  // FSIG_CONDITIONS_HPP
