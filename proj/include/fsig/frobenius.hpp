#ifndef FSIG_FROBENIUS_HPP
#define FSIG_FROBENIUS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fsig/ideal.hpp"
#include "fsig/rational.hpp"
#include "fsig/tower.hpp"

namespace fsig {

/// I^[q] = (g^q : g a generator of I) + P. Throws ValidationError unless q is
/// a power of the characteristic, ResourceLimitError on exponent overflow.
Ideal bracket_power(const Ideal& i, std::uint64_t q);

/// p^e, throwing ResourceLimitError when it leaves the exponent range.
std::uint64_t frobenius_power(std::uint64_t p, unsigned e);

/// Throws ValidationError unless I is m-primary and irreducible and u
/// represents its socle.
void validate_socle_pair(const Ideal& i, const Polynomial& u);

/// (I^[q] : u^q), without validation.
Ideal splitting_colon(const Ideal& i, const Polynomial& u, std::uint64_t q);

/// λ(R/(I^[q] : u^q)) for a validated pair (I, u).
std::uint64_t splitting_number(const Ideal& i, const Polynomial& u, std::uint64_t q);

struct Extrapolation {
  Rational limit;
  Rational slope;
  /// max |y_i - (limit + slope / q_i)| over the fitted rows.
  Rational residual;
  std::size_t rows_used = 0;
  std::string method = "least-squares fit of L + c/q";
};

/// Fits value = L + c/q by least squares on the last min(3, n) of the given
/// (q, value) rows and returns L exactly. Throws ValidationError on fewer
/// than two rows.
Extrapolation extrapolate_limit(std::span<const std::pair<std::uint64_t, Rational>> rows);

struct HKRow {
  unsigned e;
  std::uint64_t q;
  std::uint64_t length;  // λ(R/I^[q])
  Rational normalized;   // length / q^d
};

struct HKEstimate {
  std::string label;
  int dimension = 0;
  std::vector<HKRow> rows;
  std::optional<Extrapolation> extrapolation;
  bool truncated = false;
  std::string truncation_reason;
};

/// Rows (e, q, λ(R/I^[q]), λ/q^d) for e = 1..e_max. A resource-limit failure
/// stops the sequence and marks it truncated.
HKEstimate hk_sequence(const Ideal& i, unsigned e_max, std::string label = "");

struct SignatureRow {
  unsigned e;
  std::uint64_t q;
  std::uint64_t length;  // λ(R/(I_t^[q] : u_t^q)) at the reported t
  Rational normalized;   // length / q^d
  /// Tower rows: first t of the plateau (or t_max when not stable).
  unsigned t = 1;
  bool stable = true;
  /// Tower rows: colon lengths for t = 1, 2, ...
  std::vector<std::uint64_t> lengths_by_t;
  /// Difference rows: λ(R/I^[q]) and λ(R/(I + uR)^[q]).
  std::uint64_t hk_length = 0;
  std::uint64_t hk_plus_length = 0;
};

struct SignatureEstimate {
  std::string label;
  std::string method;
  int dimension = 0;
  std::vector<SignatureRow> rows;
  std::optional<Extrapolation> extrapolation;
  bool all_stable = true;
};

/// For each e, evaluates λ(R/(I_t^[q] : u_t^q)) for t = 1, 2, ... until two
/// consecutive values agree or t_max is reached (row marked not stable).
SignatureEstimate signature_sequence(const IdealTower& tower, unsigned e_max, unsigned t_max);

/// Rows λ(R/I^[q]) - λ(R/(I + uR)^[q]) over q^d for a validated pair.
SignatureEstimate signature_via_hk_difference(const Ideal& i, const Polynomial& u,
                                              unsigned e_max);

struct SplittingIdentity {
  std::uint64_t q;
  std::uint64_t colon_length;
  std::uint64_t hk_length;
  std::uint64_t hk_plus_length;
  bool holds() const { return colon_length + hk_plus_length == hk_length; }
};

/// Computes both sides of λ(R/(I^[q]:u^q)) = λ(R/I^[q]) - λ(R/(I+uR)^[q])
/// through independent Gröbner computations.
SplittingIdentity check_splitting_identity(const Ideal& i, const Polynomial& u, std::uint64_t q);

}  // namespace fsig

#endif  // FSIG_FROBENIUS_HPP
