#ifndef FSIG_TOWER_HPP
#define FSIG_TOWER_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "fsig/ideal.hpp"

namespace fsig {

/// A family {I_t, u_t}, t >= 1, of m-primary ideals with socle
/// representatives, I_{t+1} ⊆ I_t and u_t = (x_1⋯x_d)^{t-1} u_1.
///
/// Two templates are supported:
///   parameter:    I_t = (x_1^t, ..., x_d^t)
///   Q-Gorenstein: I_t = (x_1^{t-1} J, x_2^t, ..., x_d^t)
///
/// Constructing a tower does not validate it; see build_parameter_tower and
/// build_qgorenstein_tower. Instantiated ideals and their splitting colons
/// are memoized and shared between copies.
class IdealTower {
public:
  enum class Kind { Parameter, QGorenstein };

  static IdealTower parameter(RingPtr ring, std::vector<Polynomial> params, Polynomial u1,
                              std::string label = "parameter");
  static IdealTower qgorenstein(RingPtr ring, std::vector<Polynomial> canonical,
                                std::vector<Polynomial> params, Polynomial u1,
                                std::string label = "qgorenstein");

  Kind kind() const { return kind_; }
  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& parameters() const { return params_; }
  const std::vector<Polynomial>& canonical() const { return canonical_; }
  const Polynomial& base_socle() const { return u1_; }
  const std::string& label() const { return label_; }

  /// I_t; throws DomainError for t = 0.
  Ideal ideal(unsigned t) const;
  /// u_t = (x_1⋯x_d)^{t-1} u_1.
  Polynomial socle_representative(unsigned t) const;
  /// (I_t^[q] : u_t^q).
  Ideal splitting_colon(unsigned t, std::uint64_t q) const;

private:
  IdealTower(Kind kind, RingPtr ring, std::vector<Polynomial> canonical,
             std::vector<Polynomial> params, Polynomial u1, std::string label);

  struct Memo {
    std::mutex mutex;
    std::map<unsigned, Ideal> ideals;
    std::map<std::pair<unsigned, std::uint64_t>, Ideal> colons;
  };

  Kind kind_;
  RingPtr ring_;
  std::vector<Polynomial> canonical_;
  std::vector<Polynomial> params_;
  Polynomial u1_;
  std::string label_;
  std::shared_ptr<Memo> memo_;
};

}  // namespace fsig

#endif  // FSIG_TOWER_HPP
