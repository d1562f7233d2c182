#ifndef FSIG_REGISTRY_HPP
#define FSIG_REGISTRY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsig/conditions.hpp"
#include "fsig/limits.hpp"

namespace fsig {

/// A ring together with the tower data needed to run the splitting
/// computations on it. Comes from a ring-definition file or the registry.
struct RingDefinition {
  std::string label;
  std::string description;
  RingPtr ring;
  /// Declared Krull dimension, if any (checked on load).
  std::optional<int> dimension;
  /// Parameter tower data: x_1, ..., x_d and optionally u_1.
  std::vector<Polynomial> parameters;
  std::optional<Polynomial> socle;
  std::optional<QGorensteinData> qgorenstein;
  bool strongly_f_regular = true;
};

enum class TowerChoice { Automatic, Parameter, QGorenstein };

/// Builds and validates the tower. Automatic picks the parameter tower when
/// parameters are given and the Q-Gorenstein tower otherwise.
IdealTower make_tower(const RingDefinition& def, TowerChoice choice = TowerChoice::Automatic);

struct ExampleOptions {
  std::optional<std::uint64_t> p;
  /// Only for "an": the relation is xy - z^{n+1}.
  unsigned n = 2;
  ResourceLimits limits;
};

/// Names of the built-in examples in registry order.
std::vector<std::string> example_names();

/// Throws ValidationError for an unknown name.
RingDefinition make_example(std::string_view name, const ExampleOptions& options = {});

}  // namespace fsig

#endif  // FSIG_REGISTRY_HPP
