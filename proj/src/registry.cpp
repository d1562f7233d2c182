#include "fsig/registry.hpp"

#include <functional>
#include <map>

#include "fsig/artinian.hpp"
#include "fsig/errors.hpp"

namespace fsig {

IdealTower make_tower(const RingDefinition& def, TowerChoice choice) {
  if (choice == TowerChoice::Automatic) {
    choice = def.parameters.empty() ? TowerChoice::QGorenstein : TowerChoice::Parameter;
  }
  if (choice == TowerChoice::Parameter) {
    if (def.parameters.empty()) throw ValidationError(def.label + ": no parameters given");
    return build_parameter_tower(def.ring, def.parameters, def.socle, def.label + "/parameter");
  }
  if (!def.qgorenstein) throw ValidationError(def.label + ": no Q-Gorenstein data given");
  return build_qgorenstein_tower(*def.qgorenstein, def.label + "/qgorenstein");
}

namespace {

struct Builder {
  std::uint64_t default_p;
  std::function<RingDefinition(std::uint64_t p, const ExampleOptions&)> build;
};

RingDefinition basic(std::string label, std::string description, RingPtr ring, int d,
                     std::string_view params, std::optional<std::string_view> u1) {
  RingDefinition def;
  def.label = std::move(label);
  def.description = std::move(description);
  def.dimension = d;
  def.parameters = ring->parse_list(params);
  if (u1) def.socle = ring->parse(*u1);
  def.ring = std::move(ring);
  return def;
}

const std::vector<std::pair<std::string, Builder>>& builders() {
  static const std::vector<std::pair<std::string, Builder>> table = {
      {"regular-2",
       {2,
        [](std::uint64_t p, const ExampleOptions& o) {
          auto ring = Ring::create(p, {"x", "y"}, {}, {}, o.limits);
          return basic("regular-2", "polynomial ring in two variables", ring, 2, "x, y", "1");
        }}},
      {"regular-3",
       {2,
        [](std::uint64_t p, const ExampleOptions& o) {
          auto ring = Ring::create(p, {"x", "y", "z"}, {}, {}, o.limits);
          return basic("regular-3", "polynomial ring in three variables", ring, 3, "x, y, z",
                       "1");
        }}},
      {"a1",
       {3,
        [](std::uint64_t p, const ExampleOptions& o) {
          auto ring = Ring::create(p, {"x", "y", "z"}, {"x*y - z^2"}, {}, o.limits);
          RingDefinition def =
              basic("a1", "A_1 surface singularity xy - z^2", ring, 2, "x, y", "z");
          // Gorenstein, so the canonical ideal is principal: J = (x).
          def.qgorenstein = QGorensteinData{ring,          ring->parse_list("x"), 1,
                                            ring->parse("x"), ring->parse_list("x, y"), {},
                                            ring->parse("y")};
          return def;
        }}},
      {"an",
       {5,
        [](std::uint64_t p, const ExampleOptions& o) {
          if (o.n == 0) throw ValidationError("an: n must be at least 1");
          const std::string n1 = std::to_string(o.n + 1);
          auto ring = Ring::create(p, {"x", "y", "z"}, {"x*y - z^" + n1},
                                   {o.n + 1, o.n + 1, 2}, o.limits);
          return basic("an", "A_n surface singularity xy - z^" + n1 + " (n = " +
                                 std::to_string(o.n) + ")",
                       ring, 2, "x, y", "z^" + std::to_string(o.n));
        }}},
      {"nodal-line",
       {2,
        [](std::uint64_t p, const ExampleOptions& o) {
          auto ring = Ring::create(p, {"x", "y"}, {"x*y"}, {}, o.limits);
          RingDefinition def =
              basic("nodal-line", "union of two lines xy = 0", ring, 1, "x + y", std::nullopt);
          def.strongly_f_regular = false;
          return def;
        }}},
      {"veronese-2",
       {5,
        [](std::uint64_t p, const ExampleOptions& o) {
          auto ring = Ring::create(p, {"a", "b", "c"}, {"a*c - b^2"}, {}, o.limits);
          return basic("veronese-2", "second Veronese of a plane, ac - b^2", ring, 2, "a, c",
                       "b");
        }}},
      {"qgor-demo",
       {2,
        [](std::uint64_t p, const ExampleOptions& o) {
          // Cone over the twisted cubic: w_i = s^{3-i} t^i. Not Gorenstein;
          // the canonical class has order 3 and J^(3) = (w0^2).
          auto ring = Ring::create(p, {"w0", "w1", "w2", "w3"},
                                   {"w0*w2 - w1^2", "w1*w3 - w2^2", "w0*w3 - w1*w2"}, {},
                                   o.limits);
          RingDefinition def;
          def.label = "qgor-demo";
          def.description = "cone over the twisted cubic, Q-Gorenstein of index 3";
          def.dimension = 2;
          def.qgorenstein = QGorensteinData{ring,
                                            ring->parse_list("w0, w1"),
                                            3,
                                            ring->parse("w1"),
                                            ring->parse_list("w0, w3"),
                                            {},
                                            ring->parse("w3")};
          def.ring = std::move(ring);
          return def;
        }}},
  };
  return table;
}

}  // namespace

std::vector<std::string> example_names() {
  std::vector<std::string> out;
  for (const auto& [name, b] : builders()) out.push_back(name);
  return out;
}

RingDefinition make_example(std::string_view name, const ExampleOptions& options) {
  for (const auto& [n, b] : builders()) {
    if (n == name) return b.build(options.p.value_or(b.default_p), options);
  }
  std::string known;
  for (const auto& [n, b] : builders()) known += (known.empty() ? "" : ", ") + n;
  throw ValidationError("unknown example '" + std::string(name) + "' (known: " + known + ")");
}

}  // namespace fsig
