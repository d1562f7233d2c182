#include "fsig/conditions.hpp"

#include <algorithm>

#include "fsig/artinian.hpp"
#include "fsig/errors.hpp"
#include "fsig/frobenius.hpp"

namespace fsig {

namespace {

std::string window(unsigned e_max, unsigned t_max) {
  return "verified up to (e_max, t_max) = (" + std::to_string(e_max) + ", " +
         std::to_string(t_max) + ")";
}

// Membership of every generator of `inner` in `outer`, without relations.
bool gens_in(const Ideal& inner, const Ideal& outer) {
  for (const Polynomial& g : inner.generators()) {
    if (!outer.contains(g)) return false;
  }
  return true;
}

}  // namespace

void validate_tower(const IdealTower& tower, unsigned t_check) {
  const Ring& ring = *tower.ring();
  for (unsigned t = 1; t <= t_check; ++t) {
    const std::string at = " at t = " + std::to_string(t);
    Ideal it = tower.ideal(t);
    if (!is_m_primary(it)) throw ValidationError("I_t is not m-primary" + at);
    std::size_t dim = socle(it).size();
    if (dim != 1) {
      throw ValidationError("socle dimension " + std::to_string(dim) + at +
                            " (I_t is not irreducible)");
    }
    Polynomial u = tower.socle_representative(t);
    if (!is_socle_element(it, u)) {
      throw ValidationError("u_t = " + ring.format(u) + " is not a socle element" + at);
    }
    if (t < t_check && !gens_in(tower.ideal(t + 1), it)) {
      throw ValidationError("I_{t+1} is not contained in I_t" + at);
    }
  }
}

IdealTower build_parameter_tower(RingPtr ring, std::vector<Polynomial> params,
                                 std::optional<Polynomial> u1, std::string label) {
  if (params.empty()) throw ValidationError("parameter tower needs at least one element");
  Ideal i1(ring, params);
  if (!is_m_primary(i1)) throw ValidationError("(x_1, ..., x_d) is not m-primary");
  if (!u1) {
    std::vector<Polynomial> soc = socle(i1);
    if (soc.size() != 1) {
      throw ValidationError("socle dimension " + std::to_string(soc.size()) +
                            " at t = 1 (I_t is not irreducible)");
    }
    u1 = soc.front();
  }
  IdealTower tower = IdealTower::parameter(std::move(ring), std::move(params), std::move(*u1),
                                           std::move(label));
  validate_tower(tower);
  return tower;
}

SymbolicPower symbolic_power(const Ideal& j, unsigned n, const Polynomial& c) {
  if (c.is_zero()) throw ValidationError("saturating element c must be nonzero");
  if (n == 0) return {Ideal::unit(j.ring_ptr()), 0, ""};
  Saturation sat = saturation(ideal_power(j, n), c);
  SymbolicPower out{sat.ideal, sat.exponent,
                    "symbolic power trusts that c lies in every embedded prime of J^n "
                    "and in no minimal prime of J"};
  if (j.contains(c)) out.warning += "; c lies in J, so the assertion fails";
  return out;
}

void validate_qgorenstein_data(const QGorensteinData& data) {
  const RingPtr& ring = data.ring;
  if (data.h == 0) throw ValidationError("h must be at least 1");
  const int d = ring_dimension(ring);
  if (d < 1 || static_cast<int>(data.parameters.size()) != d) {
    throw ValidationError("expected d = " + std::to_string(d) + " parameters, got " +
                          std::to_string(data.parameters.size()));
  }
  if (data.a_rest.size() != data.parameters.size() - std::min<std::size_t>(2, d)) {
    throw ValidationError("expected " + std::to_string(std::max(0, d - 2)) +
                          " elements a_3, ..., a_d");
  }
  Ideal j(ring, data.canonical);
  if (!j.contains(data.parameters[0])) throw ValidationError("containment x_1 ∈ J fails");
  if (!is_m_primary(Ideal(ring, data.parameters))) {
    throw ValidationError("(x_1, ..., x_d) is not m-primary");
  }
  if (d >= 2) {
    Ideal ar(ring, {data.a});
    for (const Polynomial& g : data.canonical) {
      if (!ar.contains(data.parameters[1] * g)) {
        throw ValidationError("containment x_2 J ⊆ aR fails at generator " + ring->format(g));
      }
    }
  }
  if (d >= 3) {
    Ideal jh = symbolic_power(j, data.h, data.saturator).ideal;
    for (int k = 2; k < d; ++k) {
      Ideal air(ring, {data.a_rest[k - 2]});
      for (const Polynomial& g : jh.generators()) {
        if (!air.contains(data.parameters[k] * g)) {
          throw ValidationError("containment x_" + std::to_string(k + 1) + " J^(h) ⊆ a_" +
                                std::to_string(k + 1) + "R fails");
        }
      }
    }
  }
}

IdealTower build_qgorenstein_tower(const QGorensteinData& data, std::string label) {
  validate_qgorenstein_data(data);
  std::vector<Polynomial> gens = data.canonical;
  for (std::size_t k = 1; k < data.parameters.size(); ++k) gens.push_back(data.parameters[k]);
  std::vector<Polynomial> soc = socle(Ideal(data.ring, gens));
  if (soc.size() != 1) {
    throw ValidationError("socle dimension " + std::to_string(soc.size()) +
                          " at t = 1 (I_t is not irreducible)");
  }
  IdealTower tower = IdealTower::qgorenstein(data.ring, data.canonical, data.parameters,
                                             soc.front(), std::move(label));
  validate_tower(tower);
  return tower;
}

std::string StabilizationReport::scope() const { return window(e_max, t_max); }
std::string EquivalenceReport::scope() const { return window(e_max, t_max); }

StabilizationReport condition_a_check(const IdealTower& tower, unsigned e_max, unsigned t_max) {
  if (t_max < 2) throw ValidationError("t_max must be at least 2");
  StabilizationReport report;
  report.label = tower.label();
  report.e_max = e_max;
  report.t_max = t_max;
  const std::uint64_t p = tower.ring()->characteristic();
  bool all_stable = true;
  unsigned uniform = 1;
  for (unsigned e = 1; e <= e_max; ++e) {
    const std::uint64_t q = frobenius_power(p, e);
    StabilizationRow row{e, q, {}, std::nullopt, 0, true};
    std::vector<Ideal> colons;
    for (unsigned t = 1; t <= t_max; ++t) {
      colons.push_back(tower.splitting_colon(t, q));
      row.steps.push_back({t, length(colons.back()).value(), colons.back().fingerprint()});
    }
    for (unsigned a = 0; a < t_max; ++a) {
      for (unsigned b = a + 1; b < t_max; ++b) {
        if (!gens_in(colons[a], colons[b])) row.ascending = false;
      }
    }
    unsigned start = t_max;
    while (start > 1 && row.steps[start - 2].fingerprint == row.steps[t_max - 1].fingerprint) {
      --start;
    }
    if (start < t_max) {
      if (!ideal_equal(colons[start - 1], colons[t_max - 1])) {
        throw InternalError("fingerprint collision between distinct colon ideals");
      }
      row.t0 = start;
      uniform = std::max(uniform, start);
    } else {
      all_stable = false;
    }
    row.kernel_length = row.steps[start - 1].length;
    report.ascending = report.ascending && row.ascending;
    report.rows.push_back(std::move(row));
  }
  if (all_stable) report.uniform_t0 = uniform;
  return report;
}

KernelLevel condition_b_level(const IdealTower& tower, unsigned e, unsigned t_max) {
  if (t_max < 2) throw ValidationError("t_max must be at least 2");
  const std::uint64_t q = frobenius_power(tower.ring()->characteristic(), e);
  Ideal prev = tower.splitting_colon(1, q);
  for (unsigned t = 2; t <= t_max; ++t) {
    Ideal next = tower.splitting_colon(t, q);
    if (!gens_in(prev, next)) {
      throw ValidationError("colon chain is not ascending at t = " + std::to_string(t - 1));
    }
    if (ideal_equal(prev, next)) return {e, q, length(prev).value(), t - 1, true, prev};
    prev = next;
  }
  return {e, q, length(prev).value(), t_max, false, prev};
}

EquivalenceReport condition_equivalence_check(const IdealTower& tower, unsigned e_max,
                                              unsigned t_max) {
  EquivalenceReport report;
  report.label = tower.label();
  report.e_max = e_max;
  report.t_max = t_max;
  StabilizationReport a = condition_a_check(tower, e_max, t_max);
  for (const StabilizationRow& ra : a.rows) {
    KernelLevel b = condition_b_level(tower, ra.e, t_max);
    EquivalenceRow row{ra.e, ra.q, ra.t0, std::nullopt, false, false, ""};
    if (b.stable) row.t_b = b.t;
    if (!ra.t0 || !b.stable) {
      row.note = "NOT_STABLE";
    } else {
      row.ideals_equal = ideal_equal(b.ideal, tower.splitting_colon(*ra.t0, ra.q));
      if (*row.t_b > *row.t_a) {
        row.note = "condition (B) stabilizes after the condition (A) plateau";
      } else if (!row.ideals_equal) {
        row.note = "stable colon ideals differ";
      } else {
        row.consistent = true;
      }
    }
    report.holds = report.holds && row.consistent;
    report.rows.push_back(std::move(row));
  }
  return report;
}

ColonSaturationCheck verify_colon_saturation_identity(const QGorensteinData& data, unsigned n,
                                                      unsigned N, unsigned i) {
  const std::size_t d = data.parameters.size();
  if (i < 2 || i > d) throw ValidationError("index i must satisfy 2 <= i <= d");
  if (n == 0 || N == 0) throw ValidationError("n and N must be at least 1");
  const RingPtr& ring = data.ring;
  SymbolicPower jp = symbolic_power(Ideal(ring, data.canonical), n * data.h, data.saturator);
  std::vector<Polynomial> gens(jp.ideal.generators().begin(), jp.ideal.generators().end());
  for (std::size_t k = 1; k < d; ++k) {
    if (k + 1 != i) gens.push_back(data.parameters[k].pow(N));
  }
  Ideal k_ideal(ring, std::move(gens));
  const Polynomial& xi = data.parameters[i - 1];
  Saturation sat = saturation(k_ideal, xi);
  Ideal bounded = colon(k_ideal, xi.pow(n));

  ColonSaturationCheck out;
  out.n = n;
  out.N = N;
  out.i = i;
  out.saturation_exponent = sat.exponent;
  out.warning = jp.warning;
  out.holds = true;
  for (const Polynomial& g : sat.ideal.generators()) {
    if (!bounded.contains(g)) {
      out.holds = false;
      out.witness = g;
      break;
    }
  }
  return out;
}

}  // namespace fsig
