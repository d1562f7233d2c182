#include "fsig/report.hpp"

#include <set>
#include <sstream>

#include "fsig/artinian.hpp"

namespace fsig {

namespace {

Json optional_t(const std::optional<unsigned>& t) { return t ? Json(*t) : Json(nullptr); }

Json polys(const Ring& ring, std::span<const Polynomial> ps) {
  Json out = Json::array();
  for (const Polynomial& p : ps) out.push_back(ring.format(p));
  return out;
}

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

Json extrapolation_json(const std::optional<Extrapolation>& ex) {
  if (!ex) return nullptr;
  return {{"limit", format_rational(ex->limit)},
          {"limit_decimal", to_double(ex->limit)},
          {"slope", format_rational(ex->slope)},
          {"max_residual", format_rational(ex->residual)},
          {"rows_used", ex->rows_used},
          {"method", ex->method}};
}

Json ring_check_report(const RingDefinition& def, const TermOrder& order) {
  const Ring& ring = *def.ring;
  const Ideal zero = Ideal::zero(def.ring);
  const GroebnerBasis& gb = zero.groebner(order);
  Json basis = Json::array();
  for (const Polynomial& g : gb.elements()) basis.push_back(ring.format(g));
  Json weights = Json::array();
  for (Exponent w : ring.weights()) weights.push_back(w);
  Json out = {{"command", "ring-check"},
              {"label", def.label},
              {"p", ring.characteristic()},
              {"variables", std::vector<std::string>(ring.names().begin(), ring.names().end())},
              {"weights", weights},
              {"relations", polys(ring, ring.relations())},
              {"order", order.name()},
              {"relation_basis", basis},
              {"relation_basis_size", gb.elements().size()},
              {"dimension", ring_dimension(def.ring)},
              {"graded", ring.is_graded()},
              {"maximal_ideal_m_primary", is_m_primary(Ideal::maximal(def.ring))}};
  out["declared_dimension"] = def.dimension ? Json(*def.dimension) : Json(nullptr);
  return out;
}

Json hk_report(const HKEstimate& est, const Ideal& i) {
  Json rows = Json::array();
  for (const HKRow& r : est.rows) {
    rows.push_back({{"e", r.e}, {"q", r.q}, {"length", r.length},
                    {"normalized", format_rational(r.normalized)}});
  }
  return {{"command", "ehk"},
          {"label", est.label},
          {"ideal", i.to_string()},
          {"dimension", est.dimension},
          {"rows", rows},
          {"extrapolation", extrapolation_json(est.extrapolation)},
          {"truncated", est.truncated},
          {"truncation_reason", est.truncation_reason}};
}

Json signature_report(const SignatureEstimate& tower_rows, const SignatureEstimate& diff_rows,
                      unsigned comparison_t, const std::vector<bool>& agreement) {
  Json rows = Json::array();
  bool all_agree = true;
  for (std::size_t k = 0; k < tower_rows.rows.size(); ++k) {
    const SignatureRow& r = tower_rows.rows[k];
    const SignatureRow& d = diff_rows.rows[k];
    all_agree = all_agree && agreement[k];
    rows.push_back({{"e", r.e},
                    {"q", r.q},
                    {"length", r.length},
                    {"normalized", format_rational(r.normalized)},
                    {"t", r.t},
                    {"status", r.stable ? "STABLE" : "NOT_STABLE"},
                    {"lengths_by_t", r.lengths_by_t},
                    {"hk_length", d.hk_length},
                    {"hk_plus_length", d.hk_plus_length},
                    {"difference_length", d.length},
                    {"difference_normalized", format_rational(d.normalized)},
                    {"routes_agree", static_cast<bool>(agreement[k])}});
  }
  return {{"command", "fsig"},
          {"label", tower_rows.label},
          {"dimension", tower_rows.dimension},
          {"comparison_t", comparison_t},
          {"rows", rows},
          {"all_stable", tower_rows.all_stable},
          {"routes_agree", all_agree},
          {"signature", extrapolation_json(tower_rows.extrapolation)},
          {"signature_from_difference", extrapolation_json(diff_rows.extrapolation)}};
}

Json condition_a_report(const StabilizationReport& report) {
  Json rows = Json::array();
  for (const StabilizationRow& r : report.rows) {
    Json steps = Json::array();
    for (const ColonStep& s : r.steps) {
      steps.push_back({{"t", s.t}, {"length", s.length}, {"fingerprint", s.fingerprint}});
    }
    rows.push_back({{"e", r.e},
                    {"q", r.q},
                    {"steps", steps},
                    {"t0", optional_t(r.t0)},
                    {"status", r.t0 ? "STABLE" : "NOT_STABLE"},
                    {"kernel_length", r.kernel_length},
                    {"ascending", r.ascending}});
  }
  Json verdict = report.uniform_t0 ? Json{{"STABLE_AT", *report.uniform_t0}} : Json("NOT_STABLE");
  return {{"command", "condition-a"},
          {"label", report.label},
          {"e_max", report.e_max},
          {"t_max", report.t_max},
          {"rows", rows},
          {"uniform_t0", optional_t(report.uniform_t0)},
          {"ascending", report.ascending},
          {"verdict", verdict},
          {"scope", report.scope()}};
}

Json condition_b_report(const std::vector<KernelLevel>& levels,
                        const EquivalenceReport& equivalence) {
  Json rows = Json::array();
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const KernelLevel& b = levels[k];
    const EquivalenceRow& eq = equivalence.rows[k];
    rows.push_back({{"e", b.e},
                    {"q", b.q},
                    {"kernel_length", b.length},
                    {"t", b.t},
                    {"status", b.stable ? "STABLE" : "NOT_STABLE"},
                    {"fingerprint", b.ideal.fingerprint()},
                    {"condition_a_t0", optional_t(eq.t_a)},
                    {"matches_condition_a", eq.consistent},
                    {"note", eq.note}});
  }
  return {{"command", "condition-b"},
          {"label", equivalence.label},
          {"e_max", equivalence.e_max},
          {"t_max", equivalence.t_max},
          {"rows", rows},
          {"equivalence_holds", equivalence.holds},
          {"scope", equivalence.scope()}};
}

Json eq1_report(const std::vector<ColonSaturationCheck>& checks, const Ring& ring) {
  Json rows = Json::array();
  bool all = true;
  std::string warning;
  for (const ColonSaturationCheck& c : checks) {
    all = all && c.holds;
    warning = c.warning;
    rows.push_back({{"n", c.n},
                    {"N", c.N},
                    {"i", c.i},
                    {"verdict", c.holds ? "HOLDS" : "FAILS"},
                    {"witness", c.witness ? Json(ring.format(*c.witness)) : Json(nullptr)},
                    {"saturation_exponent", c.saturation_exponent}});
  }
  return {{"command", "eq1"},
          {"rows", rows},
          {"verdict", all ? "HOLDS" : "FAILS"},
          {"warning", warning}};
}

std::string rows_to_csv(const Json& report) {
  std::ostringstream out;
  const Json& rows = report.at("rows");
  std::set<std::string> keys;
  for (const Json& r : rows) {
    for (const auto& [k, v] : r.items()) keys.insert(k);
  }
  bool first = true;
  for (const std::string& k : keys) {
    out << (first ? "" : ",") << k;
    first = false;
  }
  out << "\n";
  for (const Json& r : rows) {
    first = true;
    for (const std::string& k : keys) {
      out << (first ? "" : ",");
      if (r.contains(k)) out << csv_cell(r.at(k));
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace fsig
