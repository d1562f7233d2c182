#ifndef FSIG_REPORT_HPP
#define FSIG_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "fsig/conditions.hpp"
#include "fsig/frobenius.hpp"
#include "fsig/registry.hpp"

namespace fsig {

/// Object keys are sorted, so dumps are byte-stable.
using Json = nlohmann::json;

Json ring_check_report(const RingDefinition& def, const TermOrder& order);
Json hk_report(const HKEstimate& est, const Ideal& i);
/// `agreement` holds one entry per row: does the colon length at the
/// comparison t equal the difference-route length.
Json signature_report(const SignatureEstimate& tower_rows, const SignatureEstimate& diff_rows,
                      unsigned comparison_t, const std::vector<bool>& agreement);
Json condition_a_report(const StabilizationReport& report);
Json condition_b_report(const std::vector<KernelLevel>& levels,
                        const EquivalenceReport& equivalence);
Json eq1_report(const std::vector<ColonSaturationCheck>& checks, const Ring& ring);
Json extrapolation_json(const std::optional<Extrapolation>& ex);

/// The report's "rows" array as CSV: one column per key, sorted; nested
/// values are written as quoted JSON.
std::string rows_to_csv(const Json& report);

}  // namespace fsig

#endif  // FSIG_REPORT_HPP
