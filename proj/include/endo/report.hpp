#pragma once

#include "endo/endotactic.hpp"

#include "json.hpp"

#include <string>

namespace endo {

/// Rationals appear as "p/q" strings; reaction indices are numbered from 1.
/// All timing data sits under "timings".
nlohmann::ordered_json report_json(const ReactionNetwork& net, const Classification& c, const ClassifyOptions& options);

nlohmann::ordered_json witness_json(const WitnessCertificate& cert);

/// Plain-text report with the same content. Decimal approximations are
/// marked with "~".
std::string report_text(const ReactionNetwork& net, const Classification& c);

}  // namespace endo
