#pragma once

#include <string>

#include <json.hpp>

#include "siegel/boundary.hpp"
#include "siegel/contraction.hpp"
#include "siegel/fixedset.hpp"

namespace siegel::io {

using nlohmann::json;

// Binary64 round-trip exact formatting (17 significant digits).
std::string g17(double v);

// SiegelPoint wire schema: {"X": [[x11,x12],[x12,x22]], "Y": [[...]]}.
// Symmetry mismatch above 1e-12 is rejected (AsymmetryError), Y eigenvalues
// below -1e-12 are rejected (NotPSD), anything malformed is a SchemaError.
geo::SiegelPoint parse_point(const json& payload);
geo::SiegelPoint parse_point_text(const std::string& text);
json point_to_json(const geo::SiegelPoint& z);

json report_to_json(const contraction::ContractionReport& rep);
json report_to_json(const boundary::CaseReport& rep);
json report_to_json(const fixedset::ScanReport& rep);

// Trace CSV: header n,mu_star,w1_dist,w2_dist,wa_dist; the *_dist columns are
// Cauchy gaps against the previous schedule point.
std::string trace_to_csv(const boundary::CaseReport& rep);

}  // namespace siegel::io
