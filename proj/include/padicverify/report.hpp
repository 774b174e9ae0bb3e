#pragma once

#include <string>

#include "padicverify/engine.hpp"

namespace pv {

// Structured report with fixed top-level key order; byte-identical for equal
// configs (timings are emitted only when requested and are the one
// non-deterministic section).
std::string render_report_json(const VerificationReport& report);

// Flat single-row view of a report, mirroring the protocol summary table.
std::string csv_header();
std::string csv_row(const VerificationReport& report);

}  // namespace pv
