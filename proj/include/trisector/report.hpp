#ifndef TRISECTOR_REPORT_HPP
#define TRISECTOR_REPORT_HPP

#include "trisector/pipeline.hpp"

#include <json.hpp>

#include <string>

namespace trisector {

/// Stable-key-order JSON form of the report; rationals appear as "p/q"
/// strings and polynomials in their canonical text form.
nlohmann::ordered_json report_to_json(const CertificationReport& report);

/// Inverse of report_to_json; the round trip is lossless.
CertificationReport report_from_json(const nlohmann::ordered_json& j);

/// Human-readable run summary (one line per check).
std::string report_to_text(const CertificationReport& report);

} // namespace trisector

#endif
