#pragma once

#include "plqi/certificate.hpp"
#include "plqi/qi.hpp"
#include "plqi/structure.hpp"

#include <json.hpp>

#include <string>

namespace plqi {

using Json = nlohmann::ordered_json;

// Canonical JSON documents: fields in fixed order, rationals as "p" or
// "p/q" strings, compact whitespace-free layout plus one trailing newline.
// emit(parse(text)) is byte-identical for canonical documents. Parsers throw
// std::invalid_argument with a field diagnostic on malformed input.

Json map_to_json(const PLMap& f);
PLMap map_from_json(const Json& j);
std::string emit_map(const PLMap& f);
PLMap parse_map(const std::string& text);

Json certificate_to_json(const NonCentralityCertificate& cert);
NonCentralityCertificate certificate_from_json(const Json& j);
std::string emit_certificate(const NonCentralityCertificate& cert);
NonCentralityCertificate parse_certificate(const std::string& text);

Json kernel_report_to_json(const KernelReport& report);
Json sequence_to_json(const DivergentSequence& seq);
Json slope_summary_to_json(const SlopeSummary& summary);
Json membership_to_json(const MembershipFlags& flags);
Json orientation_split_to_json(const OrientationSplit& split);
Json plus_minus_split_to_json(const PlusMinusSplit& split);

std::string branch_to_string(CertificateBranch branch);
CertificateBranch branch_from_string(const std::string& name);

// Serializes any document produced above: compact dump plus trailing newline.
std::string emit_document(const Json& j);

}  // namespace plqi
