#include "plqi/documents.hpp"

#include <stdexcept>
#include <utility>

namespace plqi {

namespace {

[[noreturn]] void fail(const std::string& context, const std::string& message) {
    throw std::invalid_argument(context + ": " + message);
}

const Json& field(const Json& j, const char* key, const std::string& context) {
    if (!j.is_object())
        fail(context, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        fail(context, std::string("missing field '") + key + "'");
    return *it;
}

void check_keys(const Json& j, std::initializer_list<const char*> keys,
                const std::string& context) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* key : keys)
            if (item.key() == key)
                known = true;
        if (!known)
            fail(context, "unexpected field '" + item.key() + "'");
    }
}

Rational rational_field(const Json& j, const char* key, const std::string& context) {
    const Json& value = field(j, key, context);
    if (!value.is_string())
        fail(context + "." + key, "expected a rational string");
    try {
        return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(context + "." + key, e.what());
    }
}

std::vector<Rational> rational_list_field(const Json& j, const char* key,
                                          const std::string& context) {
    const Json& value = field(j, key, context);
    if (!value.is_array())
        fail(context + "." + key, "expected an array of rational strings");
    std::vector<Rational> out;
    out.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) {
        const Json& entry = value[i];
        const std::string where = context + "." + key + "[" + std::to_string(i) + "]";
        if (!entry.is_string())
            fail(where, "expected a rational string");
        try {
            out.push_back(parse_rational(entry.get<std::string>()));
        } catch (const std::invalid_argument& e) {
            fail(where, e.what());
        }
    }
    return out;
}

PLMap map_from_json_at(const Json& j, const std::string& context) {
    check_keys(j, {"knots", "left_slope", "right_slope"}, context);
    const Json& knots_json = field(j, "knots", context);
    if (!knots_json.is_array() || knots_json.empty())
        fail(context + ".knots", "expected a nonempty array of [x, y] pairs");
    std::vector<Knot> knots;
    knots.reserve(knots_json.size());
    for (std::size_t i = 0; i < knots_json.size(); ++i) {
        const Json& pair = knots_json[i];
        const std::string where = context + ".knots[" + std::to_string(i) + "]";
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
            !pair[1].is_string())
            fail(where, "expected a [x, y] pair of rational strings");
        try {
            knots.push_back(Knot{parse_rational(pair[0].get<std::string>()),
                                 parse_rational(pair[1].get<std::string>())});
        } catch (const std::invalid_argument& e) {
            fail(where, e.what());
        }
    }
    Rational left = rational_field(j, "left_slope", context);
    Rational right = rational_field(j, "right_slope", context);
    try {
        return PLMap(std::move(knots), std::move(left), std::move(right));
    } catch (const std::invalid_argument& e) {
        fail(context, e.what());
    }
}

Json rule_to_json(const AffineRule& rule) {
    Json j;
    j["a"] = format_rational(rule.a);
    j["c"] = format_rational(rule.c);
    return j;
}

AffineRule rule_from_json(const Json& j, const std::string& context) {
    check_keys(j, {"a", "c"}, context);
    return AffineRule{rational_field(j, "a", context), rational_field(j, "c", context)};
}

Json rational_list_to_json(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const Rational& value : values)
        out.push_back(format_rational(value));
    return out;
}

}  // namespace

Json map_to_json(const PLMap& f) {
    Json j;
    Json knots = Json::array();
    for (const Knot& k : f.knots())
        knots.push_back(Json::array({format_rational(k.x), format_rational(k.y)}));
    j["knots"] = std::move(knots);
    j["left_slope"] = format_rational(f.left_slope());
    j["right_slope"] = format_rational(f.right_slope());
    return j;
}

PLMap map_from_json(const Json& j) {
    return map_from_json_at(j, "map");
}

std::string emit_map(const PLMap& f) {
    return emit_document(map_to_json(f));
}

PLMap parse_map(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("map document is not valid JSON: ") + e.what());
    }
    return map_from_json(j);
}

std::string branch_to_string(CertificateBranch branch) {
    switch (branch) {
        case CertificateBranch::orientation_reversing:
            return "orientation_reversing";
        case CertificateBranch::plus:
            return "plus";
        case CertificateBranch::plus_inverse:
            return "plus_inverse";
        case CertificateBranch::minus:
            return "minus";
        case CertificateBranch::minus_inverse:
            return "minus_inverse";
    }
    throw std::logic_error("branch_to_string: unknown branch");
}

CertificateBranch branch_from_string(const std::string& name) {
    if (name == "orientation_reversing")
        return CertificateBranch::orientation_reversing;
    if (name == "plus")
        return CertificateBranch::plus;
    if (name == "plus_inverse")
        return CertificateBranch::plus_inverse;
    if (name == "minus")
        return CertificateBranch::minus;
    if (name == "minus_inverse")
        return CertificateBranch::minus_inverse;
    throw std::invalid_argument("certificate.branch: unknown branch '" + name + "'");
}

Json certificate_to_json(const NonCentralityCertificate& cert) {
    Json j;
    j["input"] = map_to_json(cert.input);
    j["normalized"] = map_to_json(cert.normalized);
    j["branch"] = branch_to_string(cert.branch);
    Json witness;
    if (const auto* descriptor = std::get_if<GWitnessDescriptor>(&cert.witness)) {
        witness["kind"] = "g";
        witness["threshold"] = format_rational(descriptor->threshold);
        witness["driver"] = map_to_json(descriptor->driver);
        witness["rule"] = rule_to_json(descriptor->rule);
        witness["prefix"] = rational_list_to_json(descriptor->prefix);
    } else {
        witness["kind"] = "h";
    }
    j["witness"] = std::move(witness);
    Json samples = Json::array();
    for (const DisplacementSample& sample : cert.samples) {
        Json entry;
        entry["t"] = format_rational(sample.t);
        entry["displacement"] = format_rational(sample.displacement);
        samples.push_back(std::move(entry));
    }
    j["samples"] = std::move(samples);
    Json claim;
    claim["kind"] = "affine_recurrence";
    claim["a"] = format_rational(cert.claim.a);
    claim["c"] = format_rational(cert.claim.c);
    j["claim"] = std::move(claim);
    return j;
}

NonCentralityCertificate certificate_from_json(const Json& j) {
    const std::string context = "certificate";
    check_keys(j, {"input", "normalized", "branch", "witness", "samples", "claim"}, context);
    PLMap input = map_from_json_at(field(j, "input", context), context + ".input");
    PLMap normalized =
        map_from_json_at(field(j, "normalized", context), context + ".normalized");
    const Json& branch_json = field(j, "branch", context);
    if (!branch_json.is_string())
        fail(context + ".branch", "expected a string");
    CertificateBranch branch = branch_from_string(branch_json.get<std::string>());

    const Json& witness_json = field(j, "witness", context);
    const Json& kind_json = field(witness_json, "kind", context + ".witness");
    if (!kind_json.is_string())
        fail(context + ".witness.kind", "expected a string");
    const std::string kind = kind_json.get<std::string>();
    std::variant<PLMap, GWitnessDescriptor> witness{build_witness_h()};
    if (kind == "g") {
        check_keys(witness_json, {"kind", "threshold", "driver", "rule", "prefix"},
                   context + ".witness");
        GWitnessDescriptor descriptor{
            rational_field(witness_json, "threshold", context + ".witness"),
            map_from_json_at(field(witness_json, "driver", context + ".witness"),
                             context + ".witness.driver"),
            rule_from_json(field(witness_json, "rule", context + ".witness"),
                           context + ".witness.rule"),
            rational_list_field(witness_json, "prefix", context + ".witness")};
        witness = std::move(descriptor);
    } else if (kind == "h") {
        check_keys(witness_json, {"kind"}, context + ".witness");
    } else {
        fail(context + ".witness.kind", "expected 'h' or 'g'");
    }

    const Json& samples_json = field(j, "samples", context);
    if (!samples_json.is_array())
        fail(context + ".samples", "expected an array");
    std::vector<DisplacementSample> samples;
    samples.reserve(samples_json.size());
    for (std::size_t i = 0; i < samples_json.size(); ++i) {
        const std::string where = context + ".samples[" + std::to_string(i) + "]";
        const Json& entry = samples_json[i];
        check_keys(entry, {"t", "displacement"}, where);
        samples.push_back(DisplacementSample{rational_field(entry, "t", where),
                                             rational_field(entry, "displacement", where)});
    }

    const Json& claim_json = field(j, "claim", context);
    check_keys(claim_json, {"kind", "a", "c"}, context + ".claim");
    const Json& claim_kind = field(claim_json, "kind", context + ".claim");
    if (!claim_kind.is_string() || claim_kind.get<std::string>() != "affine_recurrence")
        fail(context + ".claim.kind", "expected 'affine_recurrence'");
    RecurrenceClaim claim{rational_field(claim_json, "a", context + ".claim"),
                          rational_field(claim_json, "c", context + ".claim")};

    return NonCentralityCertificate{std::move(input),  std::move(normalized), branch,
                                    std::move(witness), std::move(samples),    claim};
}

std::string emit_certificate(const NonCentralityCertificate& cert) {
    return emit_document(certificate_to_json(cert));
}

NonCentralityCertificate parse_certificate(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("certificate document is not valid JSON: ") +
                                    e.what());
    }
    return certificate_from_json(j);
}

Json kernel_report_to_json(const KernelReport& report) {
    Json j;
    j["kind"] = "kernel_report";
    j["input"] = map_to_json(report.input);
    j["normalized"] = map_to_json(report.normalized);
    j["sup"] = format_rational(report.sup);
    return j;
}

Json sequence_to_json(const DivergentSequence& seq) {
    Json j;
    j["case"] = seq.kind == SequenceCase::direct ? "direct" : "inverse";
    j["b1"] = format_rational(seq.b1());
    j["rule"] = rule_to_json(seq.rule);
    j["prefix"] = rational_list_to_json(seq.prefix);
    return j;
}

Json slope_summary_to_json(const SlopeSummary& summary) {
    Json j;
    j["slopes"] = rational_list_to_json(summary.slopes);
    j["breaks"] = rational_list_to_json(summary.breaks);
    j["bound"] = format_rational(summary.bound);
    j["orientation"] =
        summary.orientation == Orientation::preserving ? "preserving" : "reversing";
    return j;
}

Json membership_to_json(const MembershipFlags& flags) {
    Json j;
    j["fixes_zero"] = flags.fixes_zero;
    j["orientation_preserving"] = flags.orientation_preserving;
    j["identity_near_minus_infinity"] = flags.identity_near_minus_infinity;
    j["identity_near_plus_infinity"] = flags.identity_near_plus_infinity;
    j["compactly_supported"] = flags.compactly_supported;
    return j;
}

Json orientation_split_to_json(const OrientationSplit& split) {
    Json j;
    j["positive_part"] = map_to_json(split.positive_part);
    j["reflection_exponent"] = split.reflection_exponent;
    return j;
}

Json plus_minus_split_to_json(const PlusMinusSplit& split) {
    Json j;
    j["plus"] = map_to_json(split.plus);
    j["minus"] = map_to_json(split.minus);
    return j;
}

std::string emit_document(const Json& j) {
    return j.dump() + "\n";
}

}  // namespace plqi
