#include "plqi/certificate.hpp"

#include "plqi/qi.hpp"
#include "plqi/structure.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace plqi {

namespace {

// Honest certificates grow geometrically, so any reasonable bound is reached
// in far fewer steps; the cap keeps verification total on tampered claims.
constexpr std::size_t kMaxExtensionSteps = 4096;

template <typename MapF, typename MapW>
Rational displacement_magnitude(const MapF& f, const MapW& w, const Rational& t) {
    return rational_abs(f(w(t)) - w(f(t)));
}

}  // namespace

CertifyResult certify_noncentral(const PLMap& f, std::size_t sample_count) {
    if (sample_count == 0)
        throw std::invalid_argument("certify_noncentral: sample_count must be positive");
    PLMap normalized = normalize_at_zero(f);

    if (normalized.orientation() == Orientation::reversing) {
        const PLMap h = build_witness_h();
        std::vector<DisplacementSample> samples;
        samples.reserve(sample_count);
        Rational t(-2);
        for (std::size_t j = 0; j < sample_count; ++j) {
            samples.push_back(DisplacementSample{t, displacement_magnitude(normalized, h, t)});
            t *= 2;
        }
        return NonCentralityCertificate{f, std::move(normalized),
                                        CertificateBranch::orientation_reversing, h,
                                        std::move(samples), RecurrenceClaim{2, 0}};
    }

    PlusMinusSplit split = plus_minus_split(normalized);

    if (!in_kernel(split.plus)) {
        DivergentSequence seq = extract_divergent_sequence(split.plus, sample_count);
        LazyPLMap g = build_witness_g(split.plus, seq);
        std::vector<DisplacementSample> samples;
        samples.reserve(sample_count);
        for (std::size_t k = 0; k < sample_count; ++k) {
            const Rational& t = seq.prefix[k];
            samples.push_back(DisplacementSample{t, displacement_magnitude(g.driver(), g, t)});
        }
        const CertificateBranch branch = seq.kind == SequenceCase::direct
                                             ? CertificateBranch::plus
                                             : CertificateBranch::plus_inverse;
        GWitnessDescriptor descriptor{g.threshold(), g.driver(), seq.rule, seq.prefix};
        RecurrenceClaim claim{seq.rule.a, seq.rule.c};
        return NonCentralityCertificate{f,       std::move(normalized),     branch,
                                        std::move(descriptor), std::move(samples), claim};
    }

    if (!in_kernel(split.minus)) {
        PLMap mirrored = rho_conjugate(split.minus);
        DivergentSequence seq = extract_divergent_sequence(mirrored, sample_count);
        LazyPLMap g = build_witness_g(mirrored, seq);
        PLMap certified = rho_conjugate(g.driver());
        auto witness = [&g](const Rational& t) { return Rational(-g(Rational(-t))); };
        std::vector<DisplacementSample> samples;
        samples.reserve(sample_count);
        for (std::size_t k = 0; k < sample_count; ++k) {
            Rational t = -seq.prefix[k];
            Rational displacement = displacement_magnitude(certified, witness, t);
            samples.push_back(DisplacementSample{std::move(t), std::move(displacement)});
        }
        const CertificateBranch branch = seq.kind == SequenceCase::direct
                                             ? CertificateBranch::minus
                                             : CertificateBranch::minus_inverse;
        GWitnessDescriptor descriptor{g.threshold(), g.driver(), seq.rule, seq.prefix};
        RecurrenceClaim claim{seq.rule.a, Rational(-seq.rule.c)};
        return NonCentralityCertificate{f,       std::move(normalized),     branch,
                                        std::move(descriptor), std::move(samples), claim};
    }

    Rational sup = *sup_difference(normalized, PLMap::identity()).sup;
    return KernelReport{f, std::move(normalized), std::move(sup)};
}

VerificationResult verify_certificate(const NonCentralityCertificate& cert,
                                      const Rational& bound) {
    auto reject = [](std::string reason) {
        return VerificationResult{false, std::move(reason)};
    };

    if (normalize_at_zero(cert.input) != cert.normalized)
        return reject("normalized map does not match the input");
    if (cert.samples.empty())
        return reject("certificate carries no samples");

    if (cert.branch == CertificateBranch::orientation_reversing) {
        if (cert.normalized.orientation() != Orientation::reversing)
            return reject("branch requires an orientation-reversing map");
        const PLMap* h = std::get_if<PLMap>(&cert.witness);
        if (h == nullptr || *h != build_witness_h())
            return reject("witness is not the one-break doubling map");
        if (!(cert.claim == RecurrenceClaim{Rational(2), Rational(0)}))
            return reject("claim recurrence mismatch");
        Rational expected_t(-2);
        const Rational* previous = nullptr;
        for (const DisplacementSample& sample : cert.samples) {
            if (sample.t != expected_t)
                return reject("sample abscissa mismatch");
            if (displacement_magnitude(cert.normalized, *h, sample.t) != sample.displacement)
                return reject("sample displacement mismatch");
            if (previous != nullptr && !(sample.displacement > *previous))
                return reject("sample displacements are not strictly increasing");
            previous = &sample.displacement;
            expected_t = cert.claim.a * expected_t + cert.claim.c;
        }
        Rational t = cert.samples.back().t;
        Rational displacement = cert.samples.back().displacement;
        std::size_t steps = 0;
        while (displacement <= bound) {
            if (++steps > kMaxExtensionSteps)
                return reject("displacement did not exceed the bound");
            t = cert.claim.a * t + cert.claim.c;
            displacement = displacement_magnitude(cert.normalized, *h, t);
        }
        return VerificationResult{true, {}};
    }

    const GWitnessDescriptor* descriptor = std::get_if<GWitnessDescriptor>(&cert.witness);
    if (descriptor == nullptr)
        return reject("witness descriptor mismatch for the branch");
    if (cert.normalized.orientation() != Orientation::preserving)
        return reject("branch requires an orientation-preserving map");

    const bool mirrored = cert.branch == CertificateBranch::minus ||
                          cert.branch == CertificateBranch::minus_inverse;
    const bool inverse = cert.branch == CertificateBranch::plus_inverse ||
                         cert.branch == CertificateBranch::minus_inverse;

    PlusMinusSplit split = plus_minus_split(cert.normalized);
    PLMap factor = mirrored ? rho_conjugate(split.minus) : std::move(split.plus);
    PLMap expected_driver = inverse ? invert(factor) : std::move(factor);
    if (descriptor->driver != expected_driver)
        return reject("witness driver does not match the certified factor");

    if (descriptor->prefix.size() < 4)
        return reject("sequence prefix too short");
    if (descriptor->threshold != descriptor->prefix.front())
        return reject("threshold does not match the sequence start");
    for (std::size_t k = 0; k + 1 < descriptor->prefix.size(); ++k)
        if (descriptor->prefix[k + 1] !=
            descriptor->rule.a * descriptor->prefix[k] + descriptor->rule.c)
            return reject("sequence prefix does not follow the recurrence");

    std::optional<LazyPLMap> g;
    try {
        g.emplace(descriptor->driver,
                  DivergentSequence{inverse ? SequenceCase::inverse : SequenceCase::direct,
                                    descriptor->rule, descriptor->prefix});
    } catch (const std::exception& e) {
        return reject(std::string("witness descriptor invalid: ") + e.what());
    }

    const Rational half(1, 2);
    const Rational five_quarters(5, 4);
    for (std::size_t k = 0; k + 1 < descriptor->prefix.size(); ++k) {
        const LazyPLMap::Interval& interval = g->interval(k);
        Rational left = (interval.break_y - interval.lower) / (interval.break_x - interval.lower);
        Rational right = (interval.upper - interval.break_y) / (interval.upper - interval.break_x);
        if (left != half)
            return reject("witness slope left of the break is not 1/2");
        if (!(right > 1 && right < five_quarters))
            return reject("witness slope right of the break leaves (1, 5/4)");
    }

    RecurrenceClaim expected_claim{descriptor->rule.a,
                                   mirrored ? Rational(-descriptor->rule.c) : descriptor->rule.c};
    if (!(cert.claim == expected_claim))
        return reject("claim recurrence mismatch");

    const PLMap certified = mirrored ? rho_conjugate(descriptor->driver) : descriptor->driver;
    auto witness = [&](const Rational& t) {
        return mirrored ? Rational(-(*g)(Rational(-t))) : (*g)(t);
    };

    const Rational* previous = nullptr;
    for (std::size_t k = 0; k < cert.samples.size(); ++k) {
        Rational expected_t = g->sequence().term(k);
        if (mirrored)
            expected_t = -expected_t;
        const DisplacementSample& sample = cert.samples[k];
        if (sample.t != expected_t)
            return reject("sample abscissa mismatch");
        if (displacement_magnitude(certified, witness, sample.t) != sample.displacement)
            return reject("sample displacement mismatch");
        if (previous != nullptr && !(sample.displacement > *previous))
            return reject("sample displacements are not strictly increasing");
        previous = &sample.displacement;
    }

    Rational t = cert.samples.back().t;
    Rational displacement = cert.samples.back().displacement;
    std::size_t steps = 0;
    while (displacement <= bound) {
        if (++steps > kMaxExtensionSteps)
            return reject("displacement did not exceed the bound");
        t = cert.claim.a * t + cert.claim.c;
        displacement = displacement_magnitude(certified, witness, t);
    }
    return VerificationResult{true, {}};
}

}  // namespace plqi
