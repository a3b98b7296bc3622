#pragma once

#include "plqi/witness.hpp"

#include <string>
#include <variant>
#include <vector>

namespace plqi {

// Which factor of the normalized input the witness fails to commute with.
enum class CertificateBranch {
    orientation_reversing,  // witness h against the normalized map itself
    plus,                   // witness g against the plus factor
    plus_inverse,           // witness g against the inverse of the plus factor
    minus,                  // witness g against the minus factor, mirrored through 0
    minus_inverse           // likewise for the inverse of the minus factor
};

// Everything needed to regenerate the lazy witness exactly. For the minus
// branches the descriptor lives on the positive side: the certified factor is
// rho_conjugate(driver) and the effective witness is t -> -g(-t).
struct GWitnessDescriptor {
    Rational threshold;
    PLMap driver;
    AffineRule rule;
    std::vector<Rational> prefix;
    bool operator==(const GWitnessDescriptor&) const = default;
};

// Sample abscissas extend indefinitely by t -> a*t + c, so a displacement
// exceeding any requested bound can be exhibited past the stored samples.
struct RecurrenceClaim {
    Rational a;
    Rational c;
    bool operator==(const RecurrenceClaim&) const = default;
};

// Machine-checkable evidence that the class of `input` is not central:
// the witness and the branch's driving map have commutator displacements
// that grow without bound along the sampled points. Sample displacements are
// stored as magnitudes and are strictly increasing.
struct NonCentralityCertificate {
    PLMap input;
    PLMap normalized;
    CertificateBranch branch;
    std::variant<PLMap, GWitnessDescriptor> witness;  // h | g descriptor
    std::vector<DisplacementSample> samples;
    RecurrenceClaim claim;
};

// The one non-certificate outcome: the normalized map stays within bounded
// distance of the identity, so its class is the identity class.
struct KernelReport {
    PLMap input;
    PLMap normalized;
    Rational sup;  // exact sup |normalized - id|
};

using CertifyResult = std::variant<NonCentralityCertificate, KernelReport>;

// Runs the full pipeline: normalize at 0; orientation-reversing maps get the
// witness h sampled at t = -2^j; otherwise the plus factor (or, if that is a
// kernel class, the minus factor mirrored into the positive half-line) gets
// the lazy witness g sampled along the divergent sequence. sample_count >= 1.
CertifyResult certify_noncentral(const PLMap& f, std::size_t sample_count);

struct VerificationResult {
    bool accepted;
    std::string reason;  // first failing check when rejected, empty otherwise
};

// Independent check of a certificate using only evaluation: the
// normalization chain, the witness descriptor's sequence conditions and
// slope confinement, every stated sample displacement, the claim recurrence,
// and the existence of a displacement exceeding `bound` (extending the
// samples via the claim when needed).
VerificationResult verify_certificate(const NonCentralityCertificate& cert,
                                      const Rational& bound);

}  // namespace plqi
