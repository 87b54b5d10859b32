#pragma once

namespace affdev {

/// Outcome vocabulary shared by the suspension certificate and the full
/// recognizer. The pipeline never claims unconditional affine equivalence:
/// the positive answer is conditional on hypotheses (strict convexity,
/// closedness) that a development alone cannot certify.
enum class VerdictKind { NotAffineEquivalent, AffineEquivalentConditional, Inconclusive };

inline const char* to_string(VerdictKind k)
{
    switch (k) {
    case VerdictKind::NotAffineEquivalent: return "NotAffineEquivalent";
    case VerdictKind::AffineEquivalentConditional: return "AffineEquivalentConditional";
    case VerdictKind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

}  // namespace affdev
