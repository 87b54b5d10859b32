#pragma once

#include <stdexcept>
#include <string>

namespace affdev {

enum class Errc {
    ParseError,
    DanglingReference,
    UnknownVertex,
    NotCofacial,
    InconsistentDistance,
    NotCombinatoriallyEquivalent,
    TooFewFaces,
    Unrealizable,
    NotASuspension,
    RankDeficient,
    DegenerateBase,
    DegenerateMap,
    NonPlanarFace,
    InvalidParams,
    NegativeSquaredVolume,
    NotClosed,
    Internal,
};

inline const char* errc_name(Errc c)
{
    switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::DanglingReference: return "DanglingReference";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::NotCofacial: return "NotCofacial";
    case Errc::InconsistentDistance: return "InconsistentDistance";
    case Errc::NotCombinatoriallyEquivalent: return "NotCombinatoriallyEquivalent";
    case Errc::TooFewFaces: return "TooFewFaces";
    case Errc::Unrealizable: return "Unrealizable";
    case Errc::NotASuspension: return "NotASuspension";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::DegenerateBase: return "DegenerateBase";
    case Errc::DegenerateMap: return "DegenerateMap";
    case Errc::NonPlanarFace: return "NonPlanarFace";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::NegativeSquaredVolume: return "NegativeSquaredVolume";
    case Errc::NotClosed: return "NotClosed";
    case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

/// Library-wide exception: an error code plus a human-readable message.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace affdev
