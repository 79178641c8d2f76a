#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace majicolor {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// io
struct MalformedInput : Error {
    std::size_t byte_offset;
    MalformedInput(const std::string &msg, std::size_t off)
        : Error(msg + " (at byte " + std::to_string(off) + ")"), byte_offset(off) {}
};
struct OutOfRangeVertex : Error {
    using Error::Error;
};

// families
struct InvalidFamilyParameters : Error {
    using Error::Error;
};

// graph ops
struct NotASubgraph : Error {
    using Error::Error;
};

// colorings
struct IncompleteColoring : Error {
    using Error::Error;
};

// construct
struct EmptyGraph : Error {
    using Error::Error;
};
struct HypothesisViolated : Error {
    int vertex;
    int color;
    HypothesisViolated(int v, int c)
        : Error("majority hypothesis violated at vertex " + std::to_string(v) + ", color " +
                std::to_string(c)),
          vertex(v), color(c) {}
};
struct PaletteOverlap : Error {
    using Error::Error;
};
struct NoAsymmetricSubgraphFound : Error {
    using Error::Error;
};
struct VerifierRejected : Error {
    using Error::Error;
};
struct PathNotSpanning : Error {
    using Error::Error;
};
struct MinDegreeTooSmall : Error {
    using Error::Error;
};
struct CycleTooShort : Error {
    using Error::Error;
};
struct BadColors : Error {
    using Error::Error;
};
struct PreconditionGeodesicFailed : Error {
    using Error::Error;
};
struct PaletteTooSmall : Error {
    using Error::Error;
};
struct NotTwoConnected : Error {
    using Error::Error;
};
struct EnumerationExhausted : Error {
    using Error::Error;
};
struct NotConnectivity1 : Error {
    using Error::Error;
};
struct PendantEdgePresent : Error {
    using Error::Error;
};
struct NotBipartite : Error {
    using Error::Error;
};
struct NotSymmetric : Error {
    using Error::Error;
};
struct NotEulerian : Error {
    using Error::Error;
};
struct OddEdgeCount : Error {
    using Error::Error;
};

} // namespace majicolor
