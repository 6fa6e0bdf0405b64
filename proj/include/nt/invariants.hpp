#pragma once

// Log canonical threshold, Hilbert-Samuel multiplicity and the inequalities between them.

#include <cstdint>
#include <vector>

#include "nt/engine.hpp"
#include "nt/tree.hpp"

namespace nt {

/// A component where the ratio (p*nuStage + q)/N is attained.
struct LctWitness {
    enum class Site {
        Face,        // compact face of a stage polygon
        XComponent,  // x^N factor of a stage (alpha = N)
        YComponent,  // y^N factor of a stripped stage (beta = N)
        Leaf,        // (y + h)^N of a depth-zero leaf
    };
    Rational value;
    Site site = Site::Face;
    std::vector<std::size_t> path;  // child indices from the root stage
    std::size_t face = 0;           // face index for Site::Face
    std::uint64_t p = 0, q = 0, nuStage = 1, N = 0;
};

/// Every candidate site of the trace, stages in breadth-first order.
std::vector<LctWitness> lct_sites(const TraceNode& trace);

/// Minimum over all sites at nu = 1; the earliest stage wins ties.
LctWitness lct(const Ideal& ideal);
LctWitness lct(const TraceNode& trace);

struct CertificateStep {
    int vertex = 0;  // first-line vertex v0
    int edge = 0;    // horizontal edge made vertical
    ExchangeSide side = ExchangeSide::Below;
    std::uint64_t n0 = 0, m0 = 0, N0 = 0;
};

/// Supporting line p*alpha + q*beta = N of the first-line polygon.
struct DiagonalFace {
    std::uint64_t p = 0, q = 0, N = 0;
};

struct LctCertificate {
    NewtonTree tree;  // after the exchanges
    std::vector<CertificateStep> changes;
    bool attainedOnFirstLine = false;
    DiagonalFace diagonalFace;
    Rational value;
};

/// Moves the minimising component onto the first vertical line by exchanges; throws CertificateFailed.
LctCertificate lct_certificate(const Ideal& ideal);

/// Hilbert-Samuel multiplicity from the areas of all stripped stages; throws NotFiniteCodimension.
std::uint64_t multiplicity(const Ideal& ideal);

struct InequalityReport {
    std::uint64_t e = 0;
    Rational lct;
    Rational bound1;
    Rational bound2;
    bool equalityShape = false;
    bool lctOnFirstDiagram = false;  // bound2 only applies when this holds
};

InequalityReport inequality_report(const Ideal& ideal);

}  // namespace nt
