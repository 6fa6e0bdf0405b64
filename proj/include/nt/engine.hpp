#pragma once

// The Newton algorithm: Newton maps on ideals, the recursive trace, depth and
// coordinate changes towards good / very good coordinates.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nt/algebra.hpp"
#include "nt/diagram.hpp"

namespace nt {

struct TraceNode;

struct TraceChild {
    std::size_t face = 0;   // index into the parent's diagram faces
    Rational mu;            // root of that face polynomial
    unsigned multiplicity = 0;
    std::uint32_t N0 = 0;   // x-power extracted by the Newton map
    std::shared_ptr<const TraceNode> node;
};

struct TraceNode {
    Ideal ideal;              // including the monomial factor x^xPower
    std::uint32_t xPower = 0;
    std::uint32_t nu = 1;     // the stage form is x^(nu-1) dx ^ dy
    NewtonDiagram diagram;
    std::vector<FaceData> faceData;  // empty on leaves
    std::vector<TraceChild> children;
    std::optional<DepthZeroForm> leaf;

    Ideal stripped() const { return ideal.divide_by_x_power(xPower); }
};

struct NewtonImage {
    std::uint32_t N0 = 0;
    Ideal Iprime;
};

/// sigma_{(p,q,mu)}(I) = (x1^N0) I'.
NewtonImage apply_newton_map(const Ideal& ideal, unsigned p, unsigned q, const Rational& mu);

/// Throws NonRationalRoot when a face polynomial has an irrational factor.
std::shared_ptr<const TraceNode> run_algorithm(const Ideal& ideal, std::uint32_t nu = 1);

unsigned depth(const TraceNode& trace);
unsigned depth(const Ideal& ideal);

struct CoordinateStatus {
    bool good = false;
    bool veryGood = false;
    std::optional<Face> witness;
};

CoordinateStatus coordinate_status(const Ideal& ideal);

/// x = px(x', y'), y = py(x', y').
struct CoordinateChange {
    enum class Kind { ShearY, ShearX, TwoRoots, DepthZero };
    Kind kind = Kind::ShearY;
    BiPoly px;
    BiPoly py;
    std::string description;
};

struct ImprovedCoordinates {
    Ideal ideal;
    std::vector<CoordinateChange> changes;
};

ImprovedCoordinates improve_coordinates(const Ideal& ideal, unsigned max_steps = 64);

}  // namespace nt
