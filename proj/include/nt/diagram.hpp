#pragma once

// Newton diagrams of ideals: vertices, faces, initial-ideal data and the dual fan.

#include <cstdint>
#include <vector>

#include "nt/algebra.hpp"

namespace nt {

/// Segment of the Newton polygon on the line p*alpha + q*beta = N.
struct Face {
    unsigned p = 1;
    unsigned q = 1;
    std::uint64_t N = 0;
    Exponent top;
    Exponent bottom;

    /// Number of lattice steps from top to bottom.
    std::uint32_t length() const { return (top.b - bottom.b) / p; }
    friend bool operator==(const Face&, const Face&) = default;
};

struct NewtonDiagram {
    std::vector<Exponent> vertices;  // alpha increasing, beta decreasing
    std::vector<Face> faces;         // top to bottom
    std::uint32_t alpha0 = 0;
    std::uint32_t betaM = 0;
    std::uint32_t height = 0;

    bool empty_polygon() const { return faces.empty(); }
    friend bool operator==(const NewtonDiagram&, const NewtonDiagram&) = default;
};

/// Decomposition x^aS y^bS F(x^q, y^p) (k_1, ..., k_s) of the initial ideal on a face.
struct FaceData {
    std::uint32_t aS = 0;
    std::uint32_t bS = 0;
    UniPoly facePoly;  // monic, facePoly(0) != 0, roots are the mu of the Newton maps
    std::uint32_t dS = 0;
    RootReport roots;

    bool dicritical() const { return dS >= 1; }
};

NewtonDiagram newton_diagram(const Ideal& ideal);

/// Throws InvalidFace if `face` is not a face of the ideal's diagram.
FaceData initial_data(const Ideal& ideal, const Face& face);

/// Area between the axes and the Newton polygon; NotFiniteCodimension if an axis is missed.
Rational area_m(const Ideal& ideal);

struct Direction {
    unsigned p = 0;
    unsigned q = 0;
    friend bool operator==(const Direction&, const Direction&) = default;
};

struct Cone {
    Direction gen1;
    Direction gen2;
    Exponent vertex;
};

struct Ray {
    Direction gen;
    Face face;
};

struct DualFan {
    std::vector<Cone> cones;
    std::vector<Ray> rays;
};

DualFan dual_fan(const NewtonDiagram& diagram);

}  // namespace nt
