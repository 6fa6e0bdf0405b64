#pragma once

// Motivic zeta functions as exact rational functions in u = L^-1 and T.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nt/diagram.hpp"
#include "nt/engine.hpp"

namespace nt {

/// Polynomial in u and T with integer coefficients; keys are (u-exponent, T-exponent).
using UTPoly = std::map<std::pair<std::int64_t, std::int64_t>, BigInt>;

/// Denominator atom (a, b) standing for 1 - u^a T^b.
using Atom = std::pair<std::uint64_t, std::uint64_t>;

/// u^uShift * numerator / prod (1 - u^a T^b)^mult.
class ZetaFn {
public:
    ZetaFn() = default;
    static ZetaFn monomial(const BigInt& c, std::int64_t u_exp, std::int64_t t_exp);
    static ZetaFn from_poly(const UTPoly& num, std::int64_t u_shift = 0);
    /// L - 1 = (1 - u) / u
    static ZetaFn L_minus_1();
    /// L - r - 1 = (1 - (r + 1) u) / u
    static ZetaFn L_minus(unsigned r_plus_1);
    /// u^a T^b / (1 - u^a T^b)
    static ZetaFn geometric(std::uint64_t a, std::uint64_t b);
    /// 1 / (1 - u^a T^b)
    static ZetaFn inverse(const Atom& atom);

    bool is_zero() const { return num_.empty(); }
    const UTPoly& numerator() const { return num_; }
    std::int64_t u_shift() const { return shift_; }
    const std::map<Atom, unsigned>& denominator() const { return den_; }

    friend ZetaFn operator+(const ZetaFn& a, const ZetaFn& b);
    friend ZetaFn operator-(const ZetaFn& a, const ZetaFn& b);
    friend ZetaFn operator*(const ZetaFn& a, const ZetaFn& b);
    ZetaFn operator-() const;
    /// Equality of the represented rational functions (cross multiplication).
    friend bool operator==(const ZetaFn& a, const ZetaFn& b);

    /// Cancel every atom dividing the numerator and pull the lowest u-power into uShift.
    ZetaFn normalized() const;

    /// Divide by (1 - u^a T^b) when exact.
    static std::optional<UTPoly> divide_atom(const UTPoly& p, const Atom& atom);

private:
    void pull_u_power();
    UTPoly num_;
    std::int64_t shift_ = 0;
    std::map<Atom, unsigned> den_;
};

ZetaFn normalize(const ZetaFn& z);

struct Poles {
    std::vector<Atom> tDependent;  // b >= 1, with multiplicity
    std::vector<Atom> uOnly;       // b == 0
};

Poles poles(const ZetaFn& z);

UTPoly poly_mul(const UTPoly& a, const UTPoly& b);
UTPoly poly_add(const UTPoly& a, const UTPoly& b);
/// Product of the atoms as an expanded polynomial.
UTPoly expand_denominator(const std::map<Atom, unsigned>& den);

/// Integer points mu1*g1 + mu2*g2 with mu in (0,1]^2; throws DegenerateCone.
std::vector<std::pair<std::int64_t, std::int64_t>> lattice_points_P(Direction g1, Direction g2);

ZetaFn cone_contribution(const Cone& cone, std::uint32_t nu);
ZetaFn line_contribution(const Face& face, unsigned r, std::uint32_t nu);
/// Contribution of x^N1 y^N2 for the form x^(nu-1) dx ^ dy; throws InvalidInput.
ZetaFn zeta_monomial(std::uint64_t N1, std::uint64_t N2, std::uint32_t nu);

struct ZetaTerm {
    enum class Kind { Cone, Line, Leaf } kind = Kind::Cone;
    std::vector<std::size_t> path;  // child indices from the root stage
    std::size_t index = 0;          // cone or face index within the stage
    ZetaFn value;
};

struct ZetaBreakdown {
    ZetaFn total;
    std::vector<ZetaTerm> terms;
};

ZetaBreakdown zeta_breakdown(const TraceNode& trace);
ZetaFn zeta(const TraceNode& trace);
ZetaFn zeta(const Ideal& ideal, std::uint32_t nu = 1);

/// First-stage faces whose denominator factor cannot survive: non-dicritical, a single root,
/// and either the last face meeting the x-axis with p = 1 or the first face meeting the y-axis with q = 1.
std::vector<std::size_t> no_contribution_faces(const TraceNode& trace);

}  // namespace nt
