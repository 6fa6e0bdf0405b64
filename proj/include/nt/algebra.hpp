#pragma once

// Exact arithmetic layer: rationals, dense univariate and sparse bivariate
// polynomials over Q, gcd machinery and rational root extraction.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nt {

using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);
std::string to_string(const Rational& r);

/// Dense polynomial in one variable. coeffs[i] multiplies X^i; no trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, std::size_t degree);
    /// X - r
    static UniPoly linear_root(const Rational& r);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
    Rational eval(const Rational& x) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    /// Order of vanishing at 0 (lowest nonzero index); -1 for zero.
    int low_order() const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& c, const UniPoly& a);
    UniPoly operator-() const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

    std::string str(char var = 'X') const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder over Q.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0,0) = 0.
UniPoly gcd(UniPoly a, UniPoly b);
/// Throws if b does not divide a.
UniPoly divide_exact(const UniPoly& a, const UniPoly& b);

struct RootReport {
    std::vector<std::pair<Rational, unsigned>> roots;  // ascending by root
    UniPoly residual;                                  // has no rational root

    bool all_rational() const { return residual.degree() <= 0; }
};

RootReport rational_roots(const UniPoly& g);

/// Exponent pair (alpha, beta) of x^alpha y^beta.
struct Exponent {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Sparse polynomial in x, y with rational coefficients; zero coefficients never stored.
class BiPoly {
public:
    using Terms = std::map<Exponent, Rational>;

    BiPoly() = default;
    explicit BiPoly(const Rational& c);
    static BiPoly x(std::uint32_t power = 1);
    static BiPoly y(std::uint32_t power = 1);
    static BiPoly term(const Rational& c, std::uint32_t a, std::uint32_t b);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    Rational coeff(std::uint32_t a, std::uint32_t b) const;
    Rational constant_term() const { return coeff(0, 0); }
    void add_term(const Rational& c, std::uint32_t a, std::uint32_t b);

    std::uint32_t total_degree() const;
    std::uint32_t degree_x() const;
    std::uint32_t degree_y() const;
    /// Largest k with x^k | f (0 for zero polynomial).
    std::uint32_t x_order() const;
    std::uint32_t y_order() const;

    BiPoly divide_by_x_power(std::uint32_t k) const;
    BiPoly derivative_y() const;
    BiPoly swapped() const;
    /// f(px, py): full substitution of both variables.
    BiPoly compose(const BiPoly& px, const BiPoly& py) const;
    /// f(0, y) as a polynomial in y.
    UniPoly restrict_x0() const;

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const Rational& c, const BiPoly& a);
    BiPoly operator-() const;
    BiPoly pow(unsigned n) const;
    friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

    /// Parser-compatible text, e.g. "3*x^2*y - 1/2*y^3".
    std::string str() const;

private:
    Terms terms_;
};

/// Bivariate gcd over Q, normalised so the leading coefficient (highest y, then highest x) is 1.
BiPoly gcd(const BiPoly& a, const BiPoly& b);
/// Throws Internal if b does not divide a exactly.
BiPoly divide_exact(const BiPoly& a, const BiPoly& b);

/// Nonempty list of nonzero generators of an ideal of Q[[x,y]].
class Ideal {
public:
    Ideal() = default;
    /// Throws EmptyIdeal for an empty list; zero generators are dropped.
    explicit Ideal(std::vector<BiPoly> generators);

    const std::vector<BiPoly>& generators() const { return gens_; }
    /// Some generator has nonzero constant term.
    bool is_unit() const;
    /// Throws UnitIdeal when is_unit().
    void require_proper() const;

    std::uint32_t x_order() const;
    std::uint32_t y_order() const;
    Ideal divide_by_x_power(std::uint32_t k) const;
    Ideal swapped() const;
    Ideal map(const BiPoly& px, const BiPoly& py) const;
    std::uint32_t total_degree() const;

    std::string str() const;

private:
    std::vector<BiPoly> gens_;
};

/// Newton map x = mu^{q'} x1^p, y = x1^q (y1 + mu^{p'}) with p p' - q q' = 1.
struct NewtonMapSpec {
    unsigned p = 1;
    unsigned q = 1;
    unsigned p_prime = 1;
    unsigned q_prime = 0;
    Rational mu = 1;

    /// Canonical (p', q') with p' <= q and q' < p.
    static NewtonMapSpec canonical(unsigned p, unsigned q, const Rational& mu);
    bool valid() const;
};

Rational rational_pow(const Rational& base, unsigned exponent);

BiPoly substitute_newton(const BiPoly& f, const NewtonMapSpec& m);

struct BranchAnalysis {
    std::uint32_t k = 0;
    BiPoly e;
    std::uint32_t nu = 0;
    bool smooth_power = false;
};

BranchAnalysis local_branch_analysis(const BiPoly& f);

struct DepthZeroForm {
    std::uint32_t k = 0;
    std::uint32_t nu = 0;
    friend bool operator==(const DepthZeroForm&, const DepthZeroForm&) = default;
};

/// (k, nu) when the ideal equals (x^k (y + h(x))^nu) up to local units.
std::optional<DepthZeroForm> depth_zero_form(const Ideal& ideal);

}  // namespace nt
