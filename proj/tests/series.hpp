#pragma once

// T-expansion of zeta functions and a brute-force jet count for the maximal ideal.

#include <cstdint>
#include <map>
#include <vector>

#include "nt/errors.hpp"
#include "nt/zeta.hpp"

namespace nt::testing {

/// Polynomial in u as exponent -> coefficient.
using UPoly = std::map<std::int64_t, BigInt>;

/// Coefficients of T^0..T^order; only denominators with T-dependent factors are expandable.
inline std::vector<UPoly> t_series(const ZetaFn& z, std::int64_t order) {
    std::vector<UPoly> s(static_cast<std::size_t>(order + 1));
    for (const auto& [e, c] : z.numerator())
        if (e.second <= order) s[e.second][e.first + z.u_shift()] += c;
    for (const auto& [atom, m] : z.denominator()) {
        if (atom.second == 0) throw Error(ErrorKind::InvalidInput, "u-only factor has no finite T-expansion");
        for (unsigned k = 0; k < m; ++k) {
            // multiply by 1/(1 - u^a T^b) = sum_j u^(aj) T^(bj)
            std::vector<UPoly> out(s.size());
            for (std::int64_t t = 0; t <= order; ++t)
                for (std::int64_t j = 0; t + j * static_cast<std::int64_t>(atom.second) <= order; ++j)
                    for (const auto& [a, c] : s[t])
                        out[t + j * atom.second][a + j * static_cast<std::int64_t>(atom.first)] += c;
            s = std::move(out);
        }
    }
    for (auto& p : s)
        for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
    return s;
}

inline Rational eval(const UPoly& p, const Rational& u) {
    Rational v = 0;
    for (const auto& [a, c] : p) {
        Rational term = c;
        for (std::int64_t i = 0; i < (a < 0 ? -a : a); ++i) {
            if (a < 0) term /= u;
            else term *= u;
        }
        v += term;
    }
    return v;
}

/// Jets (x(t), y(t)) mod t^(n+1) over F_p with min(ord x, ord y) = n.
inline std::uint64_t jets_of_order(unsigned p, unsigned n) {
    const unsigned len = n + 1;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < 2 * len; ++i) total *= p;
    std::uint64_t hits = 0;
    std::vector<unsigned> digits(2 * len);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (auto& d : digits) {
            d = static_cast<unsigned>(c % p);
            c /= p;
        }
        auto ord = [&](unsigned off) {
            for (unsigned i = 0; i < len; ++i)
                if (digits[off + i] != 0) return i;
            return len;
        };
        if (std::min(ord(0), ord(len)) == n) ++hits;
    }
    return hits;
}

}  // namespace nt::testing
