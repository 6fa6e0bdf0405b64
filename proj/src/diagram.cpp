#include "nt/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "nt/errors.hpp"

namespace nt {

namespace {

std::int64_t cross(const Exponent& o, const Exponent& a, const Exponent& b) {
    std::int64_t ax = std::int64_t(a.a) - o.a, ay = std::int64_t(a.b) - o.b;
    std::int64_t bx = std::int64_t(b.a) - o.a, by = std::int64_t(b.b) - o.b;
    return ax * by - ay * bx;
}

}  // namespace

NewtonDiagram newton_diagram(const Ideal& ideal) {
    ideal.require_proper();
    // lowest beta for every alpha, then keep the staircase
    std::map<std::uint32_t, std::uint32_t> lowest;
    for (const auto& g : ideal.generators())
        for (const auto& [e, c] : g.terms()) {
            auto [it, inserted] = lowest.try_emplace(e.a, e.b);
            if (!inserted) it->second = std::min(it->second, e.b);
        }
    std::vector<Exponent> stairs;
    for (const auto& [a, b] : lowest)
        if (stairs.empty() || b < stairs.back().b) stairs.push_back({a, b});

    std::vector<Exponent> hull;
    for (const auto& pt : stairs) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
        hull.push_back(pt);
    }

    NewtonDiagram d;
    d.vertices = hull;
    d.alpha0 = hull.front().a;
    d.betaM = hull.back().b;
    d.height = hull.front().b - hull.back().b;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        const Exponent& t = hull[i];
        const Exponent& b = hull[i + 1];
        std::uint32_t da = b.a - t.a, db = t.b - b.b;
        std::uint32_t g = std::gcd(da, db);
        Face f;
        f.p = db / g;
        f.q = da / g;
        f.N = std::uint64_t(f.p) * t.a + std::uint64_t(f.q) * t.b;
        f.top = t;
        f.bottom = b;
        d.faces.push_back(f);
    }
    return d;
}

FaceData initial_data(const Ideal& ideal, const Face& face) {
    NewtonDiagram d = newton_diagram(ideal);
    if (std::find(d.faces.begin(), d.faces.end(), face) == d.faces.end())
        throw Error(ErrorKind::InvalidFace, "not a face of the Newton diagram");
    const std::uint32_t len = face.length();
    // z^j sits at the j-th lattice point counted from the top endpoint
    std::vector<UniPoly> models;
    for (const auto& g : ideal.generators()) {
        std::vector<Rational> c(len + 1);
        for (std::uint32_t j = 0; j <= len; ++j) c[j] = g.coeff(face.top.a + j * face.q, face.top.b - j * face.p);
        UniPoly P(std::move(c));
        if (!P.is_zero()) models.push_back(std::move(P));
    }
    ensure(!models.empty(), "face carries no initial part");
    UniPoly g;
    for (const auto& P : models) g = gcd(g, P);
    const std::uint32_t v = static_cast<std::uint32_t>(g.low_order());
    std::vector<Rational> hat(g.coeffs().begin() + v, g.coeffs().end());
    const std::uint32_t e = static_cast<std::uint32_t>(hat.size() - 1);
    std::uint32_t dS = 0;
    for (const auto& P : models) dS = std::max(dS, static_cast<std::uint32_t>(divide_exact(P, g).degree()));

    FaceData out;
    out.aS = face.top.a + face.q * v;
    out.bS = face.top.b - face.p * (v + e + dS);
    // reversed so that the roots are the mu with y^p - mu x^q dividing the initial part
    std::reverse(hat.begin(), hat.end());
    out.facePoly = UniPoly(std::move(hat)).monic();
    out.dS = dS;
    out.roots = rational_roots(out.facePoly);
    return out;
}

Rational area_m(const Ideal& ideal) {
    NewtonDiagram d = newton_diagram(ideal);
    if (d.alpha0 != 0 || d.betaM != 0)
        throw Error(ErrorKind::NotFiniteCodimension, "Newton polygon does not meet both axes: " + ideal.str());
    Rational twice = 0;
    for (const auto& f : d.faces)
        twice += Rational(BigInt(f.bottom.a - f.top.a) * (BigInt(f.top.b) + f.bottom.b));
    return twice / 2;
}

DualFan dual_fan(const NewtonDiagram& diagram) {
    DualFan fan;
    std::vector<Direction> dirs{{1, 0}};
    for (const auto& f : diagram.faces) {
        dirs.push_back({f.p, f.q});
        fan.rays.push_back({{f.p, f.q}, f});
    }
    dirs.push_back({0, 1});
    for (std::size_t k = 0; k + 1 < dirs.size(); ++k) fan.cones.push_back({dirs[k], dirs[k + 1], diagram.vertices[k]});
    return fan;
}

}  // namespace nt
