#include <doctest.h>

#include "nt/cli.hpp"
#include "nt/diagram.hpp"
#include "nt/errors.hpp"
#include "reference_ideals.hpp"

using namespace nt;
using namespace nt::testing;

namespace {

bool has_face(const NewtonDiagram& d, unsigned p, unsigned q, std::uint64_t N) {
    for (const auto& f : d.faces)
        if (f.p == p && f.q == q && f.N == N) return true;
    return false;
}

}  // namespace

TEST_CASE("Example-1 diagram") {
    NewtonDiagram d = newton_diagram(parse_ideal(E1));
    REQUIRE(d.vertices.size() == 3);
    CHECK(d.vertices[0] == Exponent{0, 5});
    CHECK(d.vertices[1] == Exponent{1, 3});
    CHECK(d.vertices[2] == Exponent{4, 0});
    REQUIRE(d.faces.size() == 2);
    CHECK(has_face(d, 2, 1, 5));
    CHECK(has_face(d, 1, 1, 4));
    CHECK(d.faces[0].p == 2);
    CHECK(d.height == 5);
}

TEST_CASE("monomial diagram is a single vertex") {
    NewtonDiagram d = newton_diagram(parse_ideal("[x^3*y^2]"));
    CHECK(d.empty_polygon());
    CHECK(d.vertices.size() == 1);
    CHECK(d.alpha0 == 3);
    CHECK(d.betaM == 2);
    DualFan fan = dual_fan(d);
    REQUIRE(fan.cones.size() == 1);
    CHECK(fan.cones[0].gen1 == Direction{1, 0});
    CHECK(fan.cones[0].gen2 == Direction{0, 1});
    CHECK(fan.cones[0].vertex == Exponent{3, 2});
}

TEST_CASE("second stage diagram keeps the x-power") {
    NewtonDiagram d = newton_diagram(parse_ideal(E1_STAGE2));
    REQUIRE(d.faces.size() == 2);
    CHECK(has_face(d, 1, 1, 7));
    CHECK(has_face(d, 1, 3, 9));
    DualFan fan = dual_fan(d);
    REQUIRE(fan.cones.size() == 3);
    CHECK(fan.cones[1].gen1 == Direction{1, 1});
    CHECK(fan.cones[1].gen2 == Direction{1, 3});
    CHECK(fan.cones[1].vertex == Exponent{6, 1});
}

TEST_CASE("initial data on Example 1") {
    Ideal I = parse_ideal(E1);
    NewtonDiagram d = newton_diagram(I);
    FaceData s1 = initial_data(I, d.faces[0]);
    CHECK(s1.aS == 0);
    CHECK(s1.bS == 3);
    CHECK(s1.dS == 0);
    CHECK(s1.facePoly == UniPoly({Rational(-3), Rational(1)}));
    FaceData s2 = initial_data(I, d.faces[1]);
    CHECK(s2.aS == 1);
    CHECK(s2.bS == 0);
    CHECK(s2.dS == 0);
    CHECK(s2.facePoly == UniPoly({Rational(1), Rational(3), Rational(3), Rational(1)}));
    REQUIRE(s2.roots.roots.size() == 1);
    CHECK(s2.roots.roots[0].first == -1);
    CHECK(s2.roots.roots[0].second == 3);

    Ideal J = parse_ideal(E1_STAGE2);
    NewtonDiagram dj = newton_diagram(J);
    FaceData t = initial_data(J, dj.faces[0]);
    CHECK(t.aS == 4);
    CHECK(t.bS == 1);
    CHECK(t.dS == 2);
    CHECK(t.facePoly == UniPoly::constant(1));
    CHECK(t.dicritical());
    CHECK(initial_data(J, dj.faces[1]).dS == 1);

    Face bogus = d.faces[0];
    bogus.N = 6;
    CHECK_THROWS_AS(initial_data(I, bogus), Error);
}

TEST_CASE("area_m") {
    CHECK(area_m(parse_ideal("[x^2, y^3]")) == 3);
    CHECK(area_m(parse_ideal("[x, y]")) == Rational(1, 2));
    CHECK(area_m(parse_ideal("[x^2, y^3]")) == area_m(parse_ideal("[y^2, x^3]")));
    CHECK_THROWS_AS(area_m(parse_ideal("[x^2, x*y]")), Error);
    // E3: vertices (0,10), (6,4), (8,3), (12,0)
    CHECK(area_m(parse_ideal(E3)) == 44);
}

TEST_CASE("dual fan of Example 1") {
    DualFan fan = dual_fan(newton_diagram(parse_ideal(E1)));
    REQUIRE(fan.cones.size() == 3);
    CHECK(fan.cones[0].gen1 == Direction{1, 0});
    CHECK(fan.cones[0].gen2 == Direction{2, 1});
    CHECK(fan.cones[0].vertex == Exponent{0, 5});
    CHECK(fan.cones[1].gen2 == Direction{1, 1});
    CHECK(fan.cones[2].gen2 == Direction{0, 1});
    CHECK(fan.cones[2].vertex == Exponent{4, 0});
    REQUIRE(fan.rays.size() == 2);
    CHECK(fan.rays[0].gen == Direction{2, 1});
    CHECK(fan.rays[1].gen == Direction{1, 1});
}
