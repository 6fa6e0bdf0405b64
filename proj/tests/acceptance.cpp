// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: acceptance [path-to-test_properties]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "nt/cli.hpp"
#include "nt/engine.hpp"
#include "nt/errors.hpp"
#include "nt/invariants.hpp"
#include "nt/zeta.hpp"
#include "oracles.hpp"
#include "reference_ideals.hpp"
#include "series.hpp"

using namespace nt;
using namespace nt::testing;

namespace {

// Collects failed checks of one criterion.
struct Check {
    std::vector<std::string> failures;

    void operator()(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

bool run(int k, const std::string& name, double limit_s, const std::function<void(Check&)>& body) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && s >= limit_s) c.failures.push_back("runtime " + std::to_string(s) + " s over limit");
    std::ostringstream detail;
    for (std::size_t i = 0; i < c.failures.size(); ++i) detail << (i ? "; " : "") << c.failures[i];
    std::cout << "criterion " << k << ": " << (c.failures.empty() ? "PASS" : "FAIL") << " " << name;
    if (!c.failures.empty()) std::cout << " (" << detail.str() << ")";
    std::cout << " [" << std::fixed << std::setprecision(3) << s << " s]\n";
    return c.failures.empty();
}

bool has_face(const NewtonDiagram& d, unsigned p, unsigned q, std::uint64_t N) {
    return std::any_of(d.faces.begin(), d.faces.end(), [&](const Face& f) { return f.p == p && f.q == q && f.N == N; });
}

ZetaFn frac(std::vector<std::tuple<long, std::int64_t, std::int64_t>> num, std::vector<Atom> den) {
    ZetaFn z;
    for (auto [c, a, b] : num) z = z + ZetaFn::monomial(c, a, b);
    for (const auto& at : den) z = z * ZetaFn::inverse(at);
    return z;
}

const ZetaFn* find_term(const ZetaBreakdown& br, ZetaTerm::Kind kind, std::vector<std::size_t> path, std::size_t index) {
    for (const auto& t : br.terms)
        if (t.kind == kind && t.path == path && t.index == index) return &t.value;
    return nullptr;
}

std::string atoms_text(const std::vector<Atom>& v) {
    std::string s = "{";
    for (const auto& [a, b] : v) s += (s.size() > 1 ? "," : "") + ("(" + std::to_string(a) + "," + std::to_string(b) + ")");
    return s + "}";
}

void example1_pipeline(Check& check) {
    const Ideal I = parse_ideal(E1);
    const NewtonDiagram d = newton_diagram(I);
    check(d.faces.size() == 2 && has_face(d, 2, 1, 5) && has_face(d, 1, 1, 4), "first diagram faces");
    if (d.faces.size() != 2) return;
    const FaceData s0 = initial_data(I, d.faces[0]);
    check(s0.aS == 0 && s0.bS == 3 && s0.dS == 0 && s0.facePoly == UniPoly({Rational(-3), Rational(1)}),
          "initial ideal y^3(y^2-3x)");
    const FaceData s1 = initial_data(I, d.faces[1]);
    check(s1.aS == 1 && s1.bS == 0 && s1.dS == 0 &&
              s1.facePoly == UniPoly({Rational(1), Rational(3), Rational(3), Rational(1)}),
          "initial ideal x(y+x)^3");
    const NewtonImage a = apply_newton_map(I, 2, 1, 3);
    check(a.N0 == 5 && depth_zero_form(a.Iprime) == DepthZeroForm{0, 1}, "image x1^5*y1");
    const NewtonImage b = apply_newton_map(I, 1, 1, -1);
    const Ideal expected = parse_ideal("[x^2*y, y^3+x^5]");
    check(b.N0 == 4 && newton_diagram(b.Iprime) == newton_diagram(expected), "image x1^4(x1^2*y1, y1^3+x1^5)");
    check(build_tree(b.Iprime) == build_tree(expected), "second-stage tree");
    const NewtonDiagram d2 = newton_diagram(b.Iprime);
    check(d2.faces.size() == 2 && has_face(d2, 1, 1, 3) && has_face(d2, 1, 3, 5), "stripped second-stage faces");
    auto trace = run_algorithm(I);
    const TraceNode& st = *trace->children.at(1).node;
    bool faces_ok = st.diagram.faces.size() == 2 && has_face(st.diagram, 1, 1, 7) && has_face(st.diagram, 1, 3, 9);
    if (faces_ok)
        for (std::size_t i = 0; i < 2; ++i) {
            const Face& f = st.diagram.faces[i];
            faces_ok = faces_ok && st.faceData[i].dS == (f.q == 1 ? 2u : 1u);
        }
    check(faces_ok, "second-stage faces a+b=7 (d=2), a+3b=9 (d=1)");
}

void example1_zeta(Check& check) {
    for (std::int64_t nu : {1, 2}) {
        const std::string tag = "nu=" + std::to_string(nu) + ": ";
        auto trace = run_algorithm(parse_ideal(E1), static_cast<std::uint32_t>(nu));
        const ZetaBreakdown br = zeta_breakdown(*trace);
        const ZetaFn L1 = ZetaFn::L_minus_1();
        const ZetaFn l2 = L1 * L1, l12 = L1 * ZetaFn::L_minus(2);
        const auto n = static_cast<std::uint64_t>(nu);
        const auto C = ZetaTerm::Kind::Cone, Ln = ZetaTerm::Kind::Line, Lf = ZetaTerm::Kind::Leaf;
        const std::vector<std::tuple<std::string, const ZetaFn*, ZetaFn>> groups = {
            {"cone 0", find_term(br, C, {}, 0), l2 * frac({{1, 3 * nu + 1, 5}}, {{2 * n + 1, 5}, {n, 0}})},
            {"cone 1", find_term(br, C, {}, 1), l2 * frac({{1, 3 * nu + 2, 9}}, {{2 * n + 1, 5}, {n + 1, 4}})},
            {"cone 2", find_term(br, C, {}, 2), l2 * frac({{1, nu + 2, 4}}, {{n + 1, 4}, {1, 0}})},
            {"line 0", find_term(br, Ln, {}, 0), l12 * ZetaFn::geometric(2 * n + 1, 5)},
            {"line 1", find_term(br, Ln, {}, 1), l12 * ZetaFn::geometric(n + 1, 4)},
            {"branch 1", find_term(br, Lf, {0}, 0), l2 * ZetaFn::geometric(2 * n + 1, 5) * ZetaFn::geometric(1, 1)},
            {"stage-2 cone 0", find_term(br, C, {1}, 0), l2 * frac({{1, 2 * nu + 3, 11}}, {{n + 2, 7}, {n + 1, 4}})},
            {"stage-2 cone 1", find_term(br, C, {1}, 1),
             l2 * frac({{1, nu + 3, 8}, {1, 2 * nu + 6, 16}}, {{n + 2, 7}, {n + 4, 9}})},
            {"stage-2 cone 2", find_term(br, C, {1}, 2), l2 * frac({{1, nu + 5, 9}}, {{n + 4, 9}, {1, 0}})},
            {"stage-2 line 0", find_term(br, Ln, {1}, 0), l2 * ZetaFn::geometric(n + 2, 7)},
            {"stage-2 line 1", find_term(br, Ln, {1}, 1), l2 * ZetaFn::geometric(n + 4, 9)},
        };
        ZetaFn sum;
        for (const auto& [name, got, want] : groups) {
            check(got && *got == want, tag + name);
            sum = sum + want;
        }
        check(br.terms.size() == groups.size(), tag + "group count");
        check(br.total == sum, tag + "total equals the sum of the groups");
        Poles p = poles(br.total);
        std::sort(p.tDependent.begin(), p.tDependent.end());
        std::vector<Atom> want{{n + 4, 9}, {n + 2, 7}, {1, 1}};
        std::sort(want.begin(), want.end());
        check(p.tDependent == want,
              tag + "reduced T-poles " + atoms_text(p.tDependent) + ", expected " + atoms_text(want));
    }
}

void maximal_ideal(Check& check) {
    const ZetaFn z = zeta(parse_ideal("[x, y]"), 1);
    check(z == frac({{1, 0, 1}, {-1, 2, 1}}, {{2, 1}}), "closed form (1-u^2)T/(1-u^2T)");
    const std::vector<UPoly> s = t_series(z, 3);
    check(s[0].empty(), "no T^0 term");
    for (std::int64_t n = 1; n <= 3; ++n) {
        check(s[n] == UPoly{{2 * (n - 1), 1}, {2 * n, -1}}, "T^" + std::to_string(n) + " coefficient");
        for (unsigned p : {2u, 3u, 5u}) {
            Rational measure(BigInt(std::to_string(jets_of_order(p, static_cast<unsigned>(n)))));
            for (std::int64_t i = 0; i < 2 * n; ++i) measure /= p;
            check(eval(s[n], Rational(1, p)) == measure,
                  "jet count T^" + std::to_string(n) + " over F_" + std::to_string(p));
        }
    }
}

void pole_cancellation(Check& check) {
    // ord_x(E1) = 0, so the form x^(nu-1) dx^dy is only admissible at nu = 1
    const std::uint32_t nu = 1;
    auto trace = run_algorithm(parse_ideal(E1), nu);
    Poles p = poles(zeta(*trace));
    auto present = [&](Atom a) { return std::find(p.tDependent.begin(), p.tDependent.end(), a) != p.tDependent.end(); };
    check(!present({2 * nu + 1, 5}), "(2nu+1,5) cancelled");
    check(!present({nu + 1, 4}), "(nu+1,4) cancelled");
    std::vector<std::size_t> cancelled;
    for (std::size_t i = 0; i < trace->diagram.faces.size(); ++i) {
        const Face& f = trace->diagram.faces[i];
        if (!present({f.p * nu + f.q, f.N})) cancelled.push_back(i);
    }
    check(no_contribution_faces(*trace) == cancelled, "detector flags exactly the cancelled faces");
    check(cancelled == std::vector<std::size_t>{0, 1}, "both first-stage faces cancel");
}

void lct_values(Check& check) {
    const std::vector<std::pair<const char*, Rational>> cases = {
        {"[x, y]", Rational(2)}, {E2, Rational(3, 8)}, {E3, Rational(5, 22)}, {E1, Rational(3, 7)}};
    for (const auto& [text, want] : cases) {
        const Ideal I = parse_ideal(text);
        const Rational got = lct(I).value;
        check(got == want, std::string(text) + " lct " + to_string(got));
        const LctCertificate c = lct_certificate(I);
        check(c.attainedOnFirstLine && c.value == want, std::string(text) + " certificate");
    }
}

void multiplicities(Check& check) {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            const std::string text = "[x^" + std::to_string(a) + ", y^" + std::to_string(b) + "]";
            const auto oracle = quotient_length({{a, 0}, {0, b}});
            check(static_cast<std::int64_t>(multiplicity(parse_ideal(text))) == oracle && oracle == a * b, text);
        }
    check(multiplicity(parse_ideal(E3)) == 102, "e(E3) = 102");
}

void inequality(Check& check) {
    const Ideal I = parse_ideal(E3);
    const InequalityReport r = inequality_report(I);
    check(r.bound1 == Rational(1936, 25), "bound1 = 1936/25");
    check(r.bound1 < r.bound2 && r.bound2 < Rational(static_cast<unsigned long>(r.e)), "bound1 < bound2 < e");
    const InequalityReport right = inequality_report(I.map(BiPoly::x(), BiPoly::y() - BiPoly::x(4)));
    check(std::abs(right.bound2.get_d() - 83.16) < 0.01, "bound2 ~ 83.16 with y -> y - x^4");
    const InequalityReport left = inequality_report(I.map(BiPoly::x(), BiPoly::y() + BiPoly::x(2)));
    check(std::abs(left.bound2.get_d() - 85.72) < 0.01, "bound2 ~ 85.72 with y -> y + x^2");
}

void properties(Check& check, const char* binary) {
    if (!binary) {
        check(false, "path to test_properties not given");
        return;
    }
    const std::string cmd = std::string("\"") + binary + "\" > /dev/null 2>&1";
    check(std::system(cmd.c_str()) == 0, "property suites failed");
}

void depths(Check& check) {
    const Ideal I = parse_ideal(E1);
    check(depth(I) == 2, "depth(E1) = 2");
    check(geometric_depth_estimate(build_tree(I)) == 1, "geometric depth estimate 1");
}

}  // namespace

int main(int argc, char** argv) {
    const char* props = argc > 1 ? argv[1] : nullptr;
    bool ok = true;
    ok &= run(1, "Example-1 pipeline", 1.0, example1_pipeline);
    ok &= run(2, "Example-1 zeta groups and poles", 5.0, example1_zeta);
    ok &= run(3, "maximal ideal zeta and jet counts", 0, maximal_ideal);
    ok &= run(4, "pole cancellation and detector", 0, pole_cancellation);
    ok &= run(5, "lct values and certificates", 0, lct_values);
    ok &= run(6, "multiplicity", 0, multiplicities);
    ok &= run(7, "inequality report on Example 3", 0, inequality);
    ok &= run(8, "property suites", 60.0, [&](Check& c) { properties(c, props); });
    ok &= run(9, "depth of Example 1", 0, depths);
    return ok ? 0 : 1;
}
