#include "nt/engine.hpp"

#include <algorithm>

#include "nt/errors.hpp"

namespace nt {

NewtonImage apply_newton_map(const Ideal& ideal, unsigned p, unsigned q, const Rational& mu) {
    ideal.require_proper();
    if (mu == 0) throw Error(ErrorKind::InvalidInput, "Newton map needs mu != 0");
    NewtonMapSpec m = NewtonMapSpec::canonical(p, q, mu);
    std::vector<BiPoly> image;
    for (const auto& g : ideal.generators()) image.push_back(substitute_newton(g, m));
    Ideal full(std::move(image));
    NewtonImage out;
    out.N0 = full.x_order();
    out.Iprime = full.divide_by_x_power(out.N0);
    return out;
}

namespace {

std::shared_ptr<const TraceNode> build(const Ideal& ideal, std::uint32_t nu, unsigned level, unsigned bound) {
    if (level > bound) throw Error(ErrorKind::Internal, "Newton algorithm exceeded its depth bound");
    auto node = std::make_shared<TraceNode>();
    node->ideal = ideal;
    node->xPower = ideal.x_order();
    node->nu = nu;
    node->diagram = newton_diagram(ideal);
    // x^k (y + h)^nu has at most one face, with p = 1; skip the gcd otherwise
    const auto& faces = node->diagram.faces;
    if (faces.empty() || (faces.size() == 1 && faces.front().p == 1)) node->leaf = depth_zero_form(ideal);
    if (node->leaf) return node;

    for (std::size_t i = 0; i < node->diagram.faces.size(); ++i) {
        const Face& face = node->diagram.faces[i];
        FaceData fd = initial_data(ideal, face);
        if (!fd.roots.all_rational())
            throw Error(ErrorKind::NonRationalRoot, "face " + std::to_string(face.p) + "a+" + std::to_string(face.q) +
                                                        "b=" + std::to_string(face.N) +
                                                        " has irrational factor " + fd.roots.residual.str('z'));
        node->faceData.push_back(fd);
    }
    for (std::size_t i = 0; i < node->diagram.faces.size(); ++i) {
        const Face& face = node->diagram.faces[i];
        for (const auto& [mu, mult] : node->faceData[i].roots.roots) {
            NewtonMapSpec m = NewtonMapSpec::canonical(face.p, face.q, mu);
            std::vector<BiPoly> image;
            for (const auto& g : ideal.generators()) image.push_back(substitute_newton(g, m));
            Ideal child(std::move(image));
            TraceChild c;
            c.face = i;
            c.mu = mu;
            c.multiplicity = mult;
            c.N0 = child.x_order();
            c.node = build(child, face.p * nu + face.q, level + 1, bound);
            ensure(c.node->diagram.height <= mult, "height did not drop below the root multiplicity");
            node->children.push_back(std::move(c));
        }
    }
    return node;
}

}  // namespace

std::shared_ptr<const TraceNode> run_algorithm(const Ideal& ideal, std::uint32_t nu) {
    ideal.require_proper();
    if (nu == 0) throw Error(ErrorKind::InvalidInput, "nu must be at least 1");
    return build(ideal, nu, 0, 10 * std::max<std::uint32_t>(ideal.total_degree(), 1));
}

unsigned depth(const TraceNode& trace) {
    if (trace.leaf) return 0;
    unsigned deepest = 0;
    for (const auto& c : trace.children) deepest = std::max(deepest, depth(*c.node));
    return deepest + 1;
}

unsigned depth(const Ideal& ideal) { return depth(*run_algorithm(ideal)); }

namespace {

bool single_root(const FaceData& fd) { return fd.roots.all_rational() && fd.roots.roots.size() == 1; }

// initial part x^k (y - mu x^q)^l on the last face
bool bad_bottom(const Face& f, const FaceData& fd) { return fd.dS == 0 && fd.bS == 0 && f.p == 1 && single_root(fd); }

// initial part y^k (y^p - mu x)^l on the first face
bool bad_top(const Face& f, const FaceData& fd) { return fd.dS == 0 && fd.aS == 0 && f.q == 1 && single_root(fd); }

// (y - mu1 x)^l1 (y - mu2 x)^l2 as the only face
bool bad_pair(const NewtonDiagram& d, const FaceData& fd) {
    const Face& f = d.faces.front();
    return d.faces.size() == 1 && f.p == 1 && f.q == 1 && fd.aS == 0 && fd.bS == 0 && fd.dS == 0 &&
           fd.roots.all_rational() && fd.roots.roots.size() == 2;
}

}  // namespace

CoordinateStatus coordinate_status(const Ideal& ideal) {
    NewtonDiagram d = newton_diagram(ideal);
    if (d.empty_polygon()) throw Error(ErrorKind::InvalidInput, "coordinate status needs a nonempty polygon");
    FaceData first = initial_data(ideal, d.faces.front());
    FaceData last = d.faces.size() == 1 ? first : initial_data(ideal, d.faces.back());
    CoordinateStatus st;
    st.good = !bad_bottom(d.faces.back(), last);
    if (!st.good) {
        st.witness = d.faces.back();
        return st;
    }
    if (bad_top(d.faces.front(), first) || bad_pair(d, first)) {
        st.witness = d.faces.front();
        return st;
    }
    st.veryGood = true;
    return st;
}

ImprovedCoordinates improve_coordinates(const Ideal& ideal, unsigned max_steps) {
    ideal.require_proper();
    ImprovedCoordinates out{ideal, {}};
    if (depth_zero_form(ideal)) {
        CoordinateChange note;
        note.kind = CoordinateChange::Kind::DepthZero;
        note.px = BiPoly::x();
        note.py = BiPoly::y();
        note.description = "depth zero: coordinates left unchanged";
        out.changes.push_back(std::move(note));
        return out;
    }
    for (unsigned step = 0;; ++step) {
        CoordinateStatus st = coordinate_status(out.ideal);
        if (st.veryGood) return out;
        const Face& w = *st.witness;
        if (step == max_steps)
            throw Error(ErrorKind::CoordinateChangeDiverged,
                        "face " + std::to_string(w.p) + "a+" + std::to_string(w.q) + "b=" + std::to_string(w.N) +
                            " persists after " + std::to_string(max_steps) + " changes");
        NewtonDiagram d = newton_diagram(out.ideal);
        FaceData fd = initial_data(out.ideal, w);
        CoordinateChange ch;
        if (!st.good) {
            const Rational mu = fd.roots.roots.front().first;
            ch.kind = CoordinateChange::Kind::ShearY;
            ch.px = BiPoly::x();
            ch.py = BiPoly::y() + BiPoly::term(mu, w.q, 0);
            ch.description = "y = y' + (" + mu.get_str() + ")*x'^" + std::to_string(w.q);
        } else if (fd.roots.roots.size() == 1) {
            const Rational mu = fd.roots.roots.front().first;
            ch.kind = CoordinateChange::Kind::ShearX;
            ch.px = BiPoly::x() + BiPoly::term(1 / mu, 0, w.p);
            ch.py = BiPoly::y();
            ch.description = "x = x' + (" + Rational(1 / mu).get_str() + ")*y'^" + std::to_string(w.p);
        } else {
            const Rational mu1 = fd.roots.roots[0].first, mu2 = fd.roots.roots[1].first;
            const Rational inv = 1 / (mu2 - mu1);
            ch.kind = CoordinateChange::Kind::TwoRoots;
            ch.px = inv * (BiPoly::x() - BiPoly::y());
            ch.py = inv * (mu2 * BiPoly::x() - mu1 * BiPoly::y());
            ch.description = "x' = y - (" + mu1.get_str() + ")*x, y' = y - (" + mu2.get_str() + ")*x";
        }
        out.ideal = out.ideal.map(ch.px, ch.py);
        out.changes.push_back(std::move(ch));
    }
}

}  // namespace nt
