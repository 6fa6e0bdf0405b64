#include "nt/invariants.hpp"

#include <deque>

#include "nt/diagram.hpp"
#include "nt/errors.hpp"

namespace nt {

namespace {

LctWitness site(LctWitness::Site kind, const std::vector<std::size_t>& path, std::uint64_t p, std::uint64_t q,
                std::uint64_t nu, std::uint64_t N) {
    LctWitness w;
    w.site = kind;
    w.path = path;
    w.p = p;
    w.q = q;
    w.nuStage = nu;
    w.N = N;
    w.value = Rational(BigInt(std::to_string(p * nu + q)), BigInt(std::to_string(N)));
    w.value.canonicalize();
    return w;
}

}  // namespace

std::vector<LctWitness> lct_sites(const TraceNode& trace) {
    using Site = LctWitness::Site;
    std::vector<LctWitness> out;
    std::deque<std::pair<const TraceNode*, std::vector<std::size_t>>> queue{{&trace, {}}};
    while (!queue.empty()) {
        auto [node, path] = queue.front();
        queue.pop_front();
        if (node->xPower > 0) out.push_back(site(Site::XComponent, path, 1, 0, node->nu, node->xPower));
        if (node->leaf) {
            if (node->leaf->nu > 0) out.push_back(site(Site::Leaf, path, 0, 1, node->nu, node->leaf->nu));
            continue;
        }
        if (node->diagram.betaM > 0) out.push_back(site(Site::YComponent, path, 0, 1, node->nu, node->diagram.betaM));
        for (std::size_t i = 0; i < node->diagram.faces.size(); ++i) {
            const Face& f = node->diagram.faces[i];
            LctWitness w = site(Site::Face, path, f.p, f.q, node->nu, f.N);
            w.face = i;
            out.push_back(std::move(w));
        }
        for (std::size_t i = 0; i < node->children.size(); ++i) {
            auto sub = path;
            sub.push_back(i);
            queue.emplace_back(node->children[i].node.get(), std::move(sub));
        }
    }
    return out;
}

LctWitness lct(const TraceNode& trace) {
    std::vector<LctWitness> sites = lct_sites(trace);
    ensure(!sites.empty(), "trace without components");
    std::size_t best = 0;
    for (std::size_t i = 1; i < sites.size(); ++i)
        if (sites[i].value < sites[best].value) best = i;
    return sites[best];
}

LctWitness lct(const Ideal& ideal) { return lct(*run_algorithm(ideal, 1)); }

// ---------------------------------------------------------------- certificate

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::CertificateFailed, what); }

Rational node_ratio(const TreeNode& nd) {
    if (nd.is_vertex()) return Rational(BigInt(std::to_string(nd.n)), BigInt(std::to_string(nd.N)));
    return Rational(1, static_cast<unsigned long>(nd.deco));
}

// component realising the minimum, closest to the first line
std::optional<int> minimiser(const NewtonTree& t, const Rational& value) {
    std::optional<int> best;
    for (int id : t.alive_nodes()) {
        const TreeNode& nd = t.nodes[id];
        if ((nd.is_vertex() && nd.N == 0) || (!nd.is_vertex() && nd.deco == 0)) continue;
        Rational r = node_ratio(nd);
        r.canonicalize();
        if (r != value) continue;
        if (!best || t.level(id) < t.level(*best)) best = id;
    }
    return best;
}

}  // namespace

LctCertificate lct_certificate(const Ideal& ideal) {
    auto trace = run_algorithm(ideal, 1);
    LctCertificate cert;
    cert.value = lct(*trace).value;
    cert.tree = build_tree(*trace);
    NewtonTree& t = cert.tree;

    for (std::size_t guard = 0;; ++guard) {
        if (guard > t.edges.size()) fail("exchanges do not terminate");
        auto v = minimiser(t, cert.value);
        if (!v) fail("no tree component realises the minimum");
        if (t.level(*v) == 0) break;

        // climb to the first line; the last horizontal edge crossed leaves v0
        int cur = *v;
        int eH = -1;
        while (t.level(cur) > 0) {
            int e = *t.up_edge(cur);
            if (t.edges[e].orientation == Orientation::Horizontal) eH = e;
            cur = t.edges[e].a;
        }
        const int v0 = cur;
        CertificateStep step;
        step.vertex = v0;
        step.edge = eH;
        step.n0 = t.nodes[v0].n;
        step.N0 = t.nodes[v0].N;
        step.m0 = t.edges[eH].rootMultiplicity;
        if (step.n0 * step.m0 < step.N0) fail("n0*m0 < N0 at a first-line ancestor of the minimum");
        if (t.below(v0) == 1) step.side = ExchangeSide::Below;
        else if (t.above(v0) == 1) step.side = ExchangeSide::Above;
        else fail("neither decoration of the first-line ancestor is 1");
        t = exchange_vertical(t, v0, eH, step.side);
        cert.changes.push_back(step);
    }

    // ordinate of the diagonal on the polygon read off the first line
    Rational t_max = 0;
    for (int id : t.first_line()) {
        const TreeNode& nd = t.nodes[id];
        DiagonalFace f;
        Rational ord;
        if (nd.is_vertex()) {
            f = {t.below(id), t.above(id), nd.N};
            if (f.p + f.q != nd.n) fail("first-line decorations do not add up to n");
            ord = Rational(BigInt(std::to_string(nd.N)), BigInt(std::to_string(f.p + f.q)));
        } else {
            if (nd.deco == 0) continue;
            f = t.up_edge(id) ? DiagonalFace{0, 1, nd.deco} : DiagonalFace{1, 0, nd.deco};
            ord = Rational(BigInt(std::to_string(nd.deco)));
        }
        ord.canonicalize();
        if (ord > t_max) {
            t_max = ord;
            cert.diagonalFace = f;
        }
    }
    if (t_max * cert.value != 1) fail("diagonal ordinate differs from 1/lct");
    cert.attainedOnFirstLine = true;
    return cert;
}

// ---------------------------------------------------------------- multiplicity

namespace {

void require_finite_codimension(const Ideal& ideal) {
    BiPoly g;
    for (const auto& f : ideal.generators()) g = gcd(g, f);
    if (g.constant_term() == 0)
        throw Error(ErrorKind::NotFiniteCodimension, "generators share the factor " + g.str());
}

Rational stage_areas(const TraceNode& node) {
    Rational sum = 0;
    for (const auto& c : node.children) {
        const TraceNode& child = *c.node;
        if (child.leaf) ensure(child.leaf->nu == 0, "curve component below a finite-codimension ideal");
        else sum += area_m(child.stripped()) + stage_areas(child);
    }
    return sum;
}

}  // namespace

std::uint64_t multiplicity(const Ideal& ideal) {
    ideal.require_proper();
    require_finite_codimension(ideal);
    auto trace = run_algorithm(ideal, 1);
    Rational e = 2 * (area_m(ideal) + stage_areas(*trace));
    ensure(e.get_den() == 1, "multiplicity is not an integer");
    return e.get_num().get_ui();
}

InequalityReport inequality_report(const Ideal& ideal) {
    InequalityReport r;
    r.e = multiplicity(ideal);
    auto trace = run_algorithm(ideal, 1);
    r.lct = lct(*trace).value;
    const Rational inv2 = 1 / (r.lct * r.lct);
    r.bound1 = 4 * inv2;
    Rational sum = inv2;
    for (const auto& c : trace->children) {
        Ideal child = c.node->stripped();
        if (child.is_unit()) continue;
        const Rational l = lct(child).value;
        sum += 1 / (l * l);
    }
    r.bound2 = 4 * sum;
    const auto& faces = trace->diagram.faces;
    r.equalityShape = faces.size() == 1 && faces.front().p == 1 && faces.front().q == 1;
    r.lctOnFirstDiagram = false;
    for (const auto& s : lct_sites(*trace))
        if (s.path.empty() && s.value == r.lct) r.lctOnFirstDiagram = true;
    return r;
}

}  // namespace nt
