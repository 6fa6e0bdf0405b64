#include "nt/tree.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "nt/errors.hpp"

namespace nt {

// ---------------------------------------------------------------- structure

int NewtonTree::add_vertex(std::uint64_t N, std::uint32_t d, std::uint64_t n, unsigned p, unsigned q) {
    TreeNode v;
    v.id = static_cast<int>(nodes.size());
    v.kind = NodeKind::Vertex;
    v.N = N;
    v.d = d;
    v.n = n;
    v.p = p;
    v.q = q;
    nodes.push_back(v);
    return v.id;
}

int NewtonTree::add_arrow(std::uint64_t deco) {
    TreeNode a;
    a.id = static_cast<int>(nodes.size());
    a.kind = NodeKind::Arrow;
    a.deco = deco;
    nodes.push_back(a);
    return a.id;
}

int NewtonTree::add_edge(int a, int b, Orientation o, std::uint64_t decoA, std::uint64_t decoB) {
    TreeEdge e;
    e.id = static_cast<int>(edges.size());
    e.a = a;
    e.b = b;
    e.orientation = o;
    e.decoA = decoA;
    e.decoB = decoB;
    edges.push_back(e);
    return e.id;
}

std::vector<int> NewtonTree::alive_nodes() const {
    std::vector<int> out;
    for (const auto& n : nodes)
        if (n.alive) out.push_back(n.id);
    return out;
}

std::vector<int> NewtonTree::alive_edges() const {
    std::vector<int> out;
    for (const auto& e : edges)
        if (e.alive) out.push_back(e.id);
    return out;
}

std::vector<int> NewtonTree::vertex_ids() const {
    std::vector<int> out;
    for (const auto& n : nodes)
        if (n.alive && n.is_vertex()) out.push_back(n.id);
    return out;
}

std::vector<int> NewtonTree::incident(int node) const {
    std::vector<int> out;
    for (const auto& e : edges)
        if (e.alive && (e.a == node || e.b == node)) out.push_back(e.id);
    return out;
}

int NewtonTree::other_end(int edge, int node) const {
    const TreeEdge& e = edges[edge];
    return e.a == node ? e.b : e.a;
}

std::uint64_t NewtonTree::deco_at(int edge, int node) const {
    const TreeEdge& e = edges[edge];
    return e.a == node ? e.decoA : e.decoB;
}

std::optional<int> NewtonTree::up_edge(int node) const {
    for (const auto& e : edges)
        if (e.alive && e.b == node) return e.id;
    return std::nullopt;
}

std::optional<int> NewtonTree::down_edge(int node) const {
    for (const auto& e : edges)
        if (e.alive && e.a == node && e.orientation == Orientation::Vertical) return e.id;
    return std::nullopt;
}

std::vector<int> NewtonTree::horizontal_edges(int node) const {
    std::vector<int> out;
    for (const auto& e : edges)
        if (e.alive && e.a == node && e.orientation == Orientation::Horizontal) out.push_back(e.id);
    return out;
}

std::uint64_t NewtonTree::above(int vertex) const {
    auto e = up_edge(vertex);
    return e ? deco_at(*e, vertex) : 0;
}

std::uint64_t NewtonTree::below(int vertex) const {
    auto e = down_edge(vertex);
    return e ? deco_at(*e, vertex) : 0;
}

int NewtonTree::top() const {
    std::optional<int> found;
    for (int id : alive_nodes()) {
        if (up_edge(id)) continue;
        ensure(!found, "tree has two top nodes");
        found = id;
    }
    ensure(found.has_value(), "tree has no top node");
    return *found;
}

std::vector<int> NewtonTree::line(int start) const {
    std::vector<int> out{start};
    for (auto e = down_edge(start); e; e = down_edge(out.back())) out.push_back(edges[*e].b);
    return out;
}

std::vector<int> NewtonTree::first_line() const { return line(top()); }

unsigned NewtonTree::level(int node) const {
    unsigned lvl = 0;
    for (auto e = up_edge(node); e; e = up_edge(edges[*e].a))
        if (edges[*e].orientation == Orientation::Horizontal) ++lvl;
    return lvl;
}

std::vector<int> NewtonTree::scan_order() const {
    std::vector<int> out;
    std::deque<int> starts{top()};
    while (!starts.empty()) {
        int s = starts.front();
        starts.pop_front();
        for (int id : line(s)) {
            out.push_back(id);
            for (int h : horizontal_edges(id)) starts.push_back(edges[h].b);
        }
    }
    return out;
}

unsigned NewtonTree::width() const {
    unsigned w = 0;
    for (int v : vertex_ids()) w = std::max(w, level(v) + 1);
    return w;
}

std::string NewtonTree::encode_line(int start) const {
    std::ostringstream os;
    os << "[";
    std::vector<int> ids = line(start);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const TreeNode& nd = nodes[ids[i]];
        if (i > 0) {
            int e = *up_edge(ids[i]);
            os << "|" << edges[e].decoA << "," << edges[e].decoB << "|";
        }
        if (nd.is_vertex()) os << "V" << nd.N << "," << nd.d;
        else os << "A" << nd.deco;
        std::vector<std::string> subs;
        for (int h : horizontal_edges(ids[i]))
            subs.push_back("H" + std::to_string(edges[h].decoB) + encode_line(edges[h].b));
        std::sort(subs.begin(), subs.end());
        for (const auto& s : subs) os << s;
    }
    os << "]";
    return os.str();
}

std::string NewtonTree::canonical() const { return encode_line(top()); }

// ---------------------------------------------------------------- building

namespace {

struct Builder {
    NewtonTree tree;

    // vertices of one stage, top to bottom; returns their ids
    std::vector<int> stage_vertices(const TraceNode& stage) {
        std::vector<int> ids;
        for (std::size_t i = 0; i < stage.diagram.faces.size(); ++i) {
            const Face& f = stage.diagram.faces[i];
            ids.push_back(tree.add_vertex(f.N, stage.faceData[i].dS, std::uint64_t(f.p) * stage.nu + f.q, f.p, f.q));
        }
        return ids;
    }

    // above-decorations of the stage's vertices, given the gluing term of the line
    void chain(const TraceNode& stage, const std::vector<int>& ids, const std::vector<std::uint64_t>& above) {
        for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
            tree.add_edge(ids[i], ids[i + 1], Orientation::Vertical, stage.diagram.faces[i].p, above[i + 1]);
        }
        int bottom = tree.add_arrow(stage.diagram.betaM);
        tree.add_edge(ids.back(), bottom, Orientation::Vertical, stage.diagram.faces.back().p, 0);
    }

    void attach_children(const TraceNode& stage, const std::vector<int>& ids, const std::vector<std::uint64_t>& above) {
        for (const auto& c : stage.children) {
            const int par = ids[c.face];
            const std::uint64_t p_par = stage.diagram.faces[c.face].p;
            const TraceNode& child = *c.node;
            if (child.leaf) {
                int arrow = tree.add_arrow(child.leaf->nu);
                int e = tree.add_edge(par, arrow, Orientation::Horizontal, 1, 0);
                tree.edges[e].rootMultiplicity = c.multiplicity;
                continue;
            }
            std::vector<int> cids = stage_vertices(child);
            std::vector<std::uint64_t> cabove;
            for (const auto& f : child.diagram.faces) cabove.push_back(f.q + std::uint64_t(f.p) * p_par * above[c.face]);
            int e = tree.add_edge(par, cids.front(), Orientation::Horizontal, 1, cabove.front());
            tree.edges[e].preGluing = child.diagram.faces.front().q;
            tree.edges[e].rootMultiplicity = c.multiplicity;
            chain(child, cids, cabove);
            attach_children(child, cids, cabove);
        }
    }
};

}  // namespace

NewtonTree build_tree(const TraceNode& trace) {
    Builder b;
    if (trace.leaf) {
        int top = b.tree.add_arrow(trace.leaf->k);
        int bottom = b.tree.add_arrow(trace.leaf->nu);
        b.tree.add_edge(top, bottom, Orientation::Vertical, 0, 0);
        return b.tree;
    }
    ensure(!trace.diagram.faces.empty(), "non-leaf stage without faces");
    int ta = b.tree.add_arrow(trace.diagram.alpha0);
    std::vector<int> ids = b.stage_vertices(trace);
    std::vector<std::uint64_t> above;
    for (const auto& f : trace.diagram.faces) above.push_back(f.q);
    b.tree.add_edge(ta, ids.front(), Orientation::Vertical, 0, above.front());
    b.chain(trace, ids, above);
    b.attach_children(trace, ids, above);
    return b.tree;
}

NewtonTree build_tree(const Ideal& ideal) { return build_tree(*run_algorithm(ideal)); }

std::uint64_t edge_determinant(const NewtonTree& tree, int edge) {
    const TreeEdge& e = tree.edges.at(static_cast<std::size_t>(edge));
    if (!e.alive || !tree.nodes[e.a].is_vertex() || !tree.nodes[e.b].is_vertex())
        throw Error(ErrorKind::InvalidEdge, "edge determinant needs an edge between two vertices");
    auto others = [&](int node) {
        BigInt prod = 1;
        for (int f : tree.incident(node))
            if (f != edge) prod *= BigInt(std::to_string(tree.deco_at(f, node)));
        return prod;
    };
    BigInt det = BigInt(std::to_string(e.decoA)) * BigInt(std::to_string(e.decoB)) - others(e.a) * others(e.b);
    return BigInt(abs(det)).get_ui();
}

// ---------------------------------------------------------------- exchange

namespace {

void flip(TreeEdge& e) {
    std::swap(e.a, e.b);
    std::swap(e.decoA, e.decoB);
}

// reverse the vertical chain going down from `start`
void reverse_down(NewtonTree& t, int start) {
    std::vector<int> chain;
    for (auto e = t.down_edge(start); e; e = t.down_edge(t.edges[*e].b)) chain.push_back(*e);
    for (int e : chain) flip(t.edges[e]);
}

// reverse the vertical chain going up from `start` (stopping at a horizontal up-edge)
void reverse_up(NewtonTree& t, int start) {
    std::vector<int> chain;
    for (auto e = t.up_edge(start); e && t.edges[*e].orientation == Orientation::Vertical; e = t.up_edge(t.edges[*e].a))
        chain.push_back(*e);
    for (int e : chain) flip(t.edges[e]);
}

}  // namespace

NewtonTree exchange_vertical(const NewtonTree& tree, int v, int eH, ExchangeSide side) {
    if (v < 0 || static_cast<std::size_t>(v) >= tree.nodes.size() || !tree.nodes[v].alive || !tree.nodes[v].is_vertex())
        throw Error(ErrorKind::InvalidExchange, "not a vertex");
    if (eH < 0 || static_cast<std::size_t>(eH) >= tree.edges.size() || !tree.edges[eH].alive ||
        tree.edges[eH].orientation != Orientation::Horizontal || tree.edges[eH].a != v)
        throw Error(ErrorKind::InvalidExchange, "edge is not a horizontal edge leaving the vertex");
    auto down = tree.down_edge(v);
    auto up = tree.up_edge(v);
    const bool below_ok = down && tree.deco_at(*down, v) == 1;
    const bool above_ok = up && tree.edges[*up].orientation == Orientation::Vertical && tree.deco_at(*up, v) == 1 &&
                          tree.level(v) == 0;
    if (side == ExchangeSide::Auto) side = below_ok ? ExchangeSide::Below : ExchangeSide::Above;
    NewtonTree t = tree;
    if (side == ExchangeSide::Below) {
        if (!below_ok) throw Error(ErrorKind::InvalidExchange, "below-decoration is not 1");
        t.edges[*down].orientation = Orientation::Horizontal;
        t.edges[eH].orientation = Orientation::Vertical;
        return t;
    }
    if (!above_ok) throw Error(ErrorKind::InvalidExchange, "no above-decoration 1 on the first line");
    const int w = t.edges[*up].a;
    const int u = t.edges[eH].b;
    reverse_up(t, w);
    reverse_down(t, u);
    flip(t.edges[*up]);
    t.edges[*up].orientation = Orientation::Horizontal;
    flip(t.edges[eH]);
    t.edges[eH].orientation = Orientation::Vertical;
    return t;
}

namespace {

bool is_zero_arrow(const NewtonTree& t, int node) { return !t.nodes[node].is_vertex() && t.nodes[node].deco == 0; }

// edge joining v to a (0)-arrow with decoration 1 next to v
std::optional<int> zero_stub(const NewtonTree& t, int v) {
    for (int e : t.incident(v))
        if (is_zero_arrow(t, t.other_end(e, v)) && t.deco_at(e, v) == 1) return e;
    return std::nullopt;
}

void remove_edge_and_arrow(NewtonTree& t, int e, int v) {
    t.nodes[t.other_end(e, v)].alive = false;
    t.edges[e].alive = false;
}

void smooth_valency_two(NewtonTree& t, int v) {
    if (t.incident(v).size() != 2) return;
    auto up = t.up_edge(v);
    auto down = t.down_edge(v);
    ensure(up && down, "valency-2 vertex without vertical neighbours");
    const TreeEdge eu = t.edges[*up];
    const TreeEdge ed = t.edges[*down];
    int merged = t.add_edge(eu.a, ed.b, eu.orientation, eu.decoA, ed.decoB);
    t.edges[merged].preGluing = eu.preGluing;
    t.edges[merged].rootMultiplicity = eu.rootMultiplicity;
    t.edges[*up].alive = false;
    t.edges[*down].alive = false;
    t.nodes[v].alive = false;
}

}  // namespace

NewtonTree erase_vertex(const NewtonTree& tree, int v, int eH) {
    if (v < 0 || static_cast<std::size_t>(v) >= tree.nodes.size() || !tree.nodes[v].alive || !tree.nodes[v].is_vertex())
        throw Error(ErrorKind::InvalidExchange, "not a vertex");
    auto down = tree.down_edge(v);
    auto up = tree.up_edge(v);
    ExchangeSide side;
    int stub;
    if (down && is_zero_arrow(tree, tree.edges[*down].b) && tree.deco_at(*down, v) == 1) {
        side = ExchangeSide::Below;
        stub = *down;
    } else if (up && tree.edges[*up].orientation == Orientation::Vertical && is_zero_arrow(tree, tree.edges[*up].a) &&
               tree.deco_at(*up, v) == 1) {
        side = ExchangeSide::Above;
        stub = *up;
    } else {
        throw Error(ErrorKind::InvalidExchange, "vertex is not joined to a (0)-arrow by a vertical edge decorated 1");
    }
    NewtonTree t = exchange_vertical(tree, v, eH, side);
    remove_edge_and_arrow(t, stub, v);
    smooth_valency_two(t, v);
    return t;
}

bool is_violating(const NewtonTree& tree, int v) {
    const TreeNode& nd = tree.nodes[v];
    return nd.alive && nd.is_vertex() && nd.d == 0 && zero_stub(tree, v).has_value();
}

bool is_minimal(const NewtonTree& tree) {
    for (int v : tree.vertex_ids())
        if (is_violating(tree, v)) return false;
    return true;
}

Minimized minimize(const NewtonTree& tree) {
    Minimized out{tree, {}};
    for (;;) {
        std::optional<int> bad;
        for (int id : out.tree.scan_order())
            if (is_violating(out.tree, id)) {
                bad = id;
                break;
            }
        if (!bad) return out;
        const int v = *bad;
        const int stub = *zero_stub(out.tree, v);
        ExchangeOp op;
        op.vertex = v;
        op.edge = stub;
        if (out.tree.edges[stub].orientation == Orientation::Horizontal) {
            remove_edge_and_arrow(out.tree, stub, v);
            smooth_valency_two(out.tree, v);
        } else {
            std::vector<int> hs = out.tree.horizontal_edges(v);
            ensure(!hs.empty(), "violating vertex without horizontal edge");
            op.edge = hs.front();
            out.tree = erase_vertex(out.tree, v, hs.front());
        }
        op.erased = !out.tree.nodes[v].alive;
        out.log.push_back(op);
    }
}

DualGraph dual_graph(const NewtonTree& tree) {
    if (!is_minimal(tree)) throw Error(ErrorKind::NotMinimal, "dual graph needs a minimal Newton tree");
    DualGraph g;
    std::vector<bool> keep(tree.nodes.size(), false);
    for (int id : tree.alive_nodes()) {
        const TreeNode& nd = tree.nodes[id];
        DualGraph::Node out;
        out.id = id;
        if (nd.is_vertex()) {
            out.kind = DualGraph::Node::Kind::Divisor;
            out.value = nd.N;
        } else if (nd.deco > 0) {
            out.kind = DualGraph::Node::Kind::StrictTransform;
            out.value = nd.deco;
        } else {
            // a (0)-arrow hanging by a decoration > 1 still stands for exceptional curves
            int e = tree.incident(id).front();
            int at = tree.other_end(e, id);
            if (!tree.nodes[at].is_vertex() || tree.deco_at(e, at) <= 1) continue;
            out.kind = DualGraph::Node::Kind::Stub;
            out.value = tree.deco_at(e, at);
        }
        keep[id] = true;
        g.nodes.push_back(out);
    }
    for (int e : tree.alive_edges())
        if (keep[tree.edges[e].a] && keep[tree.edges[e].b]) g.edges.emplace_back(tree.edges[e].a, tree.edges[e].b);
    return g;
}

std::vector<int> dicriticals(const NewtonTree& tree) {
    std::vector<int> out;
    for (int v : tree.vertex_ids())
        if (tree.nodes[v].d >= 1) out.push_back(v);
    return out;
}

unsigned geometric_depth_estimate(const NewtonTree& tree) { return minimize(tree).tree.width(); }

}  // namespace nt
