#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "nt/cli.hpp"
#include "nt/errors.hpp"

namespace nt {

Format parse_format(std::string_view name) {
    if (name == "ascii") return Format::Ascii;
    if (name == "json") return Format::Json;
    if (name == "dot") return Format::Dot;
    if (name == "latex") return Format::Latex;
    throw Error(ErrorKind::UnsupportedFormat, "unknown format '" + std::string(name) + "'");
}

std::string render(const Ideal& ideal) { return ideal.str(); }

// ---------------------------------------------------------------- trees

namespace {

using json = nlohmann::json;

std::string label(const TreeNode& nd) {
    if (nd.is_vertex()) return "(" + std::to_string(nd.N) + "," + std::to_string(nd.d) + ")";
    return "(" + std::to_string(nd.deco) + ")";
}

std::vector<std::string> ascii_line(const NewtonTree& t, int start) {
    std::vector<std::string> out;
    const std::vector<int> ids = t.line(start);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const TreeNode& nd = t.nodes[ids[i]];
        if (i > 0) {
            const TreeEdge& e = t.edges[*t.up_edge(ids[i])];
            out.push_back("| " + std::to_string(e.decoA));
            out.push_back("| " + std::to_string(e.decoB));
        }
        out.push_back((nd.is_vertex() ? "V" : "A") + label(nd));
        const bool more = i + 1 < ids.size();
        for (int h : t.horizontal_edges(ids[i])) {
            const TreeEdge& e = t.edges[h];
            const std::string head = "+-[" + std::to_string(e.decoA) + "]--[" + std::to_string(e.decoB) + "]- ";
            std::vector<std::string> sub = ascii_line(t, e.b);
            out.push_back(head + sub.front());
            const std::string pad = (more ? "|" : " ") + std::string(head.size() - 1, ' ');
            for (std::size_t k = 1; k < sub.size(); ++k) out.push_back(pad + sub[k]);
        }
    }
    return out;
}

std::string tree_ascii(const NewtonTree& t) {
    std::string s;
    for (const auto& l : ascii_line(t, t.top())) s += (s.empty() ? "" : "\n") + l;
    return s;
}

std::map<int, int> numbering(const NewtonTree& t) {
    std::map<int, int> id;
    for (int n : t.scan_order()) id.emplace(n, static_cast<int>(id.size()));
    return id;
}

std::string tree_json(const NewtonTree& t) {
    const auto id = numbering(t);
    json vertices = json::array(), edges = json::array(), arrows = json::array();
    for (int n : t.scan_order()) {
        const TreeNode& nd = t.nodes[n];
        if (nd.is_vertex()) {
            vertices.push_back({{"id", id.at(n)}, {"N", nd.N}, {"d", nd.d}, {"above", t.above(n)}, {"below", t.below(n)}});
            continue;
        }
        json a = {{"deco", nd.deco}, {"at", nullptr}, {"side", nullptr}, {"edgeDeco", 0}};
        for (int e : t.incident(n)) {
            const TreeEdge& E = t.edges[e];
            const int other = t.other_end(e, n);
            if (!t.nodes[other].is_vertex()) continue;
            a["at"] = id.at(other);
            a["edgeDeco"] = t.deco_at(e, other);
            a["side"] = E.orientation == Orientation::Horizontal ? "right" : (E.a == n ? "above" : "below");
        }
        arrows.push_back(a);
    }
    for (int e : t.alive_edges()) {
        const TreeEdge& E = t.edges[e];
        if (!t.nodes[E.a].is_vertex() || !t.nodes[E.b].is_vertex()) continue;
        edges.push_back({{"a", id.at(E.a)},
                         {"b", id.at(E.b)},
                         {"orientation", E.orientation == Orientation::Vertical ? "vertical" : "horizontal"},
                         {"decoA", E.decoA},
                         {"decoB", E.decoB}});
    }
    std::sort(edges.begin(), edges.end(), [](const json& l, const json& r) {
        return std::pair(l["a"].get<int>(), l["b"].get<int>()) < std::pair(r["a"].get<int>(), r["b"].get<int>());
    });
    json out = {{"vertices", vertices}, {"edges", edges}, {"arrows", arrows}};
    return out.dump(2);
}

std::string tree_dot(const NewtonTree& t) {
    const auto id = numbering(t);
    std::ostringstream os;
    os << "digraph newton_tree {\n";
    for (int n : t.scan_order()) {
        const TreeNode& nd = t.nodes[n];
        os << "  n" << id.at(n) << " [label=\"" << label(nd) << "\"" << (nd.is_vertex() ? "" : ", shape=plaintext")
           << "];\n";
    }
    std::vector<std::pair<std::pair<int, int>, std::string>> lines;
    for (int e : t.alive_edges()) {
        const TreeEdge& E = t.edges[e];
        std::ostringstream l;
        l << "  n" << id.at(E.a) << " -> n" << id.at(E.b) << " [taillabel=\"" << E.decoA << "\", headlabel=\""
          << E.decoB << "\"" << (E.orientation == Orientation::Horizontal ? ", constraint=false" : "") << "];\n";
        lines.push_back({{id.at(E.a), id.at(E.b)}, l.str()});
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& [key, l] : lines) os << l;
    os << "}";
    return os.str();
}

}  // namespace

std::string render(const NewtonTree& tree, Format format) {
    switch (format) {
    case Format::Ascii: return tree_ascii(tree);
    case Format::Json: return tree_json(tree);
    case Format::Dot: return tree_dot(tree);
    default: throw Error(ErrorKind::UnsupportedFormat, "trees render as ascii, json or dot");
    }
}

// ---------------------------------------------------------------- zeta functions

namespace {

struct Style {
    bool latex = false;

    // u^a, with a possibly negative after the shift
    std::string u(std::int64_t a) const {
        if (a == 0) return "";
        if (latex) return a == -1 ? "\\mathbb{L}" : "\\mathbb{L}^{" + std::to_string(-a) + "}";
        return a == 1 ? "u" : "u^" + std::to_string(a);
    }
    std::string T(std::int64_t b) const {
        if (b == 0) return "";
        if (b == 1) return "T";
        return latex ? "T^{" + std::to_string(b) + "}" : "T^" + std::to_string(b);
    }
    std::string join(const std::string& a, const std::string& b) const {
        if (a.empty() || b.empty()) return a + b;
        return latex ? a + b : a + "*" + b;
    }
    std::string term(const BigInt& c, const std::string& mono) const {
        if (mono.empty()) return c.get_str();
        if (c == 1) return mono;
        if (c == -1) return "-" + mono;
        return join(c.get_str(), mono);
    }
};

std::string sum(const std::vector<std::string>& parts) {
    std::string s;
    for (const auto& p : parts) s += (s.empty() || p.front() == '-') ? p : "+" + p;
    return s;
}

std::string zeta_text(const ZetaFn& z, const Style& st) {
    if (z.is_zero()) return "0";
    std::map<std::int64_t, std::vector<std::pair<std::int64_t, BigInt>>> groups;
    for (const auto& [e, c] : z.numerator()) groups[e.second].push_back({e.first + z.u_shift(), c});
    std::vector<std::string> parts;
    for (const auto& [b, poly] : groups) {
        if (poly.size() == 1) {
            parts.push_back(st.term(poly.front().second, st.join(st.u(poly.front().first), st.T(b))));
            continue;
        }
        std::vector<std::string> inner;
        for (const auto& [a, c] : poly) inner.push_back(st.term(c, st.u(a)));
        parts.push_back(b == 0 ? sum(inner) : st.join("(" + sum(inner) + ")", st.T(b)));
    }
    const std::string num = sum(parts);
    const auto& den = z.denominator();
    if (den.empty()) return num;
    std::string d;
    const bool single = den.size() == 1 && den.begin()->second == 1;
    for (const auto& [atom, m] : den) {
        std::string f = "1-" + st.join(st.u(static_cast<std::int64_t>(atom.first)), st.T(static_cast<std::int64_t>(atom.second)));
        if (!single) f = "(" + f + ")";
        if (m > 1) f += st.latex ? "^{" + std::to_string(m) + "}" : "^" + std::to_string(m);
        d += (d.empty() || st.latex) ? f : "*" + f;
    }
    if (st.latex) return "\\frac{" + num + "}{" + d + "}";
    return "(" + num + ")/(" + d + ")";
}

json big(const BigInt& c) {
    if (c.fits_slong_p()) return c.get_si();
    return c.get_str();
}

std::string zeta_json(const ZetaFn& z) {
    json num = json::array(), den = json::array();
    for (const auto& [e, c] : z.numerator()) num.push_back({{"u", e.first}, {"t", e.second}, {"coeff", big(c)}});
    for (const auto& [atom, m] : z.denominator())
        for (unsigned k = 0; k < m; ++k) den.push_back({{"a", atom.first}, {"b", atom.second}});
    json out = {{"numerator", num}, {"uShift", z.u_shift()}, {"denom", den}};
    return out.dump(2);
}

}  // namespace

std::string render(const ZetaFn& zeta, Format format) {
    const ZetaFn z = zeta.normalized();
    switch (format) {
    case Format::Ascii: return zeta_text(z, Style{false});
    case Format::Latex: return zeta_text(z, Style{true});
    case Format::Json: return zeta_json(z);
    default: throw Error(ErrorKind::UnsupportedFormat, "zeta functions render as ascii, json or latex");
    }
}

}  // namespace nt
