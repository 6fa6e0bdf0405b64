#pragma once

// Decorated Newton trees built from an algorithm trace, with exchange of vertical
// edges, minimisation and the dual graph of the principalisation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nt/engine.hpp"

namespace nt {

enum class NodeKind { Vertex, Arrow };
enum class Orientation { Vertical, Horizontal };

struct TreeNode {
    int id = 0;
    NodeKind kind = NodeKind::Vertex;
    std::uint64_t N = 0;   // vertex multiplicity
    std::uint32_t d = 0;   // dicritical degree
    std::uint64_t n = 0;   // p*nu + q of the stage face: multiplicity of the pulled back form plus one
    unsigned p = 0, q = 0; // face direction in its own stage
    std::uint64_t deco = 0;  // arrow decoration
    bool alive = true;

    bool is_vertex() const { return kind == NodeKind::Vertex; }
};

/// Vertical edges run from a (above) to b (below); horizontal edges from a (left) to b (right).
struct TreeEdge {
    int id = 0;
    int a = 0;
    int b = 0;
    Orientation orientation = Orientation::Vertical;
    std::uint64_t decoA = 0;  // decoration next to a (1 on the left of a horizontal edge)
    std::uint64_t decoB = 0;
    std::uint64_t preGluing = 0;  // horizontal edges into a glued line: decoration before gluing
    unsigned rootMultiplicity = 0;
    bool alive = true;
};

class NewtonTree {
public:
    std::vector<TreeNode> nodes;
    std::vector<TreeEdge> edges;

    int add_vertex(std::uint64_t N, std::uint32_t d, std::uint64_t n, unsigned p, unsigned q);
    int add_arrow(std::uint64_t deco);
    int add_edge(int a, int b, Orientation o, std::uint64_t decoA, std::uint64_t decoB);

    std::vector<int> alive_nodes() const;
    std::vector<int> alive_edges() const;
    std::vector<int> vertex_ids() const;
    std::vector<int> incident(int node) const;
    int other_end(int edge, int node) const;
    std::uint64_t deco_at(int edge, int node) const;

    std::optional<int> up_edge(int node) const;
    std::optional<int> down_edge(int node) const;
    std::vector<int> horizontal_edges(int node) const;
    std::uint64_t above(int vertex) const;
    std::uint64_t below(int vertex) const;

    /// The unique node without an up-edge.
    int top() const;
    /// Nodes of the vertical line starting at `start`, top to bottom.
    std::vector<int> line(int start) const;
    std::vector<int> first_line() const;
    /// Number of horizontal edges between the node and the first line.
    unsigned level(int node) const;
    /// Nodes in scan order: first line top-down, then the lines hanging from it, outward.
    std::vector<int> scan_order() const;
    /// 1 + largest level of a vertex; 0 when there are no vertices.
    unsigned width() const;

    /// Encoding that identifies trees up to relabelling and reordering of sibling subtrees.
    std::string canonical() const;
    friend bool operator==(const NewtonTree& l, const NewtonTree& r) { return l.canonical() == r.canonical(); }

private:
    std::string encode_line(int start) const;
};

NewtonTree build_tree(const TraceNode& trace);
NewtonTree build_tree(const Ideal& ideal);

/// Throws InvalidEdge unless the edge joins two vertices.
std::uint64_t edge_determinant(const NewtonTree& tree, int edge);

enum class ExchangeSide { Auto, Below, Above };

/// Swaps the decoration-1 vertical edge at v with the horizontal edge eH; throws InvalidExchange.
NewtonTree exchange_vertical(const NewtonTree& tree, int v, int eH, ExchangeSide side = ExchangeSide::Auto);

/// Exchange towards the (0)-arrow, drop that arrow and smooth v away if it is left with valency 2.
NewtonTree erase_vertex(const NewtonTree& tree, int v, int eH);

/// Non-dicritical vertex joined to a (0)-arrow by an edge decorated 1 at the vertex.
bool is_violating(const NewtonTree& tree, int v);
bool is_minimal(const NewtonTree& tree);

struct ExchangeOp {
    int vertex = 0;
    int edge = 0;
    bool erased = false;  // v itself disappeared
};

struct Minimized {
    NewtonTree tree;
    std::vector<ExchangeOp> log;
};

Minimized minimize(const NewtonTree& tree);

struct DualGraph {
    struct Node {
        int id = 0;
        enum class Kind { Divisor, StrictTransform, Stub } kind = Kind::Divisor;
        std::uint64_t value = 0;  // N for divisors, decoration for strict transforms and stubs
    };
    std::vector<Node> nodes;
    std::vector<std::pair<int, int>> edges;
};

/// Throws NotMinimal.
DualGraph dual_graph(const NewtonTree& tree);

std::vector<int> dicriticals(const NewtonTree& tree);

unsigned geometric_depth_estimate(const NewtonTree& tree);

}  // namespace nt
