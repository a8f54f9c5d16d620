#ifndef COGRAPHIC_GRAPH_HPP
#define COGRAPHIC_GRAPH_HPP

#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cographic/rational.hpp"

// Finite multigraphs in Serre's formalism: loops and parallel edges allowed,
// each edge carries a fixed reference orientation (source, target), and the
// oriented-edge set is the 2|E| pairs (edge, direction) with the involution
// swapping directions.

namespace cographic {

struct OrientedEdge {
    Eigen::Index edge = 0;
    bool reversed = false;  // false = reference orientation

    OrientedEdge flipped() const { return {edge, !reversed}; }
    friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

class Graph {
public:
    struct Edge {
        std::string id;
        Eigen::Index src = 0;
        Eigen::Index dst = 0;
    };

    Graph() = default;
    // Edges given as (id, source vertex, target vertex); the given direction
    // becomes the reference orientation. Vertices and edges are stored sorted
    // by name/id so all derived indexing is deterministic.
    Graph(std::vector<std::string> vertices,
          const std::vector<std::tuple<std::string, std::string, std::string>>& edges);

    Eigen::Index num_vertices() const { return static_cast<Eigen::Index>(vertices_.size()); }
    Eigen::Index num_edges() const { return static_cast<Eigen::Index>(edges_.size()); }
    const std::string& vertex_name(Eigen::Index v) const { return vertices_[static_cast<size_t>(v)]; }
    const Edge& edge(Eigen::Index e) const { return edges_[static_cast<size_t>(e)]; }
    const std::vector<std::string>& vertex_names() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    Eigen::Index vertex_index(const std::string& name) const;
    Eigen::Index edge_index(const std::string& id) const;
    bool has_vertex(const std::string& name) const;

    bool is_loop(Eigen::Index e) const { return edges_[static_cast<size_t>(e)].src == edges_[static_cast<size_t>(e)].dst; }
    Eigen::Index num_loops() const;

    Eigen::Index source(const OrientedEdge& oe) const {
        const Edge& e = edges_[static_cast<size_t>(oe.edge)];
        return oe.reversed ? e.dst : e.src;
    }
    Eigen::Index target(const OrientedEdge& oe) const {
        const Edge& e = edges_[static_cast<size_t>(oe.edge)];
        return oe.reversed ? e.src : e.dst;
    }

    // First Betti number |E| - |V| + #components.
    Eigen::Index b1() const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
};

// A choice of one orientation per edge.
class Orientation {
public:
    Orientation() = default;
    explicit Orientation(std::vector<bool> reversed) : reversed_(std::move(reversed)) {}
    static Orientation reference(const Graph& g) {
        return Orientation(std::vector<bool>(static_cast<size_t>(g.num_edges()), false));
    }
    OrientedEdge of(Eigen::Index e) const { return {e, reversed_[static_cast<size_t>(e)]}; }
    Eigen::Index size() const { return static_cast<Eigen::Index>(reversed_.size()); }

private:
    std::vector<bool> reversed_;
};

bool is_connected(const Graph& g);
Eigen::Index num_components(const Graph& g);

// Bridges of a connected multigraph (indices, sorted). Loops and edges with a
// parallel partner are never separating.
std::vector<Eigen::Index> separating_edges(const Graph& g);

// True iff deleting all loops leaves a tree.
bool is_tree_like(const Graph& g);

// Quotient multigraph: merge endpoints of contracted edges, drop deleted
// edges. Contracting a loop is rejected. Merged vertices take the
// lexicographically smallest name of their class.
Graph contract_and_delete(const Graph& g, const std::set<std::string>& contract,
                          const std::set<std::string>& erase);

// Doubled graph: each edge e is replaced by parallel copies e' and e'' whose
// reference orientation is the one chosen by phi; the doubled orientation
// takes e' forward and e'' backward.
std::pair<Graph, Orientation> doubled_graph(const Graph& g, const Orientation& phi);

// No directed cut: every component strongly connected as a digraph.
bool is_totally_cyclic(const Graph& g, const Orientation& phi);

// All circuits (elementary cycles) of a connected multigraph, one per
// unoriented circuit, as edge-sign vectors against the reference orientation.
// The sign is canonicalized so the lowest-index edge has coefficient +1.
std::vector<IntVec> circuits(const Graph& g);

}  // namespace cographic

#endif
