#include "cographic/homology.hpp"

#include "cographic/linalg.hpp"

#include <stdexcept>

namespace cographic {

IntVec boundary_ordinary(const Graph& g, const Chain1& c) {
    if (c.size() != g.num_edges()) throw std::invalid_argument("boundary_ordinary: size mismatch");
    IntVec b = IntVec::Zero(g.num_vertices());
    for (Eigen::Index e = 0; e < g.num_edges(); ++e) {
        if (c(e) == 0) continue;
        b(g.edge(e).dst) += c(e);
        b(g.edge(e).src) -= c(e);
    }
    return b;
}

IntVec boundary_oriented(const Graph& g, const OrChain1& c) {
    if (c.size() != 2 * g.num_edges()) throw std::invalid_argument("boundary_oriented: size mismatch");
    IntVec b = IntVec::Zero(g.num_vertices());
    for (Eigen::Index e = 0; e < g.num_edges(); ++e) {
        const Int net = c(forward_index(g, e)) - c(backward_index(g, e));
        if (net == 0) continue;
        b(g.edge(e).dst) += net;
        b(g.edge(e).src) -= net;
    }
    return b;
}

Int ordinary_product(const Chain1& a, const Chain1& b) {
    if (a.size() != b.size()) throw std::invalid_argument("ordinary_product: size mismatch");
    return a.dot(b);
}

Int oriented_product(const OrChain1& a, const OrChain1& b) {
    if (a.size() != b.size()) throw std::invalid_argument("oriented_product: size mismatch");
    return a.dot(b);
}

namespace {

// Spanning tree by BFS over non-loop edges; returns per-vertex (parent vertex,
// connecting edge, direction) and the tree-edge marks.
struct SpanningTree {
    std::vector<Eigen::Index> parent_edge;  // per vertex, -1 at root
    std::vector<bool> in_tree;              // per edge
};

SpanningTree spanning_tree(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("spanning tree: graph is not connected");
    SpanningTree t;
    t.parent_edge.assign(static_cast<size_t>(g.num_vertices()), -1);
    t.in_tree.assign(static_cast<size_t>(g.num_edges()), false);
    if (g.num_vertices() == 0) return t;
    std::vector<bool> seen(static_cast<size_t>(g.num_vertices()), false);
    std::vector<Eigen::Index> queue{0};
    seen[0] = true;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        const Eigen::Index v = queue[qi];
        for (Eigen::Index e = 0; e < g.num_edges(); ++e) {
            if (g.is_loop(e)) continue;
            const auto& ed = g.edge(e);
            Eigen::Index w = -1;
            if (ed.src == v) w = ed.dst;
            else if (ed.dst == v) w = ed.src;
            else continue;
            if (seen[static_cast<size_t>(w)]) continue;
            seen[static_cast<size_t>(w)] = true;
            t.in_tree[static_cast<size_t>(e)] = true;
            t.parent_edge[static_cast<size_t>(w)] = e;
            queue.push_back(w);
        }
    }
    return t;
}

// Signed indicator of the tree path from `from` to `to`.
Chain1 tree_path(const Graph& g, const SpanningTree& t, Eigen::Index from, Eigen::Index to) {
    Chain1 c = Chain1::Zero(g.num_edges());
    auto walk_to_root = [&](Eigen::Index v, int sgn) {
        while (t.parent_edge[static_cast<size_t>(v)] >= 0) {
            const Eigen::Index e = t.parent_edge[static_cast<size_t>(v)];
            const auto& ed = g.edge(e);
            // Traverse from v toward the parent.
            c(e) += ed.dst == v ? -sgn : sgn;
            v = ed.dst == v ? ed.src : ed.dst;
        }
    };
    // path(from -> to) = path(from -> root) - path(to -> root)
    walk_to_root(from, 1);
    walk_to_root(to, -1);
    return c;
}

}  // namespace

std::vector<Eigen::Index> cycle_basis_edges(const Graph& g) {
    const SpanningTree t = spanning_tree(g);
    std::vector<Eigen::Index> out;
    for (Eigen::Index e = 0; e < g.num_edges(); ++e)
        if (!t.in_tree[static_cast<size_t>(e)]) out.push_back(e);
    return out;
}

std::vector<Chain1> cycle_basis(const Graph& g) {
    const SpanningTree t = spanning_tree(g);
    std::vector<Chain1> out;
    for (Eigen::Index e = 0; e < g.num_edges(); ++e) {
        if (t.in_tree[static_cast<size_t>(e)]) continue;
        const auto& ed = g.edge(e);
        // Non-tree edge plus the tree path closing it: t(e) back to s(e).
        Chain1 c = tree_path(g, t, ed.dst, ed.src);
        c(e) += 1;
        out.push_back(c);
    }
    return out;
}

IntVec cycle_coordinates(const Graph& g, const Chain1& z) {
    const auto basis_edges = cycle_basis_edges(g);
    IntVec coords(static_cast<Eigen::Index>(basis_edges.size()));
    for (size_t i = 0; i < basis_edges.size(); ++i) coords(static_cast<Eigen::Index>(i)) = z(basis_edges[i]);
    return coords;
}

std::vector<OrChain1> oriented_cycle_lattice(const Graph& g) {
    const Eigen::Index ne = g.num_edges();
    std::vector<OrChain1> out;
    for (Eigen::Index e = 0; e < ne; ++e) {
        OrChain1 c = OrChain1::Zero(2 * ne);
        c(forward_index(g, e)) = 1;
        c(backward_index(g, e)) = 1;
        out.push_back(c);
    }
    for (const Chain1& z : cycle_basis(g)) {
        OrChain1 c = OrChain1::Zero(2 * ne);
        for (Eigen::Index e = 0; e < ne; ++e) c(forward_index(g, e)) = z(e);
        out.push_back(c);
    }
    return out;
}

Chain1 kernel_to_ordinary(const Graph& g, const OrChain1& c) {
    if (c.size() != 2 * g.num_edges()) throw std::invalid_argument("kernel_to_ordinary: size mismatch");
    Chain1 z(g.num_edges());
    for (Eigen::Index e = 0; e < g.num_edges(); ++e)
        z(e) = c(forward_index(g, e)) - c(backward_index(g, e));
    return z;
}

IntMat doubled_homology_iso(const Graph& g, const Orientation& phi) {
    if (!is_connected(g)) throw std::invalid_argument("doubled_homology_iso: graph is not connected");
    const auto [gd, phid] = doubled_graph(g, phi);

    // Chain-level map C1(doubled) -> oriented C1(g): the class of phid(e')
    // goes to phi(e), the class of phid(e'') to its reverse. In reference
    // coordinates of the doubled graph both copies carry phi(e)'s direction,
    // so e' maps to phi(e) and e'' to minus the reverse of phi(e).
    const Eigen::Index ne = g.num_edges();
    IntMat chain_map = IntMat::Zero(2 * ne, gd.num_edges());
    for (Eigen::Index e = 0; e < ne; ++e) {
        const OrientedEdge chosen = phi.of(e);
        const Eigen::Index prime = gd.edge_index(g.edge(e).id + "'");
        const Eigen::Index second = gd.edge_index(g.edge(e).id + "''");
        chain_map(oriented_index(g, chosen), prime) = 1;
        chain_map(oriented_index(g, chosen.flipped()), second) = -1;
    }

    const auto target_basis = oriented_cycle_lattice(g);
    IntMat target(2 * ne, static_cast<Eigen::Index>(target_basis.size()));
    for (size_t j = 0; j < target_basis.size(); ++j) target.col(static_cast<Eigen::Index>(j)) = target_basis[j];

    const auto source_basis = cycle_basis(gd);
    IntMat iso(static_cast<Eigen::Index>(target_basis.size()), static_cast<Eigen::Index>(source_basis.size()));
    for (size_t j = 0; j < source_basis.size(); ++j) {
        const IntVec image = chain_map * source_basis[j];
        const auto coords = solve_integer(target, image);
        if (!coords) throw std::logic_error("doubled_homology_iso: image escaped the lattice");
        iso.col(static_cast<Eigen::Index>(j)) = *coords;
    }
    return iso;
}

}  // namespace cographic
