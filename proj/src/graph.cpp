#include "cographic/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cographic {

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw std::invalid_argument("Graph: duplicate vertex name");
    vertices_ = std::move(vertices);

    std::map<std::string, Eigen::Index> vidx;
    for (size_t i = 0; i < vertices_.size(); ++i) vidx[vertices_[i]] = static_cast<Eigen::Index>(i);

    for (const auto& [id, u, v] : edges) {
        const auto su = vidx.find(u), sv = vidx.find(v);
        if (su == vidx.end() || sv == vidx.end())
            throw std::invalid_argument("Graph: edge '" + id + "' has undeclared endpoint");
        edges_.push_back({id, su->second, sv->second});
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i].id == edges_[i - 1].id)
            throw std::invalid_argument("Graph: duplicate edge id '" + edges_[i].id + "'");
}

Eigen::Index Graph::vertex_index(const std::string& name) const {
    const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end() || *it != name)
        throw std::invalid_argument("Graph: unknown vertex '" + name + "'");
    return static_cast<Eigen::Index>(it - vertices_.begin());
}

bool Graph::has_vertex(const std::string& name) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), name);
}

Eigen::Index Graph::edge_index(const std::string& id) const {
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                                     [](const Edge& e, const std::string& s) { return e.id < s; });
    if (it == edges_.end() || it->id != id)
        throw std::invalid_argument("Graph: unknown edge '" + id + "'");
    return static_cast<Eigen::Index>(it - edges_.begin());
}

Eigen::Index Graph::num_loops() const {
    Eigen::Index n = 0;
    for (Eigen::Index e = 0; e < num_edges(); ++e)
        if (is_loop(e)) ++n;
    return n;
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.vertices_ != b.vertices_) return false;
    if (a.edges_.size() != b.edges_.size()) return false;
    for (size_t i = 0; i < a.edges_.size(); ++i) {
        const auto &x = a.edges_[i], &y = b.edges_[i];
        if (x.id != y.id) return false;
        // Edges are unordered pairs; the reference orientation is a
        // construction convention, not part of graph identity.
        const bool same = x.src == y.src && x.dst == y.dst;
        const bool swapped = x.src == y.dst && x.dst == y.src;
        if (!same && !swapped) return false;
    }
    return true;
}

namespace {

std::vector<int> component_labels(const Graph& g, const std::vector<bool>* skip_edge = nullptr) {
    const Eigen::Index nv = g.num_vertices();
    std::vector<int> label(static_cast<size_t>(nv), -1);
    int comp = 0;
    for (Eigen::Index start = 0; start < nv; ++start) {
        if (label[static_cast<size_t>(start)] >= 0) continue;
        std::vector<Eigen::Index> stack{start};
        label[static_cast<size_t>(start)] = comp;
        while (!stack.empty()) {
            const Eigen::Index v = stack.back();
            stack.pop_back();
            for (Eigen::Index e = 0; e < g.num_edges(); ++e) {
                if (skip_edge && (*skip_edge)[static_cast<size_t>(e)]) continue;
                const auto& ed = g.edge(e);
                Eigen::Index w = -1;
                if (ed.src == v) w = ed.dst;
                else if (ed.dst == v) w = ed.src;
                else continue;
                if (label[static_cast<size_t>(w)] < 0) {
                    label[static_cast<size_t>(w)] = comp;
                    stack.push_back(w);
                }
            }
        }
        ++comp;
    }
    return label;
}

}  // namespace

Eigen::Index num_components(const Graph& g) {
    if (g.num_vertices() == 0) return 0;
    const auto label = component_labels(g);
    return 1 + *std::max_element(label.begin(), label.end());
}

bool is_connected(const Graph& g) { return num_components(g) == 1; }

Eigen::Index Graph::b1() const { return num_edges() - num_vertices() + num_components(*this); }

std::vector<Eigen::Index> separating_edges(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("separating_edges: graph is not connected");
    std::vector<Eigen::Index> bridges;
    std::vector<bool> skip(static_cast<size_t>(g.num_edges()), false);
    for (Eigen::Index e = 0; e < g.num_edges(); ++e) {
        if (g.is_loop(e)) continue;
        skip[static_cast<size_t>(e)] = true;
        const auto label = component_labels(g, &skip);
        skip[static_cast<size_t>(e)] = false;
        if (*std::max_element(label.begin(), label.end()) > 0) bridges.push_back(e);
    }
    return bridges;
}

bool is_tree_like(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("is_tree_like: graph is not connected");
    return g.num_edges() - g.num_loops() == g.num_vertices() - 1;
}

Graph contract_and_delete(const Graph& g, const std::set<std::string>& contract,
                          const std::set<std::string>& erase) {
    for (const auto& id : contract)
        if (erase.count(id)) throw std::invalid_argument("contract_and_delete: sets are not disjoint");
    std::vector<bool> contracted(static_cast<size_t>(g.num_edges()), false);
    std::vector<bool> erased(static_cast<size_t>(g.num_edges()), false);
    for (const auto& id : contract) {
        const Eigen::Index e = g.edge_index(id);
        if (g.is_loop(e)) throw std::invalid_argument("contract_and_delete: cannot contract loop '" + id + "'");
        contracted[static_cast<size_t>(e)] = true;
    }
    for (const auto& id : erase) erased[static_cast<size_t>(g.edge_index(id))] = true;

    // Union-find over vertices; the class representative is the
    // lexicographically smallest member name.
    std::vector<Eigen::Index> parent(static_cast<size_t>(g.num_vertices()));
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<Eigen::Index>(i);
    auto find = [&](Eigen::Index v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    };
    auto unite = [&](Eigen::Index a, Eigen::Index b) {
        a = find(a); b = find(b);
        if (a == b) return;
        // Vertex names are stored sorted, so the smaller index is the smaller name.
        if (b < a) std::swap(a, b);
        parent[static_cast<size_t>(b)] = a;
    };
    for (Eigen::Index e = 0; e < g.num_edges(); ++e)
        if (contracted[static_cast<size_t>(e)]) unite(g.edge(e).src, g.edge(e).dst);

    std::vector<std::string> vertices;
    for (Eigen::Index v = 0; v < g.num_vertices(); ++v)
        if (find(v) == v) vertices.push_back(g.vertex_name(v));
    std::vector<std::tuple<std::string, std::string, std::string>> edges;
    for (Eigen::Index e = 0; e < g.num_edges(); ++e) {
        if (contracted[static_cast<size_t>(e)] || erased[static_cast<size_t>(e)]) continue;
        const auto& ed = g.edge(e);
        edges.emplace_back(ed.id, g.vertex_name(find(ed.src)), g.vertex_name(find(ed.dst)));
    }
    return Graph(vertices, edges);
}

std::pair<Graph, Orientation> doubled_graph(const Graph& g, const Orientation& phi) {
    if (phi.size() != g.num_edges())
        throw std::invalid_argument("doubled_graph: orientation size mismatch");
    std::vector<std::tuple<std::string, std::string, std::string>> edges;
    for (Eigen::Index e = 0; e < g.num_edges(); ++e) {
        const OrientedEdge oe = phi.of(e);
        const std::string s = g.vertex_name(g.source(oe)), t = g.vertex_name(g.target(oe));
        edges.emplace_back(g.edge(e).id + "'", s, t);
        edges.emplace_back(g.edge(e).id + "''", s, t);
    }
    Graph gd(g.vertex_names(), edges);
    // e' keeps the chosen direction, e'' runs against it.
    std::vector<bool> reversed(static_cast<size_t>(gd.num_edges()), false);
    for (Eigen::Index e = 0; e < g.num_edges(); ++e)
        reversed[static_cast<size_t>(gd.edge_index(g.edge(e).id + "''"))] = true;
    return {gd, Orientation(std::move(reversed))};
}

bool is_totally_cyclic(const Graph& g, const Orientation& phi) {
    if (phi.size() != g.num_edges())
        throw std::invalid_argument("is_totally_cyclic: orientation size mismatch");
    if (g.num_vertices() == 0) return true;
    const auto comp = component_labels(g);

    // Strong connectivity of each component's digraph: from any start vertex,
    // all component vertices must be reachable forward and backward.
    auto reach = [&](Eigen::Index start, bool forward) {
        std::vector<bool> seen(static_cast<size_t>(g.num_vertices()), false);
        std::vector<Eigen::Index> stack{start};
        seen[static_cast<size_t>(start)] = true;
        while (!stack.empty()) {
            const Eigen::Index v = stack.back();
            stack.pop_back();
            for (Eigen::Index e = 0; e < g.num_edges(); ++e) {
                const OrientedEdge oe = phi.of(e);
                const Eigen::Index s = forward ? g.source(oe) : g.target(oe);
                const Eigen::Index t = forward ? g.target(oe) : g.source(oe);
                if (s == v && !seen[static_cast<size_t>(t)]) {
                    seen[static_cast<size_t>(t)] = true;
                    stack.push_back(t);
                }
            }
        }
        return seen;
    };

    std::vector<bool> done(static_cast<size_t>(g.num_vertices()), false);
    for (Eigen::Index v = 0; v < g.num_vertices(); ++v) {
        if (done[static_cast<size_t>(v)]) continue;
        const auto fwd = reach(v, true), bwd = reach(v, false);
        for (Eigen::Index w = 0; w < g.num_vertices(); ++w) {
            if (comp[static_cast<size_t>(w)] != comp[static_cast<size_t>(v)]) continue;
            if (!fwd[static_cast<size_t>(w)] || !bwd[static_cast<size_t>(w)]) return false;
            done[static_cast<size_t>(w)] = true;
        }
    }
    return true;
}

std::vector<IntVec> circuits(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("circuits: graph is not connected");
    const Eigen::Index ne = g.num_edges();
    if (ne > 24) throw std::invalid_argument("circuits: too many edges for exhaustive enumeration");
    std::vector<IntVec> out;

    for (uint32_t mask = 1; mask < (1u << ne); ++mask) {
        // Degree-2 test on the touched vertices (loops count twice).
        std::vector<int> deg(static_cast<size_t>(g.num_vertices()), 0);
        for (Eigen::Index e = 0; e < ne; ++e) {
            if (!(mask & (1u << e))) continue;
            deg[static_cast<size_t>(g.edge(e).src)] += 1;
            deg[static_cast<size_t>(g.edge(e).dst)] += 1;
        }
        bool ok = true;
        for (int d : deg)
            if (d != 0 && d != 2) { ok = false; break; }
        if (!ok) continue;

        // Connectivity of the chosen subgraph: walk it as a closed trail.
        std::vector<bool> used(static_cast<size_t>(ne), false);
        Eigen::Index first = -1;
        int count = 0;
        for (Eigen::Index e = 0; e < ne; ++e)
            if (mask & (1u << e)) { if (first < 0) first = e; ++count; }

        IntVec sign = IntVec::Zero(ne);
        sign(first) = 1;
        used[static_cast<size_t>(first)] = true;
        Eigen::Index here = g.edge(first).dst;
        const Eigen::Index home = g.edge(first).src;
        int walked = 1;
        while (here != home || walked < count) {
            Eigen::Index next = -1;
            bool rev = false;
            for (Eigen::Index e = 0; e < ne; ++e) {
                if (!(mask & (1u << e)) || used[static_cast<size_t>(e)]) continue;
                if (g.edge(e).src == here) { next = e; rev = false; break; }
                if (g.edge(e).dst == here) { next = e; rev = true; break; }
            }
            if (next < 0) break;  // disconnected selection
            used[static_cast<size_t>(next)] = true;
            sign(next) = rev ? -1 : 1;
            here = rev ? g.edge(next).src : g.edge(next).dst;
            ++walked;
        }
        if (walked != count || here != home) continue;
        out.push_back(sign);
    }
    return out;
}

}  // namespace cographic
