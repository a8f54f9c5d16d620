#include "cographic/jacobian.hpp"

#include <algorithm>
#include <map>

namespace cographic {

Int total_genus(const StableDualGraph& d) {
    if (static_cast<Eigen::Index>(d.genus.size()) != d.graph.num_vertices())
        throw std::invalid_argument("total_genus: genus vector size mismatch");
    Int g = d.graph.b1();
    for (const Int& gv : d.genus) g += gv;
    return g;
}

void validate_stability(const StableDualGraph& d) {
    if (static_cast<Eigen::Index>(d.genus.size()) != d.graph.num_vertices())
        throw std::invalid_argument("stability: genus vector size mismatch");
    if (!is_connected(d.graph)) throw std::invalid_argument("stability: dual graph is not connected");
    for (const Int& gv : d.genus)
        if (gv < 0) throw std::invalid_argument("stability: negative genus");
    for (Eigen::Index v = 0; v < d.graph.num_vertices(); ++v) {
        if (d.genus[static_cast<size_t>(v)] > 0) continue;
        Eigen::Index valence = 0;
        for (Eigen::Index e = 0; e < d.graph.num_edges(); ++e) {
            if (d.graph.edge(e).src == v) ++valence;
            if (d.graph.edge(e).dst == v) ++valence;
        }
        if (valence < 3)
            throw std::invalid_argument("stability: genus-0 vertex '" + d.graph.vertex_name(v) +
                                        "' has valence < 3");
    }
    if (total_genus(d) < 2) throw std::invalid_argument("stability: total genus < 2");
}

StableDualGraph contract_outside_sigma(const StableDualGraph& d, const std::set<std::string>& sigma) {
    if (!is_connected(d.graph)) throw std::invalid_argument("contract_outside_sigma: graph is not connected");
    if (static_cast<Eigen::Index>(d.genus.size()) != d.graph.num_vertices())
        throw std::invalid_argument("contract_outside_sigma: genus vector size mismatch");
    for (const std::string& id : sigma) d.graph.edge_index(id);  // validity check

    // Smoothing the nodes outside sigma collapses each component of the
    // smoothed subgraph H = (V, E \ sigma) to one vertex whose genus is the
    // component's genus total plus its first Betti number (each independent
    // cycle of smoothed nodes becomes handle genus).
    std::set<std::string> contract, erase_loops;
    for (Eigen::Index e = 0; e < d.graph.num_edges(); ++e) {
        const auto& ed = d.graph.edge(e);
        if (sigma.count(ed.id)) continue;
        (d.graph.is_loop(e) ? erase_loops : contract).insert(ed.id);
    }
    StableDualGraph out;
    out.graph = contract_and_delete(d.graph, contract, erase_loops);

    // Components of H via union-find over vertex names; representative is the
    // smallest name, matching the contraction's vertex naming.
    std::map<std::string, std::string> parent;
    for (const auto& name : d.graph.vertex_names()) parent[name] = name;
    std::function<std::string(std::string)> find = [&](std::string x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    Eigen::Index smoothed_edges = 0;
    for (Eigen::Index e = 0; e < d.graph.num_edges(); ++e) {
        if (sigma.count(d.graph.edge(e).id)) continue;
        ++smoothed_edges;
        std::string a = find(d.graph.vertex_name(d.graph.edge(e).src));
        std::string b = find(d.graph.vertex_name(d.graph.edge(e).dst));
        if (a == b) continue;
        if (b < a) std::swap(a, b);
        parent[b] = a;
    }
    std::map<std::string, Int> genus_of;
    std::map<std::string, Eigen::Index> comp_vertices;
    for (Eigen::Index v = 0; v < out.graph.num_vertices(); ++v) genus_of[out.graph.vertex_name(v)] = 0;
    for (Eigen::Index v = 0; v < d.graph.num_vertices(); ++v) {
        const std::string rep = find(d.graph.vertex_name(v));
        genus_of.at(rep) += d.genus[static_cast<size_t>(v)];
        comp_vertices[rep] += 1;
    }
    // Distribute b1 of H componentwise: sum over components of
    // (edges - vertices + 1). Count smoothed edges per component.
    std::map<std::string, Eigen::Index> comp_edges;
    for (Eigen::Index e = 0; e < d.graph.num_edges(); ++e) {
        if (sigma.count(d.graph.edge(e).id)) continue;
        comp_edges[find(d.graph.vertex_name(d.graph.edge(e).src))] += 1;
    }
    for (auto& [rep, g] : genus_of) g += comp_edges[rep] - comp_vertices.at(rep) + 1;

    out.genus.resize(static_cast<size_t>(out.graph.num_vertices()));
    for (Eigen::Index v = 0; v < out.graph.num_vertices(); ++v)
        out.genus[static_cast<size_t>(v)] = genus_of.at(out.graph.vertex_name(v));
    if (total_genus(out) != total_genus(d))
        throw std::logic_error("contract_outside_sigma: total genus not preserved");
    return out;
}

Graph gamma_of(const StableDualGraph& d, const SheafDatum& sheaf) {
    return contract_outside_sigma(d, sheaf.sigma).graph;
}

LocalStructureReport local_report(const StableDualGraph& d, const SheafDatum& sheaf) {
    validate_stability(d);
    LocalStructureReport out;
    out.gamma = gamma_of(d, sheaf);
    out.toric_factor = analyze(out.gamma);
    out.finite_quotient_locus = is_tree_like(out.gamma);
    if (total_genus(d) >= 4 && sheaf.stab_trivial.has_value())
        out.smooth = out.finite_quotient_locus && *sheaf.stab_trivial;
    return out;
}

TailSplitting tail_splitting(const StableDualGraph& d, const SheafDatum& sheaf,
                             const std::set<std::string>& tail_vertices, bool p_in_sigma) {
    if (!is_connected(d.graph)) throw std::invalid_argument("tail_splitting: graph is not connected");
    if (tail_vertices.empty() || tail_vertices.size() == static_cast<size_t>(d.graph.num_vertices()))
        throw std::invalid_argument("tail_splitting: tail must be a proper nonempty vertex subset");
    for (const auto& name : tail_vertices)
        if (!d.graph.has_vertex(name))
            throw std::invalid_argument("tail_splitting: unknown vertex '" + name + "'");

    // The tail must meet its complement in exactly one edge p.
    std::vector<Eigen::Index> crossing;
    for (Eigen::Index e = 0; e < d.graph.num_edges(); ++e) {
        const auto& ed = d.graph.edge(e);
        const bool s_in = tail_vertices.count(d.graph.vertex_name(ed.src)) > 0;
        const bool t_in = tail_vertices.count(d.graph.vertex_name(ed.dst)) > 0;
        if (s_in != t_in) crossing.push_back(e);
    }
    if (crossing.size() != 1)
        throw std::invalid_argument("tail_splitting: tail does not meet its complement in exactly one edge");
    const std::string p_id = d.graph.edge(crossing[0]).id;
    if (p_in_sigma != (sheaf.sigma.count(p_id) > 0))
        throw std::invalid_argument("tail_splitting: p_in_sigma contradicts the sigma set");

    // Sub-dual-graphs on the two sides.
    auto side_graph = [&](bool inside) {
        std::vector<std::string> verts;
        std::vector<std::tuple<std::string, std::string, std::string>> edges;
        std::vector<Int> genus;
        for (Eigen::Index v = 0; v < d.graph.num_vertices(); ++v) {
            const bool in = tail_vertices.count(d.graph.vertex_name(v)) > 0;
            if (in != inside) continue;
            verts.push_back(d.graph.vertex_name(v));
            genus.push_back(d.genus[static_cast<size_t>(v)]);
        }
        for (Eigen::Index e = 0; e < d.graph.num_edges(); ++e) {
            const auto& ed = d.graph.edge(e);
            const bool s_in = tail_vertices.count(d.graph.vertex_name(ed.src)) > 0;
            const bool t_in = tail_vertices.count(d.graph.vertex_name(ed.dst)) > 0;
            if (s_in == inside && t_in == inside)
                edges.emplace_back(ed.id, d.graph.vertex_name(ed.src), d.graph.vertex_name(ed.dst));
        }
        StableDualGraph side;
        side.graph = Graph(verts, edges);
        // Genera follow the sorted vertex order of the new graph.
        side.genus.resize(verts.size());
        for (size_t i = 0; i < verts.size(); ++i)
            side.genus[static_cast<size_t>(side.graph.vertex_index(verts[i]))] = genus[i];
        return side;
    };
    const StableDualGraph tail_side = side_graph(true);
    const StableDualGraph comp_side = side_graph(false);

    auto restrict_sigma = [&](const StableDualGraph& side) {
        std::set<std::string> s;
        for (Eigen::Index e = 0; e < side.graph.num_edges(); ++e)
            if (sheaf.sigma.count(side.graph.edge(e).id)) s.insert(side.graph.edge(e).id);
        return s;
    };

    TailSplitting out;
    out.gamma_tail = contract_outside_sigma(tail_side, restrict_sigma(tail_side)).graph;
    out.gamma_complement = contract_outside_sigma(comp_side, restrict_sigma(comp_side)).graph;
    out.gamma_total = gamma_of(d, sheaf);
    out.has_tp_factor = p_in_sigma;

    // The elliptic-tail shapes: a bare vertex, or a vertex with one loop.
    if (out.gamma_tail.num_edges() == 0 && out.gamma_tail.num_vertices() == 1) {
        out.tail_ring = TailSplitting::TailRing::base_field;
    } else if (out.gamma_tail.num_vertices() == 1 && out.gamma_tail.num_edges() == 1 &&
               out.gamma_tail.is_loop(0)) {
        out.tail_ring = TailSplitting::TailRing::polynomial_xy;
    } else {
        throw std::invalid_argument("tail_splitting: tail is not an elliptic-tail configuration");
    }

    auto dim_of = [](const Graph& g) { return g.b1() + g.num_edges(); };
    out.dim_total = dim_of(out.gamma_total);
    out.dim_complement = dim_of(out.gamma_complement);
    out.dim_tail = dim_of(out.gamma_tail);
    if (out.dim_total != out.dim_complement + out.dim_tail + (out.has_tp_factor ? 1 : 0))
        throw std::logic_error("tail_splitting: factor dimensions do not add up");
    return out;
}

EllipticTailAges elliptic_tail_ages(int order, MatrixVariant variant, TailCase tail_case) {
    const bool nodal = tail_case != TailCase::smooth_tail;
    if (order != 2 && order != 3 && order != 4 && order != 6)
        throw std::invalid_argument("elliptic_tail_ages: order must be 2, 3, 4 or 6");
    if (nodal && order != 2)
        throw std::invalid_argument("elliptic_tail_ages: nodal tails force order 2");
    if (order == 2 && variant == MatrixVariant::second)
        throw std::invalid_argument("elliptic_tail_ages: order 2 has a single matrix form");

    // 2x2 curve-deformation block, per order and displayed variant.
    std::vector<Int> exps;
    const bool first = variant == MatrixVariant::first;
    switch (order) {
        case 2: exps = {1, 0}; break;
        case 3: exps = first ? std::vector<Int>{1, 2} : std::vector<Int>{2, 1}; break;
        case 4: exps = first ? std::vector<Int>{1, 2} : std::vector<Int>{3, 2}; break;
        case 6: exps = first ? std::vector<Int>{5, 4} : std::vector<Int>{1, 2}; break;
    }
    switch (tail_case) {
        case TailCase::smooth_tail: {
            // Picard block: the first form pairs with the first curve block.
            Int pic;
            switch (order) {
                case 2: pic = 1; break;
                case 3: pic = first ? 2 : 1; break;
                case 4: pic = first ? 3 : 1; break;
                default: pic = first ? 1 : 5; break;
            }
            exps.push_back(pic);
            break;
        }
        case TailCase::nodal_locally_free:
            exps.push_back(1);  // Picard of the nodal tail: inversion acts by -1
            break;
        case TailCase::nodal_not_locally_free:
            // Node-swap block diag(-1, 1) on the sheaf deformation variables.
            exps.push_back(1);
            exps.push_back(0);
            break;
    }

    IntVec ev(static_cast<Eigen::Index>(exps.size()));
    for (size_t i = 0; i < exps.size(); ++i) ev(static_cast<Eigen::Index>(i)) = exps[i];
    const GroupElementSpec spec = group_element(order, ev);

    EllipticTailAges out;
    bool have = false;
    for (Int k = 1; k < order; ++k) {
        Int g;
        mpz_gcd(g.get_mpz_t(), k.get_mpz_t(), spec.r.get_mpz_t());
        if (g != 1) continue;
        const Rat a = age(spec, k);
        if (!have || a < out.min_age) out.min_age = a;
        have = true;
    }
    if (!have) throw std::logic_error("elliptic_tail_ages: no primitive root");
    out.satisfies_rt = out.min_age >= 1;
    return out;
}

}  // namespace cographic
