#include "cographic/cographic.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cographic {

namespace {

struct IntVecLess {
    bool operator()(const IntVec& a, const IntVec& b) const { return lex_less(a, b); }
};

void require_same_graph(const Graph& g, Eigen::Index size, const char* what) {
    if (size != g.num_edges()) throw std::invalid_argument(std::string(what) + ": wrong graph");
}

}  // namespace

IntVec psi(const Graph& g, const Chain1& z1, const Chain1& z2) {
    require_same_graph(g, z1.size(), "psi");
    require_same_graph(g, z2.size(), "psi");
    if (!is_cycle(g, z1) || !is_cycle(g, z2)) throw std::invalid_argument("psi: inputs must be cycles");
    IntVec out = IntVec::Zero(g.num_edges());
    for (Eigen::Index e = 0; e < g.num_edges(); ++e) {
        if (z1(e) == 0 || z2(e) == 0) continue;
        if (sgn(z1(e)) == sgn(z2(e))) continue;
        out(e) = std::min(abs(z1(e)), abs(z2(e)));
    }
    return out;
}

OrChain1 section(const Graph& g, const Chain1& z) {
    require_same_graph(g, z.size(), "section");
    OrChain1 c = OrChain1::Zero(2 * g.num_edges());
    for (Eigen::Index e = 0; e < g.num_edges(); ++e) {
        if (z(e) > 0) c(forward_index(g, e)) = z(e);
        if (z(e) < 0) c(backward_index(g, e)) = -z(e);
    }
    return c;
}

PairElem pair_elem(const Graph& g, Chain1 z, IntVec markers) {
    require_same_graph(g, z.size(), "pair_elem");
    require_same_graph(g, markers.size(), "pair_elem");
    if (!is_cycle(g, z)) throw std::invalid_argument("pair_elem: z must be a cycle");
    for (Eigen::Index e = 0; e < markers.size(); ++e)
        if (markers(e) < 0) throw std::invalid_argument("pair_elem: negative marker");
    return {std::move(z), std::move(markers)};
}

PairElem semigroup_add(const Graph& g, const PairElem& a, const PairElem& b) {
    require_same_graph(g, a.z.size(), "semigroup_add");
    require_same_graph(g, b.z.size(), "semigroup_add");
    return {a.z + b.z, psi(g, a.z, b.z) + a.markers + b.markers};
}

OrChain1 pair_to_semigroup(const Graph& g, const PairElem& p) {
    OrChain1 c = section(g, p.z);
    for (Eigen::Index e = 0; e < g.num_edges(); ++e) {
        c(forward_index(g, e)) += p.markers(e);
        c(backward_index(g, e)) += p.markers(e);
    }
    return c;
}

PairElem semigroup_to_pair(const Graph& g, const OrChain1& s) {
    if (s.size() != 2 * g.num_edges()) throw std::invalid_argument("semigroup_to_pair: size mismatch");
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) < 0) throw std::invalid_argument("semigroup_to_pair: negative coefficient");
    if (!is_or_cycle(g, s)) throw std::invalid_argument("semigroup_to_pair: not an oriented cycle");
    PairElem p;
    p.z = kernel_to_ordinary(g, s);
    p.markers = IntVec::Zero(g.num_edges());
    for (Eigen::Index e = 0; e < g.num_edges(); ++e)
        p.markers(e) = std::min(s(forward_index(g, e)), s(backward_index(g, e)));
    return p;
}

IntVec or_cycle_coordinates(const Graph& g, const OrChain1& c) {
    if (!is_or_cycle(g, c)) throw std::invalid_argument("or_cycle_coordinates: not an oriented cycle");
    const Chain1 z = kernel_to_ordinary(g, c);
    const IntVec gamma = cycle_coordinates(g, z);
    IntVec coords(g.num_edges() + gamma.size());
    for (Eigen::Index e = 0; e < g.num_edges(); ++e) coords(e) = c(backward_index(g, e));
    coords.tail(gamma.size()) = gamma;
    return coords;
}

OrChain1 or_cycle_from_coordinates(const Graph& g, const IntVec& coords) {
    const auto basis = oriented_cycle_lattice(g);
    if (coords.size() != static_cast<Eigen::Index>(basis.size()))
        throw std::invalid_argument("or_cycle_from_coordinates: size mismatch");
    OrChain1 c = OrChain1::Zero(2 * g.num_edges());
    for (size_t j = 0; j < basis.size(); ++j) c += coords(static_cast<Eigen::Index>(j)) * basis[j];
    return c;
}

CographicCone cographic_cone(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("cographic_cone: graph is not connected");
    CographicCone out;
    const auto basis = oriented_cycle_lattice(g);
    out.rank = static_cast<Eigen::Index>(basis.size());
    out.pairing_rows.resize(2 * g.num_edges(), out.rank);
    for (size_t j = 0; j < basis.size(); ++j) out.pairing_rows.col(static_cast<Eigen::Index>(j)) = basis[j];

    out.sigma = Cone::from_inequalities(out.rank, to_rat_mat(out.pairing_rows));

    std::set<IntVec, IntVecLess> rows;
    for (Eigen::Index r = 0; r < out.pairing_rows.rows(); ++r)
        rows.insert(IntVec(out.pairing_rows.row(r).transpose()));
    std::vector<RatVec> gens;
    for (const IntVec& r : rows) gens.push_back(to_rat_vec(r));
    out.sigma_dual = gens.empty() ? Cone(out.rank) : Cone::from_generators(out.rank, gens);
    return out;
}

// ---------------------------------------------------------------------------
// Presentation.

namespace {

std::string chain_string(const Graph& g, const Chain1& z) {
    std::string s;
    for (Eigen::Index e = 0; e < g.num_edges(); ++e) {
        for (Int k = 0; k < abs(z(e)); ++k) {
            s += z(e) > 0 ? '+' : '-';
            s += g.edge(e).id;
        }
    }
    return s;
}

// Greedy conformal decomposition of a cycle into signed circuits.
std::vector<Eigen::Index> conformal_decomposition(const Graph& g, Chain1 z,
                                                  const std::vector<Chain1>& signed_circuits) {
    std::vector<Eigen::Index> parts;
    while (!z.isZero()) {
        bool found = false;
        for (size_t i = 0; i < signed_circuits.size(); ++i) {
            const Chain1& c = signed_circuits[i];
            bool conformal = true;
            for (Eigen::Index e = 0; e < g.num_edges() && conformal; ++e) {
                if (c(e) == 0) continue;
                if (z(e) == 0 || sgn(z(e)) != sgn(c(e))) conformal = false;
            }
            if (!conformal) continue;
            z -= c;
            parts.push_back(static_cast<Eigen::Index>(i));
            found = true;
            break;
        }
        if (!found) throw std::logic_error("conformal_decomposition: no conformal circuit found");
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

}  // namespace

RingPresentation presentation(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("presentation: graph is not connected");
    RingPresentation pres;

    std::vector<Chain1> signed_circuits;
    for (const IntVec& c : circuits(g)) {
        signed_circuits.push_back(c);
        signed_circuits.push_back(-c);
    }
    for (const Chain1& c : signed_circuits)
        pres.x.push_back({"X(" + chain_string(g, c) + ")", c});

    std::vector<bool> loop_edge(static_cast<size_t>(g.num_edges()), false);
    for (Eigen::Index e = 0; e < g.num_edges(); ++e) loop_edge[static_cast<size_t>(e)] = g.is_loop(e);

    // Index of the signed loop circuits, per loop edge.
    std::map<Eigen::Index, std::pair<Eigen::Index, Eigen::Index>> loop_gens;
    for (size_t i = 0; i < signed_circuits.size(); ++i) {
        const Chain1& c = signed_circuits[i];
        Eigen::Index support = -1;
        bool single = true;
        for (Eigen::Index e = 0; e < g.num_edges(); ++e) {
            if (c(e) == 0) continue;
            if (support >= 0) { single = false; break; }
            support = e;
        }
        if (!single || support < 0 || !g.is_loop(support)) continue;
        if (c(support) == 1) loop_gens[support].first = static_cast<Eigen::Index>(i);
        else loop_gens[support].second = static_cast<Eigen::Index>(i);
    }

    const Eigen::Index nx = static_cast<Eigen::Index>(pres.x.size());
    for (Eigen::Index i = 0; i < nx; ++i) {
        for (Eigen::Index j = i; j < nx; ++j) {
            const Chain1 z = pres.x[static_cast<size_t>(i)].cycle + pres.x[static_cast<size_t>(j)].cycle;
            RingPresentation::Relation rel;
            rel.lhs_a = i;
            rel.lhs_b = j;
            rel.rhs_t = psi(g, pres.x[static_cast<size_t>(i)].cycle, pres.x[static_cast<size_t>(j)].cycle);
            std::vector<Chain1> cycles_only;
            for (const auto& xg : pres.x) cycles_only.push_back(xg.cycle);
            for (Eigen::Index k : conformal_decomposition(g, z, cycles_only)) rel.rhs_x.push_back(k);

            if (rel.rhs_t.isZero()) {
                std::vector<Eigen::Index> lhs{i, j}, rhs = rel.rhs_x;
                std::sort(lhs.begin(), lhs.end());
                if (lhs == rhs) continue;  // same monomial on both sides
            }
            pres.relations.push_back(std::move(rel));
        }
    }

    // Loop relations X^g X^-g = T_e carry a linear term: eliminate those T's.
    for (const auto& [edge, gens] : loop_gens) {
        pres.eliminated_t_edges.push_back(edge);
        std::vector<RingPresentation::Relation> kept;
        for (auto& rel : pres.relations) {
            const bool defining = rel.rhs_x.empty() && rel.rhs_t(edge) == 1 &&
                                  rel.rhs_t.sum() == 1 &&
                                  ((rel.lhs_a == gens.first && rel.lhs_b == gens.second) ||
                                   (rel.lhs_a == gens.second && rel.lhs_b == gens.first));
            if (defining) continue;
            while (rel.rhs_t(edge) > 0) {
                rel.rhs_t(edge) -= 1;
                rel.rhs_x.push_back(gens.first);
                rel.rhs_x.push_back(gens.second);
            }
            std::sort(rel.rhs_x.begin(), rel.rhs_x.end());
            kept.push_back(rel);
        }
        pres.relations = std::move(kept);
    }

    for (Eigen::Index e = 0; e < g.num_edges(); ++e)
        if (!g.is_loop(e)) pres.t.push_back({"T(" + g.edge(e).id + ")", e});

    // Display strings.
    std::map<Eigen::Index, std::string> tname;
    for (const auto& t : pres.t) tname[t.edge] = t.name;
    for (auto& rel : pres.relations) {
        std::string lhs = pres.x[static_cast<size_t>(rel.lhs_a)].name + "*" +
                          pres.x[static_cast<size_t>(rel.lhs_b)].name;
        std::string rhs;
        for (Eigen::Index k : rel.rhs_x) {
            if (!rhs.empty()) rhs += "*";
            rhs += pres.x[static_cast<size_t>(k)].name;
        }
        for (Eigen::Index e = 0; e < g.num_edges(); ++e) {
            for (Int k = 0; k < rel.rhs_t(e); ++k) {
                if (!rhs.empty()) rhs += "*";
                rhs += tname.at(e);
            }
        }
        if (rhs.empty()) rhs = "1";
        rel.display = lhs + " - " + rhs;
    }
    return pres;
}

// ---------------------------------------------------------------------------
// The dossier.

SingularityReport analyze(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("analyze: graph is not connected");
    SingularityReport rep;

    const auto seps = separating_edges(g);
    std::set<std::string> contract, erase;
    for (Eigen::Index e : seps) contract.insert(g.edge(e).id);
    for (Eigen::Index e = 0; e < g.num_edges(); ++e)
        if (g.is_loop(e)) erase.insert(g.edge(e).id);
    rep.affine_factor_exponent =
        static_cast<Eigen::Index>(seps.size()) + 2 * g.num_loops();
    rep.reduced_graph = contract_and_delete(g, contract, erase);

    const CographicCone full = cographic_cone(g);
    const CographicCone red = cographic_cone(rep.reduced_graph);
    const Lattice lat_red = Lattice::standard(red.rank);
    const Lattice lat_full = Lattice::standard(full.rank);

    rep.dimension = red.rank + rep.affine_factor_exponent;
    if (rep.dimension != g.b1() + g.num_edges())
        throw consistency_error("analyze: dimension disagrees with b1 + |E|");
    if (full.sigma_dual.dim() != full.rank || !full.sigma_dual.is_pointed())
        throw consistency_error("analyze: dual cone is not pointed full-dimensional");

    rep.extremal_ray_count = static_cast<Eigen::Index>(full.sigma_dual.extremal_rays().size());
    const Eigen::Index expected_rays =
        g.num_edges() == 0 ? 0 : 2 * g.num_edges() - static_cast<Eigen::Index>(seps.size());
    if (rep.extremal_ray_count != expected_rays)
        throw consistency_error("analyze: extremal ray count disagrees with 2|E| - #separating");

    rep.finite_quotient = rep.extremal_ray_count == full.rank;
    rep.smooth = rep.finite_quotient && is_smooth_cone(full.sigma_dual, lat_full);
    if (rep.smooth != is_tree_like(g))
        throw consistency_error("analyze: smoothness disagrees with tree-likeness");

    // Tangent dimension: Hilbert basis of the reduced cone, cross-checked
    // against the explicit generating set (sections of +-circuits and the
    // doubles of the surviving edges).
    const auto hb = hilbert_basis(red.sigma, lat_red);
    {
        std::set<IntVec, IntVecLess> expected_set;
        const Graph& rg = rep.reduced_graph;
        for (const IntVec& circ : circuits(rg)) {
            expected_set.insert(or_cycle_coordinates(rg, section(rg, circ)));
            expected_set.insert(or_cycle_coordinates(rg, section(rg, Chain1(-circ))));
        }
        for (Eigen::Index e = 0; e < rg.num_edges(); ++e) {
            OrChain1 dbl = OrChain1::Zero(2 * rg.num_edges());
            dbl(forward_index(rg, e)) = 1;
            dbl(backward_index(rg, e)) = 1;
            expected_set.insert(or_cycle_coordinates(rg, dbl));
        }
        std::set<IntVec, IntVecLess> computed;
        for (const RatVec& h : hb) computed.insert(to_int_vec(h));
        if (computed != expected_set)
            throw consistency_error("analyze: Hilbert basis disagrees with the circuit sections");
    }
    rep.tangent_dimension = static_cast<Eigen::Index>(hb.size()) + rep.affine_factor_exponent;
    const Eigen::Index protan = 2 * static_cast<Eigen::Index>(circuits(g).size()) +
                                g.num_edges() - g.num_loops();
    if (rep.tangent_dimension != protan)
        throw consistency_error("analyze: tangent dimension disagrees with the circuit count formula");

    rep.multiplicity = subdiagram_volume(red.sigma, lat_red);

    const ConeClassification cls = classify_cone(red.sigma_dual, lat_red);
    rep.gorenstein = cls.gorenstein;
    rep.canonical = cls.canonical;
    rep.terminal = cls.terminal;
    if (!rep.gorenstein || !rep.terminal)
        throw consistency_error("analyze: cographic cone must be Gorenstein and terminal");
    if (rep.smooth && rep.multiplicity != 1)
        throw consistency_error("analyze: smooth variety with multiplicity != 1");
    return rep;
}

// ---------------------------------------------------------------------------
// Degree truncations along the two routes.

std::vector<IntVec> invariant_ring_oracle(const Graph& g, Eigen::Index degree_bound) {
    if (!is_connected(g)) throw std::invalid_argument("invariant_ring_oracle: graph is not connected");
    if (degree_bound < 0) throw std::invalid_argument("invariant_ring_oracle: negative bound");
    std::vector<IntVec> out;
    const Eigen::Index m = 2 * g.num_edges();
    IntVec expo = IntVec::Zero(m);

    // Odometer over exponent vectors of total degree <= bound.
    auto total = [&]() {
        Int s = 0;
        for (Eigen::Index i = 0; i < m; ++i) s += expo(i);
        return s;
    };
    for (;;) {
        if (boundary_oriented(g, expo).isZero()) out.push_back(expo);
        Eigen::Index pos = 0;
        while (pos < m) {
            expo(pos) += 1;
            if (total() <= degree_bound) break;
            expo(pos) = 0;
            ++pos;
        }
        if (pos == m) break;
    }
    std::sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
    return out;
}

std::vector<IntVec> semigroup_elements_up_to_degree(const Graph& g, Eigen::Index degree_bound) {
    if (!is_connected(g)) throw std::invalid_argument("semigroup_elements_up_to_degree: graph is not connected");
    const auto basis = cycle_basis(g);
    const Eigen::Index b1 = static_cast<Eigen::Index>(basis.size());
    const Eigen::Index ne = g.num_edges();
    std::vector<IntVec> out;

    IntVec gamma = IntVec::Constant(b1, -degree_bound);
    for (;;) {
        Chain1 z = Chain1::Zero(ne);
        for (Eigen::Index i = 0; i < b1; ++i) z += gamma(i) * basis[static_cast<size_t>(i)];
        Int deg = 0;
        for (Eigen::Index e = 0; e < ne; ++e) deg += abs(z(e));
        if (deg <= degree_bound) {
            // All marker vectors fitting under the degree bound.
            IntVec markers = IntVec::Zero(ne);
            for (;;) {
                Int total = deg;
                for (Eigen::Index e = 0; e < ne; ++e) total += 2 * markers(e);
                if (total <= degree_bound)
                    out.push_back(pair_to_semigroup(g, pair_elem(g, z, markers)));
                Eigen::Index pos = 0;
                while (pos < ne) {
                    markers(pos) += 1;
                    Int t2 = deg;
                    for (Eigen::Index e = 0; e < ne; ++e) t2 += 2 * markers(e);
                    if (t2 <= degree_bound) break;
                    markers(pos) = 0;
                    ++pos;
                }
                if (pos == ne) break;
            }
        }
        Eigen::Index pos = 0;
        while (pos < b1) {
            gamma(pos) += 1;
            if (gamma(pos) <= degree_bound) break;
            gamma(pos) = -degree_bound;
            ++pos;
        }
        if (pos == b1) break;
    }
    std::sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace cographic
