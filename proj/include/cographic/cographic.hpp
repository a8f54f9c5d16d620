#ifndef COGRAPHIC_COGRAPHIC_HPP
#define COGRAPHIC_COGRAPHIC_HPP

#include <string>
#include <vector>

#include "cographic/cone.hpp"
#include "cographic/homology.hpp"

// The cographic semigroup C(G) of nonnegative oriented cycles, its explicit
// pair model (cycle, markers) with the psi-twisted addition, the binomial
// presentation of the cographic toric ring, and the full singularity dossier
// of the associated affine toric variety.

namespace cographic {

// A computed verdict contradicted an identity that holds for every cographic
// cone; signals a defect, not bad input.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

// psi(z1, z2): for each edge, the multiplicity the two cycles share in
// opposite directions.
IntVec psi(const Graph& g, const Chain1& z1, const Chain1& z2);

// The section H1 -> C(G): place |a_e| on the orientation making each
// coefficient positive.
OrChain1 section(const Graph& g, const Chain1& z);

// Element of C(G) in the pair model: a cycle plus one marker per edge.
struct PairElem {
    Chain1 z;
    IntVec markers;  // >= 0, indexed by edge
};

PairElem pair_elem(const Graph& g, Chain1 z, IntVec markers);
PairElem semigroup_add(const Graph& g, const PairElem& a, const PairElem& b);
OrChain1 pair_to_semigroup(const Graph& g, const PairElem& p);
PairElem semigroup_to_pair(const Graph& g, const OrChain1& s);

// The cographic cone sigma in the oriented cycle lattice and its dual, both
// in the coordinates of the oriented_cycle_lattice basis (so the lattices are
// the standard ones of rank b1 + |E|). `pairing_rows` maps coordinates to
// oriented-edge coefficients: row of the oriented edge, applied to basis
// coordinates, is the functional ( , e->).
struct CographicCone {
    Eigen::Index rank = 0;      // b1 + |E|
    IntMat pairing_rows;        // 2|E| x rank
    Cone sigma;                 // in M = oriented H1, coordinates Z^rank
    Cone sigma_dual;            // in N = dual lattice, coordinates Z^rank

    CographicCone() : sigma(0), sigma_dual(0) {}
};
CographicCone cographic_cone(const Graph& g);

// Coordinates of an oriented cycle in the oriented_cycle_lattice basis and
// back.
IntVec or_cycle_coordinates(const Graph& g, const OrChain1& c);
OrChain1 or_cycle_from_coordinates(const Graph& g, const IntVec& coords);

// Binomial presentation of the cographic toric ring over the +-circuit and
// edge generators; loop edges get their T variable eliminated by the
// linear-term relation.
struct RingPresentation {
    struct XGen {
        std::string name;
        Chain1 cycle;
    };
    struct TGen {
        std::string name;
        Eigen::Index edge;
    };
    // One binomial X_a * X_b = prod(X_rhs) * prod(T^t); trivial instances are
    // dropped and loop T's substituted away.
    struct Relation {
        Eigen::Index lhs_a = 0, lhs_b = 0;  // indices into x
        std::vector<Eigen::Index> rhs_x;    // indices into x, with multiplicity
        IntVec rhs_t;                       // exponents per edge (original indexing)
        std::string display;
    };
    std::vector<XGen> x;
    std::vector<TGen> t;
    std::vector<Relation> relations;
    std::vector<Eigen::Index> eliminated_t_edges;  // loop edges
};
RingPresentation presentation(const Graph& g);

struct SingularityReport {
    Eigen::Index dimension = 0;
    Eigen::Index tangent_dimension = 0;
    Int multiplicity = 1;
    Eigen::Index extremal_ray_count = 0;
    bool smooth = false;
    bool finite_quotient = false;
    bool gorenstein = false;
    bool canonical = false;
    bool terminal = false;
    bool rational_singularities = true;      // asserted for normal toric varieties, not computed
    Eigen::Index affine_factor_exponent = 0; // separating edges + 2 * loops
    Graph reduced_graph;
};

// Full dossier, computed from the cones (closed formulas are asserted as
// postconditions). Throws consistency_error if the Gorenstein/terminal
// verdict ever comes back false.
SingularityReport analyze(const Graph& g);

// All invariant monomials of total degree <= bound, as exponent vectors over
// the oriented edges (the torus-weight route).
std::vector<IntVec> invariant_ring_oracle(const Graph& g, Eigen::Index degree_bound);

// The same truncation computed through the pair model (the semigroup route).
std::vector<IntVec> semigroup_elements_up_to_degree(const Graph& g, Eigen::Index degree_bound);

}  // namespace cographic

#endif
