#ifndef COGRAPHIC_HOMOLOGY_HPP
#define COGRAPHIC_HOMOLOGY_HPP

#include "cographic/graph.hpp"

// Ordinary and oriented chain groups of a graph and their cycle lattices.
//
// A Chain1 is an integer vector over E, read against the reference
// orientation. An OrChain1 is an integer vector over the oriented edges,
// laid out as [forward copies | backward copies]: index e is the reference
// orientation of edge e, index |E|+e its reverse.

namespace cographic {

using Chain1 = IntVec;
using OrChain1 = IntVec;

inline Eigen::Index forward_index(const Graph&, Eigen::Index e) { return e; }
inline Eigen::Index backward_index(const Graph& g, Eigen::Index e) { return g.num_edges() + e; }
inline Eigen::Index oriented_index(const Graph& g, const OrientedEdge& oe) {
    return oe.reversed ? backward_index(g, oe.edge) : forward_index(g, oe.edge);
}

// Boundary of an ordinary chain: [e->] maps to t(e->) - s(e->).
IntVec boundary_ordinary(const Graph& g, const Chain1& c);

// Boundary of an oriented chain: e-> maps to t(e->) - s(e->).
IntVec boundary_oriented(const Graph& g, const OrChain1& c);

inline bool is_cycle(const Graph& g, const Chain1& c) { return boundary_ordinary(g, c).isZero(); }
inline bool is_or_cycle(const Graph& g, const OrChain1& c) { return boundary_oriented(g, c).isZero(); }

// Scalar products making the respective bases orthonormal: on ordinary chains
// ([e->],[e->]) = 1 and ([e->],[e<-]) = -1; on oriented chains the oriented
// edges are orthonormal.
Int ordinary_product(const Chain1& a, const Chain1& b);
Int oriented_product(const OrChain1& a, const OrChain1& b);

// Integral basis of ker(boundary_ordinary): the fundamental cycles of a
// spanning tree, each a circuit; length b1. Requires a connected graph.
std::vector<Chain1> cycle_basis(const Graph& g);

// Integral basis of ker(boundary_oriented), length b1 + |E|: the doubles
// e-> + e<- for every edge, followed by lifts of the fundamental cycles.
std::vector<OrChain1> oriented_cycle_lattice(const Graph& g);

// e-> maps to [e->], e<- maps to -[e->].
Chain1 kernel_to_ordinary(const Graph& g, const OrChain1& c);

// The non-tree edges used by cycle_basis, in basis order (the coefficient of
// a cycle on these edges gives its coordinates in the fundamental basis).
std::vector<Eigen::Index> cycle_basis_edges(const Graph& g);

// Coordinates of a cycle in the fundamental-cycle basis.
IntVec cycle_coordinates(const Graph& g, const Chain1& z);

// Matrix of the canonical isomorphism H1(doubled graph) -> oriented H1(g):
// columns are the images of the fundamental cycles of the doubled graph,
// expressed in the oriented_cycle_lattice basis. Unimodular.
IntMat doubled_homology_iso(const Graph& g, const Orientation& phi);

}  // namespace cographic

#endif
