#ifndef COGRAPHIC_CONE_HPP
#define COGRAPHIC_CONE_HPP

#include <optional>
#include <vector>

#include "cographic/lattice.hpp"

// Exact rational polyhedral cones: double description, extremal rays,
// Hilbert bases, lattice points of polytopes, toric singularity classifiers
// and the GKZ subdiagram volume.

namespace cographic {

// V-representation: full cone = span(lineality) + cone(rays).
struct VRep {
    std::vector<RatVec> lineality;
    std::vector<RatVec> rays;
};

// H-representation: {x : equations * x = 0, inequalities * x >= 0} (rows).
struct HRep {
    RatMat equations;
    RatMat inequalities;
};

// Generators of {x in R^n : equations x = 0, inequalities x >= 0} by the
// double description method. Rays come back as primitive integer directions.
VRep dual_description(Eigen::Index n, const RatMat& equations, const RatMat& inequalities);

class Cone {
public:
    // The zero cone in R^n.
    explicit Cone(Eigen::Index ambient_dim) : n_(ambient_dim) {}

    static Cone from_generators(Eigen::Index ambient_dim, std::vector<RatVec> generators);
    static Cone from_inequalities(Eigen::Index ambient_dim, const RatMat& inequalities);

    Eigen::Index ambient_dim() const { return n_; }
    const std::vector<RatVec>& generators() const { return generators_; }

    // Dimension of the linear span.
    Eigen::Index dim() const;
    bool is_pointed() const;
    bool contains(const RatVec& x) const;

    const HRep& hrep() const;

    // Directions of the extremal rays, one per ray, canonicalized to primitive
    // integer vectors and sorted. Requires a pointed cone.
    const std::vector<RatVec>& extremal_rays() const;

    // Dual cone in the dual coordinates; lineality is returned as +-pairs of
    // generators.
    Cone dual() const;

private:
    Eigen::Index n_ = 0;
    std::vector<RatVec> generators_;
    mutable std::optional<HRep> hrep_;
    mutable std::optional<std::vector<RatVec>> extremal_;
};

struct ConeClassification {
    bool q_gorenstein = false;
    bool gorenstein = false;
    bool canonical = false;   // reported only when q_gorenstein holds
    bool terminal = false;    // likewise
    std::optional<RatVec> m_sigma;  // rational covector with <m, u_rho> = 1
};

// Primitive generators u_rho of the extremal rays with respect to L.
std::vector<RatVec> primitive_ray_generators(const Cone& c, const Lattice& L);

// Gorenstein / Q-Gorenstein / canonical / terminal classification of the
// affine toric variety of a pointed full-dimensional cone, following the
// lattice-point criteria on the polytope conv(0, u_rho).
ConeClassification classify_cone(const Cone& c, const Lattice& L);

// Rays of c form part of a basis of L (the toric smoothness test).
bool is_smooth_cone(const Cone& c, const Lattice& L);

// Unique minimal generating set of cone ∩ L for a pointed cone, sorted.
std::vector<RatVec> hilbert_basis(const Cone& c, const Lattice& L);

// Exact enumeration of the L-points of conv(vertices), sorted.
std::vector<RatVec> lattice_points_in_polytope(const std::vector<RatVec>& vertices, const Lattice& L);

// Normalized lattice volume (unimodular simplex = 1) of the subdiagram part
// K_- = closure(c \ conv(nonzero lattice points of c)), for a pointed cone;
// equals the multiplicity of the associated semigroup ring at its vertex.
Int subdiagram_volume(const Cone& c, const Lattice& L);

// Normalized lattice volume of conv(vertices) with respect to L (test oracle
// support; also used by subdiagram_volume internally). Exact rational for
// rational vertex data.
Rat polytope_volume(const std::vector<RatVec>& vertices, const Lattice& L);

}  // namespace cographic

#endif
