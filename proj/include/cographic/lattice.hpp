#ifndef COGRAPHIC_LATTICE_HPP
#define COGRAPHIC_LATTICE_HPP

#include "cographic/linalg.hpp"

// A full-rank lattice in an ambient rational vector space, given by a basis
// matrix. Allows super-lattices of Z^n such as N' = N + Z<lambda/r>.

namespace cographic {

class Lattice {
public:
    static Lattice standard(Eigen::Index n) { return Lattice(RatMat::Identity(n, n)); }

    explicit Lattice(RatMat basis) : basis_(std::move(basis)) {
        if (basis_.rows() != basis_.cols())
            throw std::invalid_argument("Lattice: basis must be square");
        if (basis_.rows() > 0 && determinant<Rat>(basis_) == 0)
            throw std::invalid_argument("Lattice: basis is singular");
        inv_ = basis_.rows() > 0 ? inverse<Rat>(basis_) : basis_;
    }

    Eigen::Index dim() const { return basis_.rows(); }
    const RatMat& basis() const { return basis_; }

    // Coordinates of v in this basis.
    RatVec coords(const RatVec& v) const { return inv_ * v; }
    RatVec from_coords(const RatVec& c) const { return basis_ * c; }

    bool contains(const RatVec& v) const {
        const RatVec c = coords(v);
        for (Eigen::Index i = 0; i < c.size(); ++i)
            if (!is_integer(c(i))) return false;
        return true;
    }

    // The lattice point of smallest positive index on the ray through
    // `direction` (which need not be a lattice vector).
    RatVec primitive(const RatVec& direction) const {
        const IntVec p = primitive_direction(coords(direction));
        if (p.isZero()) throw std::invalid_argument("primitive: zero direction");
        return from_coords(to_rat_vec(p));
    }

    // Index [this : sub] for a sublattice, as a positive integer.
    Int index_of_sublattice(const Lattice& sub) const {
        Rat d = determinant<Rat>(RatMat(inv_ * sub.basis()));
        if (d < 0) d = -d;
        if (!is_integer(d) || d == 0)
            throw std::invalid_argument("index_of_sublattice: not a sublattice");
        return d.get_num();
    }

    // Dual lattice basis (inverse transpose).
    Lattice dual() const { return Lattice(RatMat(inv_.transpose())); }

private:
    RatMat basis_;
    RatMat inv_;
};

}  // namespace cographic

#endif
