#ifndef COGRAPHIC_JACOBIAN_HPP
#define COGRAPHIC_JACOBIAN_HPP

#include <optional>
#include <set>

#include "cographic/cographic.hpp"
#include "cographic/reid_tai.hpp"

// Local structure of the universal compactified Jacobian at a boundary
// point: the contraction along locally-free nodes, the tree-like /
// stabilizer smoothness criteria, the elliptic-tail splitting, and the
// elliptic-tail age verification.

namespace cographic {

// Dual graph of a stable curve: vertices carry geometric genera.
struct StableDualGraph {
    Graph graph;
    std::vector<Int> genus;  // per vertex, >= 0
};

Int total_genus(const StableDualGraph& d);

// Stability: every genus-0 vertex has valence >= 3 (loops count twice), the
// graph is connected, and the total genus is at least 2.
void validate_stability(const StableDualGraph& d);

// Sigma: the nodes (edges) where the sheaf is not locally free.
struct SheafDatum {
    std::set<std::string> sigma;
    std::optional<bool> stab_trivial;
};

// Contract every edge outside sigma, with genus bookkeeping: a contracted
// loop is deleted and its vertex genus incremented (smoothing a self-node
// raises the geometric genus); non-loop contractions merge genera.
StableDualGraph contract_outside_sigma(const StableDualGraph& d, const std::set<std::string>& sigma);

// The contraction underlying the local ring description; edges of the result
// biject with sigma.
Graph gamma_of(const StableDualGraph& d, const SheafDatum& sheaf);

struct LocalStructureReport {
    Graph gamma;
    SingularityReport toric_factor;
    bool finite_quotient_locus = false;
    std::optional<bool> smooth;  // present only when genus >= 4 and the stabilizer flag was supplied
};

LocalStructureReport local_report(const StableDualGraph& d, const SheafDatum& sheaf);

// Factorization of the cographic ring across an elliptic tail meeting its
// complement in a single node p.
struct TailSplitting {
    enum class TailRing { polynomial_xy, base_field };
    TailRing tail_ring = TailRing::base_field;
    bool has_tp_factor = false;  // the extra smoothing variable when p lies in sigma
    Graph gamma_total;
    Graph gamma_complement;
    Graph gamma_tail;
    Eigen::Index dim_total = 0;
    Eigen::Index dim_complement = 0;
    Eigen::Index dim_tail = 0;
};

TailSplitting tail_splitting(const StableDualGraph& d, const SheafDatum& sheaf,
                             const std::set<std::string>& tail_vertices, bool p_in_sigma);

enum class TailCase { smooth_tail, nodal_locally_free, nodal_not_locally_free };
enum class MatrixVariant { first, second };

struct EllipticTailAges {
    Rat min_age;
    bool satisfies_rt = false;
};

// Assemble the elliptic-tail automorphism action from the deformation-space
// matrices (the 2x2 curve block, plus the Picard block for smooth or
// one-node locally-free tails, or the node-swap block otherwise) and check
// the age bound over all primitive roots. Nodal cases force order 2.
EllipticTailAges elliptic_tail_ages(int order, MatrixVariant variant, TailCase tail_case);

}  // namespace cographic

#endif
