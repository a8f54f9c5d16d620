#ifndef COGRAPHIC_REID_TAI_HPP
#define COGRAPHIC_REID_TAI_HPP

#include <functional>
#include <optional>
#include <vector>

#include "cographic/cone.hpp"

// Age-based Reid-Tai classification for cyclic quotients of affine space,
// the lattice-extension criterion for cyclic quotients of affine toric
// varieties, the Gorenstein sufficiency test, the descent lemma for
// equivariant toric maps, and reduction of finite groups to their cyclic
// subgroups.

namespace cographic {

// Diagonalized action of Z_r on the torus: generator acts on x_i by zeta^a_i.
struct CyclicAction {
    Int r = 1;
    IntVec weights;  // entries reduced into [0, r)
};
CyclicAction cyclic_action(Int r, IntVec weights);

// One group element given by its order and eigenvalue exponents relative to a
// fixed primitive root of its order.
struct GroupElementSpec {
    Int r = 1;
    IntVec exponents;  // entries in [0, r)
};
GroupElementSpec group_element(Int r, IntVec exponents);

bool is_identity(const GroupElementSpec& s);

// age(g, zeta^k) = (1/r) * sum((k * a_i) mod r); requires gcd(k, r) = 1.
Rat age(const GroupElementSpec& s, const Int& unit_exponent);

// Exactly n-1 exponents are zero. The identity is rejected.
bool is_pseudo_reflection(const GroupElementSpec& s);

struct SmoothQuotientVerdict {
    bool gorenstein = false;
    bool canonical = false;
    bool terminal = false;
    // With pseudo-reflections unexcluded, the canonical/terminal verdicts are
    // sufficient conditions only.
    bool iff_semantics = false;
};

// Reid-Tai over the supplied elements (identity entries are skipped),
// quantifying over all primitive roots via units mod r.
SmoothQuotientVerdict classify_smooth_quotient(const std::vector<GroupElementSpec>& elements,
                                               bool no_pseudo_reflections_asserted);

// N' = Z^n + Z<(1/r) lambda>, with a Hermite-reduced basis.
Lattice extend_lattice(Eigen::Index n, const CyclicAction& act);

enum class TriState { yes, unknown, not_applicable };

struct CyclicToricVerdict {
    bool q_gorenstein = false;
    bool canonical = false;
    bool terminal = false;
    // Gorenstein sufficiency: yes when the unquotiented variety is Gorenstein
    // with a witness m and lambda(m)/r integral; never "no".
    TriState gorenstein_sufficient = TriState::unknown;
};

// Classify U_{sigma,Z^n}/Z_r as the toric variety of sigma against the
// extended lattice.
CyclicToricVerdict classify_cyclic_toric_quotient(const Cone& c, const CyclicAction& act);

struct DescentConclusion {
    bool q_gorenstein = true;
    bool canonical = false;
};

struct DescentResult {
    bool hypotheses_hold = false;
    std::optional<DescentConclusion> conclusion;
};

// Mechanical verification of the descent hypotheses: ray images are rays,
// primitives map to primitives, the map intertwines the actions mod r, and
// the target is a smooth cone on which the action has no pseudo-reflections.
// When they hold, the sigma_1 quotient is Q-Gorenstein, and canonical when
// the target quotient is.
DescentResult check_descent(const Cone& c1, const Cone& c2, const IntMat& map,
                            const CyclicAction& act1, const CyclicAction& act2);

struct CyclicReductionVerdict {
    bool canonical = true;
    bool terminal = true;
};

// Conjunction of the per-cyclic-subgroup verdicts; the composition table must
// define a group (composition[i][j] = index of g_i g_j).
CyclicReductionVerdict cyclic_reduction(
    size_t num_elements, const std::vector<std::vector<size_t>>& composition,
    const std::function<CyclicReductionVerdict(const std::vector<size_t>&)>& classify_subgroup);

}  // namespace cographic

#endif
