#include "cographic/reid_tai.hpp"

#include <algorithm>
#include <set>

namespace cographic {

namespace {

Int mod_reduce(const Int& a, const Int& r) {
    Int m;
    mpz_fdiv_r(m.get_mpz_t(), a.get_mpz_t(), r.get_mpz_t());
    return m;
}

IntVec mod_reduce_vec(const IntVec& v, const Int& r) {
    IntVec out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = mod_reduce(v(i), r);
    return out;
}

std::vector<Int> units_mod(const Int& r) {
    std::vector<Int> out;
    for (Int k = 1; k < r; ++k) {
        Int g;
        mpz_gcd(g.get_mpz_t(), k.get_mpz_t(), r.get_mpz_t());
        if (g == 1) out.push_back(k);
    }
    return out;
}

}  // namespace

CyclicAction cyclic_action(Int r, IntVec weights) {
    if (r < 1) throw std::invalid_argument("cyclic_action: order must be positive");
    return {r, mod_reduce_vec(weights, r)};
}

GroupElementSpec group_element(Int r, IntVec exponents) {
    if (r < 1) throw std::invalid_argument("group_element: order must be positive");
    return {r, mod_reduce_vec(exponents, r)};
}

bool is_identity(const GroupElementSpec& s) {
    return s.r == 1 || mod_reduce_vec(s.exponents, s.r).isZero();
}

Rat age(const GroupElementSpec& s, const Int& unit_exponent) {
    Int g;
    mpz_gcd(g.get_mpz_t(), unit_exponent.get_mpz_t(), s.r.get_mpz_t());
    if (g != 1) throw std::invalid_argument("age: exponent not coprime to the order");
    Int sum = 0;
    for (Eigen::Index i = 0; i < s.exponents.size(); ++i)
        sum += mod_reduce(unit_exponent * s.exponents(i), s.r);
    return make_rat(sum, s.r);
}

bool is_pseudo_reflection(const GroupElementSpec& s) {
    if (is_identity(s)) throw std::invalid_argument("is_pseudo_reflection: identity element");
    Eigen::Index zeros = 0;
    for (Eigen::Index i = 0; i < s.exponents.size(); ++i)
        if (mod_reduce(s.exponents(i), s.r) == 0) ++zeros;
    return zeros == s.exponents.size() - 1;
}

SmoothQuotientVerdict classify_smooth_quotient(const std::vector<GroupElementSpec>& elements,
                                               bool no_pseudo_reflections_asserted) {
    SmoothQuotientVerdict v;
    v.gorenstein = true;
    v.canonical = true;
    v.terminal = true;
    v.iff_semantics = no_pseudo_reflections_asserted;
    for (const GroupElementSpec& g : elements) {
        if (is_identity(g)) continue;
        for (const Int& k : units_mod(g.r)) {
            const Rat a = age(g, k);
            if (!is_integer(a)) v.gorenstein = false;
            if (a < 1) v.canonical = false;
            if (a <= 1) v.terminal = false;
        }
    }
    if (!v.canonical) v.terminal = false;
    return v;
}

Lattice extend_lattice(Eigen::Index n, const CyclicAction& act) {
    if (act.weights.size() != n) throw std::invalid_argument("extend_lattice: dimension mismatch");
    // Hermite-reduce the columns of [r*I | lambda] and divide by r.
    IntMat m(n, n + 1);
    m.leftCols(n) = Int(act.r) * IntMat::Identity(n, n);
    m.col(n) = mod_reduce_vec(act.weights, act.r);
    const IntMat h = hnf_columns(m);
    RatMat basis(n, n);
    Eigen::Index col = 0;
    for (Eigen::Index j = 0; j < h.cols() && col < n; ++j) {
        if (IntVec(h.col(j)).isZero()) continue;
        for (Eigen::Index i = 0; i < n; ++i) basis(i, col) = make_rat(h(i, j), act.r);
        ++col;
    }
    if (col != n) throw std::logic_error("extend_lattice: basis rank mismatch");
    return Lattice(basis);
}

CyclicToricVerdict classify_cyclic_toric_quotient(const Cone& c, const CyclicAction& act) {
    const Eigen::Index n = c.ambient_dim();
    if (act.weights.size() != n)
        throw std::invalid_argument("classify_cyclic_toric_quotient: dimension mismatch");

    CyclicToricVerdict out;
    const Lattice extended = extend_lattice(n, act);
    const ConeClassification quot = classify_cone(c, extended);
    out.q_gorenstein = quot.q_gorenstein;
    out.canonical = quot.canonical;
    out.terminal = quot.terminal;

    // Gorenstein sufficiency against the original lattice (one direction
    // only): need an integral witness m with <m, u_rho> = 1 and lambda(m)
    // divisible by r.
    const ConeClassification plain = classify_cone(c, Lattice::standard(n));
    if (!plain.gorenstein) {
        out.gorenstein_sufficient = TriState::not_applicable;
        return out;
    }
    const std::vector<RatVec> u = primitive_ray_generators(c, Lattice::standard(n));
    IntMat a(static_cast<Eigen::Index>(u.size()) + 1, n + 1);
    a.setZero();
    for (size_t i = 0; i < u.size(); ++i)
        a.block(static_cast<Eigen::Index>(i), 0, 1, n) = to_int_vec(u[i]).transpose();
    a.block(static_cast<Eigen::Index>(u.size()), 0, 1, n) = act.weights.transpose();
    a(static_cast<Eigen::Index>(u.size()), n) = -act.r;
    IntVec rhs = IntVec::Ones(static_cast<Eigen::Index>(u.size()) + 1);
    rhs(static_cast<Eigen::Index>(u.size())) = 0;
    out.gorenstein_sufficient =
        solve_integer(a, rhs).has_value() ? TriState::yes : TriState::unknown;
    return out;
}

DescentResult check_descent(const Cone& c1, const Cone& c2, const IntMat& map,
                            const CyclicAction& act1, const CyclicAction& act2) {
    const Eigen::Index n1 = c1.ambient_dim(), n2 = c2.ambient_dim();
    if (map.rows() != n2 || map.cols() != n1)
        throw std::invalid_argument("check_descent: map dimension mismatch");
    if (act1.weights.size() != n1 || act2.weights.size() != n2)
        throw std::invalid_argument("check_descent: action dimension mismatch");
    if (act1.r != act2.r) throw std::invalid_argument("check_descent: group order mismatch");

    DescentResult out;
    const Lattice l1 = Lattice::standard(n1), l2 = Lattice::standard(n2);
    const RatMat map_r = to_rat_mat(map);

    // (ii)+(iii): every ray of c1 maps onto a ray of c2, primitive onto
    // primitive.
    const auto int_less = [](const IntVec& a, const IntVec& b) { return lex_less(a, b); };
    std::set<IntVec, decltype(int_less)> target_rays(int_less);
    for (const RatVec& r : c2.extremal_rays()) target_rays.insert(primitive_direction(r));
    for (const RatVec& r : c1.extremal_rays()) {
        const RatVec u1 = l1.primitive(r);
        const RatVec image = map_r * u1;
        if (image.isZero()) return out;
        const IntVec dir = primitive_direction(image);
        if (!target_rays.count(dir)) return out;           // image is not a ray of c2
        if (to_rat_vec(dir) != image) return out;          // primitive does not map to primitive
    }

    // (a): equivariance, map . lambda1 = lambda2 mod r.
    const IntVec pushed = mod_reduce_vec(map * act1.weights, act1.r);
    if (pushed != mod_reduce_vec(act2.weights, act2.r)) return out;

    // (b): the target is smooth and the action has no pseudo-reflections.
    if (!is_smooth_cone(c2, l2)) return out;
    for (Int j = 1; j < act2.r; ++j) {
        const GroupElementSpec power = group_element(act2.r, IntVec(j * act2.weights));
        if (is_identity(power)) continue;
        if (is_pseudo_reflection(power)) return out;
    }

    out.hypotheses_hold = true;
    DescentConclusion conc;
    conc.q_gorenstein = true;
    conc.canonical = classify_cyclic_toric_quotient(c2, act2).canonical;
    out.conclusion = conc;
    return out;
}

CyclicReductionVerdict cyclic_reduction(
    size_t num_elements, const std::vector<std::vector<size_t>>& composition,
    const std::function<CyclicReductionVerdict(const std::vector<size_t>&)>& classify_subgroup) {
    const size_t n = num_elements;
    if (composition.size() != n) throw std::invalid_argument("cyclic_reduction: table size mismatch");
    for (const auto& row : composition) {
        if (row.size() != n) throw std::invalid_argument("cyclic_reduction: table row size mismatch");
        for (size_t v : row)
            if (v >= n) throw std::invalid_argument("cyclic_reduction: table is not closed");
    }
    if (n == 0) throw std::invalid_argument("cyclic_reduction: empty group");

    // Identity, associativity, inverses.
    size_t identity = n;
    for (size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (size_t j = 0; j < n && ok; ++j)
            if (composition[e][j] != j || composition[j][e] != j) ok = false;
        if (ok) { identity = e; break; }
    }
    if (identity == n) throw std::invalid_argument("cyclic_reduction: no identity element");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (composition[composition[i][j]][k] != composition[i][composition[j][k]])
                    throw std::invalid_argument("cyclic_reduction: table is not associative");
    for (size_t i = 0; i < n; ++i) {
        bool has_inverse = false;
        for (size_t j = 0; j < n; ++j)
            if (composition[i][j] == identity) { has_inverse = true; break; }
        if (!has_inverse) throw std::invalid_argument("cyclic_reduction: missing inverse");
    }

    std::set<std::vector<size_t>> subgroups;
    for (size_t gidx = 0; gidx < n; ++gidx) {
        std::set<size_t> members{identity};
        size_t cur = gidx;
        while (!members.count(cur)) {
            members.insert(cur);
            cur = composition[cur][gidx];
        }
        subgroups.emplace(members.begin(), members.end());
    }

    CyclicReductionVerdict out;
    for (const auto& sub : subgroups) {
        const CyclicReductionVerdict v = classify_subgroup(sub);
        out.canonical = out.canonical && v.canonical;
        out.terminal = out.terminal && v.terminal;
    }
    return out;
}

}  // namespace cographic
