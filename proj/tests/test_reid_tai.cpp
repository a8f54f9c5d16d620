#include <doctest.h>

#include "cographic/reid_tai.hpp"

#include "cographic/cographic.hpp"

using namespace cographic;

namespace {

IntVec iv(std::initializer_list<long> xs) {
    IntVec v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (long x : xs) v(i++) = x;
    return v;
}

RatVec rv(std::initializer_list<long> xs) {
    RatVec v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (long x : xs) v(i++) = x;
    return v;
}

Cone first_orthant(Eigen::Index n) {
    std::vector<RatVec> gens;
    for (Eigen::Index i = 0; i < n; ++i) {
        RatVec e = RatVec::Zero(n);
        e(i) = 1;
        gens.push_back(e);
    }
    return Cone::from_generators(n, gens);
}

// All nontrivial powers of the generator as element specs.
std::vector<GroupElementSpec> cyclic_elements(const CyclicAction& act) {
    std::vector<GroupElementSpec> out;
    for (Int j = 1; j < act.r; ++j) out.push_back(group_element(act.r, IntVec(j * act.weights)));
    return out;
}

bool action_has_pseudo_reflection(const CyclicAction& act) {
    for (const GroupElementSpec& g : cyclic_elements(act)) {
        if (is_identity(g)) continue;
        if (is_pseudo_reflection(g)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("age evaluations") {
    CHECK(age(group_element(2, iv({1, 1})), 1) == 1);
    CHECK(age(group_element(3, iv({1, 1})), 1) == make_rat(2, 3));
    CHECK(age(group_element(3, iv({1, 1})), 2) == make_rat(4, 3));
    CHECK(age(group_element(6, iv({1, 2})), 1) == make_rat(1, 2));
    CHECK_THROWS_AS(age(group_element(4, iv({1, 0})), 2), std::invalid_argument);
}

TEST_CASE("age inverse identity") {
    // age(g) + age(g^-1) = n - #(zero exponents), for any unit.
    for (long r = 2; r <= 6; ++r) {
        for (long a = 0; a < r; ++a) {
            for (long b = 0; b < r; ++b) {
                const GroupElementSpec g = group_element(r, iv({a, b}));
                if (is_identity(g)) continue;
                const GroupElementSpec ginv = group_element(r, iv({(r - a) % r, (r - b) % r}));
                int zeros = (a == 0) + (b == 0);
                for (long k = 1; k < r; ++k) {
                    Int gc;
                    Int kk = k, rr = r;
                    mpz_gcd(gc.get_mpz_t(), kk.get_mpz_t(), rr.get_mpz_t());
                    if (gc != 1) continue;
                    CHECK(age(g, k) + age(ginv, k) == 2 - zeros);
                }
            }
        }
    }
}

TEST_CASE("pseudo reflections") {
    CHECK(is_pseudo_reflection(group_element(2, iv({1, 0, 0}))));
    CHECK_FALSE(is_pseudo_reflection(group_element(2, iv({1, 1, 0}))));
    CHECK(is_pseudo_reflection(group_element(4, iv({2, 0}))));
    CHECK_THROWS_AS(is_pseudo_reflection(group_element(3, iv({0, 0}))), std::invalid_argument);
}

TEST_CASE("classify smooth quotients") {
    // Z_2 acting by -1 on both coordinates: Gorenstein, canonical, not terminal.
    const auto z2 = classify_smooth_quotient({group_element(2, iv({1, 1}))}, true);
    CHECK(z2.gorenstein);
    CHECK(z2.canonical);
    CHECK_FALSE(z2.terminal);
    CHECK(z2.iff_semantics);

    // Z_3 acting by (zeta, zeta): age 2/3 at k = 1.
    const auto z3 = classify_smooth_quotient(cyclic_elements(cyclic_action(3, iv({1, 1}))), true);
    CHECK_FALSE(z3.canonical);
    CHECK_FALSE(z3.gorenstein);

    // Trivial group: empty quantifier.
    const auto triv = classify_smooth_quotient({}, true);
    CHECK(triv.gorenstein);
    CHECK(triv.canonical);
    CHECK(triv.terminal);

    // Identity entries are skipped.
    const auto with_id = classify_smooth_quotient({group_element(1, iv({0, 0}))}, true);
    CHECK(with_id.terminal);
}

TEST_CASE("extend_lattice") {
    // Trivial weights give the standard lattice.
    const Lattice triv = extend_lattice(2, cyclic_action(3, iv({0, 0})));
    CHECK(triv.contains(rv({1, 0})));
    CHECK(triv.index_of_sublattice(Lattice::standard(2)) == 1);

    // n=2, r=2, lambda=(1,1): contains (e1+e2)/2 with index 2.
    const Lattice half = extend_lattice(2, cyclic_action(2, iv({1, 1})));
    RatVec mid(2);
    mid << make_rat(1, 2), make_rat(1, 2);
    CHECK(half.contains(mid));
    CHECK_FALSE(half.contains(rv({1, 0}) / 2));
    CHECK(half.index_of_sublattice(Lattice::standard(2)) == 2);

    // n=3, r=2, lambda=(1,0,0): Z<e1/2, e2, e3>.
    const Lattice ext = extend_lattice(3, cyclic_action(2, iv({1, 0, 0})));
    RatVec e1half(3);
    e1half << make_rat(1, 2), 0, 0;
    CHECK(ext.contains(e1half));
    CHECK(ext.contains(rv({0, 1, 0})));
    CHECK(ext.index_of_sublattice(Lattice::standard(3)) == 2);
}

TEST_CASE("extend_lattice index formula") {
    // [N' : N] = r / gcd(r, lambda_1, ..., lambda_n).
    for (long r = 1; r <= 6; ++r) {
        for (long a = 0; a < r; ++a) {
            for (long b = 0; b < r; ++b) {
                const Lattice ext = extend_lattice(2, cyclic_action(r, iv({a, b})));
                Int g = r;
                Int aa = a, bb = b;
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), aa.get_mpz_t());
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), bb.get_mpz_t());
                CHECK(ext.index_of_sublattice(Lattice::standard(2)) == Int(r) / g);
            }
        }
    }
}

TEST_CASE("cyclic toric quotient of the appendix example") {
    const Cone sigma =
        Cone::from_generators(3, {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1}), rv({1, 1, -1})});
    CHECK(classify_cone(sigma, Lattice::standard(3)).gorenstein);
    const CyclicToricVerdict v = classify_cyclic_toric_quotient(sigma, cyclic_action(2, iv({1, 0, 0})));
    CHECK_FALSE(v.q_gorenstein);
    CHECK_FALSE(v.canonical);
    CHECK(v.gorenstein_sufficient == TriState::unknown);
}

TEST_CASE("cyclic toric quotient of the plane") {
    const Cone quad = first_orthant(2);
    const CyclicToricVerdict v = classify_cyclic_toric_quotient(quad, cyclic_action(2, iv({1, 1})));
    CHECK(v.q_gorenstein);
    CHECK(v.canonical);
    CHECK_FALSE(v.terminal);
    CHECK(v.gorenstein_sufficient == TriState::yes);  // lambda(m) = 2, divisible by r = 2

    // Trivial action reproduces classify_cone.
    const CyclicToricVerdict triv = classify_cyclic_toric_quotient(quad, cyclic_action(1, iv({0, 0})));
    const ConeClassification plain = classify_cone(quad, Lattice::standard(2));
    CHECK(triv.q_gorenstein == plain.q_gorenstein);
    CHECK(triv.canonical == plain.canonical);
    CHECK(triv.terminal == plain.terminal);
    CHECK(triv.gorenstein_sufficient == TriState::yes);
}

TEST_CASE("two-path consistency on a sample") {
    // Smooth-quotient Reid-Tai agrees with the lattice-extension route on the
    // first orthant (the appendix's two descriptions of the same quotient).
    for (long r = 2; r <= 5; ++r) {
        for (long a = 0; a < r; ++a) {
            for (long b = 0; b < r; ++b) {
                const CyclicAction act = cyclic_action(r, iv({a, b}));
                if (action_has_pseudo_reflection(act)) continue;
                const auto smooth = classify_smooth_quotient(cyclic_elements(act), true);
                const auto toric = classify_cyclic_toric_quotient(first_orthant(2), act);
                CHECK(toric.q_gorenstein);
                CHECK(smooth.canonical == toric.canonical);
                CHECK(smooth.terminal == toric.terminal);
                CHECK(smooth.gorenstein == (toric.gorenstein_sufficient == TriState::yes));
            }
        }
    }
}

TEST_CASE("descent lemma on the cographic projection") {
    // Gamma = C_2: sigma_dual in rank 3 maps onto the T-coordinate orthant by
    // forgetting the cycle coordinate; primitives go to primitives.
    std::vector<std::string> verts{"v1", "v2"};
    std::vector<std::tuple<std::string, std::string, std::string>> edges{{"e1", "v1", "v2"},
                                                                         {"e2", "v2", "v1"}};
    const Graph c2(verts, edges);
    const CographicCone cg = cographic_cone(c2);
    REQUIRE(cg.rank == 3);

    // In the oriented-cycle-lattice coordinates the first |E| basis vectors
    // are the doubles, so the projection onto the T-cone drops the rest.
    IntMat h = IntMat::Zero(2, 3);
    h(0, 0) = 1;
    h(1, 1) = 1;
    const DescentResult res = check_descent(cg.sigma_dual, first_orthant(2), h,
                                            cyclic_action(1, IntVec::Zero(3)),
                                            cyclic_action(1, IntVec::Zero(2)));
    CHECK(res.hypotheses_hold);
    REQUIRE(res.conclusion.has_value());
    CHECK(res.conclusion->q_gorenstein);
    CHECK(res.conclusion->canonical);
}

TEST_CASE("descent with identity map holds iff the cone is smooth") {
    const Cone quad = first_orthant(2);
    const IntMat id = IntMat::Identity(2, 2);
    const CyclicAction triv = cyclic_action(1, IntVec::Zero(2));
    CHECK(check_descent(quad, quad, id, triv, triv).hypotheses_hold);

    const Cone a1 = Cone::from_generators(2, {rv({1, 0}), rv({1, 2})});
    CHECK_FALSE(check_descent(a1, a1, id, triv, triv).hypotheses_hold);
}

TEST_CASE("descent fails when a ray collapses to a non-ray") {
    // Map the quadrant onto a line inside the quadrant: images of rays agree,
    // but (1,1) direction is not a ray of the target.
    const Cone quad = first_orthant(2);
    IntMat collapse(2, 2);
    collapse << 1, 1, 1, 1;  // both rays map to the diagonal
    const CyclicAction triv = cyclic_action(1, IntVec::Zero(2));
    const DescentResult res = check_descent(quad, quad, collapse, triv, triv);
    CHECK_FALSE(res.hypotheses_hold);
    CHECK_FALSE(res.conclusion.has_value());
}

TEST_CASE("descent checks equivariance") {
    const Cone quad = first_orthant(2);
    const IntMat id = IntMat::Identity(2, 2);
    // Non-matching weights mod r.
    const DescentResult res =
        check_descent(quad, quad, id, cyclic_action(3, iv({1, 1})), cyclic_action(3, iv({1, 2})));
    CHECK_FALSE(res.hypotheses_hold);
}

TEST_CASE("cyclic reduction for the Klein four group") {
    // Z_2 x Z_2 acting on A^2 by all sign patterns: the element list is
    // (id, (-1,1), (1,-1), (-1,-1)) with the xor table.
    std::vector<GroupElementSpec> elems{
        group_element(2, iv({0, 0})), group_element(2, iv({1, 0})),
        group_element(2, iv({0, 1})), group_element(2, iv({1, 1}))};
    std::vector<std::vector<size_t>> table(4, std::vector<size_t>(4));
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) table[i][j] = i ^ j;

    int calls = 0;
    const auto verdict = cyclic_reduction(4, table, [&](const std::vector<size_t>& sub) {
        ++calls;
        std::vector<GroupElementSpec> members;
        bool all_reflections = true;
        for (size_t idx : sub) {
            if (is_identity(elems[idx])) continue;
            members.push_back(elems[idx]);
            all_reflections = all_reflections && is_pseudo_reflection(elems[idx]);
        }
        // A cyclic group generated by a reflection has a smooth quotient; the
        // age bound is only sufficient there and cannot decide it.
        if (!members.empty() && all_reflections) return CyclicReductionVerdict{true, true};
        const auto v = classify_smooth_quotient(members, true);
        return CyclicReductionVerdict{v.canonical, v.terminal};
    });
    // Subgroups: trivial plus the three order-2 ones.
    CHECK(calls == 4);
    CHECK(verdict.canonical);       // the sign-change element has age 1; reflections give A^2 back
    CHECK_FALSE(verdict.terminal);  // age exactly 1 on diag(-1,-1)
}

TEST_CASE("cyclic reduction rejects non-groups") {
    std::vector<std::vector<size_t>> bad{{0, 1}, {1, 0}};
    bad[1][1] = 5;  // out of range
    CHECK_THROWS_AS(cyclic_reduction(2, bad, [](const std::vector<size_t>&) {
                        return CyclicReductionVerdict{};
                    }),
                    std::invalid_argument);

    // No identity.
    std::vector<std::vector<size_t>> noid{{0, 0}, {0, 0}};
    CHECK_THROWS_AS(cyclic_reduction(2, noid, [](const std::vector<size_t>&) {
                        return CyclicReductionVerdict{};
                    }),
                    std::invalid_argument);
}

TEST_CASE("cyclic reduction on a cyclic group is the plain conjunction") {
    // Z_4 generated by diag(i, i): subgroups {e}, {e, g^2}, full.
    std::vector<GroupElementSpec> elems;
    for (long j = 0; j < 4; ++j) elems.push_back(group_element(4, iv({j, j})));
    std::vector<std::vector<size_t>> table(4, std::vector<size_t>(4));
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) table[i][j] = (i + j) % 4;
    int calls = 0;
    const auto verdict = cyclic_reduction(4, table, [&](const std::vector<size_t>& sub) {
        ++calls;
        std::vector<GroupElementSpec> members;
        for (size_t idx : sub)
            if (!is_identity(elems[idx])) members.push_back(elems[idx]);
        const auto v = classify_smooth_quotient(members, true);
        return CyclicReductionVerdict{v.canonical, v.terminal};
    });
    CHECK(calls == 3);
    // diag(i, i) has age 1/2 at k=1: not canonical.
    CHECK_FALSE(verdict.canonical);

    // And with the identity-only variant the verdict is unchanged by the
    // trivial subgroup (its callback returns all-true).
    CHECK_FALSE(verdict.terminal);
}
