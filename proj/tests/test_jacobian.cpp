#include <doctest.h>

#include "cographic/jacobian.hpp"

#include <map>

using namespace cographic;

namespace {

StableDualGraph make_dual(std::vector<std::string> verts,
                          std::vector<std::tuple<std::string, std::string, std::string>> edges,
                          std::map<std::string, long> genus) {
    StableDualGraph d;
    d.graph = Graph(std::move(verts), edges);
    d.genus.assign(static_cast<size_t>(d.graph.num_vertices()), Int(0));
    for (const auto& [name, g] : genus)
        d.genus[static_cast<size_t>(d.graph.vertex_index(name))] = g;
    return d;
}

// Two vertices joined by three parallel edges ("dolphin"), both genus 1.
StableDualGraph dolphin() {
    return make_dual({"a", "b"},
                     {{"e1", "a", "b"}, {"e2", "a", "b"}, {"e3", "a", "b"}},
                     {{"a", 1}, {"b", 1}});
}

}  // namespace

TEST_CASE("total genus and stability") {
    const StableDualGraph d = dolphin();
    CHECK(total_genus(d) == 2 + 2);
    validate_stability(d);

    // Genus-0 vertex of valence 2 is unstable.
    StableDualGraph bad = make_dual({"a", "b"}, {{"e1", "a", "b"}, {"e2", "a", "b"}},
                                    {{"a", 2}, {"b", 0}});
    CHECK_THROWS_AS(validate_stability(bad), std::invalid_argument);

    // A loop counts twice toward valence.
    StableDualGraph loops = make_dual({"a", "b"},
                                      {{"e1", "a", "b"}, {"l", "b", "b"}},
                                      {{"a", 3}, {"b", 0}});
    validate_stability(loops);
}

TEST_CASE("gamma_of extremes") {
    const StableDualGraph d = dolphin();
    SheafDatum all;
    all.sigma = {"e1", "e2", "e3"};
    CHECK(gamma_of(d, all) == d.graph);

    SheafDatum none;
    const Graph pt = gamma_of(d, none);
    CHECK(pt.num_vertices() == 1);
    CHECK(pt.num_edges() == 0);
    CHECK(pt.b1() == 0);
}

TEST_CASE("gamma_of contraction") {
    const StableDualGraph d = dolphin();
    SheafDatum two;
    two.sigma = {"e1", "e2"};
    const Graph gamma = gamma_of(d, two);
    CHECK(gamma.num_vertices() == 1);
    CHECK(gamma.num_edges() == 2);
    CHECK(gamma.num_loops() == 2);  // contracting e3 turns the others into loops
    CHECK(gamma.b1() == 2);
}

TEST_CASE("genus bookkeeping under contraction") {
    // A loop outside sigma is smoothed: deleted with a genus bump.
    StableDualGraph d = make_dual({"a"}, {{"l1", "a", "a"}, {"l2", "a", "a"}}, {{"a", 1}});
    const StableDualGraph out = contract_outside_sigma(d, {"l1"});
    CHECK(out.graph.num_edges() == 1);
    CHECK(out.graph.num_loops() == 1);
    REQUIRE(out.genus.size() == 1);
    CHECK(out.genus[0] == 2);  // 1 + smoothed loop
    CHECK(total_genus(out) == total_genus(d));

    // Merging vertices adds genera; e1 becomes a loop of the merged vertex.
    StableDualGraph d2 = make_dual({"a", "b", "c"},
                                   {{"e1", "a", "b"}, {"e2", "b", "c"}, {"e3", "c", "a"}},
                                   {{"a", 1}, {"b", 2}, {"c", 3}});
    const StableDualGraph merged = contract_outside_sigma(d2, {"e1"});
    CHECK(merged.graph.num_vertices() == 1);
    CHECK(merged.graph.num_loops() == 1);
    CHECK(merged.genus[0] == 6);
    CHECK(total_genus(merged) == total_genus(d2));

    // Smoothing a whole cycle of nodes adds handle genus: sigma empty on the
    // triangle collapses it to a genus-7 point (6 + b1 = 1).
    const StableDualGraph collapsed = contract_outside_sigma(d2, {});
    CHECK(collapsed.graph.num_vertices() == 1);
    CHECK(collapsed.graph.num_edges() == 0);
    CHECK(collapsed.genus[0] == 7);
}

TEST_CASE("local report") {
    // Sigma empty with trivial stabilizer at genus >= 4 is a smooth point.
    StableDualGraph d = make_dual({"a", "b"},
                                  {{"e1", "a", "b"}, {"e2", "a", "b"}, {"e3", "a", "b"}},
                                  {{"a", 1}, {"b", 1}});
    REQUIRE(total_genus(d) == 4);
    SheafDatum sheaf;
    sheaf.stab_trivial = true;
    const LocalStructureReport rep = local_report(d, sheaf);
    REQUIRE(rep.smooth.has_value());
    CHECK(*rep.smooth);
    CHECK(rep.finite_quotient_locus);
    CHECK(rep.toric_factor.smooth);

    // Gamma = C_2: not tree-like, not a finite-quotient point.
    StableDualGraph dc2 = make_dual({"a", "b"}, {{"e1", "a", "b"}, {"e2", "a", "b"}},
                                    {{"a", 2}, {"b", 2}});
    REQUIRE(total_genus(dc2) == 5);
    SheafDatum two;
    two.sigma = {"e1", "e2"};
    two.stab_trivial = true;
    const LocalStructureReport rep2 = local_report(dc2, two);
    CHECK(rep2.gamma.b1() == 1);
    CHECK(rep2.gamma.num_vertices() == 2);
    CHECK_FALSE(rep2.finite_quotient_locus);
    REQUIRE(rep2.smooth.has_value());
    CHECK_FALSE(*rep2.smooth);
    CHECK(rep2.toric_factor.gorenstein);
    CHECK(rep2.toric_factor.terminal);

    // One vertex with two sigma-loops: finite quotient locus, toric factor A^4.
    StableDualGraph dl = make_dual({"a"}, {{"l1", "a", "a"}, {"l2", "a", "a"}}, {{"a", 2}});
    SheafDatum both;
    both.sigma = {"l1", "l2"};
    const LocalStructureReport rep3 = local_report(dl, both);
    CHECK(rep3.finite_quotient_locus);
    CHECK(rep3.toric_factor.smooth);
    CHECK(rep3.toric_factor.dimension == 4);

    // Below genus 4 or without the flag the smooth verdict is absent.
    SheafDatum noflag;
    noflag.sigma = {"e1"};
    CHECK_FALSE(local_report(d, noflag).smooth.has_value());
}

TEST_CASE("local report requires stability") {
    StableDualGraph bad = make_dual({"a", "b"}, {{"e1", "a", "b"}, {"e2", "a", "b"}},
                                    {{"a", 2}, {"b", 0}});
    CHECK_THROWS_AS(local_report(bad, SheafDatum{}), std::invalid_argument);
}

TEST_CASE("tail splitting: smooth elliptic tail") {
    // Tail = genus-1 vertex t hanging off a genus-3 core by the node p.
    StableDualGraph d = make_dual({"core", "t"}, {{"p", "core", "t"}}, {{"core", 3}, {"t", 1}});
    SheafDatum sheaf;  // I locally free everywhere
    const TailSplitting split = tail_splitting(d, sheaf, {"t"}, false);
    CHECK(split.tail_ring == TailSplitting::TailRing::base_field);
    CHECK_FALSE(split.has_tp_factor);
    CHECK(split.dim_total == 0);
    CHECK(split.dim_total == split.dim_complement + split.dim_tail);

    // Same configuration but p in sigma: a k[T_p] factor appears.
    SheafDatum at_p;
    at_p.sigma = {"p"};
    const TailSplitting split2 = tail_splitting(d, sheaf = at_p, {"t"}, true);
    CHECK(split2.has_tp_factor);
    CHECK(split2.dim_total == split2.dim_complement + split2.dim_tail + 1);
}

TEST_CASE("tail splitting: nodal tail with sigma node") {
    // Rational nodal tail: genus-0 vertex with a loop q, attached at p; both
    // p and q in sigma.
    StableDualGraph d = make_dual({"core", "t"}, {{"p", "core", "t"}, {"q", "t", "t"}},
                                  {{"core", 3}, {"t", 0}});
    validate_stability(d);
    SheafDatum sheaf;
    sheaf.sigma = {"p", "q"};
    const TailSplitting split = tail_splitting(d, sheaf, {"t"}, true);
    CHECK(split.tail_ring == TailSplitting::TailRing::polynomial_xy);
    CHECK(split.has_tp_factor);
    CHECK(split.dim_tail == 2);
    CHECK(split.dim_total == split.dim_complement + split.dim_tail + 1);

    // Splitting dimensions agree with the full analysis.
    CHECK(analyze(split.gamma_total).dimension == split.dim_total);
}

TEST_CASE("tail splitting rejects bad tails") {
    StableDualGraph d = make_dual({"a", "b"},
                                  {{"e1", "a", "b"}, {"e2", "a", "b"}, {"e3", "a", "b"}},
                                  {{"a", 1}, {"b", 1}});
    SheafDatum sheaf;
    sheaf.sigma = {"e1"};
    // Three crossing edges.
    CHECK_THROWS_AS(tail_splitting(d, sheaf, {"b"}, false), std::invalid_argument);

    // p_in_sigma must match the sigma set.
    StableDualGraph d2 = make_dual({"core", "t"}, {{"p", "core", "t"}}, {{"core", 3}, {"t", 1}});
    CHECK_THROWS_AS(tail_splitting(d2, SheafDatum{}, {"t"}, true), std::invalid_argument);
}

TEST_CASE("elliptic tail ages satisfy the canonical bound") {
    // The module's headline regression: every permitted combination passes.
    using MV = MatrixVariant;
    using TC = TailCase;
    struct Combo {
        int n;
        MV v;
        TC c;
    };
    std::vector<Combo> combos{
        {2, MV::first, TC::smooth_tail},    {3, MV::first, TC::smooth_tail},
        {3, MV::second, TC::smooth_tail},   {4, MV::first, TC::smooth_tail},
        {4, MV::second, TC::smooth_tail},   {6, MV::first, TC::smooth_tail},
        {6, MV::second, TC::smooth_tail},   {2, MV::first, TC::nodal_locally_free},
        {2, MV::first, TC::nodal_not_locally_free}};
    for (const Combo& c : combos) {
        const EllipticTailAges res = elliptic_tail_ages(c.n, c.v, c.c);
        CHECK(res.satisfies_rt);
        CHECK(res.min_age >= 1);
    }
}

TEST_CASE("elliptic tail ages match hand computations") {
    const EllipticTailAges n2 = elliptic_tail_ages(2, MatrixVariant::first, TailCase::smooth_tail);
    CHECK(n2.min_age == 1);

    // n = 3 first variant: ages 5/3 and 4/3.
    const EllipticTailAges n3 = elliptic_tail_ages(3, MatrixVariant::first, TailCase::smooth_tail);
    CHECK(n3.min_age == make_rat(4, 3));

    const EllipticTailAges nodal =
        elliptic_tail_ages(2, MatrixVariant::first, TailCase::nodal_not_locally_free);
    CHECK(nodal.min_age == 1);
}

TEST_CASE("elliptic tail ages reject invalid combinations") {
    CHECK_THROWS_AS(elliptic_tail_ages(5, MatrixVariant::first, TailCase::smooth_tail),
                    std::invalid_argument);
    CHECK_THROWS_AS(elliptic_tail_ages(3, MatrixVariant::first, TailCase::nodal_locally_free),
                    std::invalid_argument);
    CHECK_THROWS_AS(elliptic_tail_ages(2, MatrixVariant::second, TailCase::smooth_tail),
                    std::invalid_argument);
}
