#include <doctest.h>

#include "cographic/io.hpp"

using namespace cographic;

namespace {

const char* kTriangle =
    "vertices: a b c\n"
    "e1: a b\n"
    "e2: b c\n"
    "e3: c a\n";

}  // namespace

TEST_CASE("graph text round trip") {
    const Graph g = graph_from_text(kTriangle, "triangle");
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 3);
    const std::string text = graph_to_text(g);
    const Graph h = graph_from_text(text);
    CHECK(g == h);
    CHECK(graph_to_text(h) == text);

    // Loops and comments are accepted.
    const Graph l = graph_from_text("# a loop\nvertices: v\ne: v v\n");
    CHECK(l.num_loops() == 1);
    CHECK(graph_from_text(graph_to_text(l)) == l);
}

TEST_CASE("graph parse errors carry file and line") {
    try {
        graph_from_text("vertices: a b\nbroken line\n", "input.graph");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("input.graph:2") == 0);
    }
    CHECK_THROWS_AS(graph_from_text("e: a b\n", "x"), parse_error);
    CHECK_THROWS_AS(graph_from_text("vertices: a\ne: a b\n", "x"), parse_error);  // unknown endpoint
}

TEST_CASE("dual graph round trip") {
    StableDualGraph d;
    d.graph = graph_from_text(kTriangle);
    d.genus = {Int(1), Int(0), Int(2)};
    const std::set<std::string> sigma{"e1", "e3"};
    const std::string text = dual_graph_to_text(d, sigma);
    const DualGraphFile back = dual_graph_from_text(text, "dual");
    CHECK(back.datum.graph == d.graph);
    CHECK(back.datum.genus == d.genus);
    CHECK(back.sigma == sigma);
    CHECK(dual_graph_to_text(back.datum, back.sigma) == text);
}

TEST_CASE("dual graph parse errors") {
    CHECK_THROWS_AS(dual_graph_from_text("vertices: a\nl: a a\nsigma: nope\n", "d"), parse_error);
    CHECK_THROWS_AS(dual_graph_from_text("vertices: a\nl: a a\ngenus: b 1\nsigma:\n", "d"),
                    parse_error);
}

TEST_CASE("json report round trips byte-identically") {
    const Graph g = graph_from_text(kTriangle);
    const SingularityReport rep = analyze(g);
    const RingPresentation pres = presentation(g);
    const nlohmann::json j = report_to_json(rep, &pres);
    const std::string s = j.dump(2);
    CHECK(nlohmann::json::parse(s).dump(2) == s);

    CHECK(j["dimension"] == 4);
    CHECK(j["tangent_dimension"] == 5);
    CHECK(j["multiplicity"] == "2");  // exact integers as strings
    CHECK(j["gorenstein"] == true);
}

TEST_CASE("text report is stable") {
    const Graph g = graph_from_text(kTriangle);
    const SingularityReport rep = analyze(g);
    const std::string text = report_to_text(rep, nullptr);
    CHECK(text.find("dimension:              4") != std::string::npos);
    CHECK(text.find("terminal:               yes") != std::string::npos);
}

TEST_CASE("cyclic verdict serialization") {
    CyclicToricVerdict v;
    v.q_gorenstein = true;
    v.canonical = true;
    v.terminal = false;
    v.gorenstein_sufficient = TriState::not_applicable;
    const nlohmann::json j = cyclic_verdict_to_json(v);
    CHECK(j["gorenstein_sufficient"] == "not-applicable");
    const std::string text = cyclic_verdict_to_text(v);
    CHECK(text.find("canonical:              yes") != std::string::npos);
}
