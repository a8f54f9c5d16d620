// Command-line front end: parse graph / dual-graph / cone inputs, dispatch
// analyses, emit text or JSON reports.
//
// Exit codes: 0 success, 1 input error, 2 internal-consistency failure.

#include <CLI11.hpp>

#include <iostream>

#include "cographic/io.hpp"

namespace {

using namespace cographic;

int report_format(const std::string& format, const nlohmann::json& j, const std::string& text) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
    return 0;
}

int cmd_analyze(const std::string& path, const std::string& format, long degree_bound) {
    const Graph g = graph_from_text(read_file(path), path);
    const SingularityReport rep = analyze(g);
    const RingPresentation pres = presentation(g);

    // Degree-truncated cross-check of the semigroup against the torus
    // invariants; a mismatch is an internal defect.
    if (degree_bound > 0 &&
        invariant_ring_oracle(g, degree_bound) != semigroup_elements_up_to_degree(g, degree_bound))
        throw consistency_error("invariant-ring truncation disagrees with the semigroup");

    nlohmann::json j = report_to_json(rep, &pres);
    std::string text = report_to_text(rep, &pres);
    if (degree_bound > 0) {
        j["invariant_oracle_check"] = {{"degree_bound", degree_bound}, {"status", "ok"}};
        text += "invariant oracle check:  ok (degree " + std::to_string(degree_bound) + ")\n";
    }
    return report_format(format, j, text);
}

int cmd_presentation(const std::string& path, const std::string& format) {
    const Graph g = graph_from_text(read_file(path), path);
    const RingPresentation pres = presentation(g);
    if (format == "json") {
        nlohmann::json j;
        std::vector<std::string> gens;
        for (const auto& x : pres.x) gens.push_back(x.name);
        for (const auto& t : pres.t) gens.push_back(t.name);
        j["generators"] = gens;
        std::vector<std::string> rels;
        for (const auto& r : pres.relations) rels.push_back(r.display);
        j["relations"] = rels;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "generators:";
        for (const auto& x : pres.x) std::cout << " " << x.name;
        for (const auto& t : pres.t) std::cout << " " << t.name;
        std::cout << "\nrelations:\n";
        for (const auto& r : pres.relations) std::cout << "  " << r.display << "\n";
    }
    return 0;
}

int cmd_hilbert_basis(const std::string& path, const std::string& format) {
    const Graph g = graph_from_text(read_file(path), path);
    const CographicCone cg = cographic_cone(g);
    const auto hb = hilbert_basis(cg.sigma, Lattice::standard(cg.rank));

    // Print in oriented-edge coefficients: forward coefficients per edge,
    // then backward.
    std::vector<std::vector<std::string>> rows;
    for (const RatVec& h : hb) {
        const IntVec chain = cg.pairing_rows * to_int_vec(h);
        std::vector<std::string> row;
        for (Eigen::Index i = 0; i < chain.size(); ++i) row.push_back(chain(i).get_str());
        rows.push_back(row);
    }
    if (format == "json") {
        nlohmann::json j;
        std::vector<std::string> labels;
        for (Eigen::Index e = 0; e < g.num_edges(); ++e) labels.push_back(g.edge(e).id + "->");
        for (Eigen::Index e = 0; e < g.num_edges(); ++e) labels.push_back(g.edge(e).id + "<-");
        j["coordinates"] = labels;
        j["elements"] = rows;
        j["count"] = rows.size();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "hilbert basis of C(graph), " << rows.size() << " elements\n";
        std::cout << "coordinates:";
        for (Eigen::Index e = 0; e < g.num_edges(); ++e) std::cout << " " << g.edge(e).id << "->";
        for (Eigen::Index e = 0; e < g.num_edges(); ++e) std::cout << " " << g.edge(e).id << "<-";
        std::cout << "\n";
        for (const auto& row : rows) {
            for (const auto& v : row) std::cout << " " << v;
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_reid_tai(const std::string& path, const std::string& format) {
    nlohmann::json in;
    try {
        in = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    if (!in.contains("cone_generators") || !in.contains("r") || !in.contains("lambda"))
        throw std::invalid_argument(path + ": need cone_generators, r, lambda");
    const auto& gens_j = in["cone_generators"];
    if (gens_j.empty()) throw std::invalid_argument(path + ": empty generator list");
    const Eigen::Index n = static_cast<Eigen::Index>(gens_j[0].size());
    std::vector<RatVec> gens;
    for (const auto& row : gens_j) {
        if (static_cast<Eigen::Index>(row.size()) != n)
            throw std::invalid_argument(path + ": ragged generator matrix");
        RatVec v(n);
        for (Eigen::Index i = 0; i < n; ++i) v(i) = Rat(row[static_cast<size_t>(i)].get<long>());
        gens.push_back(v);
    }
    IntVec lambda(static_cast<Eigen::Index>(in["lambda"].size()));
    for (Eigen::Index i = 0; i < lambda.size(); ++i) lambda(i) = Int(in["lambda"][static_cast<size_t>(i)].get<long>());
    if (lambda.size() != n) throw std::invalid_argument(path + ": lambda dimension mismatch");

    const Cone c = Cone::from_generators(n, gens);
    const CyclicAction act = cyclic_action(Int(in["r"].get<long>()), lambda);
    const CyclicToricVerdict v = classify_cyclic_toric_quotient(c, act);
    return report_format(format, cyclic_verdict_to_json(v), cyclic_verdict_to_text(v));
}

int cmd_jacobian(const std::string& path, const std::string& format, const std::string& sigma_flag,
                 const std::string& tail_flag) {
    DualGraphFile file = dual_graph_from_text(read_file(path), path);
    if (!sigma_flag.empty()) {
        file.sigma.clear();
        std::istringstream in(sigma_flag);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            file.datum.graph.edge_index(tok);  // validity
            file.sigma.insert(tok);
        }
    }
    SheafDatum sheaf;
    sheaf.sigma = file.sigma;
    const LocalStructureReport rep = local_report(file.datum, sheaf);

    nlohmann::json j = local_report_to_json(rep);
    std::string text = local_report_to_text(rep);

    if (!tail_flag.empty()) {
        std::set<std::string> tail;
        std::istringstream in(tail_flag);
        std::string tok;
        while (std::getline(in, tok, ',')) tail.insert(tok);
        // p is the unique crossing edge; its sigma membership decides the case.
        bool p_in_sigma = false;
        for (Eigen::Index e = 0; e < file.datum.graph.num_edges(); ++e) {
            const auto& ed = file.datum.graph.edge(e);
            const bool s_in = tail.count(file.datum.graph.vertex_name(ed.src)) > 0;
            const bool t_in = tail.count(file.datum.graph.vertex_name(ed.dst)) > 0;
            if (s_in != t_in) p_in_sigma = file.sigma.count(ed.id) > 0;
        }
        const TailSplitting split = tail_splitting(file.datum, sheaf, tail, p_in_sigma);
        nlohmann::json sj;
        sj["tail_ring"] =
            split.tail_ring == TailSplitting::TailRing::polynomial_xy ? "k[X,Y]" : "k";
        sj["has_tp_factor"] = split.has_tp_factor;
        sj["dim_total"] = split.dim_total;
        sj["dim_complement"] = split.dim_complement;
        sj["dim_tail"] = split.dim_tail;
        j["tail_splitting"] = sj;
        std::ostringstream ts;
        ts << "tail splitting:\n";
        ts << "  tail ring:            "
           << (split.tail_ring == TailSplitting::TailRing::polynomial_xy ? "k[X,Y]" : "k") << "\n";
        ts << "  T_p factor:           " << (split.has_tp_factor ? "yes" : "no") << "\n";
        ts << "  dimensions:           " << split.dim_total << " = " << split.dim_complement
           << " + " << split.dim_tail << (split.has_tp_factor ? " + 1" : "") << "\n";
        text += ts.str();
    }
    return report_format(format, j, text);
}

struct GoldenCase {
    std::string name;
    Graph graph;
    Eigen::Index dimension, tangent;
    Int multiplicity;
};

Graph cycle_graph(int n) {
    std::vector<std::string> verts;
    std::vector<std::tuple<std::string, std::string, std::string>> edges;
    for (int i = 1; i <= n; ++i) verts.push_back("v" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        edges.emplace_back("e" + std::to_string(i), "v" + std::to_string(i),
                           "v" + std::to_string(i % n + 1));
    return Graph(verts, edges);
}

Graph thick_edge_graph(int n) {
    std::vector<std::tuple<std::string, std::string, std::string>> edges;
    for (int i = 1; i <= n; ++i) edges.emplace_back("e" + std::to_string(i), "u", "v");
    return Graph({"u", "v"}, edges);
}

int cmd_selftest() {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    };

    Int binom = 1;
    for (int n = 2; n <= 6; ++n) {
        const SingularityReport rep = analyze(cycle_graph(n));
        check("C_" + std::to_string(n),
              rep.dimension == n + 1 && rep.tangent_dimension == n + 2 && rep.multiplicity == 2 &&
                  rep.gorenstein && rep.terminal && !rep.smooth);
    }
    for (int n = 2; n <= 5; ++n) {
        const SingularityReport rep = analyze(thick_edge_graph(n));
        // binom(2(n-1), n-1)
        binom = 1;
        for (int k = 1; k <= n - 1; ++k) binom = binom * (n - 1 + k) / k;
        check("I_" + std::to_string(n),
              rep.dimension == 2 * n - 1 && rep.tangent_dimension == n * n &&
                  rep.multiplicity == binom && rep.gorenstein && rep.terminal);
    }
    {
        // The appendix counterexample: Gorenstein cone whose Z_2 quotient is
        // not Q-Gorenstein.
        std::vector<RatVec> gens;
        RatVec v(3);
        v << 1, 0, 0; gens.push_back(v);
        v << 0, 1, 0; gens.push_back(v);
        v << 0, 0, 1; gens.push_back(v);
        v << 1, 1, -1; gens.push_back(v);
        const Cone sigma = Cone::from_generators(3, gens);
        const ConeClassification plain = classify_cone(sigma, Lattice::standard(3));
        IntVec lambda(3);
        lambda << 1, 0, 0;
        const CyclicToricVerdict quot = classify_cyclic_toric_quotient(sigma, cyclic_action(2, lambda));
        check("quotient counterexample", plain.gorenstein && !quot.q_gorenstein);
    }
    std::cout << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cographic toric ring toolkit"};
    app.require_subcommand(1);

    std::string input, format = "text", sigma_flag, tail_flag;
    long degree_bound = 4;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input) sub->add_option("input", input, "input file")->required();
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "singularity dossier of the cographic variety");
    add_common(analyze_cmd, true);
    auto* pres_cmd = app.add_subcommand("presentation", "binomial presentation of the cographic ring");
    add_common(pres_cmd, true);
    auto* hb_cmd = app.add_subcommand("hilbert-basis", "minimal generators of the cographic semigroup");
    add_common(hb_cmd, true);
    auto* rt_cmd = app.add_subcommand("reid-tai", "classify a cyclic toric quotient (JSON input)");
    add_common(rt_cmd, true);
    auto* jac_cmd = app.add_subcommand("jacobian", "local structure at a boundary point (dual-graph input)");
    add_common(jac_cmd, true);
    jac_cmd->add_option("--sigma", sigma_flag, "comma-separated sigma edges (overrides the file)");
    jac_cmd->add_option("--tail", tail_flag, "comma-separated tail vertices for the splitting");
    auto* self_cmd = app.add_subcommand("selftest", "run the built-in golden examples");
    add_common(self_cmd, false);
    analyze_cmd->add_option("--degree-bound", degree_bound,
                            "truncation degree for the invariant-ring cross-check (0 disables)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze_cmd)) return cmd_analyze(input, format, degree_bound);
        if (app.got_subcommand(pres_cmd)) return cmd_presentation(input, format);
        if (app.got_subcommand(hb_cmd)) return cmd_hilbert_basis(input, format);
        if (app.got_subcommand(rt_cmd)) return cmd_reid_tai(input, format);
        if (app.got_subcommand(jac_cmd)) return cmd_jacobian(input, format, sigma_flag, tail_flag);
        if (app.got_subcommand(self_cmd)) return cmd_selftest();
    } catch (const cographic::consistency_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
