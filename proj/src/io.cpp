#include "cographic/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace cographic {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

std::string strip_comment(const std::string& line) {
    const auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    out << "vertices:";
    for (const auto& v : g.vertex_names()) out << " " << v;
    out << "\n";
    for (Eigen::Index e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edge(e);
        out << ed.id << ": " << g.vertex_name(ed.src) << " " << g.vertex_name(ed.dst) << "\n";
    }
    return out.str();
}

Graph graph_from_text(const std::string& text, const std::string& filename) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<std::string> vertices;
    std::vector<std::tuple<std::string, std::string, std::string>> edges;
    bool have_vertices = false;
    while (std::getline(in, line)) {
        ++lineno;
        const auto toks = tokens(strip_comment(line));
        if (toks.empty()) continue;
        if (toks[0] == "vertices:") {
            if (have_vertices) throw parse_error(filename, lineno, "duplicate vertices line");
            have_vertices = true;
            vertices.assign(toks.begin() + 1, toks.end());
            continue;
        }
        if (toks[0].size() < 2 || toks[0].back() != ':')
            throw parse_error(filename, lineno, "expected 'edgeID: u v'");
        if (toks.size() != 3) throw parse_error(filename, lineno, "edge line needs two endpoints");
        edges.emplace_back(toks[0].substr(0, toks[0].size() - 1), toks[1], toks[2]);
    }
    if (!have_vertices) throw parse_error(filename, lineno, "missing vertices line");
    try {
        return Graph(vertices, edges);
    } catch (const std::invalid_argument& e) {
        throw parse_error(filename, lineno, e.what());
    }
}

std::string dual_graph_to_text(const StableDualGraph& d, const std::set<std::string>& sigma) {
    std::ostringstream out;
    out << graph_to_text(d.graph);
    for (Eigen::Index v = 0; v < d.graph.num_vertices(); ++v)
        out << "genus: " << d.graph.vertex_name(v) << " " << d.genus[static_cast<size_t>(v)] << "\n";
    out << "sigma:";
    for (const auto& s : sigma) out << " " << s;
    out << "\n";
    return out.str();
}

DualGraphFile dual_graph_from_text(const std::string& text, const std::string& filename) {
    std::istringstream in(text);
    std::string line, graph_part;
    int lineno = 0;
    std::map<std::string, Int> genus;
    std::set<std::string> sigma;
    bool have_sigma = false;
    std::vector<std::pair<int, std::string>> graph_lines;
    while (std::getline(in, line)) {
        ++lineno;
        const auto toks = tokens(strip_comment(line));
        if (toks.empty()) continue;
        if (toks[0] == "genus:") {
            if (toks.size() != 3) throw parse_error(filename, lineno, "expected 'genus: v g'");
            try {
                genus[toks[1]] = Int(toks[2]);
            } catch (const std::invalid_argument&) {
                throw parse_error(filename, lineno, "genus must be an integer");
            }
            continue;
        }
        if (toks[0] == "sigma:") {
            if (have_sigma) throw parse_error(filename, lineno, "duplicate sigma line");
            have_sigma = true;
            sigma.insert(toks.begin() + 1, toks.end());
            continue;
        }
        graph_lines.emplace_back(lineno, strip_comment(line));
    }
    std::ostringstream gtext;
    for (const auto& [no, l] : graph_lines) gtext << l << "\n";
    DualGraphFile out;
    out.datum.graph = graph_from_text(gtext.str(), filename);
    out.datum.genus.assign(static_cast<size_t>(out.datum.graph.num_vertices()), Int(0));
    for (const auto& [name, gv] : genus) {
        try {
            out.datum.genus[static_cast<size_t>(out.datum.graph.vertex_index(name))] = gv;
        } catch (const std::invalid_argument&) {
            throw parse_error(filename, lineno, "genus line names unknown vertex '" + name + "'");
        }
    }
    for (const auto& s : sigma) {
        try {
            out.datum.graph.edge_index(s);
        } catch (const std::invalid_argument&) {
            throw parse_error(filename, lineno, "sigma names unknown edge '" + s + "'");
        }
    }
    out.sigma = std::move(sigma);
    return out;
}

namespace {

nlohmann::json graph_json(const Graph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertex_names();
    nlohmann::json edges = nlohmann::json::array();
    for (Eigen::Index e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edge(e);
        edges.push_back({{"id", ed.id},
                         {"source", g.vertex_name(ed.src)},
                         {"target", g.vertex_name(ed.dst)}});
    }
    j["edges"] = edges;
    return j;
}

nlohmann::json presentation_json(const RingPresentation& pres) {
    nlohmann::json j;
    std::vector<std::string> gens;
    for (const auto& x : pres.x) gens.push_back(x.name);
    for (const auto& t : pres.t) gens.push_back(t.name);
    j["generators"] = gens;
    std::vector<std::string> rels;
    for (const auto& r : pres.relations) rels.push_back(r.display);
    j["relations"] = rels;
    return j;
}

}  // namespace

nlohmann::json report_to_json(const SingularityReport& rep, const RingPresentation* pres) {
    nlohmann::json j;
    j["dimension"] = rep.dimension;
    j["tangent_dimension"] = rep.tangent_dimension;
    j["multiplicity"] = rep.multiplicity.get_str();
    j["extremal_ray_count"] = rep.extremal_ray_count;
    j["smooth"] = rep.smooth;
    j["finite_quotient"] = rep.finite_quotient;
    j["gorenstein"] = rep.gorenstein;
    j["canonical"] = rep.canonical;
    j["terminal"] = rep.terminal;
    j["rational_singularities"] = rep.rational_singularities;
    j["rational_singularities_note"] = "asserted for normal toric varieties, not computed";
    j["affine_factor_exponent"] = rep.affine_factor_exponent;
    j["reduced_graph"] = graph_json(rep.reduced_graph);
    if (pres) j["presentation"] = presentation_json(*pres);
    return j;
}

std::string report_to_text(const SingularityReport& rep, const RingPresentation* pres) {
    std::ostringstream out;
    out << "dimension:              " << rep.dimension << "\n";
    out << "tangent dimension:      " << rep.tangent_dimension << "\n";
    out << "multiplicity:           " << rep.multiplicity.get_str() << "\n";
    out << "extremal rays:          " << rep.extremal_ray_count << "\n";
    out << "smooth:                 " << (rep.smooth ? "yes" : "no") << "\n";
    out << "finite quotient:        " << (rep.finite_quotient ? "yes" : "no") << "\n";
    out << "gorenstein:             " << (rep.gorenstein ? "yes" : "no") << "\n";
    out << "canonical:              " << (rep.canonical ? "yes" : "no") << "\n";
    out << "terminal:               " << (rep.terminal ? "yes" : "no") << "\n";
    out << "rational singularities: yes (asserted, not computed)\n";
    out << "affine factor exponent: " << rep.affine_factor_exponent << "\n";
    out << "reduced graph:          " << rep.reduced_graph.num_vertices() << " vertices, "
        << rep.reduced_graph.num_edges() << " edges\n";
    if (pres) {
        out << "generators:";
        for (const auto& x : pres->x) out << " " << x.name;
        for (const auto& t : pres->t) out << " " << t.name;
        out << "\n";
        out << "relations:\n";
        for (const auto& r : pres->relations) out << "  " << r.display << "\n";
    }
    return out.str();
}

nlohmann::json local_report_to_json(const LocalStructureReport& rep) {
    nlohmann::json j;
    j["gamma"] = graph_json(rep.gamma);
    j["toric_factor"] = report_to_json(rep.toric_factor, nullptr);
    j["finite_quotient_locus"] = rep.finite_quotient_locus;
    if (rep.smooth.has_value()) j["smooth"] = *rep.smooth;
    j["smooth_complement_factor"] = "power series ring (dimension not modeled)";
    return j;
}

std::string local_report_to_text(const LocalStructureReport& rep) {
    std::ostringstream out;
    out << "gamma:                  " << rep.gamma.num_vertices() << " vertices, "
        << rep.gamma.num_edges() << " edges\n";
    out << "finite quotient locus:  " << (rep.finite_quotient_locus ? "yes" : "no") << "\n";
    if (rep.smooth.has_value()) out << "smooth:                 " << (*rep.smooth ? "yes" : "no") << "\n";
    out << "toric factor:\n";
    std::istringstream in(report_to_text(rep.toric_factor, nullptr));
    std::string line;
    while (std::getline(in, line)) out << "  " << line << "\n";
    return out.str();
}

nlohmann::json cyclic_verdict_to_json(const CyclicToricVerdict& v) {
    nlohmann::json j;
    j["q_gorenstein"] = v.q_gorenstein;
    j["canonical"] = v.canonical;
    j["terminal"] = v.terminal;
    switch (v.gorenstein_sufficient) {
        case TriState::yes: j["gorenstein_sufficient"] = "yes"; break;
        case TriState::unknown: j["gorenstein_sufficient"] = "unknown"; break;
        case TriState::not_applicable: j["gorenstein_sufficient"] = "not-applicable"; break;
    }
    return j;
}

std::string cyclic_verdict_to_text(const CyclicToricVerdict& v) {
    std::ostringstream out;
    out << "q-gorenstein:           " << (v.q_gorenstein ? "yes" : "no") << "\n";
    out << "canonical:              " << (v.canonical ? "yes" : "no") << "\n";
    out << "terminal:               " << (v.terminal ? "yes" : "no") << "\n";
    out << "gorenstein sufficient:  ";
    switch (v.gorenstein_sufficient) {
        case TriState::yes: out << "yes"; break;
        case TriState::unknown: out << "unknown"; break;
        case TriState::not_applicable: out << "not-applicable"; break;
    }
    out << "\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace cographic
