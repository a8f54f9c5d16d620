#ifndef COGRAPHIC_IO_HPP
#define COGRAPHIC_IO_HPP

#include <string>

#include "cographic/jacobian.hpp"

#include <json.hpp>

// Text formats for graphs and dual graphs, and report serialization.
//
// Graph file: a "vertices:" header line, then one line per edge
// "edgeID: u v" (u = v for loops). Dual-graph files add "genus: v g" lines
// and a "sigma: e1 e2 ..." line. '#' starts a comment.

namespace cographic {

struct parse_error : std::invalid_argument {
    parse_error(const std::string& file, int line, const std::string& what)
        : std::invalid_argument(file + ":" + std::to_string(line) + ": " + what) {}
};

std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text, const std::string& filename = "<string>");

struct DualGraphFile {
    StableDualGraph datum;
    std::set<std::string> sigma;
};
std::string dual_graph_to_text(const StableDualGraph& d, const std::set<std::string>& sigma);
DualGraphFile dual_graph_from_text(const std::string& text, const std::string& filename = "<string>");

// Reports. JSON uses canonically ordered keys and exact rationals as "p/q"
// strings, so serialize(parse(s)) == s.
nlohmann::json report_to_json(const SingularityReport& rep, const RingPresentation* pres);
std::string report_to_text(const SingularityReport& rep, const RingPresentation* pres);

nlohmann::json local_report_to_json(const LocalStructureReport& rep);
std::string local_report_to_text(const LocalStructureReport& rep);

nlohmann::json cyclic_verdict_to_json(const CyclicToricVerdict& v);
std::string cyclic_verdict_to_text(const CyclicToricVerdict& v);

std::string read_file(const std::string& path);

}  // namespace cographic

#endif
