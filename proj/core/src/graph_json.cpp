#include "graphconf/graph_json.hpp"

#include <cstdint>
#include <sstream>

#include <json.hpp>

namespace graphconf {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("input is not valid JSON");
    return j;
}

}  // namespace

GraphInput parse_graph_json(const std::string& text) {
    json j = parse_or_throw(text);
    if (!j.is_object()) throw ParseError("top-level JSON value must be an object");
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw ParseError("missing \"vertices\" array");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw ParseError("missing \"edges\" array");

    std::vector<VertexId> vertices;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw ParseError("vertex ids must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_object() || !e.contains("id") || !e.contains("tail") || !e.contains("head"))
            throw ParseError("each edge needs \"id\", \"tail\" and \"head\"");
        edges.push_back({e["id"].get<std::string>(), e["tail"].get<std::string>(),
                         e["head"].get<std::string>()});
    }

    GraphInput input{Graph(std::move(vertices), std::move(edges)), std::nullopt, std::nullopt};

    if (j.contains("rotations")) {
        if (!j["rotations"].is_object()) throw ParseError("\"rotations\" must be an object");
        RotationSystem rho;
        for (const auto& [v, list] : j["rotations"].items()) {
            if (!list.is_array()) throw ParseError("rotation lists must be arrays");
            std::vector<EdgeId> order;
            for (const auto& e : list) order.push_back(e.get<std::string>());
            rho[v] = std::move(order);
        }
        input.rotations = std::move(rho);
    }
    if (j.contains("outer_face")) {
        const auto& o = j["outer_face"];
        if (!o.is_object() || !o.contains("edge"))
            throw ParseError("\"outer_face\" needs an \"edge\"");
        std::string direction = o.value("direction", "forward");
        if (direction != "forward" && direction != "reverse")
            throw ParseError("outer_face direction must be \"forward\" or \"reverse\"");
        input.outer = OuterMarker{o["edge"].get<std::string>(), direction == "reverse"};
    }
    return input;
}

std::string graph_to_json(const GraphInput& input) {
    json j;
    j["vertices"] = json::array();
    for (const VertexId& v : input.graph.vertex_ids()) j["vertices"].push_back(v);
    j["edges"] = json::array();
    for (const Edge& e : input.graph.edges())
        j["edges"].push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}});
    if (input.rotations) {
        json rho = json::object();
        for (const auto& [v, list] : *input.rotations) rho[v] = list;
        j["rotations"] = std::move(rho);
    }
    if (input.outer)
        j["outer_face"] = {{"edge", input.outer->edge},
                           {"direction", input.outer->reversed ? "reverse" : "forward"}};
    return j.dump(2) + "\n";
}

std::string graph_to_dot(const Graph& g) {
    std::ostringstream out;
    out << "digraph gamma {\n";
    for (const VertexId& v : g.vertex_ids()) out << "  \"" << v << "\";\n";
    for (const Edge& e : g.edges())
        out << "  \"" << e.tail << "\" -> \"" << e.head << "\" [label=\"" << e.id << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string skeleton_to_dot(const DiscreteConfigComplex& complex) {
    std::ostringstream out;
    out << "graph d_skeleton {\n";
    for (const auto& [u, v] : complex.cells0)
        out << "  \"(" << u << "," << v << ")\";\n";
    for (std::size_t j = 0; j < complex.cells1.size(); ++j) {
        // Each 1-cell joins the two 0-cells carrying its boundary.
        std::string ends[2];
        std::size_t found = 0;
        for (std::size_t i = 0; i < complex.cells0.size() && found < 2; ++i) {
            if (sgn(complex.boundary1(i, j)) != 0) {
                ends[found++] =
                    "(" + complex.cells0[i].first + "," + complex.cells0[i].second + ")";
            }
        }
        if (found == 2)
            out << "  \"" << ends[0] << "\" -- \"" << ends[1] << "\" [label=\""
                << complex.cells1[j].label() << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string content_digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << "fnv1a64:" << std::hex;
    out.width(16);
    out.fill('0');
    out << h;
    return out.str();
}

}  // namespace graphconf
