#include "graphconf/builtin_graphs.hpp"

#include "graphconf/errors.hpp"

namespace graphconf::builtin {

namespace {

std::string num(unsigned k) { return std::to_string(k); }

}  // namespace

GraphInput triangle() {
    Graph g({"1", "2", "3"},
            {{"12", "1", "2"}, {"13", "1", "3"}, {"23", "2", "3"}});
    RotationSystem rho{{"1", {"12", "13"}}, {"2", {"23", "12"}}, {"3", {"13", "23"}}};
    return {std::move(g), rho, OuterMarker{"12", true}};
}

GraphInput y_graph() {
    Graph g({"c", "l1", "l2", "l3"},
            {{"e1", "c", "l1"}, {"e2", "c", "l2"}, {"e3", "c", "l3"}});
    RotationSystem rho{{"c", {"e1", "e2", "e3"}},
                       {"l1", {"e1"}},
                       {"l2", {"e2"}},
                       {"l3", {"e3"}}};
    return {std::move(g), rho, OuterMarker{"e1", false}};
}

GraphInput k4() {
    // Outer triangle 1-2-3 with 4 in the middle.
    Graph g({"1", "2", "3", "4"},
            {{"12", "1", "2"},
             {"13", "1", "3"},
             {"14", "1", "4"},
             {"23", "2", "3"},
             {"24", "2", "4"},
             {"34", "3", "4"}});
    RotationSystem rho{{"1", {"12", "14", "13"}},
                       {"2", {"23", "24", "12"}},
                       {"3", {"13", "34", "23"}},
                       {"4", {"34", "14", "24"}}};
    return {std::move(g), rho, OuterMarker{"13", false}};
}

GraphInput k5() {
    std::vector<VertexId> vertices;
    std::vector<Edge> edges;
    for (unsigned i = 1; i <= 5; ++i) vertices.push_back(num(i));
    for (unsigned i = 1; i <= 5; ++i)
        for (unsigned j = i + 1; j <= 5; ++j)
            edges.push_back({num(i) + num(j), num(i), num(j)});
    return {Graph(std::move(vertices), std::move(edges)), std::nullopt, std::nullopt};
}

GraphInput k33() {
    std::vector<VertexId> vertices{"a1", "a2", "a3", "b1", "b2", "b3"};
    std::vector<Edge> edges;
    for (unsigned i = 1; i <= 3; ++i)
        for (unsigned p = 1; p <= 3; ++p)
            edges.push_back({"a" + num(i) + "b" + num(p), "a" + num(i), "b" + num(p)});
    return {Graph(std::move(vertices), std::move(edges)), std::nullopt, std::nullopt};
}

GraphInput barbell() {
    // Two triangles joined by one bridge edge a1-b1.
    Graph g({"a1", "a2", "a3", "b1", "b2", "b3"},
            {{"a1a2", "a1", "a2"},
             {"a1a3", "a1", "a3"},
             {"a2a3", "a2", "a3"},
             {"b1b2", "b1", "b2"},
             {"b1b3", "b1", "b3"},
             {"b2b3", "b2", "b3"},
             {"bridge", "a1", "b1"}});
    RotationSystem rho{{"a1", {"bridge", "a1a2", "a1a3"}},
                       {"a2", {"a2a3", "a1a2"}},
                       {"a3", {"a1a3", "a2a3"}},
                       {"b1", {"b1b2", "bridge", "b1b3"}},
                       {"b2", {"b1b2", "b2b3"}},
                       {"b3", {"b2b3", "b1b3"}}};
    return {std::move(g), rho, OuterMarker{"a1a2", true}};
}

GraphInput wheel_ring(unsigned p) {
    if (p < 3) throw ParseError("wheel ring requires p >= 3");
    std::vector<VertexId> vertices{"c"};
    std::vector<Edge> edges;
    for (unsigned k = 0; k < p; ++k) {
        vertices.push_back("i" + num(k));
        vertices.push_back("o" + num(k));
    }
    for (unsigned k = 0; k < p; ++k) {
        unsigned next = (k + 1) % p;
        edges.push_back({"s" + num(k), "c", "i" + num(k)});                 // hub spoke
        edges.push_back({"a" + num(k), "i" + num(k), "i" + num(next)});     // inner arc
        edges.push_back({"t" + num(k), "i" + num(k), "o" + num(k)});        // radial spoke
        edges.push_back({"b" + num(k), "o" + num(k), "o" + num(next)});     // outer arc
    }

    RotationSystem rho;
    std::vector<EdgeId> hub;
    for (unsigned k = 0; k < p; ++k) hub.push_back("s" + num(k));
    rho["c"] = hub;
    for (unsigned k = 0; k < p; ++k) {
        unsigned prev = (k + p - 1) % p;
        rho["i" + num(k)] = {"t" + num(k), "a" + num(k), "s" + num(k), "a" + num(prev)};
        rho["o" + num(k)] = {"b" + num(k), "t" + num(k), "b" + num(prev)};
    }
    return {Graph(std::move(vertices), std::move(edges)), rho, OuterMarker{"b0", true}};
}

GraphInput wheel_ring_twisted(unsigned p) {
    if (p < 3) throw ParseError("twisted wheel ring requires p >= 3");
    std::vector<VertexId> vertices{"c"};
    std::vector<Edge> edges;
    for (unsigned k = 0; k < p; ++k) {
        vertices.push_back("i" + num(k));
        vertices.push_back("m" + num(k));
        vertices.push_back("o" + num(k));
    }
    for (unsigned k = 0; k < p; ++k) {
        unsigned next = (k + 1) % p;
        edges.push_back({"s" + num(k), "c", "m" + num(k)});                 // hub spoke
        edges.push_back({"ca" + num(k), "i" + num(k), "m" + num(k)});       // inner arc, first half
        edges.push_back({"cb" + num(k), "m" + num(k), "i" + num(next)});    // inner arc, second half
        edges.push_back({"t" + num(k), "i" + num(k), "o" + num(k)});        // radial spoke
        edges.push_back({"b" + num(k), "o" + num(k), "o" + num(next)});     // outer arc
    }

    RotationSystem rho;
    std::vector<EdgeId> hub;
    for (unsigned k = 0; k < p; ++k) hub.push_back("s" + num(k));
    rho["c"] = hub;
    for (unsigned k = 0; k < p; ++k) {
        unsigned prev = (k + p - 1) % p;
        rho["m" + num(k)] = {"cb" + num(k), "s" + num(k), "ca" + num(k)};
        rho["i" + num(k)] = {"t" + num(k), "ca" + num(k), "cb" + num(prev)};
        rho["o" + num(k)] = {"b" + num(k), "t" + num(k), "b" + num(prev)};
    }
    return {Graph(std::move(vertices), std::move(edges)), rho, OuterMarker{"b0", true}};
}

std::vector<std::string> names() {
    std::vector<std::string> out{"triangle", "y", "k4", "k5", "k33", "barbell"};
    for (unsigned p = 3; p <= 8; ++p) out.push_back("gamma_" + num(p));
    for (unsigned p = 3; p <= 8; ++p) out.push_back("gamma_prime_" + num(p));
    return out;
}

GraphInput by_name(const std::string& name) {
    if (name == "triangle") return triangle();
    if (name == "y") return y_graph();
    if (name == "k4") return k4();
    if (name == "k5") return k5();
    if (name == "k33") return k33();
    if (name == "barbell") return barbell();
    const std::string gamma = "gamma_";
    const std::string gamma_prime = "gamma_prime_";
    if (name.rfind(gamma_prime, 0) == 0)
        return wheel_ring_twisted(static_cast<unsigned>(std::stoul(name.substr(gamma_prime.size()))));
    if (name.rfind(gamma, 0) == 0)
        return wheel_ring(static_cast<unsigned>(std::stoul(name.substr(gamma.size()))));
    throw ParseError("unknown bundled graph: " + name);
}

}  // namespace graphconf::builtin
