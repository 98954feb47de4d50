#pragma once

// Deterministic random graph generators shared by the property suites
// and the acceptance runner.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "graphconf/builtin_graphs.hpp"
#include "graphconf/graph.hpp"
#include "graphconf/planar.hpp"

namespace testsupport {

using graphconf::Edge;
using graphconf::EdgeId;
using graphconf::Graph;
using graphconf::GraphInput;
using graphconf::OuterMarker;
using graphconf::RotationSystem;
using graphconf::VertexId;

/// Erdos-Renyi-style simple graph on up to max_vertices vertices.
inline Graph random_simple_graph(std::mt19937_64& rng, unsigned max_vertices = 8) {
    std::uniform_int_distribution<unsigned> nv(2, max_vertices);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    unsigned n = nv(rng);
    std::vector<VertexId> vertices;
    for (unsigned i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));
    std::vector<Edge> edges;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            if (coin(rng) < 0.45)
                edges.push_back({"e" + std::to_string(i) + "_" + std::to_string(j),
                                 "v" + std::to_string(i), "v" + std::to_string(j)});
    return Graph(std::move(vertices), std::move(edges));
}

/// Random planar embedding: a convex polygon with non-crossing chords,
/// rotations read off the circular order, sometimes a whisker vertex
/// and sometimes subdivided edges. Always connected.
inline GraphInput random_planar_embedding(std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned> nv(4, 9);
    const unsigned n = nv(rng);
    auto hull_vertex = [](unsigned k) { return "h" + std::to_string(k); };

    std::vector<VertexId> vertices;
    std::vector<Edge> edges;
    for (unsigned k = 0; k < n; ++k) vertices.push_back(hull_vertex(k));
    for (unsigned k = 0; k < n; ++k)
        edges.push_back({"c" + std::to_string(k), hull_vertex(k), hull_vertex((k + 1) % n)});

    // Non-crossing chords, inserted greedily in shuffled order.
    std::vector<std::pair<unsigned, unsigned>> candidates;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 2; j < n; ++j)
            if (!(i == 0 && j == n - 1)) candidates.push_back({i, j});
    std::shuffle(candidates.begin(), candidates.end(), rng);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<unsigned, unsigned>> chords;
    auto crosses = [](std::pair<unsigned, unsigned> a, std::pair<unsigned, unsigned> b) {
        return (a.first < b.first && b.first < a.second && a.second < b.second) ||
               (b.first < a.first && a.first < b.second && b.second < a.second);
    };
    for (auto cand : candidates) {
        if (coin(rng) > 0.5) continue;
        bool ok = true;
        for (auto c : chords)
            if (crosses(cand, c)) ok = false;
        if (ok) chords.push_back(cand);
    }
    for (std::size_t k = 0; k < chords.size(); ++k)
        edges.push_back({"d" + std::to_string(k), hull_vertex(chords[k].first),
                         hull_vertex(chords[k].second)});

    // Rotations: at hull vertex k the counterclockwise order of the
    // neighbours follows (j - k) mod n.
    RotationSystem rho;
    {
        Graph probe(vertices, edges);
        for (unsigned k = 0; k < n; ++k) {
            std::vector<std::pair<unsigned, EdgeId>> around;
            for (const EdgeId& eid : probe.incident_edges(hull_vertex(k))) {
                const Edge& e = probe.edge(eid);
                const VertexId& other = (e.tail == hull_vertex(k)) ? e.head : e.tail;
                unsigned j = static_cast<unsigned>(std::stoul(other.substr(1)));
                around.push_back({(j + n - k) % n, eid});
            }
            std::sort(around.begin(), around.end());
            std::vector<EdgeId> order;
            for (const auto& [key, eid] : around) order.push_back(eid);
            rho[hull_vertex(k)] = order;
        }
    }

    // Occasionally hang a whisker off a hull vertex.
    if (coin(rng) < 0.3) {
        std::uniform_int_distribution<unsigned> pick(0, n - 1);
        unsigned k = pick(rng);
        vertices.push_back("w0");
        edges.push_back({"w", hull_vertex(k), "w0"});
        auto& list = rho[hull_vertex(k)];
        std::uniform_int_distribution<std::size_t> slot(0, list.size());
        list.insert(list.begin() + slot(rng), "w");
        rho["w0"] = {"w"};
    }

    GraphInput input{Graph(std::move(vertices), std::move(edges)), rho,
                     OuterMarker{"c0", true}};

    // Occasionally subdivide a few edges (valence-2 vertices break the
    // regularity hypotheses but planarity is untouched).
    if (coin(rng) < 0.35) {
        std::map<EdgeId, unsigned> parts;
        std::uniform_int_distribution<unsigned> count(2, 3);
        for (const Edge& e : input.graph.edges())
            if (coin(rng) < 0.25) parts[e.id] = count(rng);
        if (!parts.empty()) {
            Graph divided = graphconf::subdivide(input.graph, parts);
            RotationSystem updated;
            for (const auto& [v, list] : *input.rotations) {
                std::vector<EdgeId> out;
                for (const EdgeId& eid : list) {
                    auto it = parts.find(eid);
                    if (it == parts.end()) {
                        out.push_back(eid);
                    } else {
                        const Edge& original = input.graph.edge(eid);
                        out.push_back(v == original.tail
                                          ? eid + ".1"
                                          : eid + "." + std::to_string(it->second));
                    }
                }
                updated[v] = out;
            }
            for (const auto& [eid, k] : parts)
                for (unsigned s = 1; s < k; ++s)
                    updated[eid + ".v" + std::to_string(s)] = {
                        eid + "." + std::to_string(s), eid + "." + std::to_string(s + 1)};
            OuterMarker marker = *input.outer;
            auto it = parts.find(marker.edge);
            if (it != parts.end())
                marker.edge = marker.reversed ? marker.edge + "." + std::to_string(it->second)
                                              : marker.edge + ".1";
            input = GraphInput{std::move(divided), updated, marker};
        }
    }
    return input;
}

}  // namespace testsupport
