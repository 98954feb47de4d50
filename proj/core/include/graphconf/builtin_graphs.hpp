#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphconf/graph.hpp"
#include "graphconf/planar.hpp"

namespace graphconf {

/// A graph plus optional embedding data, as consumed by the CLI schema.
struct GraphInput {
    Graph graph;
    std::optional<RotationSystem> rotations;
    std::optional<OuterMarker> outer;
};

namespace builtin {

GraphInput triangle();
GraphInput y_graph();
GraphInput k4();
GraphInput k5();
GraphInput k33();
GraphInput barbell();

/// Two concentric p-cycles joined by p radii through a hub vertex: the
/// radii run hub -> inner cycle -> outer cycle. 2p+1 faces.
GraphInput wheel_ring(unsigned p);

/// Same with the hub spokes rotated half a step: they attach to midpoint
/// vertices subdividing the inner cycle.
GraphInput wheel_ring_twisted(unsigned p);

/// All bundled names: triangle, y, k4, k5, k33, barbell, gamma_3..8,
/// gamma_prime_3..8.
std::vector<std::string> names();

/// Look up a bundled graph by name; throws ParseError for unknown names.
GraphInput by_name(const std::string& name);

}  // namespace builtin
}  // namespace graphconf
