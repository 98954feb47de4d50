#pragma once

#include <string>

#include "graphconf/graph.hpp"

namespace graphconf {

/// Product 1-cell of Gamma x Gamma: horizontal (e, v) moves the first
/// particle along e, vertical (v, e) moves the second particle along e.
struct Cell1 {
    bool vertical = false;
    EdgeId edge;
    VertexId vertex;

    bool operator==(const Cell1& o) const {
        return vertical == o.vertical && edge == o.edge && vertex == o.vertex;
    }
    bool operator<(const Cell1& o) const {
        if (vertical != o.vertical) return !vertical;  // horizontal block first
        if (vertical) {
            if (vertex != o.vertex) return vertex < o.vertex;
            return edge < o.edge;
        }
        if (edge != o.edge) return edge < o.edge;
        return vertex < o.vertex;
    }

    std::string label() const {
        return vertical ? "(" + vertex + "," + edge + ")" : "(" + edge + "," + vertex + ")";
    }
};

}  // namespace graphconf
