#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "bdproc/net.hpp"

namespace bdproc {

/// Breadth-first closure of {M0} under single-transition firing, truncated
/// at `cap` vertices. Vertex order is deterministic: level by level, each
/// level sorted by the canonical marking encoding.
struct marking_graph {
    struct edge {
        std::size_t src;
        id trans;
        std::size_t dst;
        bool operator==(const edge&) const = default;
    };

    std::vector<marking> vertices;  // vertices[0] == M0
    std::vector<edge> edges;        // sorted by (src, trans, dst)
    bool complete = false;
    std::uint64_t cap_used = 0;

    std::map<marking, std::size_t> index;  // marking -> position in vertices

    bool knows(const marking& m) const { return index.count(m) != 0; }
};

marking_graph reachable_markings(const net& n, std::uint64_t cap);

}  // namespace bdproc
