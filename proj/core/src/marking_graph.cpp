#include "bdproc/marking_graph.hpp"

#include <algorithm>
#include <set>

namespace bdproc {

marking_graph reachable_markings(const net& n, std::uint64_t cap) {
    marking_graph g;
    g.cap_used = cap;
    g.complete = true;
    if (cap == 0) {
        g.complete = false;
        return g;
    }

    g.vertices.push_back(n.initial_marking());
    g.index[n.initial_marking()] = 0;

    std::vector<std::size_t> frontier{0};
    while (!frontier.empty() && g.complete) {
        std::set<marking> discovered;  // sorted = canonical level order
        for (std::size_t v : frontier) {
            const marking m = g.vertices[v];
            for (const id& t : n.transitions()) {
                step singleton;
                singleton.insert(t);
                if (!enabled(n, m, singleton)) continue;
                marking next = fire_step(n, m, singleton);
                if (!g.index.count(next)) discovered.insert(std::move(next));
            }
        }
        std::vector<std::size_t> next_frontier;
        for (const marking& m : discovered) {
            if (g.vertices.size() >= cap) {
                g.complete = false;
                break;
            }
            g.index[m] = g.vertices.size();
            next_frontier.push_back(g.vertices.size());
            g.vertices.push_back(m);
        }
        frontier = std::move(next_frontier);
    }

    // Edges between stored vertices only; every recorded edge replays.
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        for (const id& t : n.transitions()) {
            step singleton;
            singleton.insert(t);
            if (!enabled(n, g.vertices[v], singleton)) continue;
            marking next = fire_step(n, g.vertices[v], singleton);
            auto it = g.index.find(next);
            if (it != g.index.end()) g.edges.push_back({v, t, it->second});
        }
    }
    return g;
}

}  // namespace bdproc
