#include "bdproc/conflict.hpp"

#include <algorithm>
#include <functional>

namespace bdproc {

bool in_conflict(const net& n, const marking& m, const step& g) {
    if (g.empty()) throw empty_step_error();
    if (enabled(n, m, g)) return false;
    for (const auto& [t, k] : g) {
        step single;
        single.insert(t, k);  // G↾{t} keeps t's multiplicity
        if (!enabled(n, m, single)) return false;
    }
    return true;
}

std::string conflict_witness::str() const {
    std::string head;
    switch (what) {
        case kind::semantic: head = "conflict"; break;
        case kind::binary: head = "binary conflict"; break;
        case kind::persistence_violation: head = "persistence violation"; break;
        case kind::reachable_structural: head = "reachable structural conflict"; break;
        case kind::step_with_shared_preplace: head = "enabled step with shared preplace"; break;
    }
    std::string s = head + " " + g.str() + " at " + at.str();
    if (fired) s += " after firing " + *fired;
    return s;
}

analysis is_binary_conflict_free(const net& n, const marking_graph& g) {
    std::vector<id> trans(n.transitions().begin(), n.transitions().end());
    for (const marking& m : g.vertices) {
        for (std::size_t i = 0; i < trans.size(); ++i) {
            for (std::size_t j = i; j < trans.size(); ++j) {
                step pair;
                pair.insert(trans[i]);
                pair.insert(trans[j]);
                if (in_conflict(n, m, pair))
                    return {verdict::fails,
                            conflict_witness{conflict_witness::kind::binary, m, pair, {}}};
            }
        }
    }
    return {g.complete ? verdict::holds : verdict::unknown, {}};
}

analysis is_conflict_free(const net& n, const marking_graph& g) {
    for (const marking& m : g.vertices) {
        // Enabled transitions with their largest enabled multiplicity.
        std::vector<std::pair<id, std::uint64_t>> bounds;
        for (const id& t : n.transitions()) {
            std::uint64_t k = 0;
            while (true) {
                step s;
                s.insert(t, k + 1);
                if (!enabled(n, m, s)) break;
                ++k;
            }
            if (k > 0) bounds.emplace_back(t, k);
        }
        if (bounds.size() < 1) continue;
        std::uint64_t max_size = 0;
        for (const auto& [t, k] : bounds) max_size += k;

        // Smallest multisets first; the first hit is the reported witness.
        std::optional<step> hit;
        std::function<void(std::size_t, std::uint64_t, step&)> build =
            [&](std::size_t idx, std::uint64_t remaining, step& acc) {
                if (hit) return;
                if (remaining == 0) {
                    if (!enabled(n, m, acc)) hit = acc;  // restrictions hold by bounds
                    return;
                }
                if (idx == bounds.size()) return;
                std::uint64_t limit = std::min<std::uint64_t>(bounds[idx].second, remaining);
                for (std::uint64_t k = 0; k <= limit && !hit; ++k) {
                    if (k > 0) acc.insert(bounds[idx].first, k);
                    build(idx + 1, remaining - k, acc);
                    if (k > 0) acc.erase(bounds[idx].first, k);
                }
            };
        for (std::uint64_t size = 2; size <= max_size && !hit; ++size) {
            step acc;
            build(0, size, acc);
        }
        if (hit)
            return {verdict::fails,
                    conflict_witness{conflict_witness::kind::semantic, m, *hit, {}}};
    }
    return {g.complete ? verdict::holds : verdict::unknown, {}};
}

analysis is_persistent(const net& n, const marking_graph& g) {
    for (const marking& m : g.vertices) {
        for (const id& t : n.transitions()) {
            step st;
            st.insert(t);
            if (!enabled(n, m, st)) continue;
            marking after = fire_step(n, m, st);
            for (const id& u : n.transitions()) {
                if (u == t) continue;
                step su;
                su.insert(u);
                if (!enabled(n, m, su)) continue;
                if (!enabled(n, after, su)) {
                    step pair;
                    pair.insert(t);
                    pair.insert(u);
                    return {verdict::fails,
                            conflict_witness{conflict_witness::kind::persistence_violation, m,
                                             pair, t}};
                }
            }
        }
    }
    return {g.complete ? verdict::holds : verdict::unknown, {}};
}

std::set<std::pair<id, id>> structural_conflict_pairs(const net& n) {
    std::set<std::pair<id, id>> out;
    for (const id& t : n.transitions()) {
        for (const id& u : n.transitions()) {
            if (u <= t) continue;
            if (!n.preset(t).set_intersection(n.preset(u)).empty()) out.emplace(t, u);
        }
    }
    return out;
}

reachable_structural has_reachable_structural_conflict(const net& n, const marking_graph& g) {
    auto pairs = structural_conflict_pairs(n);
    for (const marking& m : g.vertices) {
        for (const auto& [t, u] : pairs) {
            step st, su;
            st.insert(t);
            su.insert(u);
            if (enabled(n, m, st) && enabled(n, m, su))
                return {verdict::holds, std::tuple<marking, id, id>{m, t, u}};
        }
    }
    return {g.complete ? verdict::fails : verdict::unknown, {}};
}

analysis is_structural_conflict_net(const net& n, const marking_graph& g) {
    for (const marking& m : g.vertices) {
        // Self-concurrency: an enabled {t,t} shares •t with itself.
        for (const id& t : n.transitions()) {
            step twice;
            twice.insert(t, 2);
            if (enabled(n, m, twice))
                return {verdict::fails,
                        conflict_witness{conflict_witness::kind::step_with_shared_preplace, m,
                                         twice, {}}};
        }
        for (const auto& [t, u] : structural_conflict_pairs(n)) {
            step pair;
            pair.insert(t);
            pair.insert(u);
            if (enabled(n, m, pair))
                return {verdict::fails,
                        conflict_witness{conflict_witness::kind::step_with_shared_preplace, m,
                                         pair, {}}};
        }
    }
    return {g.complete ? verdict::holds : verdict::unknown, {}};
}

classification classify(const net& n, std::uint64_t cap) {
    marking_graph g = reachable_markings(n, cap);
    classification c;
    c.binary_conflict_free = is_binary_conflict_free(n, g);
    c.conflict_free = is_conflict_free(n, g);
    c.persistent = is_persistent(n, g);
    c.structural_conflict_net = is_structural_conflict_net(n, g);
    c.reachable_structural_conflict = has_reachable_structural_conflict(n, g);
    c.structural_pairs = structural_conflict_pairs(n);
    c.markings = g.vertices.size();
    c.edges = g.edges.size();
    c.exploration_complete = g.complete;
    c.cap = cap;
    return c;
}

}  // namespace bdproc
