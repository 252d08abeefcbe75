#include "bdproc/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace bdproc {

namespace {

// Nodes 0..nc-1 are conditions, nc..nc+ne-1 events. A coloring assigns each
// node an integer; refinement sharpens it until stable, individualization
// breaks residual symmetry, and the minimum encoding over all branches is
// the canonical form.
struct canon_state {
    const process* p;
    std::size_t nc, ne;

    std::vector<int> initial_colors() const {
        std::vector<std::pair<std::vector<std::int64_t>, std::size_t>> keyed;
        std::map<id, std::int64_t> label_rank;
        for (const auto& c : p->conditions()) label_rank.emplace(c.place, 0);
        for (const auto& e : p->events()) label_rank.emplace(e.trans, 0);
        std::int64_t next = 0;
        for (auto& [l, r] : label_rank) r = next++;

        for (std::size_t i = 0; i < nc; ++i) {
            const auto& c = p->conditions()[i];
            keyed.push_back({{0, label_rank[c.place], c.producer < 0 ? 0 : 1}, i});
        }
        for (std::size_t i = 0; i < ne; ++i) {
            const auto& e = p->events()[i];
            keyed.push_back({{1, label_rank[e.trans], 0}, nc + i});
        }
        return rank_keys(keyed);
    }

    static std::vector<int> rank_keys(
        std::vector<std::pair<std::vector<std::int64_t>, std::size_t>>& keyed) {
        std::sort(keyed.begin(), keyed.end());
        std::vector<int> colors(keyed.size());
        int color = -1;
        const std::vector<std::int64_t>* prev = nullptr;
        for (const auto& [key, node] : keyed) {
            if (!prev || key != *prev) ++color;
            colors[node] = color;
            prev = &key;
        }
        return colors;
    }

    std::vector<int> refine(std::vector<int> colors) const {
        std::size_t n = nc + ne;
        while (true) {
            std::vector<std::pair<std::vector<std::int64_t>, std::size_t>> keyed;
            keyed.reserve(n);
            for (std::size_t i = 0; i < nc; ++i) {
                const auto& c = p->conditions()[i];
                std::vector<std::int64_t> key{colors[i],
                                              c.producer < 0 ? -1 : colors[nc + c.producer],
                                              c.consumer < 0 ? -1 : colors[nc + c.consumer]};
                keyed.push_back({std::move(key), i});
            }
            for (std::size_t i = 0; i < ne; ++i) {
                const auto& e = p->events()[i];
                std::vector<std::int64_t> key{colors[nc + i]};
                std::vector<std::int64_t> pre, post;
                for (std::size_t c : e.pre) pre.push_back(colors[c]);
                for (std::size_t c : e.post) post.push_back(colors[c]);
                std::sort(pre.begin(), pre.end());
                std::sort(post.begin(), post.end());
                key.push_back(-2);
                key.insert(key.end(), pre.begin(), pre.end());
                key.push_back(-2);
                key.insert(key.end(), post.begin(), post.end());
                keyed.push_back({std::move(key), nc + i});
            }
            std::vector<int> next = rank_keys(keyed);
            if (next == colors) return colors;
            colors = std::move(next);
        }
    }

    bool discrete(const std::vector<int>& colors) const {
        std::vector<int> seen(colors.size(), 0);
        for (int c : colors) {
            if (seen[c]) return false;
            seen[c] = 1;
        }
        return true;
    }

    std::string encode(const std::vector<int>& colors) const {
        // colors are a permutation here: node -> position.
        std::size_t n = nc + ne;
        std::vector<std::size_t> at(n);
        for (std::size_t i = 0; i < n; ++i) at[static_cast<std::size_t>(colors[i])] = i;
        // Conditions always sort before events (kind leads every key).
        std::vector<std::int64_t> event_rank(ne);
        for (std::size_t r = nc; r < n; ++r) event_rank[at[r] - nc] = static_cast<std::int64_t>(r - nc);

        std::ostringstream os;
        os << "C" << nc << "|E" << ne << "|";
        for (std::size_t r = 0; r < nc; ++r) {
            const auto& c = p->conditions()[at[r]];
            os << c.place.size() << ":" << c.place << "/";
            if (c.producer < 0) os << "-";
            else os << event_rank[static_cast<std::size_t>(c.producer)];
            os << "/";
            if (c.consumer < 0) os << "-";
            else os << event_rank[static_cast<std::size_t>(c.consumer)];
            os << ";";
        }
        for (std::size_t r = nc; r < n; ++r) {
            const id& t = p->events()[at[r] - nc].trans;
            os << t.size() << ":" << t << ";";
        }
        return os.str();
    }

    void search(const std::vector<int>& colors, std::string& best,
                std::vector<int>& best_perm) const {
        std::vector<int> refined = refine(colors);
        if (discrete(refined)) {
            std::string enc = encode(refined);
            if (best.empty() || enc < best) {
                best = std::move(enc);
                best_perm = refined;
            }
            return;
        }
        // First non-singleton cell by color value; branch over its members.
        std::size_t n = nc + ne;
        std::vector<std::vector<std::size_t>> cells(n);
        for (std::size_t i = 0; i < n; ++i)
            cells[static_cast<std::size_t>(refined[i])].push_back(i);
        std::size_t target = 0;
        while (cells[target].size() < 2) ++target;
        for (std::size_t v : cells[target]) {
            std::vector<std::pair<std::vector<std::int64_t>, std::size_t>> keyed;
            for (std::size_t i = 0; i < n; ++i)
                keyed.push_back({{refined[i], i == v ? 0 : 1}, i});
            search(rank_keys(keyed), best, best_perm);
        }
    }
};

std::pair<std::string, std::vector<int>> canonicalize(const process& p) {
    canon_state st{&p, p.conditions().size(), p.events().size()};
    if (st.nc + st.ne == 0) return {"C0|E0|", {}};
    std::string best;
    std::vector<int> best_perm;
    st.search(st.initial_colors(), best, best_perm);
    return {best, best_perm};
}

}  // namespace

canonical_form canonical_of(const process& p) {
    return {canonicalize(p).first};
}

process canonical_copy(const process& p) {
    auto [bytes, perm] = canonicalize(p);
    (void)bytes;
    std::size_t nc = p.conditions().size(), ne = p.events().size();
    std::size_t n = nc + ne;
    std::vector<std::size_t> at(n);
    for (std::size_t i = 0; i < n; ++i) at[static_cast<std::size_t>(perm[i])] = i;

    process out = process::empty(p.name(), p.net_name());
    // Producers must exist before their postset conditions: add events in
    // canonical order first is not enough, a producer may have any rank.
    // Add conditions and events in topological passes instead, using the
    // canonical ranks only for naming and ordering within a pass.
    std::vector<std::int64_t> cond_new(nc, -1), event_new(ne, -1);

    // Initial conditions in rank order.
    for (std::size_t r = 0; r < nc; ++r) {
        std::size_t i = at[r];
        if (p.conditions()[i].producer < 0)
            cond_new[i] = static_cast<std::int64_t>(
                out.add_condition("c" + std::to_string(r + 1), p.conditions()[i].place, -1));
    }
    // Events in dependency order, smallest canonical rank first among ready.
    std::vector<bool> added(ne, false);
    std::size_t remaining = ne;
    while (remaining > 0) {
        bool progressed = false;
        for (std::size_t r = nc; r < n; ++r) {
            std::size_t e = at[r] - nc;
            if (added[e]) continue;
            bool ready = true;
            for (std::size_t c : p.events()[e].pre)
                if (cond_new[c] < 0) { ready = false; break; }
            if (!ready) continue;
            std::vector<std::size_t> pre;
            for (std::size_t c : p.events()[e].pre)
                pre.push_back(static_cast<std::size_t>(cond_new[c]));
            std::size_t ne_idx = out.add_event("e" + std::to_string(r - nc + 1),
                                               p.events()[e].trans, std::move(pre));
            event_new[e] = static_cast<std::int64_t>(ne_idx);
            for (std::size_t c : p.events()[e].post) {
                std::size_t cr = 0;
                cr = static_cast<std::size_t>(perm[c]);
                cond_new[c] = static_cast<std::int64_t>(out.add_condition(
                    "c" + std::to_string(cr + 1), p.conditions()[c].place,
                    static_cast<std::int64_t>(ne_idx)));
            }
            added[e] = true;
            --remaining;
            progressed = true;
        }
        if (!progressed) break;  // unreachable for valid (acyclic) processes
    }
    return out;
}

bool isomorphic(const process& p, const process& q) {
    if (p.conditions().size() != q.conditions().size()) return false;
    if (p.events().size() != q.events().size()) return false;
    if (p.condition_labels() != q.condition_labels()) return false;
    if (p.event_labels() != q.event_labels()) return false;
    return canonical_of(p) == canonical_of(q);
}

}  // namespace bdproc
