#include "bdproc/extend.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace bdproc {

namespace {

std::string fresh_name(const char* prefix, std::size_t& counter, const std::set<id>& used) {
    while (true) {
        std::string cand = prefix + std::to_string(++counter);
        if (!used.count(cand)) return cand;
    }
}

// k-subsets of `pool` in lexicographic index order.
void k_subsets(const std::vector<std::size_t>& pool, std::size_t k,
               std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> go = [&](std::size_t start) {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i + (k - cur.size()) <= pool.size(); ++i) {
            cur.push_back(pool[i]);
            go(i + 1);
            cur.pop_back();
        }
    };
    go(0);
}

}  // namespace

std::vector<std::pair<id, process>> successors(const process& p, const net& n, bool dedup) {
    std::set<id> used;
    for (const auto& c : p.conditions()) used.insert(c.name);
    for (const auto& e : p.events()) used.insert(e.name);

    // End conditions grouped by place label.
    std::map<id, std::vector<std::size_t>> ends;
    for (std::size_t i : p.end_conditions()) ends[p.conditions()[i].place].push_back(i);

    std::vector<std::pair<id, process>> out;
    std::set<canonical_form> seen;

    for (const id& t : n.transitions()) {
        const auto& pre = n.preset(t);
        bool feasible = true;
        for (const auto& [place, k] : pre) {
            auto it = ends.find(place);
            if (it == ends.end() || it->second.size() < k) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;

        // Per-place k-subsets of matching end conditions, combined in order.
        std::vector<std::vector<std::vector<std::size_t>>> per_place;
        for (const auto& [place, k] : pre) {
            std::vector<std::vector<std::size_t>> subsets;
            k_subsets(ends[place], static_cast<std::size_t>(k), subsets);
            per_place.push_back(std::move(subsets));
        }
        std::vector<std::size_t> pick(per_place.size(), 0);
        while (true) {
            std::vector<std::size_t> consumed;
            for (std::size_t i = 0; i < per_place.size(); ++i)
                consumed.insert(consumed.end(), per_place[i][pick[i]].begin(),
                                per_place[i][pick[i]].end());

            process ext = p;
            std::size_t ecount = ext.events().size();
            std::size_t ccount = ext.conditions().size();
            std::size_t ev = ext.add_event(fresh_name("e", ecount, used), t, consumed);
            for (const auto& [place, k] : n.postset(t))
                for (std::uint64_t j = 0; j < k; ++j)
                    ext.add_condition(fresh_name("c", ccount, used), place,
                                      static_cast<std::int64_t>(ev));
            ext.set_name(p.name() + "+" + t);

            if (dedup) {
                if (seen.insert(canonical_of(ext)).second) out.emplace_back(t, std::move(ext));
            } else {
                out.emplace_back(t, std::move(ext));
            }

            // Advance the mixed-radix counter over per-place subset choices.
            std::size_t d = 0;
            while (d < pick.size()) {
                if (++pick[d] < per_place[d].size()) break;
                pick[d] = 0;
                ++d;
            }
            if (d == pick.size()) break;
        }
    }
    if (dedup) {
        std::stable_sort(out.begin(), out.end(),
                         [](const auto& a, const auto& b) {
                             if (a.first != b.first) return a.first < b.first;
                             return canonical_of(a.second) < canonical_of(b.second);
                         });
    }
    return out;
}

enumeration enumerate_processes(const net& n, std::size_t depth, std::size_t cap) {
    enumeration e;
    e.complete = true;
    process p0 = initial_process(n);
    canonical_form f0 = canonical_of(p0);
    if (cap == 0) {
        e.complete = false;
        return e;
    }
    e.reps.push_back(p0);
    e.levels.push_back(0);
    e.forms.insert(f0);

    std::vector<process> level{std::move(p0)};
    for (std::size_t d = 1; d <= depth && !level.empty() && e.complete; ++d) {
        // Collect this level's new classes, sorted by canonical form.
        std::vector<std::pair<canonical_form, process>> found;
        for (const process& p : level) {
            for (auto& [t, ext] : successors(p, n, true)) {
                (void)t;
                canonical_form f = canonical_of(ext);
                if (e.forms.count(f)) continue;
                bool dup = false;
                for (auto& [g, q] : found)
                    if (g == f) { dup = true; (void)q; break; }
                if (!dup) found.emplace_back(std::move(f), std::move(ext));
            }
        }
        std::sort(found.begin(), found.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<process> next;
        for (auto& [f, q] : found) {
            if (e.forms.size() >= cap) {
                e.complete = false;
                break;
            }
            e.forms.insert(f);
            e.reps.push_back(q);
            e.levels.push_back(d);
            next.push_back(std::move(q));
        }
        level = std::move(next);
    }
    return e;
}

std::vector<process> maximal_processes(const enumeration& e, const net& n) {
    std::vector<process> out;
    for (const process& p : e.reps)
        if (successors(p, n, true).empty()) out.push_back(p);
    return out;
}

}  // namespace bdproc
