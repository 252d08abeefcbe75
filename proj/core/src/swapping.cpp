#include "bdproc/swapping.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "bdproc/extend.hpp"

namespace bdproc {

process swap_conditions(const process& p, const swap_move& move) {
    auto ia = p.condition_index(move.p);
    auto ib = p.condition_index(move.q);
    if (!ia) throw swap_error("unknown condition '" + move.p + "'");
    if (!ib) throw swap_error("unknown condition '" + move.q + "'");
    const auto& ca = p.conditions()[*ia];
    const auto& cb = p.conditions()[*ib];
    if (ca.place != cb.place)
        throw swap_error("label mismatch: pi(" + move.p + ")=" + ca.place + " vs pi(" +
                         move.q + ")=" + cb.place);
    if (p.strictly_before(*ia, *ib) || p.strictly_before(*ib, *ia))
        throw swap_error("conditions '" + move.p + "' and '" + move.q +
                         "' are causally ordered");
    process out = p;
    out.swap_consumers(*ia, *ib);
    return out;
}

std::vector<swap_move> legal_swaps(const process& p) {
    std::vector<swap_move> out;
    const auto& conds = p.conditions();
    for (std::size_t i = 0; i < conds.size(); ++i) {
        for (std::size_t j = i + 1; j < conds.size(); ++j) {
            if (conds[i].place != conds[j].place) continue;
            if (p.strictly_before(i, j) || p.strictly_before(j, i)) continue;
            out.push_back({conds[i].name, conds[j].name});
        }
    }
    return out;
}

namespace {

// Invariants preserved by every swap and by isomorphism; a mismatch makes
// non-equivalence conclusive without any search.
bool swap_invariants_match(const process& p, const process& q) {
    return p.conditions().size() == q.conditions().size() &&
           p.events().size() == q.events().size() &&
           p.condition_labels() == q.condition_labels() &&
           p.event_labels() == q.event_labels() &&
           p.final_marking() == q.final_marking();
}

struct closure_entry {
    process rep;
    std::int64_t parent;  // index into the exploration order, -1 for the seed
    swap_move via;
};

// Explores the swap closure of `start`; returns holds with a path if
// `target` is hit, fails if the closure completes without it, unknown on
// budget exhaustion.
equiv_result explore_closure(const process& start, const canonical_form& target,
                             std::uint64_t budget) {
    equiv_result res;
    res.start = start;
    std::vector<closure_entry> entries;
    std::map<canonical_form, std::size_t> seen;

    canonical_form f0 = canonical_of(start);
    entries.push_back({start, -1, {}});
    seen.emplace(f0, 0);
    if (f0 == target) {
        res.v = verdict::holds;
        res.forms_explored = 1;
        return res;
    }

    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        for (const swap_move& m : legal_swaps(entries[cur].rep)) {
            process next = swap_conditions(entries[cur].rep, m);
            canonical_form f = canonical_of(next);
            if (seen.count(f)) continue;
            if (entries.size() >= budget) {
                res.v = verdict::unknown;
                res.forms_explored = entries.size();
                return res;
            }
            entries.push_back({std::move(next), static_cast<std::int64_t>(cur), m});
            seen.emplace(std::move(f), entries.size() - 1);
            if (seen.count(target)) {
                // Reconstruct the move path back to the seed.
                std::vector<swap_move> path;
                std::int64_t at = static_cast<std::int64_t>(entries.size() - 1);
                while (entries[static_cast<std::size_t>(at)].parent >= 0) {
                    path.push_back(entries[static_cast<std::size_t>(at)].via);
                    at = entries[static_cast<std::size_t>(at)].parent;
                }
                std::reverse(path.begin(), path.end());
                res.v = verdict::holds;
                res.path = std::move(path);
                res.forms_explored = entries.size();
                return res;
            }
            queue.push_back(entries.size() - 1);
        }
    }
    res.v = verdict::fails;
    res.forms_explored = entries.size();
    return res;
}

}  // namespace

bool one_step_equiv(const process& p, const process& q) {
    if (!swap_invariants_match(p, q)) return false;
    canonical_form target = canonical_of(q);
    if (canonical_of(p) == target) return !p.conditions().empty();  // move (c, c)
    for (const swap_move& m : legal_swaps(p))
        if (canonical_of(swap_conditions(p, m)) == target) return true;
    return false;
}

equiv_result swap_equiv(const process& p, const process& q, std::uint64_t budget) {
    canonical_form fp = canonical_of(p), fq = canonical_of(q);
    if (fp == fq) {
        equiv_result res;
        res.v = verdict::holds;
        res.start = p;
        res.forms_explored = 1;
        return res;
    }
    if (!swap_invariants_match(p, q)) {
        equiv_result res;
        res.v = verdict::fails;
        res.start = p;
        return res;
    }
    bool p_first = fp <= fq;
    equiv_result res = explore_closure(p_first ? p : q, p_first ? fq : fp, budget);
    res.started_from_first = p_first;
    if (res.v != verdict::unknown) return res;
    // The smaller side blew the budget; the other closure may still complete.
    equiv_result other = explore_closure(p_first ? q : p, p_first ? fp : fq, budget);
    other.started_from_first = !p_first;
    other.forms_explored += res.forms_explored;
    if (other.v != verdict::unknown) return other;
    return res;
}

namespace {

struct budget_meter {
    std::uint64_t budget;
    std::uint64_t used = 0;
    void charge(std::uint64_t n) { used += n; }
    bool exceeded() const { return used > budget; }
};

// Extends every process in `level` by one event and deduplicates the result
// per swapping-equivalence class. Unknown sub-verdicts keep both candidates,
// which only costs work, never soundness.
std::vector<process> next_level_classes(const std::vector<process>& level, const net& n,
                                        budget_meter& meter,
                                        const multiset<id>* event_label_bound) {
    std::vector<process> out;
    std::set<canonical_form> iso_seen;
    struct keyed {
        multiset<id> labels;
        marking final;
        std::size_t index;
    };
    std::vector<keyed> keys;
    for (const process& p : level) {
        for (auto& [t, ext] : successors(p, n, true)) {
            (void)t;
            if (event_label_bound && !ext.event_labels().subset_of(*event_label_bound))
                continue;
            if (!iso_seen.insert(canonical_of(ext)).second) continue;
            multiset<id> labels = ext.event_labels();
            marking fin = ext.final_marking();
            bool dup = false;
            for (const keyed& k : keys) {
                if (k.labels != labels || k.final != fin) continue;
                auto eq = swap_equiv(ext, out[k.index], meter.budget);
                meter.charge(eq.forms_explored);
                if (eq.v == verdict::holds) {
                    dup = true;
                    break;
                }
                if (meter.exceeded()) break;
            }
            if (!dup) {
                keys.push_back({std::move(labels), std::move(fin), out.size()});
                out.push_back(std::move(ext));
            }
            if (meter.exceeded()) return out;
        }
        if (meter.exceeded()) return out;
    }
    return out;
}

}  // namespace

preorder_result bd_preorder_fin(const process& p, const process& q, const net& n,
                                std::uint64_t budget) {
    preorder_result res;
    if (p.event_count() > q.event_count() ||
        !p.event_labels().subset_of(q.event_labels())) {
        res.v = verdict::fails;
        return res;
    }
    budget_meter meter{budget};
    multiset<id> bound = q.event_labels();
    std::vector<process> level{p};
    std::size_t missing = q.event_count() - p.event_count();
    for (std::size_t i = 0; i < missing; ++i) {
        level = next_level_classes(level, n, meter, &bound);
        if (meter.exceeded()) {
            res.v = verdict::unknown;
            res.forms_explored = meter.used;
            return res;
        }
        if (level.empty()) {
            res.v = verdict::fails;  // no extension of p reaches |q| events
            res.forms_explored = meter.used;
            return res;
        }
    }
    bool any_unknown = false;
    for (const process& r : level) {
        auto eq = swap_equiv(r, q, budget);
        meter.charge(eq.forms_explored);
        if (eq.v == verdict::holds) {
            res.v = verdict::holds;
            res.witness = r;
            res.forms_explored = meter.used;
            return res;
        }
        if (eq.v == verdict::unknown) any_unknown = true;
        if (meter.exceeded()) {
            any_unknown = true;
            break;
        }
    }
    res.v = any_unknown ? verdict::unknown : verdict::fails;
    res.forms_explored = meter.used;
    return res;
}

approx_result bd_approximations(const process& p, std::size_t depth, std::size_t cap) {
    approx_result res;
    res.complete = true;

    auto strip_candidates = [](const process& r) {
        // Prefixes obtained by removing one causally maximal event.
        std::vector<process> out;
        for (std::size_t ei = 0; ei < r.events().size(); ++ei) {
            bool maximal = true;
            for (std::size_t c : r.events()[ei].post)
                if (r.conditions()[c].consumer >= 0) {
                    maximal = false;
                    break;
                }
            if (!maximal) continue;
            std::set<id> keep;
            for (std::size_t ej = 0; ej < r.events().size(); ++ej)
                if (ej != ei) keep.insert(r.events()[ej].name);
            out.push_back(prefix_by_events(r, keep));
        }
        return out;
    };

    std::deque<process> queue;
    std::set<canonical_form> visited;  // includes oversized intermediates

    auto admit = [&](const process& r) {
        canonical_form f = canonical_of(r);
        if (visited.count(f)) return;
        if (res.forms.size() >= cap) {
            res.complete = false;
            return;
        }
        visited.insert(f);
        if (r.event_count() <= depth) {
            res.forms.insert(std::move(f));
            res.reps.push_back(r);
        } else {
            res.complete = false;  // the depth bound cuts the closure
        }
        queue.push_back(r);
    };

    admit(p);
    while (!queue.empty()) {
        process cur = std::move(queue.front());
        queue.pop_front();
        for (const process& pref : strip_candidates(cur)) admit(pref);
        if (cur.event_count() <= depth)
            for (const swap_move& m : legal_swaps(cur)) admit(swap_conditions(cur, m));
    }
    return res;
}

extension_result common_extension(const process& p, const process& q, const net& n,
                                  std::uint64_t budget, std::size_t max_added) {
    extension_result res;
    budget_meter meter{budget};

    std::vector<std::vector<process>> from_p{{p}}, from_q{{q}};
    bool p_exhausted = false, q_exhausted = false;
    bool any_unknown = false;

    auto grow = [&](std::vector<std::vector<process>>& levels, bool& exhausted) {
        if (exhausted) return;
        levels.push_back(next_level_classes(levels.back(), n, meter, nullptr));
        if (levels.back().empty()) exhausted = true;
    };

    // Compare every pair of equal total size as the levels become available.
    auto compare_at = [&](std::size_t total) -> bool {
        if (total < p.event_count() || total < q.event_count()) return false;
        std::size_t i = total - p.event_count();
        std::size_t j = total - q.event_count();
        if (i >= from_p.size() || j >= from_q.size()) return false;
        for (const process& a : from_p[i]) {
            for (const process& b : from_q[j]) {
                auto eq = swap_equiv(a, b, budget);
                meter.charge(eq.forms_explored);
                if (eq.v == verdict::holds) {
                    res.v = verdict::holds;
                    res.witness = {a, b};
                    return true;
                }
                if (eq.v == verdict::unknown) any_unknown = true;
                if (meter.exceeded()) return false;
            }
        }
        return false;
    };

    std::size_t base = std::max(p.event_count(), q.event_count());
    for (std::size_t total = base;; ++total) {
        while (!p_exhausted && from_p.size() <= total - p.event_count()) grow(from_p, p_exhausted);
        while (!q_exhausted && from_q.size() <= total - q.event_count()) grow(from_q, q_exhausted);
        if (meter.exceeded()) break;
        if (compare_at(total)) {
            res.forms_explored = meter.used;
            return res;
        }
        if (meter.exceeded()) break;
        bool p_done = p_exhausted && (total - p.event_count()) + 1 >= from_p.size();
        bool q_done = q_exhausted && (total - q.event_count()) + 1 >= from_q.size();
        if (p_done && q_done) {
            res.v = any_unknown ? verdict::unknown : verdict::fails;
            res.forms_explored = meter.used;
            return res;
        }
        if (total - std::min(p.event_count(), q.event_count()) >= max_added) break;
    }
    res.v = verdict::unknown;
    res.forms_explored = meter.used;
    return res;
}

}  // namespace bdproc
