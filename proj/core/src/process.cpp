#include "bdproc/process.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "bdproc/canonical.hpp"

namespace bdproc {

std::string process_violation::str() const {
    switch (what) {
        case kind::branched_condition: return "BranchedCondition(" + node + ")";
        case kind::cyclic: return "Cyclic(" + detail + ")";
        case kind::label_clash: return "LabelClash(" + node + (detail.empty() ? "" : ": " + detail) + ")";
        case kind::initial_mismatch: return "InitialMismatch(" + detail + ")";
        case kind::flow_mismatch: return "FlowMismatch(" + node + ")";
        case kind::undeclared_node: return "UndeclaredNode(" + node + ")";
        case kind::bad_arc_ends: return "BadArcEnds(" + node + "," + detail + ")";
        case kind::duplicate_node: return "DuplicateNode(" + node + ")";
    }
    return "?";
}

std::vector<process_violation> process::check(const process_desc& d, const net& n) {
    using kind = process_violation::kind;
    std::vector<process_violation> out;

    std::set<id> conds, events;
    for (const id& c : d.conditions)
        if (!conds.insert(c).second) out.push_back({kind::duplicate_node, c, {}});
    for (const id& e : d.events) {
        if (conds.count(e)) out.push_back({kind::duplicate_node, e, {}});
        else if (!events.insert(e).second) out.push_back({kind::duplicate_node, e, {}});
    }

    // Labels: conditions map to places, events to transitions.
    for (const id& c : d.conditions) {
        auto it = d.label.find(c);
        if (it == d.label.end()) out.push_back({kind::label_clash, c, "missing label"});
        else if (!n.is_place(it->second))
            out.push_back({kind::label_clash, c, "'" + it->second + "' is not a place"});
    }
    for (const id& e : d.events) {
        auto it = d.label.find(e);
        if (it == d.label.end()) out.push_back({kind::label_clash, e, "missing label"});
        else if (!n.is_transition(it->second))
            out.push_back({kind::label_clash, e, "'" + it->second + "' is not a transition"});
    }

    // Arcs: declared endpoints, alternating kinds, unbranched conditions.
    std::map<id, std::vector<id>> cond_out, cond_in, ev_pre, ev_post;
    for (const auto& [src, dst] : d.arcs) {
        bool src_c = conds.count(src), dst_c = conds.count(dst);
        bool src_e = events.count(src), dst_e = events.count(dst);
        if (!src_c && !src_e) { out.push_back({kind::undeclared_node, src, {}}); continue; }
        if (!dst_c && !dst_e) { out.push_back({kind::undeclared_node, dst, {}}); continue; }
        if (src_c == dst_c) { out.push_back({kind::bad_arc_ends, src, dst}); continue; }
        if (src_c) { cond_out[src].push_back(dst); ev_pre[dst].push_back(src); }
        else { cond_in[dst].push_back(src); ev_post[src].push_back(dst); }
    }
    for (const id& c : d.conditions) {
        if (cond_out[c].size() > 1 || cond_in[c].size() > 1)
            out.push_back({kind::branched_condition, c, {}});
    }
    if (!out.empty()) return out;  // structural basics first; the rest assumes them

    // Acyclicity via Kahn's algorithm; report a node on a cycle if any remain.
    std::map<id, std::size_t> indeg;
    std::map<id, std::vector<id>> succ;
    for (const id& c : d.conditions) indeg[c] = 0;
    for (const id& e : d.events) indeg[e] = 0;
    for (const auto& [src, dst] : d.arcs) {
        ++indeg[dst];
        succ[src].push_back(dst);
    }
    std::vector<id> queue;
    for (const auto& [x, k] : indeg)
        if (k == 0) queue.push_back(x);
    std::size_t seen = 0;
    while (!queue.empty()) {
        id x = queue.back();
        queue.pop_back();
        ++seen;
        for (const id& y : succ[x])
            if (--indeg[y] == 0) queue.push_back(y);
    }
    if (seen != indeg.size()) {
        id witness;
        for (const auto& [x, k] : indeg)
            if (k > 0) { witness = x; break; }
        out.push_back({kind::cyclic, witness, witness});
        return out;
    }

    // pi(M0-conditions) = M0, counted with multiplicity.
    marking initial;
    for (const id& c : d.conditions)
        if (cond_in[c].empty()) initial.insert(d.label.at(c));
    if (initial != n.initial_marking())
        out.push_back({kind::initial_mismatch, {},
                       initial.str() + " != " + n.initial_marking().str()});

    // pi(•t) = •pi(t) and pi(t•) = pi(t)• for every event t.
    for (const id& e : d.events) {
        multiset<id> pre_labels, post_labels;
        for (const id& c : ev_pre[e]) pre_labels.insert(d.label.at(c));
        for (const id& c : ev_post[e]) post_labels.insert(d.label.at(c));
        const id& t = d.label.at(e);
        if (pre_labels != n.preset(t) || post_labels != n.postset(t))
            out.push_back({kind::flow_mismatch, e, {}});
    }
    return out;
}

process process::make(const process_desc& d, const net& n) {
    auto violations = check(d, n);
    if (!violations.empty()) {
        std::ostringstream os;
        os << "invalid process '" << d.name << "':";
        for (const auto& v : violations) os << " " << v.str();
        throw process_validation_error(os.str(), std::move(violations));
    }
    process p;
    p.name_ = d.name;
    p.net_name_ = d.net_name.empty() ? n.name() : d.net_name;
    std::map<id, std::size_t> cidx, eidx;
    for (const id& c : d.conditions) {
        cidx[c] = p.conds_.size();
        p.conds_.push_back({c, d.label.at(c), -1, -1});
    }
    for (const id& e : d.events) {
        eidx[e] = p.events_.size();
        p.events_.push_back({e, d.label.at(e), {}, {}});
    }
    for (const auto& [src, dst] : d.arcs) {
        if (cidx.count(src)) {
            std::size_t c = cidx[src], e = eidx[dst];
            p.conds_[c].consumer = static_cast<std::int64_t>(e);
            p.events_[e].pre.push_back(c);
        } else {
            std::size_t e = eidx[src], c = cidx[dst];
            p.conds_[c].producer = static_cast<std::int64_t>(e);
            p.events_[e].post.push_back(c);
        }
    }
    for (auto& e : p.events_) {
        std::sort(e.pre.begin(), e.pre.end());
        std::sort(e.post.begin(), e.post.end());
    }
    return p;
}

std::optional<std::size_t> process::condition_index(const id& name) const {
    for (std::size_t i = 0; i < conds_.size(); ++i)
        if (conds_[i].name == name) return i;
    return std::nullopt;
}

std::optional<std::size_t> process::event_index(const id& name) const {
    for (std::size_t i = 0; i < events_.size(); ++i)
        if (events_[i].name == name) return i;
    return std::nullopt;
}

std::vector<std::size_t> process::initial_conditions() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < conds_.size(); ++i)
        if (conds_[i].producer < 0) out.push_back(i);
    return out;
}

std::vector<std::size_t> process::end_conditions() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < conds_.size(); ++i)
        if (conds_[i].consumer < 0) out.push_back(i);
    return out;
}

marking process::final_marking() const {
    marking m;
    for (std::size_t i : end_conditions()) m.insert(conds_[i].place);
    return m;
}

multiset<id> process::event_labels() const {
    multiset<id> m;
    for (const auto& e : events_) m.insert(e.trans);
    return m;
}

multiset<id> process::condition_labels() const {
    multiset<id> m;
    for (const auto& c : conds_) m.insert(c.place);
    return m;
}

bool process::strictly_before(std::size_t cond_a, std::size_t cond_b) const {
    if (cond_a == cond_b) return false;
    // Forward search over condition -> consumer event -> postset conditions.
    std::vector<std::size_t> stack{cond_a};
    std::set<std::size_t> seen;
    while (!stack.empty()) {
        std::size_t c = stack.back();
        stack.pop_back();
        std::int64_t e = conds_[c].consumer;
        if (e < 0) continue;
        for (std::size_t next : events_[static_cast<std::size_t>(e)].post) {
            if (next == cond_b) return true;
            if (seen.insert(next).second) stack.push_back(next);
        }
    }
    return false;
}

std::vector<std::pair<id, id>> process::arcs_by_name() const {
    std::vector<std::pair<id, id>> out;
    for (const auto& e : events_) {
        for (std::size_t c : e.pre) out.emplace_back(conds_[c].name, e.name);
        for (std::size_t c : e.post) out.emplace_back(e.name, conds_[c].name);
    }
    std::sort(out.begin(), out.end());
    return out;
}

process_desc process::to_desc() const {
    process_desc d;
    d.name = name_;
    d.net_name = net_name_;
    for (const auto& c : conds_) {
        d.conditions.push_back(c.name);
        d.label[c.name] = c.place;
    }
    for (const auto& e : events_) {
        d.events.push_back(e.name);
        d.label[e.name] = e.trans;
    }
    d.arcs = arcs_by_name();
    return d;
}

std::size_t process::add_condition(id name, id place, std::int64_t producer) {
    conds_.push_back({std::move(name), std::move(place), producer, -1});
    std::size_t idx = conds_.size() - 1;
    if (producer >= 0) {
        auto& post = events_[static_cast<std::size_t>(producer)].post;
        post.push_back(idx);
        std::sort(post.begin(), post.end());
    }
    return idx;
}

std::size_t process::add_event(id name, id trans, std::vector<std::size_t> pre_conds) {
    std::sort(pre_conds.begin(), pre_conds.end());
    events_.push_back({std::move(name), std::move(trans), std::move(pre_conds), {}});
    std::size_t idx = events_.size() - 1;
    for (std::size_t c : events_[idx].pre)
        conds_[c].consumer = static_cast<std::int64_t>(idx);
    return idx;
}

void process::swap_consumers(std::size_t cond_a, std::size_t cond_b) {
    if (cond_a == cond_b) return;
    std::int64_t ea = conds_[cond_a].consumer;
    std::int64_t eb = conds_[cond_b].consumer;
    auto replace = [&](std::int64_t ev, std::size_t from, std::size_t to) {
        if (ev < 0) return;
        auto& pre = events_[static_cast<std::size_t>(ev)].pre;
        std::replace(pre.begin(), pre.end(), from, to);
        std::sort(pre.begin(), pre.end());
    };
    replace(ea, cond_a, cond_b);
    replace(eb, cond_b, cond_a);
    conds_[cond_a].consumer = eb;
    conds_[cond_b].consumer = ea;
}

process initial_process(const net& n) {
    process p = process::empty("p0", n.name());
    std::size_t k = 1;
    for (const auto& [place, count] : n.initial_marking()) {
        for (std::uint64_t i = 0; i < count; ++i)
            p.add_condition("c" + std::to_string(k++), place, -1);
    }
    return p;
}

std::vector<id> process_end(const process& p) {
    std::vector<id> out;
    for (std::size_t i : p.end_conditions()) out.push_back(p.conditions()[i].name);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_prefix(const process& small, const process& big) {
    std::map<id, const process::condition*> big_conds;
    std::map<id, const process::event*> big_events;
    for (const auto& c : big.conditions()) big_conds[c.name] = &c;
    for (const auto& e : big.events()) big_events[e.name] = &e;

    std::set<id> small_nodes;
    for (const auto& c : small.conditions()) {
        auto it = big_conds.find(c.name);
        if (it == big_conds.end() || it->second->place != c.place) return false;
        small_nodes.insert(c.name);
    }
    for (const auto& e : small.events()) {
        auto it = big_events.find(e.name);
        if (it == big_events.end() || it->second->trans != e.trans) return false;
        small_nodes.insert(e.name);
    }

    // Same initial conditions.
    std::set<id> small_init, big_init;
    for (std::size_t i : small.initial_conditions())
        small_init.insert(small.conditions()[i].name);
    for (std::size_t i : big.initial_conditions())
        big_init.insert(big.conditions()[i].name);
    if (small_init != big_init) return false;

    // F' = F restricted to the small node set.
    std::set<std::pair<id, id>> small_arcs, big_restricted;
    for (const auto& a : small.arcs_by_name()) small_arcs.insert(a);
    for (const auto& a : big.arcs_by_name())
        if (small_nodes.count(a.first) && small_nodes.count(a.second))
            big_restricted.insert(a);
    return small_arcs == big_restricted;
}

namespace {

// Event-level strict causal predecessors, as index sets.
std::vector<std::set<std::size_t>> event_pasts(const process& p) {
    std::size_t n = p.events().size();
    std::vector<std::set<std::size_t>> preds(n);
    for (std::size_t e = 0; e < n; ++e)
        for (std::size_t c : p.events()[e].pre) {
            std::int64_t producer = p.conditions()[c].producer;
            if (producer >= 0) preds[e].insert(static_cast<std::size_t>(producer));
        }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t e = 0; e < n; ++e) {
            std::size_t before = preds[e].size();
            std::set<std::size_t> direct = preds[e];
            for (std::size_t q : direct) preds[e].insert(preds[q].begin(), preds[q].end());
            if (preds[e].size() != before) changed = true;
        }
    }
    return preds;
}

}  // namespace

bool is_prefix_up_to_iso(const process& small, const process& big) {
    if (small.event_count() > big.event_count()) return false;
    if (!small.event_labels().subset_of(big.event_labels())) return false;
    canonical_form target = canonical_of(small);
    auto preds = event_pasts(big);
    std::size_t n = big.events().size(), want = small.event_count();

    std::vector<std::size_t> subset;
    std::function<bool(std::size_t, std::size_t)> pick = [&](std::size_t start,
                                                             std::size_t left) -> bool {
        if (left == 0) {
            std::set<std::size_t> in(subset.begin(), subset.end());
            for (std::size_t e : subset)
                for (std::size_t q : preds[e])
                    if (!in.count(q)) return false;
            std::set<id> names;
            for (std::size_t e : subset) names.insert(big.events()[e].name);
            return canonical_of(prefix_by_events(big, names)) == target;
        }
        for (std::size_t e = start; e + left <= n; ++e) {
            subset.push_back(e);
            if (pick(e + 1, left - 1)) return true;
            subset.pop_back();
        }
        return false;
    };
    return pick(0, want);
}

process prefix_by_events(const process& p, const std::set<id>& keep) {
    std::set<std::size_t> kept;
    for (std::size_t e = 0; e < p.events().size(); ++e)
        if (keep.count(p.events()[e].name)) kept.insert(e);

    // Downward closure: every direct causal predecessor of a kept event is kept.
    for (std::size_t e : kept) {
        for (std::size_t c : p.events()[e].pre) {
            std::int64_t producer = p.conditions()[c].producer;
            if (producer >= 0 && !kept.count(static_cast<std::size_t>(producer)))
                throw not_downward_closed_error(p.events()[e].name);
        }
    }

    // Topological order over kept events (input event order may be arbitrary).
    std::vector<std::size_t> order;
    {
        std::map<std::size_t, std::size_t> indeg;
        for (std::size_t e : kept) indeg[e] = 0;
        for (std::size_t e : kept)
            for (std::size_t c : p.events()[e].pre) {
                std::int64_t producer = p.conditions()[c].producer;
                if (producer >= 0 && kept.count(static_cast<std::size_t>(producer))) ++indeg[e];
            }
        std::set<std::size_t> ready;
        for (const auto& [e, k] : indeg)
            if (k == 0) ready.insert(e);
        while (!ready.empty()) {
            std::size_t e = *ready.begin();
            ready.erase(ready.begin());
            order.push_back(e);
            for (std::size_t c : p.events()[e].post) {
                std::int64_t consumer = p.conditions()[c].consumer;
                if (consumer >= 0 && kept.count(static_cast<std::size_t>(consumer)))
                    if (--indeg[static_cast<std::size_t>(consumer)] == 0)
                        ready.insert(static_cast<std::size_t>(consumer));
            }
        }
    }

    // S' = initial conditions plus postsets of kept events.
    process out = process::empty(p.name() + "-prefix", p.net_name());
    std::map<std::size_t, std::size_t> cmap;
    for (std::size_t i = 0; i < p.conditions().size(); ++i)
        if (p.conditions()[i].producer < 0)
            cmap[i] = out.add_condition(p.conditions()[i].name, p.conditions()[i].place, -1);
    for (std::size_t e : order) {
        std::vector<std::size_t> pre;
        for (std::size_t c : p.events()[e].pre) pre.push_back(cmap.at(c));
        std::size_t ne = out.add_event(p.events()[e].name, p.events()[e].trans, std::move(pre));
        for (std::size_t c : p.events()[e].post)
            cmap[c] = out.add_condition(p.conditions()[c].name, p.conditions()[c].place,
                                        static_cast<std::int64_t>(ne));
    }
    return out;
}

}  // namespace bdproc
