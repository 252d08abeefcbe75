#include "bdproc/net.hpp"

#include <sstream>

namespace bdproc {

std::string net_violation::str() const {
    switch (what) {
        case kind::empty_preset: return "EmptyPreset(" + a + ")";
        case kind::undeclared_id: return "UndeclaredId(" + a + ")";
        case kind::id_clash: return "IdClash(" + a + ")";
        case kind::zero_weight_arc: return "ZeroWeightArc(" + a + "," + b + ")";
        case kind::bad_arc_ends: return "BadArcEnds(" + a + "," + b + ")";
    }
    return "?";
}

std::vector<net_violation> net::check(const net_desc& d) {
    std::vector<net_violation> out;
    std::set<id> places(d.places.begin(), d.places.end());
    std::set<id> transitions(d.transitions.begin(), d.transitions.end());

    for (const id& t : transitions)
        if (places.count(t))
            out.push_back({net_violation::kind::id_clash, t, {}});

    auto declared = [&](const id& x) { return places.count(x) || transitions.count(x); };

    std::set<id> with_preset;
    for (const auto& a : d.arcs) {
        if (!declared(a.src)) out.push_back({net_violation::kind::undeclared_id, a.src, {}});
        if (!declared(a.dst)) out.push_back({net_violation::kind::undeclared_id, a.dst, {}});
        if (a.weight == 0) out.push_back({net_violation::kind::zero_weight_arc, a.src, a.dst});
        if (declared(a.src) && declared(a.dst)) {
            bool ok = (places.count(a.src) && transitions.count(a.dst)) ||
                      (transitions.count(a.src) && places.count(a.dst));
            if (!ok) out.push_back({net_violation::kind::bad_arc_ends, a.src, a.dst});
            if (ok && transitions.count(a.dst) && a.weight > 0) with_preset.insert(a.dst);
        }
    }
    for (const id& t : transitions)
        if (!with_preset.count(t) && !places.count(t))
            out.push_back({net_violation::kind::empty_preset, t, {}});

    for (const auto& [p, k] : d.marking) {
        (void)k;
        if (!places.count(p)) out.push_back({net_violation::kind::undeclared_id, p, {}});
    }
    return out;
}

net net::make(const net_desc& d) {
    auto violations = check(d);
    if (!violations.empty()) {
        std::ostringstream os;
        os << "invalid net '" << d.name << "':";
        for (const auto& v : violations) os << " " << v.str();
        throw net_validation_error(os.str(), std::move(violations));
    }
    net n;
    n.name_ = d.name;
    n.places_.insert(d.places.begin(), d.places.end());
    n.transitions_.insert(d.transitions.begin(), d.transitions.end());
    for (const auto& a : d.arcs) {
        auto& w = n.flow_[{a.src, a.dst}];
        w = checked_add(w, a.weight);
    }
    for (const auto& [p, k] : d.marking) n.m0_.insert(p, k);
    for (const id& x : n.places_) {
        n.pre_.emplace(x, multiset<id>{});
        n.post_.emplace(x, multiset<id>{});
    }
    for (const id& x : n.transitions_) {
        n.pre_.emplace(x, multiset<id>{});
        n.post_.emplace(x, multiset<id>{});
    }
    for (const auto& [arc, w] : n.flow_) {
        n.post_[arc.first].insert(arc.second, w);
        n.pre_[arc.second].insert(arc.first, w);
    }
    return n;
}

const multiset<id>& net::preset(const id& x) const {
    auto it = pre_.find(x);
    if (it == pre_.end()) throw undeclared_id_error(x);
    return it->second;
}

const multiset<id>& net::postset(const id& x) const {
    auto it = post_.find(x);
    if (it == post_.end()) throw undeclared_id_error(x);
    return it->second;
}

multiset<id> net::preset(const multiset<id>& xs) const {
    multiset<id> r;
    for (const auto& [x, k] : xs) {
        for (const auto& [y, w] : preset(x)) r.insert(y, checked_mul(w, k));
    }
    return r;
}

multiset<id> net::postset(const multiset<id>& xs) const {
    multiset<id> r;
    for (const auto& [x, k] : xs) {
        for (const auto& [y, w] : postset(x)) r.insert(y, checked_mul(w, k));
    }
    return r;
}

bool enabled(const net& n, const marking& m, const step& g) {
    if (g.empty()) throw empty_step_error();
    for (const auto& [t, k] : g) {
        (void)k;
        if (!n.is_transition(t)) throw undeclared_id_error(t);
    }
    return n.preset(g).subset_of(m);
}

marking fire_step(const net& n, const marking& m, const step& g) {
    if (!enabled(n, m, g))
        throw not_enabled_error("step " + g.str() + " not enabled at " + m.str());
    return m.monus(n.preset(g)).plus(n.postset(g));
}

marking fire_sequence(const net& n, marking m, std::span<const id> word) {
    for (std::size_t i = 0; i < word.size(); ++i) {
        step g;
        g.insert(word[i]);
        if (!enabled(n, m, g))
            throw not_enabled_error("transition '" + word[i] + "' not enabled at " +
                                        m.str() + " (position " + std::to_string(i) + ")",
                                    i);
        m = fire_step(n, m, g);
    }
    return m;
}

}  // namespace bdproc
