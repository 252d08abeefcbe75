#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bdproc/multiset.hpp"

namespace bdproc {

using id = std::string;
using marking = multiset<id>;
using step = multiset<id>;

/// Unvalidated description of a place/transition net, as it comes out of a
/// parser or a test. `net::check` lists everything wrong with it.
struct net_desc {
    std::string name;
    std::vector<id> places;
    std::vector<id> transitions;
    struct arc {
        id src, dst;
        std::uint64_t weight = 1;
    };
    std::vector<arc> arcs;
    std::vector<std::pair<id, std::uint64_t>> marking;  // tokens per place
};

struct net_violation {
    enum class kind {
        empty_preset,    // transition with no incoming arc
        undeclared_id,   // arc endpoint or marked place never declared
        id_clash,        // same id used as both place and transition
        zero_weight_arc,
        bad_arc_ends,    // place->place or transition->transition
    };
    kind what;
    id a, b;  // b only for arcs
    std::string str() const;
};

struct net_validation_error : error {
    net_validation_error(std::string what, std::vector<net_violation> v)
        : error(std::move(what)), violations(std::move(v)) {}
    std::vector<net_violation> violations;
};

/// A validated net (S, T, F, M0). Immutable after construction.
class net {
public:
    static std::vector<net_violation> check(const net_desc& d);
    static net make(const net_desc& d);  // throws net_validation_error

    const std::string& name() const { return name_; }
    const std::set<id>& places() const { return places_; }
    const std::set<id>& transitions() const { return transitions_; }
    const std::map<std::pair<id, id>, std::uint64_t>& flow() const { return flow_; }
    const marking& initial_marking() const { return m0_; }

    bool is_place(const id& x) const { return places_.count(x) != 0; }
    bool is_transition(const id& x) const { return transitions_.count(x) != 0; }

    std::uint64_t weight(const id& src, const id& dst) const {
        auto it = flow_.find({src, dst});
        return it == flow_.end() ? 0 : it->second;
    }

    /// •x and x•; throws undeclared_id_error for unknown nodes.
    const multiset<id>& preset(const id& x) const;
    const multiset<id>& postset(const id& x) const;

    /// Weighted-sum extension of • and • to multisets of nodes.
    multiset<id> preset(const multiset<id>& xs) const;
    multiset<id> postset(const multiset<id>& xs) const;

private:
    net() = default;
    std::string name_;
    std::set<id> places_, transitions_;
    std::map<std::pair<id, id>, std::uint64_t> flow_;
    marking m0_;
    std::map<id, multiset<id>> pre_, post_;
};

/// True iff •G ⊆ m. Throws empty_step_error for an empty step and
/// undeclared_id_error for unknown transitions.
bool enabled(const net& n, const marking& m, const step& g);

/// (m - •G) + G•. Throws not_enabled_error when !enabled(n, m, g).
marking fire_step(const net& n, const marking& m, const step& g);

/// Folds singleton steps over the word; empty word returns m unchanged.
/// A not_enabled_error carries the first failing position.
marking fire_sequence(const net& n, marking m, std::span<const id> word);

}  // namespace bdproc
