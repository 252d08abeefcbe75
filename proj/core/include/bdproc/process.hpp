#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bdproc/net.hpp"

namespace bdproc {

/// Unvalidated occurrence-net description plus labeling, as parsed or built
/// by hand. Arcs all have weight 1.
struct process_desc {
    std::string name;
    std::string net_name;
    std::vector<id> conditions;
    std::vector<id> events;
    std::vector<std::pair<id, id>> arcs;
    std::map<id, id> label;  // condition -> place, event -> transition
};

struct process_violation {
    enum class kind {
        branched_condition,  // |•s| > 1 or |s•| > 1
        cyclic,
        label_clash,       // missing label, or label of the wrong kind
        initial_mismatch,  // labeled initial conditions != M0
        flow_mismatch,     // pi(•t) != •pi(t) or pi(t•) != pi(t)• for event t
        undeclared_node,   // arc endpoint not declared
        bad_arc_ends,      // condition->condition or event->event
        duplicate_node,
    };
    kind what;
    id node;  // offending node (or arc source)
    std::string detail;
    std::string str() const;
};

struct process_validation_error : error {
    process_validation_error(std::string what, std::vector<process_violation> v)
        : error(std::move(what)), violations(std::move(v)) {}
    std::vector<process_violation> violations;
};

struct not_downward_closed_error : error {
    explicit not_downward_closed_error(const id& witness)
        : error("event set not causally downward-closed, missing past of '" + witness + "'"),
          witness(witness) {}
    id witness;
};

/// A validated GR-process of some net: an occurrence net (conditions with at
/// most one producer and one consumer, acyclic flow) with a labeling into the
/// net's places and transitions. Conditions and events are indexed; names are
/// kept for the file formats and for prefix checks.
class process {
public:
    struct condition {
        id name;
        id place;                   // pi-label
        std::int64_t producer = -1; // event index, -1 for initial conditions
        std::int64_t consumer = -1; // event index, -1 for end conditions
    };
    struct event {
        id name;
        id trans;  // pi-label
        std::vector<std::size_t> pre;   // condition indices, sorted
        std::vector<std::size_t> post;  // condition indices, sorted
    };

    static std::vector<process_violation> check(const process_desc& d, const net& n);
    static process make(const process_desc& d, const net& n);  // throws

    const std::string& name() const { return name_; }
    const std::string& net_name() const { return net_name_; }
    void set_name(std::string s) { name_ = std::move(s); }

    const std::vector<condition>& conditions() const { return conds_; }
    const std::vector<event>& events() const { return events_; }
    std::size_t event_count() const { return events_.size(); }

    std::optional<std::size_t> condition_index(const id& name) const;
    std::optional<std::size_t> event_index(const id& name) const;

    /// Initial conditions {s | •s = ∅}, as sorted indices.
    std::vector<std::size_t> initial_conditions() const;

    /// The end of the process, {s | s• = ∅}, as sorted indices.
    std::vector<std::size_t> end_conditions() const;

    /// pi(P°), the marking left behind by a finite process.
    marking final_marking() const;

    /// Multiset of transition labels of all events.
    multiset<id> event_labels() const;
    multiset<id> condition_labels() const;

    /// True iff condition a causally precedes condition b (a F+ b).
    bool strictly_before(std::size_t cond_a, std::size_t cond_b) const;

    /// Arc list by node names, sorted; used by prefix checks and serialization.
    std::vector<std::pair<id, id>> arcs_by_name() const;

    process_desc to_desc() const;

    // Mutators used by the construction paths (extension, swap). They keep
    // the invariants; everything else treats a process as immutable.
    std::size_t add_condition(id name, id place, std::int64_t producer);
    std::size_t add_event(id name, id trans, std::vector<std::size_t> pre_conds);
    void swap_consumers(std::size_t cond_a, std::size_t cond_b);

    static process empty(std::string name, std::string net_name) {
        process p;
        p.name_ = std::move(name);
        p.net_name_ = std::move(net_name);
        return p;
    }

    bool operator==(const process&) const = default;

private:
    process() = default;
    std::string name_ = "p";
    std::string net_name_;
    std::vector<condition> conds_;
    std::vector<event> events_;
};

/// The process with no events and one condition per token of M0.
process initial_process(const net& n);

/// Condition names of {s | s• = ∅}, sorted.
std::vector<id> process_end(const process& p);

/// Identity-embedding prefix test per the definition: subsets, equal initial
/// conditions, restricted flow and labeling.
bool is_prefix(const process& small, const process& big);

/// Prefix test up to isomorphism: some isomorphic copy of `small` is a
/// prefix of `big`.
bool is_prefix_up_to_iso(const process& small, const process& big);

/// The unique prefix determined by a causally downward-closed event set.
/// Throws not_downward_closed_error naming a missing predecessor.
process prefix_by_events(const process& p, const std::set<id>& keep);

}  // namespace bdproc
