#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>

#include "bdproc/marking_graph.hpp"
#include "bdproc/net.hpp"
#include "bdproc/verdict.hpp"

namespace bdproc {

/// True iff g is not enabled at m while every member transition, with its
/// multiplicity, is: ¬M→G ∧ ∀t∈G. M→(G↾{t}).
bool in_conflict(const net& n, const marking& m, const step& g);

struct conflict_witness {
    enum class kind {
        semantic,
        binary,
        persistence_violation,
        reachable_structural,
        step_with_shared_preplace,
    };
    kind what;
    marking at;
    step g;                   // the offending multiset (or pair)
    std::optional<id> fired;  // persistence: the transition fired first
    std::string str() const;
};

struct analysis {
    verdict v = verdict::unknown;
    std::optional<conflict_witness> witness;
};

/// No size-2 multiset is in conflict at any reachable marking.
analysis is_binary_conflict_free(const net& n, const marking_graph& g);

/// No finite non-empty multiset is in conflict at any reachable marking.
/// The search per marking is bounded: the multiplicity of t never exceeds
/// the largest k with k·•t ⊆ M. Witnesses are reported at the earliest
/// marking in exploration order, smallest multiset first at that marking.
analysis is_conflict_free(const net& n, const marking_graph& g);

/// Firing one enabled transition never disables another.
analysis is_persistent(const net& n, const marking_graph& g);

/// {{t,u} | t ≠ u, •t ∩ •u ≠ ∅}; purely syntactic.
std::set<std::pair<id, id>> structural_conflict_pairs(const net& n);

struct reachable_structural {
    verdict v = verdict::unknown;
    std::optional<std::tuple<marking, id, id>> witness;
};

/// Some reachable marking enables two distinct preplace-sharing transitions.
reachable_structural has_reachable_structural_conflict(const net& n, const marking_graph& g);

/// No enabled step ever contains two transitions (or one twice) with
/// overlapping presets.
analysis is_structural_conflict_net(const net& n, const marking_graph& g);

struct classification {
    analysis binary_conflict_free;
    analysis conflict_free;
    analysis persistent;
    analysis structural_conflict_net;
    reachable_structural reachable_structural_conflict;
    std::set<std::pair<id, id>> structural_pairs;
    std::size_t markings = 0;
    std::size_t edges = 0;
    bool exploration_complete = false;
    std::uint64_t cap = 0;

    bool all_definite() const {
        return definite(binary_conflict_free.v) && definite(conflict_free.v) &&
               definite(persistent.v) && definite(structural_conflict_net.v) &&
               definite(reachable_structural_conflict.v);
    }
};

/// Runs the whole taxonomy over one shared bounded exploration.
classification classify(const net& n, std::uint64_t cap);

}  // namespace bdproc
