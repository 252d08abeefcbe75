#pragma once

#include <set>
#include <utility>
#include <vector>

#include "bdproc/canonical.hpp"
#include "bdproc/process.hpp"

namespace bdproc {

/// One-event extensions of a finite process: for every transition and every
/// choice of end conditions matching its preset by label, a fresh event plus
/// fresh postset conditions. With `dedup` the results are one per
/// isomorphism class, ordered by (transition, canonical form); without it,
/// every concrete choice is returned.
std::vector<std::pair<id, process>> successors(const process& p, const net& n,
                                               bool dedup = true);

struct enumeration {
    std::vector<process> reps;          // one per class; level order, then canonical order
    std::vector<std::size_t> levels;    // event count per rep
    std::set<canonical_form> forms;
    bool complete = false;              // false iff the form cap truncated the search
};

/// All finite processes with at most `depth` events, up to isomorphism, by
/// breadth-first search over successors.
enumeration enumerate_processes(const net& n, std::size_t depth, std::size_t cap);

/// Representatives with no one-event extension, in enumeration order.
std::vector<process> maximal_processes(const enumeration& e, const net& n);

}  // namespace bdproc
