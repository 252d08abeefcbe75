#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bdproc/canonical.hpp"
#include "bdproc/process.hpp"
#include "bdproc/verdict.hpp"

namespace bdproc {

inline constexpr std::uint64_t default_budget = 100000;

/// Two equally labeled, causally incomparable conditions whose outgoing
/// arcs are exchanged.
struct swap_move {
    id p, q;
};

struct swap_error : error {
    explicit swap_error(const std::string& what) : error(what) {}
};

/// The swap transformation. Throws swap_error when the move is illegal
/// (unknown condition, label mismatch, or causally ordered pair).
process swap_conditions(const process& p, const swap_move& move);

/// All legal moves over distinct condition pairs, in index order.
std::vector<swap_move> legal_swaps(const process& p);

/// One-step swapping equivalence: some swap of `p` is isomorphic to `q`.
/// Note the empty process is not one-step equivalent to itself (no
/// conditions to pick), while reflexivity holds for any non-empty process.
bool one_step_equiv(const process& p, const process& q);

struct equiv_result {
    verdict v = verdict::unknown;
    std::vector<swap_move> path;  // applies successively to `start` when holds
    process start;                // the side the closure was explored from
    bool started_from_first = true;
    std::uint64_t forms_explored = 0;
};

/// Decides p ≡ q under the reflexive-transitive closure of one-step swaps,
/// by BFS over canonical forms from the side with the smaller encoding.
/// `fails` requires the explored closure to be complete within budget.
equiv_result swap_equiv(const process& p, const process& q,
                        std::uint64_t budget = default_budget);

struct preorder_result {
    verdict v = verdict::unknown;
    std::optional<process> witness;  // extension of p swap-equivalent to q
    std::uint64_t forms_explored = 0;
};

/// Finite-process BD-preorder: p is below q iff some extension of p with
/// |q| events is swap-equivalent to q. Extensions are searched breadth-first
/// with per-level equivalence-class deduplication.
preorder_result bd_preorder_fin(const process& p, const process& q, const net& n,
                                std::uint64_t budget = default_budget);

struct approx_result {
    std::set<canonical_form> forms;
    std::vector<process> reps;
    bool complete = false;
};

/// Finite approximations of p: the closure of its prefixes under one-step
/// swaps and prefix-taking, restricted to at most `depth` events.
approx_result bd_approximations(const process& p, std::size_t depth, std::size_t cap);

struct extension_result {
    verdict v = verdict::unknown;
    std::optional<std::pair<process, process>> witness;  // P' >= p, Q' >= q, P' ≡ Q'
    std::uint64_t forms_explored = 0;
};

/// Searches for a common extension: P' >= p and Q' >= q with P' ≡ Q'.
/// `fails` only when both extension searches exhaust (every branch reaches
/// a maximal process) with all comparisons definite.
extension_result common_extension(const process& p, const process& q, const net& n,
                                  std::uint64_t budget = default_budget,
                                  std::size_t max_added = 64);

}  // namespace bdproc
