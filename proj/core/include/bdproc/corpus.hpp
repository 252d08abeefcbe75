#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bdproc/net.hpp"
#include "bdproc/verdict.hpp"

namespace bdproc {

/// A built-in example net together with the facts the check suite holds it
/// to. Counts marked `std::optional` are asserted only when set; process
/// counts marked as recorded are regression values from a first run of this
/// tool, not external ground truth.
struct corpus_net {
    std::string name;
    net n;

    struct expectations {
        std::optional<verdict> binary_conflict_free;
        std::optional<verdict> conflict_free;
        std::optional<verdict> persistent;
        std::optional<verdict> structural_conflict_net;
        std::optional<verdict> reachable_structural_conflict;
        bool has_structural_pairs = false;
        std::optional<std::size_t> reachable_marking_count;
        std::optional<std::size_t> maximal_process_count;  // at the default check depth
        std::optional<std::size_t> maximal_class_count;
        std::optional<std::size_t> process_count_depth3;   // recorded regression value
    } expect;
};

/// The figure nets: fig1..fig6 with fig4 split into its two nets.
std::vector<corpus_net> corpus();

const corpus_net& corpus_by_name(const std::string& name);

}  // namespace bdproc
