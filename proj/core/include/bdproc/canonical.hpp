#pragma once

#include <compare>
#include <string>

#include "bdproc/process.hpp"

namespace bdproc {

/// Canonical byte encoding of a process. Two processes have equal canonical
/// forms iff they are isomorphic by a bijection that respects the labeling
/// into the underlying net.
struct canonical_form {
    std::string bytes;
    auto operator<=>(const canonical_form&) const = default;
};

canonical_form canonical_of(const process& p);

/// A copy of `p` with nodes renamed c1..cn / e1..em in canonical order.
/// Isomorphic processes produce identical copies (up to the name metadata).
process canonical_copy(const process& p);

bool isomorphic(const process& p, const process& q);

}  // namespace bdproc
