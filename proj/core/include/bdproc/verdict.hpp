#pragma once

#include <string>

namespace bdproc {

/// Three-valued outcome of a bounded decision procedure. `unknown` means the
/// search budget ran out before the answer was established either way.
enum class verdict { holds, fails, unknown };

inline const char* to_string(verdict v) {
    switch (v) {
        case verdict::holds: return "holds";
        case verdict::fails: return "fails";
        default: return "unknown";
    }
}

inline bool definite(verdict v) { return v != verdict::unknown; }

}  // namespace bdproc
