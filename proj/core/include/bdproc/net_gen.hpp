#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bdproc/net.hpp"

namespace bdproc {

/// splitmix64; fixed algorithm so generated families are identical across
/// platforms and standard libraries.
struct rng64 {
    std::uint64_t state;
    explicit rng64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
};

/// One random layered (hence acyclic) net candidate. Not filtered.
net random_layered_net(rng64& rng, std::string name);

struct gen_limits {
    std::uint64_t marking_cap = 2000;
    std::size_t enumeration_cap = 25;  // max canonical processes, exhausted
    std::size_t depth_cap = 12;
};

/// True iff the net is a structural conflict net with a complete marking
/// graph and a fully enumerated (finite) process set within the limits.
bool desk_scale_structural_conflict_net(const net& n, const gen_limits& lim);

/// Deterministic family of structural conflict nets suitable for the
/// theorem checks: complete marking graphs, finite process sets, a mix of
/// conflict-free and conflicted instances.
std::vector<net> structural_conflict_family(std::uint64_t seed, std::size_t count,
                                            const gen_limits& lim = {});

}  // namespace bdproc
