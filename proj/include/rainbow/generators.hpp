#pragma once

#include "rainbow/graph.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace rainbow {

enum class Family {
    complete,
    path,
    cycle,
    wheel,
    star,
    petersen,
    complete_minus_matching,
    complete_bipartite,
    bipartite_minus_matching,
    random_min_degree,
    random_diam2,
};

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view text);
bool is_seeded(Family family);

/// Parameters of a graph family. `n` is the total order except for the
/// bipartite families, which use s (and t) for the class sizes.
///   wheel:  hub 0, rim 1..n-1.        star: center 0, leaves 1..n-1.
///   complete_bipartite: classes {0..s-1} and {s..s+t-1}.
///   bipartite_minus_matching: K_{s,s} minus {i, s+i}.
struct FamilySpec {
    Family family = Family::complete;
    int n = 0;
    int s = 0;
    int t = 0;
    int delta_target = 0;
    std::uint64_t seed = 0;
    int max_retries = 100;
};

/// Throws std::invalid_argument for infeasible parameters and
/// std::runtime_error when the retry budget of a random family runs out.
Graph generate(const FamilySpec &spec);

} // namespace rainbow
