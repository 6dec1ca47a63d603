#pragma once

#include "rainbow/graph.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rainbow {

using Rational = boost::rational<std::int64_t>;

enum class TheoremId { T1_1, T1_2, T1_3, T1_4, T1_5, T1_6, T1_7 };

inline constexpr TheoremId kAllTheorems[] = {TheoremId::T1_1, TheoremId::T1_2, TheoremId::T1_3, TheoremId::T1_4,
                                             TheoremId::T1_5, TheoremId::T1_6, TheoremId::T1_7};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view text);

/// Theorems quoted from earlier work state log without a base; base 2 is used.
inline constexpr int kPriorWorkLogBase = 2;
/// Verdicts within this relative distance of the threshold are flagged.
inline constexpr long double kNearThresholdBand = 1e-12L;

// ---- probability arithmetic ------------------------------------------------

/// Probability that a fixed path of the given length (2 or 3) is not rainbow
/// under a uniform k-coloring: 1/k, or (3k-2)/k^2.
Rational path_failure_prob(int k, int length);

/// p^t for real-valued t.
long double pair_failure_bound(long double p, long double t);
/// p^t exactly. Throws std::overflow_error if the result does not fit.
Rational pair_failure_bound(const Rational &p, int t);

/// C(n,2)/n^2 = (n-1)/(2n).
Rational union_bound_failure(std::int64_t n);

/// max(0, d_u + d_v - (n - 2)): common neighbors forced for a non-adjacent pair.
int common_neighbor_lower_bound(int d_u, int d_v, int n);

/// j with k^j == n, if n is an exact power of k.
std::optional<int> exact_log(std::int64_t k, std::int64_t n);

/// log_{k^2/(3k-2)} k, the ratio between the length-3 and length-2 path counts.
long double three_path_exponent(int k);

/// Real-valued hypothesis threshold for the theorem's measured quantity.
/// Throws std::invalid_argument outside the theorem's k range or for n < 2.
long double required_threshold(TheoremId id, int k, int n);

/// Name of the measured quantity the threshold applies to.
std::string_view threshold_quantity(TheoremId id);

// ---- records ---------------------------------------------------------------

enum class CheckStatus { satisfied, unsatisfied, not_applicable };
std::string_view to_string(CheckStatus status);

/// Which argument covers a non-adjacent pair of a diameter-2 graph.
struct PairBranch {
    Vertex u = 0;
    Vertex v = 0;
    int common = 0;
    bool many_common = false; // common >= 2 log_k n
    int a_size = 0;           // |N(u) \ N(v)|
    int b_size = 0;           // |N(v) \ N(u)|
    int a_paths = 0;          // x in A with some y in N(v) adjacent to x
    bool a_meets_bound = false;

    bool operator==(const PairBranch &) const = default;
};

struct TheoremCheck {
    TheoremId theorem = TheoremId::T1_3;
    int k = 0;
    CheckStatus status = CheckStatus::not_applicable;
    std::map<std::string, double> measured;
    std::string quantity; // key in measured compared against threshold
    std::optional<double> threshold;
    bool near_threshold = false;
    std::string conclusion; // e.g. "rc <= 3", "rc = 2"
    std::optional<int> log_base;
    std::vector<std::string> notes;
    std::vector<PairBranch> branches; // T1_7 only

    bool satisfied() const { return status == CheckStatus::satisfied; }
    bool operator==(const TheoremCheck &) const = default;
};

struct BoundReport {
    TheoremId theorem = TheoremId::T1_3;
    int k = 0;
    int n = 0;
    int path_length = 2;
    Rational per_path_failure;
    double path_count = 0;
    double per_pair_failure = 0;
    std::int64_t pair_population = 0;
    double union_failure = 0;
    double success_lower_bound = 0;
    Rational union_bound; // C(n,2)/n^2

    bool operator==(const BoundReport &) const = default;
};

/// Requires g connected.
TheoremCheck check_theorem(const Graph &g, int k, TheoremId id);

/// Union-bound chain of the theorem's proof at the hypothesis path count.
/// Defined for T1_3, T1_4, T1_5, T1_7.
BoundReport bound_report(TheoremId id, int k, int n);
bool has_bound_report(TheoremId id);

/// Smallest common neighborhood over pairs inside the same class.
std::optional<int> min_same_class_common_neighbors(const Graph &g, const Bipartition &parts);

/// Minimum-degree hypothesis of T1_3 is attainable on n vertices without
/// being complete: n - 2 >= n/2 - 1 + log_k n.
bool min_degree_hypothesis_feasible(int n, int k);

} // namespace rainbow
