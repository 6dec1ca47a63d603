#include "rainbow/theorems.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <stdexcept>

namespace rainbow {

namespace {

long double log_base(long double base, long double x) { return std::log(x) / std::log(base); }

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("rational power overflows 64 bits");
    return out;
}

void require_k(TheoremId id, int k)
{
    switch (id) {
    case TheoremId::T1_3:
    case TheoremId::T1_4:
        if (k < 2)
            throw std::invalid_argument(std::string(to_string(id)) + " requires k >= 2");
        break;
    case TheoremId::T1_5:
    case TheoremId::T1_7:
        if (k < 3)
            throw std::invalid_argument(std::string(to_string(id)) +
                                        " requires k >= 3 (log base k^2/(3k-2) is 1 at k = 2)");
        break;
    default:
        break;
    }
}

std::string conclusion_for(TheoremId id, int k)
{
    switch (id) {
    case TheoremId::T1_1:
        return "rc = 2";
    case TheoremId::T1_2:
        return "rc = 3";
    case TheoremId::T1_6:
        return "rc <= 3";
    default:
        return "rc <= " + std::to_string(k);
    }
}

bool is_prior_work(TheoremId id)
{
    return id == TheoremId::T1_1 || id == TheoremId::T1_2 || id == TheoremId::T1_6;
}

} // namespace

std::string_view to_string(TheoremId id)
{
    switch (id) {
    case TheoremId::T1_1:
        return "T1_1";
    case TheoremId::T1_2:
        return "T1_2";
    case TheoremId::T1_3:
        return "T1_3";
    case TheoremId::T1_4:
        return "T1_4";
    case TheoremId::T1_5:
        return "T1_5";
    case TheoremId::T1_6:
        return "T1_6";
    case TheoremId::T1_7:
        return "T1_7";
    }
    return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view text)
{
    for (TheoremId id : kAllTheorems)
        if (to_string(id) == text)
            return id;
    return std::nullopt;
}

std::string_view to_string(CheckStatus status)
{
    switch (status) {
    case CheckStatus::satisfied:
        return "satisfied";
    case CheckStatus::unsatisfied:
        return "unsatisfied";
    case CheckStatus::not_applicable:
        return "not_applicable";
    }
    return "?";
}

Rational path_failure_prob(int k, int length)
{
    if (length == 2) {
        if (k < 1)
            throw std::invalid_argument("palette size must be at least 1");
        return Rational(1, k);
    }
    if (length == 3) {
        if (k < 2)
            throw std::invalid_argument("length-3 failure probability needs k >= 2");
        return Rational(3LL * k - 2, static_cast<std::int64_t>(k) * k);
    }
    throw std::invalid_argument("unsupported path length " + std::to_string(length));
}

long double pair_failure_bound(long double p, long double t)
{
    if (p < 0 || p > 1 || t < 0)
        throw std::invalid_argument("pair_failure_bound requires 0 <= p <= 1 and t >= 0");
    if (t == 0)
        return 1;
    return std::pow(p, t);
}

Rational pair_failure_bound(const Rational &p, int t)
{
    if (p < 0 || p > 1 || t < 0)
        throw std::invalid_argument("pair_failure_bound requires 0 <= p <= 1 and t >= 0");
    std::int64_t num = 1, den = 1;
    for (int i = 0; i < t; ++i) {
        num = checked_mul(num, p.numerator());
        den = checked_mul(den, p.denominator());
    }
    return Rational(num, den);
}

Rational union_bound_failure(std::int64_t n)
{
    if (n < 2)
        throw std::invalid_argument("union bound needs n >= 2");
    return Rational(n - 1, 2 * n);
}

int common_neighbor_lower_bound(int d_u, int d_v, int n) { return std::max(0, d_u + d_v - (n - 2)); }

std::optional<int> exact_log(std::int64_t k, std::int64_t n)
{
    if (k < 2 || n < 1)
        return std::nullopt;
    int j = 0;
    while (n % k == 0) {
        n /= k;
        ++j;
    }
    return n == 1 ? std::optional<int>(j) : std::nullopt;
}

long double three_path_exponent(int k)
{
    if (k < 3)
        throw std::invalid_argument("three_path_exponent requires k >= 3");
    const long double base = static_cast<long double>(k) * k / (3.0L * k - 2.0L);
    return log_base(base, k);
}

long double required_threshold(TheoremId id, int k, int n)
{
    if (n < 2)
        throw std::invalid_argument("threshold needs n >= 2");
    require_k(id, k);
    const long double nn = n;
    switch (id) {
    case TheoremId::T1_1:
        return nn / 2 + log_base(kPriorWorkLogBase, nn);
    case TheoremId::T1_2:
        return 2.0L / log_base(kPriorWorkLogBase, 9.0L / 7.0L) * log_base(kPriorWorkLogBase, nn);
    case TheoremId::T1_3:
        return nn / 2 - 1 + log_base(k, nn);
    case TheoremId::T1_4:
        return nn - 2 + 2 * log_base(k, nn);
    case TheoremId::T1_5:
        return 2 * three_path_exponent(k) * log_base(k, nn);
    case TheoremId::T1_6:
        return 8 * log_base(kPriorWorkLogBase, nn);
    case TheoremId::T1_7:
        return 2 * (1 + three_path_exponent(k)) * log_base(k, nn);
    }
    throw std::logic_error("unknown theorem");
}

std::string_view threshold_quantity(TheoremId id)
{
    switch (id) {
    case TheoremId::T1_4:
        return "sigma2";
    case TheoremId::T1_2:
    case TheoremId::T1_5:
        return "min_common_neighbors_same_class";
    default:
        return "delta";
    }
}

bool min_degree_hypothesis_feasible(int n, int k)
{
    return n >= 2 && k >= 2 && static_cast<long double>(n - 2) >= required_threshold(TheoremId::T1_3, k, n);
}

std::optional<int> min_same_class_common_neighbors(const Graph &g, const Bipartition &parts)
{
    std::optional<int> best;
    for (const auto *cls : {&parts.class_a, &parts.class_b})
        for (std::size_t i = 0; i < cls->size(); ++i)
            for (std::size_t j = i + 1; j < cls->size(); ++j) {
                const int c = common_neighbor_count(g, (*cls)[i], (*cls)[j]);
                best = best ? std::min(*best, c) : c;
            }
    return best;
}

namespace {

void compare(TheoremCheck &check, long double measured, long double threshold)
{
    check.threshold = static_cast<double>(threshold);
    check.status = measured >= threshold ? CheckStatus::satisfied : CheckStatus::unsatisfied;
    check.near_threshold =
        std::fabs(measured - threshold) <= kNearThresholdBand * std::max(1.0L, std::fabs(threshold));
}

std::vector<PairBranch> diameter_two_branches(const Graph &g, int k)
{
    const long double n = g.order();
    const long double many = 2 * log_base(k, n);
    const long double paths_needed = 2 * three_path_exponent(k) * log_base(k, n);
    std::vector<PairBranch> out;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (g.adjacent(u, v))
                continue;
            PairBranch b;
            b.u = u;
            b.v = v;
            const auto common = common_neighbors(g, u, v);
            b.common = static_cast<int>(common.size());
            b.many_common = b.common >= many;
            b.a_size = g.degree(u) - b.common;
            b.b_size = g.degree(v) - b.common;
            if (!b.many_common) {
                auto nu = g.neighbors(u);
                for (Vertex x : nu) {
                    if (std::binary_search(common.begin(), common.end(), x))
                        continue;
                    auto nx = g.neighbors(x);
                    auto nv = g.neighbors(v);
                    std::vector<Vertex> y;
                    std::set_intersection(nx.begin(), nx.end(), nv.begin(), nv.end(), std::back_inserter(y));
                    if (!y.empty())
                        ++b.a_paths;
                }
                b.a_meets_bound = b.a_paths >= paths_needed;
            }
            out.push_back(b);
        }
    return out;
}

} // namespace

TheoremCheck check_theorem(const Graph &g, int k, TheoremId id)
{
    if (g.order() < 1 || !is_connected(g))
        throw std::invalid_argument("check_theorem requires a connected graph");

    TheoremCheck check;
    check.theorem = id;
    check.k = k;
    check.conclusion = conclusion_for(id, k);
    if (is_prior_work(id))
        check.log_base = kPriorWorkLogBase;

    const int n = g.order();
    check.measured["n"] = n;

    if (n < 2) {
        check.notes.push_back("graph has fewer than two vertices");
        return check;
    }
    try {
        require_k(id, k);
    } catch (const std::invalid_argument &e) {
        check.notes.push_back(e.what());
        return check;
    }

    switch (id) {
    case TheoremId::T1_1:
    case TheoremId::T1_3:
    case TheoremId::T1_4: {
        check.measured["delta"] = min_degree(g);
        if (g.is_complete()) {
            check.notes.push_back("graph is complete");
            return check;
        }
        check.measured["sigma2"] = sigma2(g);
        check.quantity = threshold_quantity(id);
        compare(check, check.measured[check.quantity], required_threshold(id, k, n));
        break;
    }
    case TheoremId::T1_2:
    case TheoremId::T1_5: {
        auto parts = bipartition(g);
        if (!parts) {
            check.notes.push_back("graph is not bipartite");
            return check;
        }
        if (is_complete_bipartite(g, *parts)) {
            check.notes.push_back("graph is complete bipartite; its rc is known from earlier work on complete "
                                  "multipartite graphs");
            return check;
        }
        check.measured["class_a_size"] = static_cast<long double>(parts->class_a.size());
        check.measured["class_b_size"] = static_cast<long double>(parts->class_b.size());
        check.measured["min_common_neighbors_same_class"] = *min_same_class_common_neighbors(g, *parts);
        check.quantity = threshold_quantity(id);
        compare(check, check.measured[check.quantity], required_threshold(id, k, n));
        if (id == TheoremId::T1_5)
            check.notes.push_back("distance-3 paths through a fixed neighbor share one edge; the product bound "
                                  "holds conditionally on that edge's color");
        break;
    }
    case TheoremId::T1_6:
    case TheoremId::T1_7: {
        const auto diam = diameter(g);
        check.measured["diameter"] = diam.value();
        check.measured["delta"] = min_degree(g);
        if (diam != Distance(2)) {
            check.notes.push_back("diameter is " + diam.to_string() + ", not 2");
            return check;
        }
        check.quantity = threshold_quantity(id);
        compare(check, check.measured[check.quantity], required_threshold(id, k, n));
        if (id == TheoremId::T1_7)
            check.branches = diameter_two_branches(g, k);
        break;
    }
    }
    return check;
}

bool has_bound_report(TheoremId id)
{
    return id == TheoremId::T1_3 || id == TheoremId::T1_4 || id == TheoremId::T1_5 || id == TheoremId::T1_7;
}

BoundReport bound_report(TheoremId id, int k, int n)
{
    if (!has_bound_report(id))
        throw std::invalid_argument(std::string(to_string(id)) + " has no union-bound chain here");
    if (n < 2)
        throw std::invalid_argument("bound report needs n >= 2");
    require_k(id, k);

    BoundReport r;
    r.theorem = id;
    r.k = k;
    r.n = n;
    const long double log_k_n = log_base(k, n);
    long double t = 0;
    if (id == TheoremId::T1_3 || id == TheoremId::T1_4) {
        r.path_length = 2;
        t = 2 * log_k_n;
    } else {
        r.path_length = 3;
        t = 2 * three_path_exponent(k) * log_k_n;
    }
    r.per_path_failure = path_failure_prob(k, r.path_length);
    const long double p =
        static_cast<long double>(r.per_path_failure.numerator()) / r.per_path_failure.denominator();
    const long double per_pair = pair_failure_bound(p, t);
    r.pair_population = static_cast<std::int64_t>(n) * (n - 1) / 2;
    const long double union_failure = std::min(1.0L, r.pair_population * per_pair);
    r.path_count = static_cast<double>(t);
    r.per_pair_failure = static_cast<double>(per_pair);
    r.union_failure = static_cast<double>(union_failure);
    r.success_lower_bound = static_cast<double>(1 - union_failure);
    r.union_bound = union_bound_failure(n);
    return r;
}

} // namespace rainbow
