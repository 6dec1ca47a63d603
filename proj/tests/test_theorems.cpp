#include "doctest.h"

#include "oracles.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/theorems.hpp"

#include <cmath>

using namespace rainbow;

namespace {

double rel_err(long double got, long double want) { return static_cast<double>(std::fabs(got - want) / std::fabs(want)); }

long double log_k(int k, long double n) { return std::log(n) / std::log(static_cast<long double>(k)); }

} // namespace

TEST_CASE("path_failure_prob")
{
    CHECK(path_failure_prob(3, 3) == Rational(7, 9));
    CHECK(path_failure_prob(2, 2) == Rational(1, 2));
    CHECK(path_failure_prob(2, 3) == Rational(1));
    CHECK(path_failure_prob(5, 3) == Rational(13, 25));
    CHECK_THROWS_AS(path_failure_prob(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(path_failure_prob(3, 1), std::invalid_argument);
}

TEST_CASE("path_failure_prob matches enumeration of all colorings of a path")
{
    for (int k = 2; k <= 6; ++k)
        for (int len = 2; len <= 3; ++len) {
            int total = 0, bad = 0;
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b)
                    for (int c = 0; c < (len == 3 ? k : 1); ++c) {
                        ++total;
                        const bool rainbow = a != b && (len == 2 || (a != c && b != c));
                        bad += !rainbow;
                    }
            CHECK(path_failure_prob(k, len) == Rational(bad, total));
        }
}

TEST_CASE("pair_failure_bound")
{
    CHECK(pair_failure_bound(Rational(1, 2), 12) == Rational(1, 4096));
    CHECK(pair_failure_bound(Rational(5, 7), 0) == Rational(1));
    CHECK(pair_failure_bound(0.37L, 0.0L) == 1.0L);
    const long double t = 2 * three_path_exponent(3) * 6;
    CHECK(static_cast<double>(t) == doctest::Approx(52.4575829338).epsilon(1e-9));
    CHECK(rel_err(pair_failure_bound(7.0L / 9.0L, t), 1.0L / (729.0L * 729.0L)) < 1e-9);
    CHECK_THROWS_AS(pair_failure_bound(Rational(3, 2), 2), std::invalid_argument);
    CHECK_THROWS_AS(pair_failure_bound(0.5L, -1.0L), std::invalid_argument);
    CHECK_THROWS_AS(pair_failure_bound(Rational(1, 1000), 40), std::overflow_error);
}

TEST_CASE("two-path identity is exact for integer exponents")
{
    for (auto [k, n] : {std::pair{2, 64}, {3, 729}, {4, 256}}) {
        const auto j = exact_log(k, n);
        REQUIRE(j);
        CHECK(pair_failure_bound(Rational(1, k), 2 * *j) == Rational(1, static_cast<std::int64_t>(n) * n));
    }
    CHECK_FALSE(exact_log(3, 80));
    CHECK(exact_log(2, 1) == 0);
}

TEST_CASE("three-path identity within 1e-9 for k in 3..12")
{
    for (int k = 3; k <= 12; ++k)
        for (int n = 16; n <= 4096; n *= 2) {
            const long double p = static_cast<long double>(3 * k - 2) / (static_cast<long double>(k) * k);
            const long double t = 2 * three_path_exponent(k) * log_k(k, n);
            CHECK(rel_err(pair_failure_bound(p, t), 1.0L / (static_cast<long double>(n) * n)) < 1e-9);
        }
    CHECK_THROWS_AS(three_path_exponent(2), std::invalid_argument);
}

TEST_CASE("union_bound_failure")
{
    CHECK(union_bound_failure(10) == Rational(9, 20));
    CHECK(union_bound_failure(2) == Rational(1, 4));
    CHECK(union_bound_failure(64) == Rational(63, 128));
    CHECK_THROWS_AS(union_bound_failure(1), std::invalid_argument);
    const Rational half(1, 2);
    bool all_below = true;
    for (std::int64_t n = 2; n <= 1'000'000; ++n)
        all_below = all_below && union_bound_failure(n) < half;
    CHECK(all_below);
}

TEST_CASE("common_neighbor_lower_bound")
{
    CHECK(common_neighbor_lower_bound(62, 62, 64) == 62);
    CHECK(common_neighbor_lower_bound(1, 1, 10) == 0);
    // k = 2, n = 64: degree sum n - 2 + 2 log_2 64 = 74 forces 12 common neighbors.
    CHECK(common_neighbor_lower_bound(37, 37, 64) == 12);
}

TEST_CASE("required_threshold")
{
    CHECK(static_cast<double>(required_threshold(TheoremId::T1_3, 2, 64)) == doctest::Approx(37));
    CHECK(static_cast<double>(required_threshold(TheoremId::T1_4, 3, 729)) == doctest::Approx(739));
    CHECK(static_cast<double>(required_threshold(TheoremId::T1_4, 2, 64)) == doctest::Approx(74));
    CHECK(static_cast<double>(required_threshold(TheoremId::T1_5, 3, 729)) == doctest::Approx(52.4575829338).epsilon(1e-9));
    CHECK(static_cast<double>(required_threshold(TheoremId::T1_5, 3, 80)) == doctest::Approx(34.8728615754).epsilon(1e-9));
    CHECK(static_cast<double>(required_threshold(TheoremId::T1_7, 3, 64)) == doctest::Approx(40.6682069163).epsilon(1e-9));
    CHECK(static_cast<double>(required_threshold(TheoremId::T1_1, 0, 64)) == doctest::Approx(38));
    CHECK(static_cast<double>(required_threshold(TheoremId::T1_6, 0, 64)) == doctest::Approx(48));

    CHECK_THROWS_AS(required_threshold(TheoremId::T1_5, 2, 64), std::invalid_argument);
    CHECK_THROWS_AS(required_threshold(TheoremId::T1_7, 2, 64), std::invalid_argument);
    CHECK_THROWS_AS(required_threshold(TheoremId::T1_3, 1, 64), std::invalid_argument);
    CHECK_THROWS_AS(required_threshold(TheoremId::T1_3, 2, 1), std::invalid_argument);
}

TEST_CASE("three-path threshold at k = 3 equals the prior-work common-neighbor threshold")
{
    for (int n = 2; n <= 5000; n += 37)
        CHECK(rel_err(required_threshold(TheoremId::T1_5, 3, n), required_threshold(TheoremId::T1_2, 0, n)) < 1e-9);
}

TEST_CASE("check_theorem examples")
{
    Graph cmm = generate({.family = Family::complete_minus_matching, .n = 64});
    auto ok = check_theorem(cmm, 2, TheoremId::T1_3);
    CHECK(ok.status == CheckStatus::satisfied);
    CHECK(ok.measured.at("delta") == 62);
    CHECK(*ok.threshold == doctest::Approx(37));
    CHECK(ok.conclusion == "rc <= 2");
    CHECK_FALSE(ok.log_base);

    auto k64 = check_theorem(generate({.family = Family::complete, .n = 64}), 2, TheoremId::T1_3);
    CHECK(k64.status == CheckStatus::not_applicable);
    CHECK_FALSE(k64.notes.empty());

    Graph thirty = generate({.family = Family::random_min_degree, .n = 64, .delta_target = 30, .seed = 8});
    REQUIRE(min_degree(thirty) == 30);
    CHECK(check_theorem(thirty, 2, TheoremId::T1_3).status == CheckStatus::unsatisfied);

    auto prior = check_theorem(cmm, 2, TheoremId::T1_1);
    CHECK(prior.log_base == kPriorWorkLogBase);
    CHECK(prior.conclusion == "rc = 2");
    CHECK(prior.status == CheckStatus::satisfied);

    CHECK(check_theorem(cmm, 2, TheoremId::T1_5).status == CheckStatus::not_applicable);
    CHECK(check_theorem(cmm, 3, TheoremId::T1_5).status == CheckStatus::not_applicable); // not bipartite
    CHECK_THROWS_AS(check_theorem(Graph(4, {{0, 1}, {2, 3}}), 2, TheoremId::T1_3), std::invalid_argument);
}

TEST_CASE("check_theorem on bipartite and diameter-2 graphs")
{
    Graph b40 = generate({.family = Family::bipartite_minus_matching, .s = 40});
    auto c = check_theorem(b40, 3, TheoremId::T1_5);
    CHECK(c.status == CheckStatus::satisfied);
    CHECK(c.measured.at("min_common_neighbors_same_class") == 38);
    CHECK(*c.threshold == doctest::Approx(34.8728615754).epsilon(1e-9));

    auto full = check_theorem(generate({.family = Family::complete_bipartite, .s = 3, .t = 4}), 3, TheoremId::T1_5);
    CHECK(full.status == CheckStatus::not_applicable);

    Graph cmm = generate({.family = Family::complete_minus_matching, .n = 64});
    auto d2 = check_theorem(cmm, 3, TheoremId::T1_7);
    CHECK(d2.status == CheckStatus::satisfied);
    CHECK(d2.measured.at("diameter") == 2);
    CHECK(d2.branches.size() == 32);
    for (const auto &b : d2.branches) {
        CHECK(b.common == 62);
        CHECK(b.many_common);
    }

    auto p5 = check_theorem(generate({.family = Family::path, .n = 5}), 3, TheoremId::T1_7);
    CHECK(p5.status == CheckStatus::not_applicable);
}

TEST_CASE("two-branch diagnostic on a pair with few common neighbors")
{
    // C5 at k = 3: every non-adjacent pair shares one neighbor and has one
    // further path u - x - y - v with x in N(u) \ N(v).
    auto c = check_theorem(generate({.family = Family::cycle, .n = 5}), 3, TheoremId::T1_7);
    CHECK(c.status == CheckStatus::unsatisfied);
    REQUIRE(c.branches.size() == 5);
    for (const auto &b : c.branches) {
        CHECK(b.common == 1);
        CHECK_FALSE(b.many_common);
        CHECK(b.a_size == 1);
        CHECK(b.b_size == 1);
        CHECK(b.a_paths == 1);
    }
}

TEST_CASE("satisfied minimum-degree check forces many common neighbors")
{
    SplitMix64 rng(17);
    int satisfied = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 16 + static_cast<int>(rng.uniform_below(24));
        const int k = 2 + static_cast<int>(rng.uniform_below(3));
        if (!min_degree_hypothesis_feasible(n, k))
            continue;
        const int lo = static_cast<int>(std::ceil(required_threshold(TheoremId::T1_3, k, n)));
        const int delta = lo + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n - 2 - lo + 1)));
        Graph g = generate({.family = Family::random_min_degree, .n = n, .delta_target = delta, .seed = rng()});
        for (TheoremId id : {TheoremId::T1_3, TheoremId::T1_4}) {
            auto c = check_theorem(g, k, id);
            if (!c.satisfied())
                continue;
            ++satisfied;
            const long double need = 2 * log_k(k, n);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (!g.adjacent(u, v)) {
                        CHECK(common_neighbor_count(g, u, v) >= need);
                        CHECK(common_neighbor_lower_bound(g.degree(u), g.degree(v), n) >= need - 1e-9L);
                    }
        }
    }
    CHECK(satisfied > 20);
}

TEST_CASE("bound_report")
{
    auto r = bound_report(TheoremId::T1_3, 2, 64);
    CHECK(r.path_length == 2);
    CHECK(r.per_path_failure == Rational(1, 2));
    CHECK(r.path_count == doctest::Approx(12));
    CHECK(r.per_pair_failure == doctest::Approx(1.0 / 4096));
    CHECK(r.union_bound == Rational(63, 128));
    CHECK(r.success_lower_bound == doctest::Approx(1 - r.union_failure));
    CHECK(r.union_failure < 0.5);

    auto five = bound_report(TheoremId::T1_5, 3, 80);
    CHECK(five.path_length == 3);
    CHECK(five.per_path_failure == Rational(7, 9));
    CHECK(five.union_bound == Rational(79, 160));

    for (TheoremId id : kAllTheorems)
        for (int k : {3, 5})
            if (has_bound_report(id)) {
                auto b = bound_report(id, k, 100);
                CHECK(b.per_pair_failure >= 0);
                CHECK(b.per_pair_failure <= 1);
                CHECK(b.union_failure <= 1);
                CHECK(b.success_lower_bound >= 0);
            } else {
                CHECK_THROWS_AS(bound_report(id, k, 100), std::invalid_argument);
            }
}

TEST_CASE("theorem id names")
{
    for (TheoremId id : kAllTheorems)
        CHECK(parse_theorem_id(to_string(id)) == id);
    CHECK_FALSE(parse_theorem_id("T2_1"));
}
