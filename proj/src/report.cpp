#include "rainbow/report.hpp"

#include <stdexcept>

namespace rainbow {

namespace {

template <typename T>
void put_optional(Json &j, const char *key, const std::optional<T> &value)
{
    j[key] = value ? Json(*value) : Json(nullptr);
}

template <typename T>
std::optional<T> get_optional(const Json &j, const char *key)
{
    if (!j.contains(key) || j.at(key).is_null())
        return std::nullopt;
    return j.at(key).get<T>();
}

TheoremId theorem_from_json(const Json &j)
{
    auto id = parse_theorem_id(j.get<std::string>());
    if (!id)
        throw std::invalid_argument("unknown theorem id " + j.dump());
    return *id;
}

CheckStatus status_from_json(const Json &j)
{
    const auto text = j.get<std::string>();
    for (auto s : {CheckStatus::satisfied, CheckStatus::unsatisfied, CheckStatus::not_applicable})
        if (to_string(s) == text)
            return s;
    throw std::invalid_argument("unknown check status " + text);
}

} // namespace

void to_json(Json &j, const Report &r)
{
    j = Json{{"schema_version", r.schema_version},
             {"command", r.command},
             {"inputs", r.inputs},
             {"result", r.result},
             {"timing", r.wall_ms ? Json{{"wall_ms", *r.wall_ms}} : Json(nullptr)}};
}

void from_json(const Json &j, Report &r)
{
    r.schema_version = j.at("schema_version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.result = j.at("result");
    const auto &timing = j.at("timing");
    r.wall_ms = timing.is_null() ? std::nullopt : std::optional<double>(timing.at("wall_ms").get<double>());
}

Json rational_to_json(const Rational &r)
{
    return Json{{"numerator", r.numerator()},
             {"denominator", r.denominator()},
             {"value", static_cast<double>(r.numerator()) / static_cast<double>(r.denominator())}};
}

Rational rational_from_json(const Json &j)
{
    return Rational(j.at("numerator").get<std::int64_t>(), j.at("denominator").get<std::int64_t>());
}

void to_json(Json &j, const VertexPair &p) { j = Json::array({p.u, p.v}); }
void from_json(const Json &j, VertexPair &p) { p = VertexPair::of(j.at(0).get<Vertex>(), j.at(1).get<Vertex>()); }

void to_json(Json &j, const RainbowWitness &w)
{
    j = Json::array();
    for (const auto &[pair, path] : w.pairs)
        j.push_back(Json{{"pair", pair}, {"path", path}});
}

void from_json(const Json &j, RainbowWitness &w)
{
    w.pairs.clear();
    for (const auto &entry : j)
        w.pairs.emplace(entry.at("pair").get<VertexPair>(), entry.at("path").get<Path>());
}

void to_json(Json &j, const EdgeColoring &c)
{
    j = Json{{"k", c.palette()}, {"n", c.vertex_count()}, {"m", c.edge_count()}, {"colors", c.colors()}};
}

void from_json(const Json &j, EdgeColoring &c)
{
    c = EdgeColoring::from_parts(j.at("n").get<int>(), j.at("k").get<int>(), j.at("colors").get<std::vector<Color>>());
    if (c.edge_count() != j.at("m").get<int>())
        throw std::invalid_argument("coloring length does not match m");
}

void to_json(Json &j, const VerifyResult &r)
{
    j = Json{{"rainbow_connected", r.connected}, {"witness", r.witness}};
    put_optional(j, "failing_pair", r.failing_pair);
}

void from_json(const Json &j, VerifyResult &r)
{
    r.connected = j.at("rainbow_connected").get<bool>();
    r.witness = j.at("witness").get<RainbowWitness>();
    r.failing_pair = get_optional<VertexPair>(j, "failing_pair");
}

void to_json(Json &j, const LasVegasResult &r)
{
    Json failing = Json::array();
    for (const auto &[pair, count] : r.failing_pairs)
        failing.push_back(Json{{"pair", pair}, {"count", count}});
    j = Json{{"succeeded", r.succeeded()},
             {"iterations", r.iterations},
             {"failures", r.failures},
             {"failing_pairs", failing},
             {"witness", r.witness}};
    put_optional(j, "coloring", r.coloring);
}

void from_json(const Json &j, LasVegasResult &r)
{
    r.iterations = j.at("iterations").get<int>();
    r.failures = j.at("failures").get<int>();
    r.witness = j.at("witness").get<RainbowWitness>();
    r.coloring = get_optional<EdgeColoring>(j, "coloring");
    r.failing_pairs.clear();
    for (const auto &entry : j.at("failing_pairs"))
        r.failing_pairs.emplace_back(entry.at("pair").get<VertexPair>(), entry.at("count").get<int>());
}

void to_json(Json &j, const SearchStats &s)
{
    j = Json{{"nodes", s.nodes}, {"colorings_tested", s.colorings_tested}};
}

void from_json(const Json &j, SearchStats &s)
{
    s.nodes = j.at("nodes").get<std::uint64_t>();
    s.colorings_tested = j.at("colorings_tested").get<std::uint64_t>();
}

void to_json(Json &j, const RcResult &r)
{
    j = Json{{"status", "solved"},
             {"rc", r.rc},
             {"certificate", r.certificate},
             {"witness", r.witness},
             {"lower_bound_used", r.lower_bound_used},
             {"search_stats", r.stats}};
}

void from_json(const Json &j, RcResult &r)
{
    r.rc = j.at("rc").get<int>();
    r.certificate = j.at("certificate").get<EdgeColoring>();
    r.witness = j.at("witness").get<RainbowWitness>();
    r.lower_bound_used = j.at("lower_bound_used").get<int>();
    r.stats = j.at("search_stats").get<SearchStats>();
}

void to_json(Json &j, const PairBranch &b)
{
    j = Json{{"pair", VertexPair{b.u, b.v}}, {"common", b.common},     {"branch", b.many_common ? "common_neighbors" : "a_b_construction"},
             {"a_size", b.a_size},           {"b_size", b.b_size},     {"a_paths", b.a_paths},
             {"a_meets_bound", b.a_meets_bound}};
}

void from_json(const Json &j, PairBranch &b)
{
    const auto pair = j.at("pair").get<VertexPair>();
    b.u = pair.u;
    b.v = pair.v;
    b.common = j.at("common").get<int>();
    b.many_common = j.at("branch").get<std::string>() == "common_neighbors";
    b.a_size = j.at("a_size").get<int>();
    b.b_size = j.at("b_size").get<int>();
    b.a_paths = j.at("a_paths").get<int>();
    b.a_meets_bound = j.at("a_meets_bound").get<bool>();
}

void to_json(Json &j, const TheoremCheck &c)
{
    j = Json{{"theorem", to_string(c.theorem)},
             {"k", c.k},
             {"status", to_string(c.status)},
             {"measured", c.measured},
             {"quantity", c.quantity},
             {"near_threshold", c.near_threshold},
             {"conclusion", c.conclusion},
             {"notes", c.notes},
             {"branches", c.branches}};
    put_optional(j, "threshold", c.threshold);
    put_optional(j, "log_base", c.log_base);
}

void from_json(const Json &j, TheoremCheck &c)
{
    c.theorem = theorem_from_json(j.at("theorem"));
    c.k = j.at("k").get<int>();
    c.status = status_from_json(j.at("status"));
    c.measured = j.at("measured").get<std::map<std::string, double>>();
    c.quantity = j.at("quantity").get<std::string>();
    c.near_threshold = j.at("near_threshold").get<bool>();
    c.conclusion = j.at("conclusion").get<std::string>();
    c.notes = j.at("notes").get<std::vector<std::string>>();
    c.branches = j.at("branches").get<std::vector<PairBranch>>();
    c.threshold = get_optional<double>(j, "threshold");
    c.log_base = get_optional<int>(j, "log_base");
}

void to_json(Json &j, const BoundReport &b)
{
    j = Json{{"theorem", to_string(b.theorem)},
             {"k", b.k},
             {"n", b.n},
             {"path_length", b.path_length},
             {"per_path_failure", rational_to_json(b.per_path_failure)},
             {"path_count", b.path_count},
             {"per_pair_failure", b.per_pair_failure},
             {"pair_population", b.pair_population},
             {"union_failure", b.union_failure},
             {"success_lower_bound", b.success_lower_bound},
             {"union_bound", rational_to_json(b.union_bound)}};
}

void from_json(const Json &j, BoundReport &b)
{
    b.theorem = theorem_from_json(j.at("theorem"));
    b.k = j.at("k").get<int>();
    b.n = j.at("n").get<int>();
    b.path_length = j.at("path_length").get<int>();
    b.per_path_failure = rational_from_json(j.at("per_path_failure"));
    b.path_count = j.at("path_count").get<double>();
    b.per_pair_failure = j.at("per_pair_failure").get<double>();
    b.pair_population = j.at("pair_population").get<std::int64_t>();
    b.union_failure = j.at("union_failure").get<double>();
    b.success_lower_bound = j.at("success_lower_bound").get<double>();
    b.union_bound = rational_from_json(j.at("union_bound"));
}

void to_json(Json &j, const WilsonInterval &w)
{
    j = Json{{"lower", w.lower}, {"upper", w.upper}, {"standard_error", w.standard_error}};
}

void from_json(const Json &j, WilsonInterval &w)
{
    w.lower = j.at("lower").get<double>();
    w.upper = j.at("upper").get<double>();
    w.standard_error = j.at("standard_error").get<double>();
}

void to_json(Json &j, const TrialStats &s)
{
    j = Json{{"k", s.k},
             {"n", s.n},
             {"m", s.m},
             {"trials", s.trials},
             {"successes", s.successes},
             {"empirical_rate", s.empirical_rate},
             {"sharpened_lower_bound", s.sharpened_lower_bound},
             {"wilson_interval", s.wilson},
             {"master_seed", s.master_seed},
             {"sub_seed_rule", s.sub_seed_rule},
             {"consistent_with_theory", consistent_with_theory(s)}};
    put_optional(j, "theory_lower_bound", s.theory_lower_bound);
    j["theorem"] = s.theorem ? Json(to_string(*s.theorem)) : Json(nullptr);
    j["theorem_status"] = s.theorem_status ? Json(to_string(*s.theorem_status)) : Json(nullptr);
    put_optional(j, "parameter", s.parameter);
    put_optional(j, "value", s.value);
}

void from_json(const Json &j, TrialStats &s)
{
    s.k = j.at("k").get<int>();
    s.n = j.at("n").get<int>();
    s.m = j.at("m").get<int>();
    s.trials = j.at("trials").get<int>();
    s.successes = j.at("successes").get<int>();
    s.empirical_rate = j.at("empirical_rate").get<double>();
    s.sharpened_lower_bound = j.at("sharpened_lower_bound").get<double>();
    s.wilson = j.at("wilson_interval").get<WilsonInterval>();
    s.master_seed = j.at("master_seed").get<std::uint64_t>();
    s.sub_seed_rule = j.at("sub_seed_rule").get<std::string>();
    s.theory_lower_bound = get_optional<double>(j, "theory_lower_bound");
    s.theorem = j.at("theorem").is_null() ? std::nullopt : std::optional(theorem_from_json(j.at("theorem")));
    s.theorem_status =
        j.at("theorem_status").is_null() ? std::nullopt : std::optional(status_from_json(j.at("theorem_status")));
    s.parameter = get_optional<std::string>(j, "parameter");
    s.value = get_optional<long long>(j, "value");
}

void to_json(Json &j, const FamilySpec &s)
{
    j = Json{{"family", to_string(s.family)}, {"n", s.n},         {"s", s.s},
             {"t", s.t},                      {"delta", s.delta_target}, {"seed", s.seed}};
}

void from_json(const Json &j, FamilySpec &s)
{
    auto family = parse_family(j.at("family").get<std::string>());
    if (!family)
        throw std::invalid_argument("unknown family");
    s.family = *family;
    s.n = j.at("n").get<int>();
    s.s = j.at("s").get<int>();
    s.t = j.at("t").get<int>();
    s.delta_target = j.at("delta").get<int>();
    s.seed = j.at("seed").get<std::uint64_t>();
}

} // namespace rainbow
