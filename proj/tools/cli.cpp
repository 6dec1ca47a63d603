#include "cli.hpp"

#include "rainbow/exact_rc.hpp"
#include "rainbow/experiment.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/io.hpp"
#include "rainbow/report.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace rainbow::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Outcome {
    Report report;
    int code = kExitAffirmative;
    std::function<void(std::ostream &)> human;
    std::optional<std::string> csv;
};

struct Common {
    bool json = false;
    bool csv = false;
    bool timing = false;
    int workers = 1;
    int max_colors = SearchLimits{}.max_colors;
};

struct SourceFlags {
    std::string graph;
    std::string family;
    int n = 0;
    int s = 0;
    int t = 0;
    int delta = 0;
    std::optional<std::uint64_t> family_seed;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t> &flag, const Environment &env, const std::string &command)
{
    if (flag)
        return *flag;
    if (!env.seed)
        throw UsageError(command + " is seeded: pass --seed or set RAINBOW_SEED");
    std::uint64_t value = 0;
    const auto &text = *env.seed;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size())
        throw UsageError("RAINBOW_SEED is not a decimal unsigned integer: '" + text + "'");
    return value;
}

TheoremId theorem_arg(const std::string &text)
{
    auto id = parse_theorem_id(text);
    if (!id)
        throw UsageError("unknown theorem '" + text + "' (expected T1_1 .. T1_7)");
    return *id;
}

Family family_arg(const std::string &text)
{
    auto f = parse_family(text);
    if (!f)
        throw UsageError("unknown family '" + text + "'");
    return *f;
}

Graph load_graph(const std::string &path) { return parse_graph_text(read_text_file(path)); }

Json distance_json(const Distance &d) { return d.is_finite() ? Json(d.value()) : Json(nullptr); }

std::string fixed(double x, int digits = 6)
{
    std::ostringstream out;
    out << std::fixed << std::setprecision(digits) << x;
    return out.str();
}

std::string rational_text(const Rational &r)
{
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

void print_path(std::ostream &out, const Path &path)
{
    for (std::size_t i = 0; i < path.size(); ++i)
        out << (i ? " " : "") << path[i];
}

void print_witness(std::ostream &out, const RainbowWitness &w)
{
    out << "witness:\n";
    for (const auto &[pair, path] : w.pairs) {
        out << "  " << pair.u << ' ' << pair.v << ": ";
        print_path(out, path);
        out << '\n';
    }
}

// ---- verify ----------------------------------------------------------------

struct VerifyFlags {
    std::string graph;
    std::string coloring;
};

Outcome do_verify(const VerifyFlags &f, const Common &common)
{
    const Graph g = load_graph(f.graph);
    const EdgeColoring c = parse_coloring_text(read_text_file(f.coloring), g);
    auto r = is_rainbow_connected(g, c, {{common.max_colors}, common.workers});

    Outcome o;
    o.report.command = "verify";
    o.report.inputs = Json{{"graph", f.graph}, {"coloring", f.coloring}, {"max_colors", common.max_colors}};
    o.report.result = r;
    o.code = r.connected ? kExitAffirmative : kExitNegative;
    o.human = [r](std::ostream &out) {
        out << "rainbow connected: " << (r.connected ? "yes" : "no") << '\n';
        if (r.failing_pair)
            out << "failing pair: " << r.failing_pair->u << ' ' << r.failing_pair->v << '\n';
        else
            print_witness(out, r.witness);
    };
    return o;
}

// ---- color -----------------------------------------------------------------

struct ColorFlags {
    std::string graph;
    int k = 0;
    std::optional<std::uint64_t> seed;
    int max_iters = 1000;
    std::string out;
};

Outcome do_color(const ColorFlags &f, const Common &common, const Environment &env)
{
    const std::uint64_t seed = resolve_seed(f.seed, env, "color");
    const Graph g = load_graph(f.graph);
    auto r = las_vegas_color(g, f.k, seed, {f.max_iters, common.workers, {common.max_colors}});
    if (r.succeeded() && !f.out.empty())
        write_text_file(f.out, format_coloring_text(g, *r.coloring));

    Outcome o;
    o.report.command = "color";
    o.report.inputs = Json{{"graph", f.graph},       {"k", f.k},   {"seed", seed},
                           {"max_iters", f.max_iters}, {"out", f.out.empty() ? Json(nullptr) : Json(f.out)},
                           {"max_colors", common.max_colors}};
    o.report.result = r;
    o.code = r.succeeded() ? kExitAffirmative : kExitNegative;
    o.human = [r, g, out_path = f.out](std::ostream &out) {
        out << "succeeded: " << (r.succeeded() ? "yes" : "no") << '\n';
        out << "iterations: " << r.iterations << '\n';
        out << "failures: " << r.failures << '\n';
        if (!r.failing_pairs.empty()) {
            out << "failing pairs:\n";
            for (const auto &[pair, count] : r.failing_pairs)
                out << "  " << pair.u << ' ' << pair.v << ": " << count << '\n';
        }
        if (!r.succeeded())
            return;
        if (!out_path.empty())
            out << "coloring written to " << out_path << '\n';
        else
            out << "coloring:\n" << format_coloring_text(g, *r.coloring);
    };
    return o;
}

// ---- rc --------------------------------------------------------------------

struct RcFlags {
    std::string graph;
    int max_edges = RcOptions{}.max_edges;
    std::uint64_t max_nodes = RcOptions{}.max_nodes;
    double time_limit = 0;
    bool no_prune = false;
    std::string out;
};

Outcome do_rc(const RcFlags &f, const Common &common)
{
    const Graph g = load_graph(f.graph);
    RcOptions opts;
    opts.max_edges = f.max_edges;
    opts.max_nodes = f.max_nodes;
    opts.time_limit_seconds = f.time_limit;
    opts.prune_partial = !f.no_prune;
    opts.workers = common.workers;
    opts.limits.max_colors = common.max_colors;

    Outcome o;
    o.report.command = "rc";
    o.report.inputs = Json{{"graph", f.graph},           {"max_edges", f.max_edges},
                           {"max_nodes", f.max_nodes},   {"time_limit_seconds", f.time_limit},
                           {"prune_partial", !f.no_prune}, {"out", f.out.empty() ? Json(nullptr) : Json(f.out)}};
    try {
        auto r = rc_exact(g, opts);
        if (!f.out.empty())
            write_text_file(f.out, format_coloring_text(g, r.certificate));
        o.report.result = r;
        o.human = [r, g](std::ostream &out) {
            out << "rc: " << r.rc << '\n';
            out << "lower bound (diameter): " << r.lower_bound_used << '\n';
            out << "search nodes: " << r.stats.nodes << '\n';
            out << "colorings tested: " << r.stats.colorings_tested << '\n';
            out << "certificate:\n" << format_coloring_text(g, r.certificate);
        };
    } catch (const BudgetExceeded &e) {
        o.report.result = Json{{"status", "budget_exceeded"}, {"message", e.what()}, {"search_stats", e.stats()}};
        o.code = kExitUsage;
        o.human = [message = std::string(e.what()), stats = e.stats()](std::ostream &out) {
            out << "status: budget_exceeded\n";
            out << "reason: " << message << '\n';
            out << "search nodes: " << stats.nodes << '\n';
        };
    }
    return o;
}

// ---- check -----------------------------------------------------------------

struct CheckFlags {
    std::string graph;
    int k = 0;
    std::string theorem = "all";
};

void print_check(std::ostream &out, const TheoremCheck &c)
{
    out << to_string(c.theorem) << ": " << to_string(c.status);
    if (c.threshold) {
        out << " (" << c.quantity << " = " << c.measured.at(c.quantity) << (c.satisfied() ? " >= " : " < ")
            << fixed(*c.threshold) << ")";
        if (c.satisfied())
            out << ", " << c.conclusion;
    }
    out << '\n';
    if (c.log_base)
        out << "  log base: " << *c.log_base << '\n';
    if (c.near_threshold)
        out << "  near threshold\n";
    for (const auto &note : c.notes)
        out << "  note: " << note << '\n';
    if (!c.branches.empty()) {
        const auto many = std::count_if(c.branches.begin(), c.branches.end(), [](const auto &b) { return b.many_common; });
        out << "  non-adjacent pairs: " << c.branches.size() << " (" << many << " via common neighbors, "
            << c.branches.size() - static_cast<std::size_t>(many) << " via A/B construction)\n";
    }
}

Outcome do_check(const CheckFlags &f)
{
    const Graph g = load_graph(f.graph);
    std::vector<TheoremId> ids;
    if (f.theorem == "all")
        ids.assign(std::begin(kAllTheorems), std::end(kAllTheorems));
    else
        ids.push_back(theorem_arg(f.theorem));

    std::vector<TheoremCheck> checks;
    for (TheoremId id : ids)
        checks.push_back(check_theorem(g, f.k, id));
    const bool any = std::any_of(checks.begin(), checks.end(), [](const auto &c) { return c.satisfied(); });

    Outcome o;
    o.report.command = "check";
    o.report.inputs = Json{{"graph", f.graph}, {"k", f.k}, {"theorem", f.theorem}};
    if (checks.size() == 1) {
        o.report.result = checks.front();
    } else {
        Json satisfied = Json::array();
        for (const auto &c : checks)
            if (c.satisfied())
                satisfied.push_back(to_string(c.theorem));
        o.report.result = Json{{"checks", checks}, {"satisfied", satisfied}};
    }
    o.code = any ? kExitAffirmative : kExitNegative;
    o.human = [checks](std::ostream &out) {
        for (const auto &c : checks)
            print_check(out, c);
    };
    return o;
}

// ---- bounds ----------------------------------------------------------------

struct BoundsFlags {
    int k = 0;
    int n = 0;
    std::string theorem;
};

Outcome do_bounds(const BoundsFlags &f)
{
    if (f.n < 2)
        throw UsageError("bounds needs -n >= 2");
    std::vector<TheoremId> ids;
    const bool all = f.theorem.empty();
    if (all)
        ids.assign(std::begin(kAllTheorems), std::end(kAllTheorems));
    else
        ids.push_back(theorem_arg(f.theorem));

    Json entries = Json::array();
    std::vector<std::string> lines;
    for (TheoremId id : ids) {
        Json entry{{"theorem", to_string(id)}, {"quantity", threshold_quantity(id)}};
        long double threshold = 0;
        try {
            threshold = required_threshold(id, f.k, f.n);
        } catch (const std::invalid_argument &e) {
            if (!all)
                throw;
            entry["threshold"] = nullptr;
            entry["bound"] = nullptr;
            entry["note"] = e.what();
            entries.push_back(entry);
            lines.push_back(std::string(to_string(id)) + ": skipped (" + e.what() + ")");
            continue;
        }
        entry["threshold"] = static_cast<double>(threshold);
        std::string line = std::string(to_string(id)) + ": " + std::string(threshold_quantity(id)) +
                           " >= " + fixed(static_cast<double>(threshold));
        if (has_bound_report(id)) {
            auto b = bound_report(id, f.k, f.n);
            entry["bound"] = b;
            std::ostringstream detail;
            detail << "\n  path length " << b.path_length << ", per-path failure " << rational_text(b.per_path_failure)
                   << ", paths " << fixed(b.path_count) << "\n  per-pair failure " << std::setprecision(6)
                   << b.per_pair_failure << ", pairs " << b.pair_population << ", union failure "
                   << b.union_failure << ", success >= " << b.success_lower_bound;
            line += detail.str();
        } else {
            entry["bound"] = nullptr;
            entry["note"] = "log base " + std::to_string(kPriorWorkLogBase) + "; no union-bound chain";
            line += " (log base " + std::to_string(kPriorWorkLogBase) + ")";
        }
        entries.push_back(entry);
        lines.push_back(line);
    }

    const Rational u = union_bound_failure(f.n);
    Outcome o;
    o.report.command = "bounds";
    o.report.inputs = Json{{"k", f.k}, {"n", f.n}, {"theorem", all ? Json(nullptr) : Json(f.theorem)}};
    o.report.result = Json{{"k", f.k}, {"n", f.n}, {"union_bound_failure", rational_to_json(u)}, {"entries", entries}};
    o.human = [lines, u](std::ostream &out) {
        out << "union bound failure: " << rational_text(u) << '\n';
        for (const auto &line : lines)
            out << line << '\n';
    };
    return o;
}

// ---- gen -------------------------------------------------------------------

struct GenFlags {
    std::string family;
    int n = 0;
    int s = 0;
    int t = 0;
    int delta = 0;
    std::optional<std::uint64_t> seed;
    int max_retries = FamilySpec{}.max_retries;
    std::string out;
};

Outcome do_gen(const GenFlags &f, const Environment &env)
{
    FamilySpec spec{family_arg(f.family), f.n, f.s, f.t, f.delta, 0, f.max_retries};
    if (is_seeded(spec.family))
        spec.seed = resolve_seed(f.seed, env, "gen --family " + f.family);
    const Graph g = generate(spec);
    write_text_file(f.out, format_graph_text(g));

    const auto diam = g.order() > 0 ? diameter(g) : Distance(0);
    const int delta = g.order() > 0 ? min_degree(g) : 0;
    Outcome o;
    o.report.command = "gen";
    o.report.inputs = Json{{"spec", spec}, {"max_retries", f.max_retries}, {"out", f.out}};
    o.report.result = Json{{"n", g.order()}, {"m", g.size()}, {"min_degree", delta}, {"diameter", distance_json(diam)}};
    o.human = [g, diam, delta, path = f.out](std::ostream &out) {
        out << "wrote " << path << ": n=" << g.order() << " m=" << g.size() << " min_degree=" << delta
            << " diameter=" << diam.to_string() << '\n';
    };
    return o;
}

// ---- experiment / sweep ----------------------------------------------------

struct ExperimentFlags {
    SourceFlags source;
    int k = 0;
    int trials = 0;
    std::optional<std::uint64_t> seed;
    std::string theorem;
};

struct SweepFlags {
    ExperimentFlags base;
    std::string param;
    std::vector<long long> values;
};

ExperimentConfig experiment_config(const ExperimentFlags &f, const Common &common, const Environment &env,
                                   const std::string &command, Json &inputs)
{
    ExperimentConfig cfg;
    cfg.k = f.k;
    cfg.trials = f.trials;
    cfg.master_seed = resolve_seed(f.seed, env, command);
    cfg.workers = common.workers;
    cfg.limits.max_colors = common.max_colors;
    if (!f.theorem.empty())
        cfg.theorem = theorem_arg(f.theorem);

    const auto &src = f.source;
    if (src.graph.empty() == src.family.empty())
        throw UsageError(command + " needs exactly one of --graph or --family");
    if (!src.graph.empty()) {
        cfg.source = load_graph(src.graph);
        inputs["graph"] = src.graph;
    } else {
        FamilySpec spec{family_arg(src.family), src.n, src.s, src.t, src.delta, 0, FamilySpec{}.max_retries};
        if (is_seeded(spec.family))
            spec.seed = src.family_seed.value_or(cfg.master_seed);
        cfg.source = spec;
        inputs["family"] = spec;
    }
    inputs["k"] = cfg.k;
    inputs["trials"] = cfg.trials;
    inputs["seed"] = cfg.master_seed;
    inputs["theorem"] = f.theorem.empty() ? Json(nullptr) : Json(f.theorem);
    inputs["max_colors"] = common.max_colors;
    return cfg;
}

void print_stats(std::ostream &out, const TrialStats &s)
{
    if (s.parameter)
        out << s.parameter.value() << " = " << s.value.value_or(0) << '\n';
    out << "trials: " << s.trials << '\n';
    out << "successes: " << s.successes << '\n';
    out << "empirical rate: " << fixed(s.empirical_rate) << '\n';
    out << "wilson 95%: [" << fixed(s.wilson.lower) << ", " << fixed(s.wilson.upper) << "]\n";
    out << "theory lower bound: " << (s.theory_lower_bound ? fixed(*s.theory_lower_bound) : "none") << '\n';
    out << "sharpened lower bound: " << fixed(s.sharpened_lower_bound) << '\n';
    if (s.theorem)
        out << "theorem: " << to_string(*s.theorem) << ' ' << to_string(*s.theorem_status) << '\n';
    out << "consistent with theory: " << (consistent_with_theory(s) ? "yes" : "no") << '\n';
}

Outcome do_experiment(const ExperimentFlags &f, const Common &common, const Environment &env)
{
    Outcome o;
    o.report.command = "experiment";
    const auto cfg = experiment_config(f, common, env, "experiment", o.report.inputs);
    auto stats = run_trials(cfg);
    o.report.result = stats;
    o.code = consistent_with_theory(stats) ? kExitAffirmative : kExitNegative;
    o.csv = trial_stats_csv(std::span<const TrialStats>(&stats, 1));
    o.human = [stats](std::ostream &out) { print_stats(out, stats); };
    return o;
}

Outcome do_sweep(const SweepFlags &f, const Common &common, const Environment &env)
{
    auto param = parse_sweep_param(f.param);
    if (!param)
        throw UsageError("unknown sweep parameter '" + f.param + "' (expected delta_target, k or n)");
    Outcome o;
    o.report.command = "sweep";
    const auto cfg = experiment_config(f.base, common, env, "sweep", o.report.inputs);
    o.report.inputs["param"] = f.param;
    o.report.inputs["values"] = f.values;
    auto rows = sweep(cfg, *param, f.values);
    o.report.result = Json{{"parameter", f.param}, {"rows", rows}};
    o.code = std::all_of(rows.begin(), rows.end(), consistent_with_theory) ? kExitAffirmative : kExitNegative;
    o.csv = trial_stats_csv(rows);
    o.human = [rows](std::ostream &out) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i)
                out << '\n';
            print_stats(out, rows[i]);
        }
    };
    return o;
}

void add_source_flags(CLI::App *sub, SourceFlags &src)
{
    sub->add_option("--graph", src.graph, "Graph file");
    sub->add_option("--family", src.family, "Generated graph family");
    sub->add_option("-n", src.n, "Family order");
    sub->add_option("--s", src.s, "First class size (bipartite families)");
    sub->add_option("--t", src.t, "Second class size (complete_bipartite)");
    sub->add_option("--delta", src.delta, "Minimum degree target (random families)");
    sub->add_option("--family-seed", src.family_seed, "Generator seed for random families (default: --seed)");
}

void add_experiment_flags(CLI::App *sub, ExperimentFlags &f)
{
    add_source_flags(sub, f.source);
    sub->add_option("-k", f.k, "Palette size")->required();
    sub->add_option("--trials", f.trials, "Number of trials")->required();
    sub->add_option("--seed", f.seed, "Master seed (fallback: RAINBOW_SEED)");
    sub->add_option("--theorem", f.theorem, "Theorem whose hypothesis sets the theory bound");
    sub->add_flag("--csv", "CSV output");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, const Environment &env)
{
    CLI::App app{"Rainbow connection tools", "rainbow"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_flag("--json", common.json, "JSON report");
    app.add_flag("--timing", common.timing, "Record wall-clock time in the report");
    app.add_option("--workers", common.workers, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--max-colors", common.max_colors, "Distinct colors the rainbow search accepts")
        ->check(CLI::Range(1, 31));

    VerifyFlags verify_flags;
    auto *verify = app.add_subcommand("verify", "Check that a coloring is rainbow connected");
    verify->add_option("--graph", verify_flags.graph, "Graph file")->required();
    verify->add_option("--coloring", verify_flags.coloring, "Coloring file")->required();

    ColorFlags color_flags;
    auto *color = app.add_subcommand("color", "Las Vegas rainbow coloring");
    color->add_option("--graph", color_flags.graph, "Graph file")->required();
    color->add_option("-k", color_flags.k, "Palette size")->required();
    color->add_option("--seed", color_flags.seed, "Seed (fallback: RAINBOW_SEED)");
    color->add_option("--max-iters", color_flags.max_iters, "Draw limit")->check(CLI::PositiveNumber);
    color->add_option("--out", color_flags.out, "Write the coloring here");

    RcFlags rc_flags;
    auto *rc = app.add_subcommand("rc", "Exact rainbow connection number");
    rc->add_option("--graph", rc_flags.graph, "Graph file")->required();
    rc->add_option("--max-edges", rc_flags.max_edges, "Largest edge count searched");
    rc->add_option("--max-nodes", rc_flags.max_nodes, "Search node budget (0: unlimited)");
    rc->add_option("--time-limit", rc_flags.time_limit, "Seconds (0: unlimited)");
    rc->add_flag("--no-prune", rc_flags.no_prune, "Disable partial-coloring pruning");
    rc->add_option("--out", rc_flags.out, "Write the certificate here");

    CheckFlags check_flags;
    auto *check = app.add_subcommand("check", "Evaluate theorem hypotheses");
    check->add_option("--graph", check_flags.graph, "Graph file")->required();
    check->add_option("-k", check_flags.k, "Palette size")->required();
    check->add_option("--theorem", check_flags.theorem, "T1_1 .. T1_7 or all");

    BoundsFlags bounds_flags;
    auto *bounds = app.add_subcommand("bounds", "Thresholds and union-bound arithmetic");
    bounds->add_option("-k", bounds_flags.k, "Palette size")->required();
    bounds->add_option("-n", bounds_flags.n, "Order")->required();
    bounds->add_option("--theorem", bounds_flags.theorem, "T1_1 .. T1_7 (default: all)");

    GenFlags gen_flags;
    auto *gen = app.add_subcommand("gen", "Generate a graph family");
    gen->add_option("--family", gen_flags.family, "Family name")->required();
    gen->add_option("-n", gen_flags.n, "Order");
    gen->add_option("--s", gen_flags.s, "First class size");
    gen->add_option("--t", gen_flags.t, "Second class size");
    gen->add_option("--delta", gen_flags.delta, "Minimum degree target");
    gen->add_option("--seed", gen_flags.seed, "Seed for random families (fallback: RAINBOW_SEED)");
    gen->add_option("--max-retries", gen_flags.max_retries, "Redraw budget for random families");
    gen->add_option("--out", gen_flags.out, "Output graph file")->required();

    ExperimentFlags experiment_flags;
    auto *experiment = app.add_subcommand("experiment", "Monte Carlo success rate of uniform colorings");
    add_experiment_flags(experiment, experiment_flags);

    SweepFlags sweep_flags;
    auto *sweep_cmd = app.add_subcommand("sweep", "Experiments over a parameter range");
    add_experiment_flags(sweep_cmd, sweep_flags.base);
    sweep_cmd->add_option("--param", sweep_flags.param, "delta_target, k or n")->required();
    sweep_cmd->add_option("--values", sweep_flags.values, "Comma-separated values")->delimiter(',')->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitAffirmative : kExitUsage;
    }

    try {
        for (auto *sub : {experiment, sweep_cmd})
            if (sub->parsed() && sub->count("--csv"))
                common.csv = true;
        if (common.csv && common.json)
            throw UsageError("--json and --csv are exclusive");

        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        if (verify->parsed())
            o = do_verify(verify_flags, common);
        else if (color->parsed())
            o = do_color(color_flags, common, env);
        else if (rc->parsed())
            o = do_rc(rc_flags, common);
        else if (check->parsed())
            o = do_check(check_flags);
        else if (bounds->parsed())
            o = do_bounds(bounds_flags);
        else if (gen->parsed())
            o = do_gen(gen_flags, env);
        else if (experiment->parsed())
            o = do_experiment(experiment_flags, common, env);
        else
            o = do_sweep(sweep_flags, common, env);
        if (common.timing)
            o.report.wall_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

        if (common.json)
            out << Json(o.report).dump(2) << '\n';
        else if (common.csv)
            out << *o.csv;
        else {
            o.human(out);
            if (o.report.wall_ms)
                out << "wall time: " << fixed(*o.report.wall_ms, 3) << " ms\n";
        }
        return o.code;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace rainbow::cli
