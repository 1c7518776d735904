// Command-line entry point. Exit codes: 0 success, 2 invalid configuration,
// 3 internal invariant violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include "asr/a_hat.hpp"
#include "asr/colorer.hpp"
#include "asr/density.hpp"
#include "asr/families.hpp"
#include "asr/graph_io.hpp"
#include "asr/grow.hpp"
#include "asr/harness.hpp"
#include "asr/regular_pairs.hpp"

using namespace asr;
using json = nlohmann::json;

namespace {

constexpr int kInvalidConfig = 2;
constexpr int kInvariant = 3;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// K<n>, C<n>, P<n>, K<a>,<b>, otherwise graph6, an edge list or a file
Graph parse_graph_arg(const std::string& s) {
    static const std::regex named(R"(([KCP])(\d+)(?:,(\d+))?)");
    std::smatch m;
    if (std::regex_match(s, m, named)) {
        int a = std::stoi(m[2]);
        if (m[3].matched) {
            if (m[1] != "K") throw ConfigError("only K<a>,<b> takes two sizes: " + s);
            return complete_bipartite(a, std::stoi(m[3]));
        }
        if (m[1] == "K") return complete_graph(a);
        if (m[1] == "C") {
            if (a < 3) throw ConfigError("cycles need at least 3 vertices: " + s);
            return cycle_graph(a);
        }
        return path_graph(a);
    }
    return load_graph(s);
}

std::string rat(const Rational& r) { return to_string(r); }

json edges_json(const Graph& g) {
    json a = json::array();
    for (const Edge& e : g.edges()) a.push_back({e.u, e.v});
    return a;
}

json coloring_json(const Coloring& c) {
    json a = json::array();
    for (int e = 0; e < c.graph.edge_count(); ++e)
        a.push_back({{"u", c.graph.edge(e).u}, {"v", c.graph.edge(e).v}, {"colour", to_string(c.colour[e])}});
    return a;
}

json step_json(const GrowStep& s) {
    return {{"i", s.i},
            {"kind", to_string(s.kind)},
            {"degenerate", s.degenerate},
            {"lambda_before", rat(s.lambda_before)},
            {"lambda_after", rat(s.lambda_after)},
            {"v_added", s.added_vertices},
            {"e_added", s.added_edges}};
}

json trace_summary_json(const GrowTrace& t, const PairSpec& pair) {
    GrowAudit a = audit_trace(t, pair);
    json j = {{"variant", to_string(t.variant)},
              {"outcome", to_string(t.outcome)},
              {"steps", t.steps.size()},
              {"degenerate", t.degenerate_count()},
              {"lambda_seed", rat(t.lambda_seed)},
              {"min_lambda", rat(t.min_lambda)},
              {"iteration_cap", t.iteration_cap},
              {"final_vertices", t.final.vertex_count()},
              {"final_edges", t.final.edge_count()},
              {"final_graph6", emit_graph6(t.final)},
              {"audit_ok", a.ok},
              {"audit_violations", a.violations}};
    if (auto d = t.min_degenerate_drop()) j["min_degenerate_drop"] = rat(*d);
    return j;
}

void write_jsonl(const std::string& path, const std::vector<json>& lines) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path);
    for (const auto& l : lines) out << l.dump() << '\n';
}

struct Global {
    std::uint64_t seed = 1;
    std::string out_dir;
    std::string format = "json";
};

// text to stdout, or to <out>/<name> when --out is set
void emit(const Global& g, const std::string& name, const std::string& text) {
    if (g.out_dir.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::filesystem::create_directories(g.out_dir);
    std::ofstream out(std::filesystem::path(g.out_dir) / name);
    if (!out) throw ConfigError("cannot write into " + g.out_dir);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

struct PairArgs {
    std::string h1, h2, epsilon = "1/100";
    int a_hat_bound = 7;

    void add(CLI::App* app, bool with_family) {
        app->add_option("--pair-h1", h1, "H1 (graph6, edge list, file, or K4 / C5 / P3 / K3,3)")->required();
        app->add_option("--pair-h2", h2, "H2")->required();
        app->add_option("--epsilon", epsilon, "epsilon as p/q")->capture_default_str();
        if (with_family)
            app->add_option("--a-hat-bound", a_hat_bound, "vertex bound for the A-hat enumeration")
                ->capture_default_str();
    }
    PairSpec pair() const { return build_pair_spec(parse_graph_arg(h1), parse_graph_arg(h2), parse_rational(epsilon)); }
};

std::vector<Graph> family_for(const PairSpec& pair, int bound) { return enumerate_a_hat(pair, bound).graphs(); }

template <class T>
std::vector<T> split_list(const std::string& s, T (*conv)(const std::string&)) {
    std::vector<T> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(conv(item));
    return out;
}

int to_int(const std::string& s) { return std::stoi(s); }

json trial_json(const TrialResult& r) {
    json j = {{"n", r.n},
              {"b", rat(r.b)},
              {"p", r.p},
              {"seed", r.seed},
              {"mode", to_string(r.mode)},
              {"edges", r.edges},
              {"colorer", to_string(r.colorer)},
              {"verified", r.verified},
              {"soundness_failure", r.soundness_failure()},
              {"ms", r.ms}};
    if (!r.failure.empty()) j["failure"] = r.failure;
    if (r.oracle) {
        j["oracle"] = to_string(*r.oracle);
        j["oracle_nodes"] = r.oracle_nodes;
    }
    if (r.stuck)
        j["stuck"] = {{"in_C", r.stuck->in_C},
                      {"in_Cstar", r.stuck->in_Cstar},
                      {"a_hat_graph", r.stuck->is_a_hat_graph},
                      {"sparse", r.stuck->is_sparse}};
    if (r.grow) {
        json g = {{"variant", to_string(r.grow->variant)},
                  {"outcome", to_string(r.grow->outcome)},
                  {"steps", r.grow->steps},
                  {"degenerate", r.grow->degenerate},
                  {"lambda_seed", rat(r.grow->lambda_seed)},
                  {"final_lambda", rat(r.grow->final_lambda)},
                  {"audit_ok", r.grow->audit.ok},
                  {"audit_violations", r.grow->audit.violations}};
        if (r.grow->min_drop) g["min_degenerate_drop"] = rat(*r.grow->min_drop);
        j["grow"] = g;
    }
    if (!r.grow_error.empty()) j["grow_error"] = r.grow_error;
    return j;
}

json cell_json(const SweepCell& c) {
    return {{"n", c.n},
            {"b", rat(c.b)},
            {"p", c.p},
            {"trials", c.trials},
            {"colored", c.colored},
            {"stuck", c.stuck},
            {"a_colour_failed", c.a_colour_failed},
            {"oracle_valid", c.oracle_valid},
            {"oracle_invalid", c.oracle_invalid},
            {"budget_exceeded", c.budget_exceeded},
            {"verify_failures", c.verify_failures},
            {"soundness_failures", c.soundness_failures},
            {"grown", c.grown},
            {"grow_aborted", c.grow_aborted},
            {"audit_violations", c.audit_violations},
            {"mean_ms", c.mean_ms()}};
}

json cert_json(const CertResult& r) {
    if (r.ok()) {
        const auto& c = *r.certificate;
        return {{"certified", true},
                {"v1", c.params.v1},
                {"l1", c.params.l1},
                {"v2", c.params.v2},
                {"l2", c.params.l2},
                {"route", to_string(c.route)},
                {"f", c.f},
                {"route_bound", c.route_bound},
                {"m2_pair", rat(c.m2_pair)},
                {"degree_density", rat(c.degree_density)},
                {"margin", rat(c.margin)},
                {"epsilon_star", rat(c.epsilon_star)}};
    }
    json ex = json::array();
    for (Exclusion e : r.rejection->exclusions) ex.push_back(to_string(e));
    return {{"certified", false},
            {"rejection", to_string(r.rejection->kind)},
            {"exclusions", ex},
            {"reason", r.rejection->reason}};
}

std::string density_table(const Graph& g, const std::optional<Graph>& h2) {
    DensityProfile p = density_profile(g);
    std::ostringstream os;
    auto row = [&](const std::string& name, const Rational& v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%-10s %-12s %.6f\n", name.c_str(), to_string(v).c_str(), to_double(v));
        os << buf;
    };
    os << describe(g) << '\n';
    row("d", p.d);
    row("m", p.m);
    row("d2", p.d2);
    row("m2", p.m2);
    if (h2) {
        row("d2(.,H2)", d2_asym(g, *h2));
        row("m2(G,H2)", m2_asym(g, *h2).value);
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"asymmetric Ramsey density tools: colorer, grow traces, regular-pair certificates, G(n,p) sweeps"};
    app.require_subcommand(1);
    Global glob;
    app.add_option("--seed", glob.seed, "master seed")->capture_default_str();
    app.add_option("--out", glob.out_dir, "write output files into this directory");
    app.add_option("--format", glob.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    // sweep
    auto* sw = app.add_subcommand("sweep", "G(n,p) sweep around p = b n^(-1/m2(H1,H2))");
    PairArgs sw_pair;
    sw_pair.add(sw, true);
    std::string sw_ns = "20,30,40", sw_bs, sw_mode = "color-only";
    int sw_trials = 100;
    std::uint64_t sw_budget = kDefaultBudget;
    bool sw_timing = false;
    sw->add_option("--n", sw_ns, "comma-separated vertex counts")->capture_default_str();
    sw->add_option("--b", sw_bs, "comma-separated b values as p/q (default 1/8..4 in factors of 2)");
    sw->add_option("--trials", sw_trials, "trials per (n, b)")->capture_default_str();
    sw->add_option("--mode", sw_mode, "color-only, color-plus-oracle or full-pipeline")->capture_default_str();
    sw->add_option("--budget", sw_budget, "oracle node limit")->capture_default_str();
    sw->add_flag("--timing", sw_timing, "fill mean_ms in the CSV (breaks byte-identical reruns)");

    // trial
    auto* tr = app.add_subcommand("trial", "one G(n,p) trial");
    PairArgs tr_pair;
    tr_pair.add(tr, true);
    int tr_n = 20;
    std::string tr_b = "1", tr_mode = "full-pipeline", tr_trace;
    std::uint64_t tr_budget = kDefaultBudget;
    tr->add_option("--n", tr_n)->capture_default_str();
    tr->add_option("--b", tr_b)->capture_default_str();
    tr->add_option("--mode", tr_mode)->capture_default_str();
    tr->add_option("--budget", tr_budget)->capture_default_str();
    tr->add_option("--trace", tr_trace, "JSON-lines grow trace, if the trial gets stuck");

    // color
    auto* co = app.add_subcommand("color", "run the colouring algorithm on one graph");
    PairArgs co_pair;
    co_pair.add(co, true);
    std::string co_graph, co_trace;
    co->add_option("graph", co_graph, "host graph")->required();
    co->add_option("--trace", co_trace, "JSON-lines event trace");

    // oracle
    auto* orc = app.add_subcommand("oracle", "exhaustive search for a valid colouring");
    PairArgs or_pair;
    or_pair.add(orc, false);
    std::string or_graph;
    std::uint64_t or_budget = kDefaultBudget;
    orc->add_option("graph", or_graph)->required();
    orc->add_option("--budget", or_budget)->capture_default_str();

    // grow
    auto* gr = app.add_subcommand("grow", "GROW or GROW-ALT on a host graph");
    PairArgs gr_pair;
    gr_pair.add(gr, true);
    std::string gr_graph, gr_variant, gr_trace;
    gr->add_option("graph", gr_graph)->required();
    gr->add_option("--variant", gr_variant, "grow or grow-alt (default: by the pair's case)")
        ->check(CLI::IsMember({"grow", "grow-alt"}));
    gr->add_option("--trace", gr_trace, "JSON-lines trace");

    // density
    auto* de = app.add_subcommand("density", "density measures of a graph");
    std::string de_graph, de_pair;
    de->add_option("graph", de_graph)->required();
    de->add_option("--pair", de_pair, "H2, for the asymmetric measures");

    // families
    auto* fa = app.add_subcommand("families", "membership in C and C*");
    PairArgs fa_pair;
    fa_pair.add(fa, false);
    std::string fa_graph;
    fa->add_option("graph", fa_graph)->required();

    // regular-cert
    auto* rc = app.add_subcommand("regular-cert", "emptiness certificate for a pair of regular graphs");
    int v1 = 0, l1 = 0, v2 = 0, l2 = 0;
    std::string rc_h1, rc_h2;
    std::vector<int> rc_sweep;
    rc->add_option("--v1", v1);
    rc->add_option("--l1", l1);
    rc->add_option("--v2", v2);
    rc->add_option("--l2", l2);
    rc->add_option("--h1", rc_h1, "concrete H1");
    rc->add_option("--h2", rc_h2, "concrete H2");
    rc->add_option("--sweep", rc_sweep, "v1max v2max: CSV over all valid tuples")->expected(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kInvalidConfig;
    }

    try {
        if (sw->parsed()) {
            SweepConfig c;
            c.pair = sw_pair.pair();
            c.a_hat = family_for(c.pair, sw_pair.a_hat_bound);
            c.ns = split_list<int>(sw_ns, to_int);
            c.bs = sw_bs.empty() ? default_b_grid() : split_list<Rational>(sw_bs, parse_rational);
            c.trials = sw_trials;
            c.seed = glob.seed;
            c.budget = sw_budget;
            c.mode = parse_trial_mode(sw_mode);
            // the CSV is flushed cell by cell so an interrupted sweep keeps its rows
            std::ofstream csv_file;
            std::ostream* csv = nullptr;
            if (!glob.out_dir.empty()) {
                std::filesystem::create_directories(glob.out_dir);
                csv_file.open(std::filesystem::path(glob.out_dir) / "sweep.csv");
                csv = &csv_file;
            } else if (glob.format == "csv") {
                csv = &std::cout;
            }
            if (csv) *csv << sweep_csv_header() << std::flush;
            SweepReport rep = sweep(c, [&](const SweepCell& cell) {
                if (csv) *csv << sweep_csv_row(cell, sw_timing) << std::flush;
            });
            json j = {{"h1", emit_graph6(c.pair.h1)},
                      {"h2", emit_graph6(c.pair.h2)},
                      {"m2_pair", rat(c.pair.m2_pair)},
                      {"epsilon", rat(c.pair.epsilon)},
                      {"a_hat_size", c.a_hat.size()},
                      {"seed", c.seed},
                      {"mode", to_string(c.mode)},
                      {"monotonicity_flags", rep.monotonicity_flags}};
            j["cells"] = json::array();
            int bad = 0;
            for (const auto& cell : rep.cells) {
                j["cells"].push_back(cell_json(cell));
                bad += cell.soundness_failures + cell.audit_violations;
            }
            if (!glob.out_dir.empty()) emit(glob, "sweep.json", j.dump(2));
            else if (glob.format == "json") emit(glob, "", j.dump(2));
            return bad ? kInvariant : 0;
        }
        if (tr->parsed()) {
            TrialConfig c;
            c.pair = tr_pair.pair();
            c.a_hat = family_for(c.pair, tr_pair.a_hat_bound);
            c.n = tr_n;
            c.b = parse_rational(tr_b);
            c.seed = glob.seed;
            c.budget = tr_budget;
            c.mode = parse_trial_mode(tr_mode);
            TrialResult r = run_trial(c, !tr_trace.empty());
            if (!tr_trace.empty() && r.trace) {
                std::vector<json> lines;
                for (const auto& s : r.trace->steps) lines.push_back(step_json(s));
                write_jsonl(tr_trace, lines);
            }
            emit(glob, "trial.json", trial_json(r).dump(2));
            return r.soundness_failure() || (r.grow && !r.grow->audit.ok) ? kInvariant : 0;
        }
        if (co->parsed()) {
            PairSpec pair = co_pair.pair();
            Graph g = parse_graph_arg(co_graph);
            auto fam = family_for(pair, co_pair.a_hat_bound);
            ColorerOutcome out = asym_edge_col(g, pair, fam, !co_trace.empty());
            json j = {{"status", to_string(out.status)}, {"guard_decompositions", out.guard_decompositions}};
            if (out.status == ColorerStatus::Colored) {
                Violation v = verify_coloring(out.coloring, pair);
                j["verified"] = v.ok();
                j["coloring"] = coloring_json(out.coloring);
                if (!v.ok()) throw InvariantViolation("verifier rejected the colouring");
            } else {
                j["residual_graph6"] = emit_graph6(out.residual);
                j["residual_edges"] = edges_json(out.residual);
                if (!out.failure.empty()) j["failure"] = out.failure;
            }
            if (!co_trace.empty()) {
                std::vector<json> lines;
                for (const auto& t : out.trace) {
                    json e = {{"step", t.step}, {"action", t.action}};
                    if (t.edge >= 0) e["edge"] = t.edge;
                    if (!t.l_copy.empty()) e["l_copy"] = t.l_copy;
                    if (t.colour != Colour::none) e["color"] = to_string(t.colour);
                    lines.push_back(e);
                }
                write_jsonl(co_trace, lines);
            }
            emit(glob, "color.json", j.dump(2));
            return 0;
        }
        if (orc->parsed()) {
            PairSpec pair = or_pair.pair();
            Graph g = parse_graph_arg(or_graph);
            OracleResult r = has_valid_coloring(g, pair, or_budget);
            json j = {{"verdict", to_string(r.verdict)}, {"nodes_expanded", r.nodes}};
            if (r.verdict == Verdict::Valid) j["coloring"] = coloring_json(r.coloring);
            emit(glob, "oracle.json", j.dump(2));
            return 0;
        }
        if (gr->parsed()) {
            PairSpec pair = gr_pair.pair();
            Graph g = parse_graph_arg(gr_graph);
            auto fam = family_for(pair, gr_pair.a_hat_bound);
            GrowTrace t;
            try {
                if (gr_variant.empty()) t = grow_for(g, pair, fam);
                else t = gr_variant == "grow" ? grow(g, pair, fam) : grow_alt(g, pair, fam);
            } catch (const GrowAborted& e) {
                if (!gr_trace.empty()) {
                    std::vector<json> lines;
                    for (const auto& s : e.trace().steps) lines.push_back(step_json(s));
                    write_jsonl(gr_trace, lines);
                }
                throw;
            }
            if (!gr_trace.empty()) {
                std::vector<json> lines;
                for (const auto& s : t.steps) lines.push_back(step_json(s));
                write_jsonl(gr_trace, lines);
            }
            json j = trace_summary_json(t, pair);
            emit(glob, "grow.json", j.dump(2));
            return j["audit_ok"].get<bool>() ? 0 : kInvariant;
        }
        if (de->parsed()) {
            Graph g = parse_graph_arg(de_graph);
            std::optional<Graph> h2;
            if (!de_pair.empty()) h2 = parse_graph_arg(de_pair);
            // a table unless JSON is asked for explicitly
            if (app.count("--format") == 0 || glob.format != "json") {
                emit(glob, "density.txt", density_table(g, h2));
                return 0;
            }
            DensityProfile p = density_profile(g);
            json j = {{"d", rat(p.d)},
                      {"m", rat(p.m)},
                      {"d2", rat(p.d2)},
                      {"m2", rat(p.m2)},
                      {"witnesses", {{"m", p.witness_m}, {"m2", p.witness_m2}}},
                      {"balanced", balancedness(g, Balance::balanced)},
                      {"strictly_balanced", balancedness(g, Balance::strictly_balanced)},
                      {"two_balanced", balancedness(g, Balance::two_balanced)},
                      {"strictly_two_balanced", balancedness(g, Balance::strictly_two_balanced)}};
            if (h2) {
                Extremum a = m2_asym(g, *h2);
                j["d2_asym"] = rat(d2_asym(g, *h2));
                j["m2_asym"] = rat(a.value);
                j["witnesses"]["m2_asym"] = a.vertices;
                j["strictly_balanced_d2_asym"] = asym_balancedness(g, *h2, true);
            }
            emit(glob, "density.json", j.dump(2));
            return 0;
        }
        if (fa->parsed()) {
            PairSpec pair = fa_pair.pair();
            Graph g = parse_graph_arg(fa_graph);
            FamilyReport r = family_report(g, pair);
            json copies = json::array();
            for (const auto& c : r.lstar_copies.copies) copies.push_back(c.edges);
            json j = {{"graph6", emit_graph6(g)},
                      {"in_C", r.in_C},
                      {"in_Cstar", r.in_Cstar},
                      {"lstar_copies", copies},
                      {"c_failures", r.c_failures},
                      {"cstar_failures", r.cstar_failures}};
            emit(glob, "families.json", j.dump(2));
            return 0;
        }
        if (rc->parsed()) {
            if (!rc_sweep.empty()) {
                emit(glob, "regular_sweep.csv", regular_sweep_csv(regular_sweep(rc_sweep[0], rc_sweep[1])));
                return 0;
            }
            CertResult r;
            if (!rc_h1.empty() || !rc_h2.empty()) {
                if (rc_h1.empty() || rc_h2.empty()) throw ConfigError("--h1 and --h2 go together");
                r = certify_emptiness(parse_graph_arg(rc_h1), parse_graph_arg(rc_h2));
            } else {
                if (!v1 || !l1 || !v2 || !l2) throw ConfigError("give --v1 --l1 --v2 --l2, --h1 --h2 or --sweep");
                r = certify_emptiness(RegularPairParams{v1, v2, l1, l2});
            }
            emit(glob, "regular_cert.json", cert_json(r).dump(2));
            return 0;
        }
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return kInvariant;
    } catch (const GrowAborted& e) {
        std::cerr << "grow aborted: " << e.what() << '\n';
        return kInvariant;
    } catch (const std::logic_error& e) {
        // invalid_argument (bad input) is a logic_error too
        if (dynamic_cast<const std::invalid_argument*>(&e)) {
            std::cerr << "invalid configuration: " << e.what() << '\n';
            return kInvalidConfig;
        }
        std::cerr << "internal error: " << e.what() << '\n';
        return kInvariant;
    } catch (const ParseError& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return kInvalidConfig;
    } catch (const ConfigError& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return kInvalidConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvariant;
    }
    return 0;
}
