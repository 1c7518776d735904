#include "asr/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace asr {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
    std::uint64_t h = mix64(master);
    for (std::uint64_t x : {a, b, c, d}) h = mix64(h ^ mix64(x));
    return h;
}

Graph sample_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    p = std::clamp(p, 0.0, 1.0);
    const std::uint64_t key = mix64(seed);
    std::vector<Edge> es;
    std::uint64_t k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k) {
            // top 53 bits as a double in [0,1)
            double x = static_cast<double>(mix64(key ^ mix64(k)) >> 11) * 0x1.0p-53;
            if (x < p) es.push_back({u, v});
        }
    return Graph(n, std::move(es));
}

double edge_probability(int n, const Rational& b, const Rational& m2_pair) {
    if (n <= 1) return 0;
    double p = to_double(b) * std::pow(static_cast<double>(n), -1.0 / to_double(m2_pair));
    return std::clamp(p, 0.0, 1.0);
}

bool TrialResult::soundness_failure() const {
    if (colorer != ColorerStatus::Colored) return false;
    return !verified || (oracle && *oracle == Verdict::Invalid);
}

TrialResult run_trial(const TrialConfig& c, bool keep_trace) {
    auto t0 = std::chrono::steady_clock::now();
    TrialResult r;
    r.n = c.n;
    r.b = c.b;
    r.seed = c.seed;
    r.mode = c.mode;
    r.p = edge_probability(c.n, c.b, c.pair.m2_pair);
    Graph g = sample_gnp(c.n, r.p, c.seed);
    r.edges = g.edge_count();

    ColorerOutcome out = asym_edge_col(g, c.pair, c.a_hat, false);
    r.colorer = out.status;
    if (out.status == ColorerStatus::AColourFailed) r.failure = out.failure;
    if (out.status == ColorerStatus::Colored) {
        Violation v = verify_coloring(out.coloring, c.pair);
        r.verified = v.ok();
        if (!v.ok()) r.failure = "verifier rejected the colouring";
    }
    if (c.mode == TrialMode::ColorPlusOracle) {
        OracleResult o = has_valid_coloring(g, c.pair, c.budget);
        r.oracle = o.verdict;
        r.oracle_nodes = o.nodes;
    }
    if (c.mode == TrialMode::FullPipeline && out.status == ColorerStatus::Stuck) {
        r.stuck = check_stuck_state(out, c.pair, c.a_hat);
        try {
            GrowTrace tr = grow_for(out.residual, c.pair, c.a_hat);
            GrowSummary s;
            s.variant = tr.variant;
            s.outcome = tr.outcome;
            s.steps = static_cast<int>(tr.steps.size());
            s.degenerate = tr.degenerate_count();
            s.min_drop = tr.min_degenerate_drop();
            s.lambda_seed = tr.lambda_seed;
            s.final_lambda = tr.min_lambda;
            s.audit = audit_trace(tr, c.pair);
            r.grow = std::move(s);
            if (keep_trace) r.trace = std::move(tr);
        } catch (const GrowAborted& e) {
            r.grow_error = e.what();
            if (keep_trace) r.trace = e.trace();
        }
    }
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<Rational> default_b_grid() { return {Rational(1, 8), Rational(1, 4), Rational(1, 2), 1, 2, 4}; }

SweepReport sweep(const SweepConfig& c, const std::function<void(const SweepCell&)>& on_cell,
                  const std::function<void(const TrialResult&)>& on_trial) {
    if (c.trials < 0) throw std::invalid_argument("trials must be non-negative");
    SweepReport rep;
    for (int n : c.ns) {
        if (n < 0) throw std::invalid_argument("n must be non-negative");
        for (const Rational& b : c.bs) {
            if (b < 0) throw std::invalid_argument("b must be non-negative");
            SweepCell cell;
            cell.n = n;
            cell.b = b;
            cell.p = edge_probability(n, b, c.pair.m2_pair);
            for (int t = 0; t < c.trials; ++t) {
                TrialConfig tc{c.pair, c.a_hat, n, b, 0, c.budget, c.mode};
                tc.seed = derive_seed(c.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(b.numerator()),
                                      static_cast<std::uint64_t>(b.denominator()), static_cast<std::uint64_t>(t));
                TrialResult r = run_trial(tc);
                ++cell.trials;
                cell.total_ms += r.ms;
                switch (r.colorer) {
                    case ColorerStatus::Colored: ++cell.colored; break;
                    case ColorerStatus::Stuck: ++cell.stuck; break;
                    case ColorerStatus::AColourFailed: ++cell.a_colour_failed; break;
                }
                if (r.colorer == ColorerStatus::Colored && !r.verified) ++cell.verify_failures;
                if (r.soundness_failure()) ++cell.soundness_failures;
                if (r.oracle) {
                    if (*r.oracle == Verdict::Valid) ++cell.oracle_valid;
                    else if (*r.oracle == Verdict::Invalid) ++cell.oracle_invalid;
                    else ++cell.budget_exceeded;
                }
                if (r.grow) {
                    ++cell.grown;
                    cell.audit_violations += static_cast<int>(r.grow->audit.violations.size());
                }
                if (!r.grow_error.empty()) ++cell.grow_aborted;
                if (on_trial) on_trial(r);
            }
            if (on_cell) on_cell(cell);
            rep.cells.push_back(cell);
        }
    }

    std::map<int, std::vector<const SweepCell*>> by_n;
    for (const auto& cell : rep.cells)
        if (cell.trials > 0) by_n[cell.n].push_back(&cell);
    for (auto& [n, cells] : by_n) {
        std::sort(cells.begin(), cells.end(), [](const SweepCell* a, const SweepCell* b) { return a->b < b->b; });
        for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
            const SweepCell& lo = *cells[i];
            const SweepCell& hi = *cells[i + 1];
            double f0 = static_cast<double>(lo.colored) / lo.trials, f1 = static_cast<double>(hi.colored) / hi.trials;
            double se = std::sqrt(f0 * (1 - f0) / lo.trials + f1 * (1 - f1) / hi.trials);
            if (f1 - f0 > 3 * se && f1 > f0)
                rep.monotonicity_flags.push_back("n=" + std::to_string(n) + " b=" + to_string(lo.b) + ".." +
                                                 to_string(hi.b));
        }
    }
    return rep;
}

std::string sweep_csv_header() {
    return "n,b_num,b_den,p,trials,colored,stuck,oracle_valid,oracle_invalid,budget_exceeded,mean_ms\n";
}

std::string sweep_csv_row(const SweepCell& cell, bool with_timing) {
    char p[32];
    std::snprintf(p, sizeof p, "%.10g", cell.p);
    std::ostringstream os;
    os << cell.n << ',' << cell.b.numerator() << ',' << cell.b.denominator() << ',' << p << ',' << cell.trials << ','
       << cell.colored << ',' << cell.stuck << ',' << cell.oracle_valid << ',' << cell.oracle_invalid << ','
       << cell.budget_exceeded << ',';
    if (with_timing) {
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.3f", cell.mean_ms());
        os << ms;
    }
    os << '\n';
    return os.str();
}

std::string sweep_csv(const SweepReport& r, bool with_timing) {
    std::string s = sweep_csv_header();
    for (const auto& cell : r.cells) s += sweep_csv_row(cell, with_timing);
    return s;
}

std::string to_string(TrialMode m) {
    switch (m) {
        case TrialMode::ColorOnly: return "color-only";
        case TrialMode::ColorPlusOracle: return "color-plus-oracle";
        case TrialMode::FullPipeline: return "full-pipeline";
    }
    return "?";
}

TrialMode parse_trial_mode(const std::string& s) {
    if (s == "color-only") return TrialMode::ColorOnly;
    if (s == "color-plus-oracle") return TrialMode::ColorPlusOracle;
    if (s == "full-pipeline") return TrialMode::FullPipeline;
    throw std::invalid_argument("unknown mode '" + s + "' (color-only, color-plus-oracle, full-pipeline)");
}

}  // namespace asr
