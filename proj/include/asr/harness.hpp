#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "asr/colorer.hpp"
#include "asr/coloring.hpp"
#include "asr/graph.hpp"
#include "asr/grow.hpp"
#include "asr/pair_spec.hpp"
#include "asr/rational.hpp"

namespace asr {

// splitmix64 finaliser; the sampler and seed derivation are built on it
std::uint64_t mix64(std::uint64_t x);
// a child seed for (master, a, b, c, d); order-sensitive and stateless
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0,
                          std::uint64_t d = 0);

// Edge k of the colex order over pairs u < v is present iff the hash of
// (seed, k) mapped to [0,1) is below p. p outside [0,1] is clamped.
Graph sample_gnp(int n, double p, std::uint64_t seed);

// b * n^(-1/m2(H1,H2)), clamped to [0,1]; the only floating-point quantity
double edge_probability(int n, const Rational& b, const Rational& m2_pair);

enum class TrialMode { ColorOnly, ColorPlusOracle, FullPipeline };

struct TrialConfig {
    PairSpec pair;
    std::vector<Graph> a_hat;  // the family the colorer works with
    int n = 0;
    Rational b{1};
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;  // oracle node limit
    TrialMode mode = TrialMode::ColorOnly;
};

struct GrowSummary {
    GrowVariant variant = GrowVariant::Grow;
    GrowOutcome outcome = GrowOutcome::SpecialReturn;
    int steps = 0;
    int degenerate = 0;
    std::optional<Rational> min_drop;
    Rational lambda_seed;
    Rational final_lambda;  // min lambda over subgraphs of the last F_i
    GrowAudit audit;
};

struct TrialResult {
    int n = 0;
    Rational b;
    double p = 0;
    std::uint64_t seed = 0;
    TrialMode mode = TrialMode::ColorOnly;
    int edges = 0;
    ColorerStatus colorer = ColorerStatus::Stuck;
    bool verified = false;           // Colored and verify_coloring passed
    std::string failure;             // colorer or verifier detail
    std::optional<Verdict> oracle;   // ColorPlusOracle
    std::uint64_t oracle_nodes = 0;
    std::optional<StuckReport> stuck;  // FullPipeline on Stuck
    std::optional<GrowSummary> grow;
    std::optional<GrowTrace> trace;    // FullPipeline, kept when asked
    std::string grow_error;            // GrowAborted message
    double ms = 0;

    // Colored but refused by the verifier or by the oracle
    bool soundness_failure() const;
};

// Samples G(n,p) and runs the configured mode. InvariantViolation from the
// colorer or from check_stuck_state propagates. keep_trace stores the grow
// trace in the result.
TrialResult run_trial(const TrialConfig& c, bool keep_trace = false);

struct SweepConfig {
    PairSpec pair;
    std::vector<Graph> a_hat;
    std::vector<int> ns;
    std::vector<Rational> bs;
    int trials = 1;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;
    TrialMode mode = TrialMode::ColorOnly;
};

struct SweepCell {
    int n = 0;
    Rational b;
    double p = 0;
    int trials = 0;
    int colored = 0;
    int stuck = 0;
    int a_colour_failed = 0;
    int oracle_valid = 0;
    int oracle_invalid = 0;
    int budget_exceeded = 0;
    int verify_failures = 0;
    int soundness_failures = 0;
    int grown = 0;
    int grow_aborted = 0;
    int audit_violations = 0;
    double total_ms = 0;
    double mean_ms() const { return trials ? total_ms / trials : 0; }
};

struct SweepReport {
    std::vector<SweepCell> cells;
    // (n, b_lo, b_hi) where the Colored fraction rises by more than three
    // standard errors as b grows
    std::vector<std::string> monotonicity_flags;
};

// Trial t of cell (n, b) uses derive_seed(seed, n, b_num, b_den, t), so a
// cell's counts do not depend on the other cells. on_cell runs after each
// cell, e.g. to flush partial output; on_trial sees every result.
SweepReport sweep(const SweepConfig& c, const std::function<void(const SweepCell&)>& on_cell = {},
                  const std::function<void(const TrialResult&)>& on_trial = {});

// Log-spaced grid from 1/8 to 4 in factors of 2.
std::vector<Rational> default_b_grid();

// header n,b_num,b_den,p,trials,colored,stuck,oracle_valid,oracle_invalid,
// budget_exceeded,mean_ms. mean_ms is left blank unless with_timing, so the
// file is a function of the configuration alone.
std::string sweep_csv_header();
std::string sweep_csv_row(const SweepCell& cell, bool with_timing);
std::string sweep_csv(const SweepReport& r, bool with_timing);

std::string to_string(TrialMode m);
TrialMode parse_trial_mode(const std::string& s);

}  // namespace asr
