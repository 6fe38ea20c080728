#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dofia/config.hpp"
#include "dofia/report.hpp"

namespace dofia {

// Every normalized configuration (n1 <= n2) with all counts in [1, max].
std::vector<AntennaConfig> normalized_configs(int max);

struct SweepOptions {
    int max_antennas = 6;
    int trials = 50;          // per corner scheme
    int rank_max_w = 6;       // generic (W, W1, W2) oracle bound; 0 disables it
    int rank_seeds = 0;       // 0 means "same as trials"
    std::uint64_t seed = 20160901;
};

struct SweepCheck {
    int checked = 0;
    int violations = 0;
    std::vector<std::string> examples;  // first few violations
};

struct SweepResult {
    SweepOptions options;
    int configs = 0;
    std::map<std::string, int> class_counts;
    std::map<std::string, SweepCheck> checks;  // by check name
    std::vector<std::string> findings;         // tight without a case predicate
    [[nodiscard]] int violations() const;
};

using Progress = std::function<void(const std::string&)>;

SweepResult run_sweep(const SweepOptions& opt, const Progress& progress = {});

Json sweep_json(const SweepResult& r);
std::string sweep_text(const SweepResult& r);

// One (config, W, W1, W2, receiver, seed) where the exact F_p rank of the
// generic coefficient matrix differs from the closed-form prediction.
struct RankMismatch {
    AntennaConfig cfg;
    int w = 0, w1 = 0, w2 = 0, receiver = 0;
    std::uint64_t seed = 0;
    int rank = 0, predicted = 0, unknowns = 0;
};

struct RankOracleResult {
    long long tuples = 0;        // (config, W, W1, W2) combinations
    long long evaluations = 0;   // tuples x receivers x seeds
    long long mismatched_evaluations = 0;
    long long mismatched_tuples = 0;
    // Tuples where decodability (rank == unknowns) and the rank condition disagree.
    long long decode_disagreements = 0;
    std::vector<RankMismatch> mismatches;  // first mismatching seed per (tuple, receiver)
};

// W in [2, max_w], W1, W2 in [1, W-1]; seeds base_seed .. base_seed+seeds-1.
RankOracleResult rank_oracle(const std::vector<AntennaConfig>& cfgs, int max_w, int seeds, std::uint64_t base_seed);

}  // namespace dofia
