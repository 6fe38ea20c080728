#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "dofia/config.hpp"
#include "dofia/field.hpp"
#include "dofia/geometry.hpp"
#include "dofia/schemes.hpp"

namespace dofia {

/// Channel matrices H[k][j](t) for one trial, users 1-based.
///
/// Column count is the number of antennas transmitter j keeps active, so the
/// antenna-restricted corners (T4 in C61, T7) see the reduced channel.
class ChannelRealization {
public:
    ChannelRealization(std::vector<int> rx_antennas, std::vector<int> tx_active, int slots, std::uint64_t seed);

    [[nodiscard]] const MatrixXp& h(int k, int j, int t) const;
    // Test hook: overwrite one matrix (used for perturbation checks).
    void set(int k, int j, int t, const MatrixXp& m);
    [[nodiscard]] int users() const { return static_cast<int>(rx_.size()); }
    [[nodiscard]] int slots() const { return slots_; }
    [[nodiscard]] int rx_antennas(int k) const { return rx_[static_cast<std::size_t>(k - 1)]; }
    [[nodiscard]] int tx_active(int j) const { return tx_[static_cast<std::size_t>(j - 1)]; }

private:
    [[nodiscard]] std::size_t index(int k, int j, int t) const;

    std::vector<int> rx_, tx_;
    int slots_;
    std::vector<MatrixXp> h_;
};

/// What transmitter j may know at slot t under delayed local CSIT: its own
/// outgoing channels H[1][j], H[2][j] from strictly earlier slots. Anything
/// else throws, so a scheme cannot peek by accident.
class LocalCsi {
public:
    LocalCsi(const ChannelRealization& ch, int tx, int now) : ch_(ch), tx_(tx), now_(now) {}

    [[nodiscard]] const MatrixXp& outgoing(int rx, int slot) const;
    [[nodiscard]] int tx() const { return tx_; }
    [[nodiscard]] int now() const { return now_; }

private:
    const ChannelRealization& ch_;
    int tx_;
    int now_;
};

struct Transcript {
    std::array<VectorXp, 2> u;                   // information symbols per user
    std::array<std::vector<VectorXp>, 2> x;      // X[j](t)
    std::array<std::vector<VectorXp>, 2> y;      // Y[k](t)
    // interference[k]: quantities the other transmitter created at receiver k
    // during its phase one (what it later retransmits combinations of).
    std::array<VectorXp, 2> interference;
};

struct ReceiverReport {
    int equations = 0;
    int unknowns = 0;
    int achieved_rank = 0;
    int predicted_rank = 0;
    bool decoded = false;
};

struct TrialReport {
    std::uint64_t seed = 0;
    SchemeSpec spec;
    std::vector<ReceiverReport> receivers;
    std::optional<std::vector<Rational>> dof;  // per-user DoF, set when every receiver decoded
    // Special S1/S2 schemes: receiver two's staged solve agreed with the joint solve.
    std::optional<bool> staged_matches_joint;

    [[nodiscard]] bool all_decoded() const;
};

// Phase-one/phase-two transmissions of the generic scheme. Exposed so tests can
// check that phase-two signals depend only on local delayed CSI.
std::array<std::vector<VectorXp>, 2> generic_transmit(const AntennaConfig& cfg, const SchemeSpec& spec,
                                                      const ChannelRealization& ch, const std::array<VectorXp, 2>& u,
                                                      std::uint64_t seed);

ChannelRealization generic_channels(const AntennaConfig& cfg, const SchemeSpec& spec, std::uint64_t seed);

TrialReport run_generic(const AntennaConfig& cfg, const SchemeSpec& spec, std::uint64_t seed,
                        Transcript* transcript = nullptr);

TrialReport run_s1_t5(const AntennaConfig& cfg, std::uint64_t seed);
TrialReport run_s1_t8(const AntennaConfig& cfg, std::uint64_t seed);
TrialReport run_s2_t9(const AntennaConfig& cfg, std::uint64_t seed);

// Any special (T5/T8/T9) spec; exposed for perturbation tests.
TrialReport run_special(const AntennaConfig& cfg, const SchemeSpec& spec, std::uint64_t seed,
                        Transcript* transcript = nullptr);

// Dispatches on spec.variant.
TrialReport run_scheme(const AntennaConfig& cfg, const SchemeSpec& spec, std::uint64_t seed);

struct MisoTrial {
    TrialReport report;
    // Every receiver's K x K system for its own symbols was invertible.
    bool final_systems_invertible = false;
};

MisoTrial run_miso_detailed(const MisoConfig& mc, std::uint64_t seed);
TrialReport run_miso(const MisoConfig& mc, std::uint64_t seed);

struct Aggregate {
    std::string class_name;
    std::string corner;
    SchemeSpec spec;
    int trials = 0;
    std::uint64_t base_seed = 0;
    std::vector<int> decoded;          // per receiver
    std::vector<int> rank_agreement;   // achieved == predicted, per receiver
    std::vector<int> min_rank, max_rank;
    std::vector<std::uint64_t> failing_seeds;  // any receiver failed to decode
    std::vector<std::uint64_t> mismatch_seeds;  // achieved != predicted somewhere
    int staged_mismatches = 0;
    std::optional<std::vector<Rational>> dof;  // from the first fully decoded trial
    std::vector<TrialReport> reports;  // in seed order

    [[nodiscard]] bool all_decoded() const;
};

// Runs trials with seeds base_seed, base_seed+1, ... across DOFIA_THREADS
// worker threads (default: hardware concurrency). Output order is by seed.
Aggregate monte_carlo(const AntennaConfig& cfg, const SchemeSpec& spec, int trials, std::uint64_t base_seed);
Aggregate monte_carlo(const AntennaConfig& cfg, const std::string& corner, int trials, std::uint64_t base_seed);
Aggregate monte_carlo_miso(const MisoConfig& mc, int trials, std::uint64_t base_seed);

int worker_threads();

}  // namespace dofia
