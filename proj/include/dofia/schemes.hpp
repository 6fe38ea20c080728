#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dofia/config.hpp"
#include "dofia/field.hpp"
#include "dofia/geometry.hpp"
#include "dofia/random.hpp"

namespace dofia {

enum class SchemeVariant { Generic, S1_T5, S1_T8, S2_T9, S_T7_Reduction, Miso };

std::string_view to_string(SchemeVariant v);

/// Phase lengths and per-slot symbol counts of one two-phase scheme.
///
/// Generic (and the T7 reduction): transmitter j sends `streams(j)` fresh
/// symbols per slot for its first w_j slots, then retransmits combinations of
/// the interference it caused. The special S1/S2 schemes share one phase
/// boundary w1 for both transmitters and carry their own symbol budgets.
struct SchemeSpec {
    int w = 0;
    int w1 = 0;
    int w2 = 0;
    int tx1_symbols_per_phase1_slot = 0;
    int tx2_symbols_per_phase1_slot = 0;
    SchemeVariant variant = SchemeVariant::Generic;
    std::string label;

    // S1_T5
    int nu = 0, nu1 = 0, nu2 = 0;
    // S1_T8
    int mu1 = 0, mu2 = 0;
    // S2_T9
    int eta1 = 0, eta2 = 0;
    std::vector<int> omega;  // tx-2 fresh symbols per phase-one slot (also filled for T5/T8)
    // S_T7_Reduction: antennas transmitter two keeps active
    int effective_m2 = 0;

    [[nodiscard]] int streams(int tx) const { return tx == 1 ? tx1_symbols_per_phase1_slot : tx2_symbols_per_phase1_slot; }
    [[nodiscard]] int phase1_len(int tx) const { return tx == 1 ? w1 : w2; }
    [[nodiscard]] bool generic_structure() const {
        return variant == SchemeVariant::Generic || variant == SchemeVariant::S_T7_Reduction;
    }
};

// Information symbols carried per transmitter over the whole block.
std::array<int, 2> symbol_counts(const SchemeSpec& s);
// (symbols1 / W, symbols2 / W)
DofPoint scheme_dof(const SchemeSpec& s);

// Generic scheme with every transmitter using M'_j streams.
SchemeSpec generic_scheme(const AntennaConfig& cfg, int w, int w1, int w2);

// Corners with a prescribed scheme for the config's class ("symmetric" is an
// alias of P3 for class C4).
std::vector<std::string> scheme_corners(const AntennaConfig& cfg);
SchemeSpec corner_scheme(const AntennaConfig& cfg, const std::string& corner_label);

struct CountConstraints {
    int lhs1 = 0, rhs1 = 0, lhs2 = 0, rhs2 = 0;
    [[nodiscard]] bool holds() const { return lhs1 <= rhs1 && lhs2 <= rhs2; }
};

CountConstraints count_constraints(const SchemeSpec& spec, const AntennaConfig& cfg);

struct RankTerms {
    int r1 = 0, r2 = 0, r3 = 0;
    int i_max = 2, i_min = 1;
    int unknowns = 0;  // M'_i W_i + min(M'_ibar, N_i) W_ibar
    int predicted_rank = 0;
};

// receiver is 1 or 2. Throws InvariantError if the W1 == W2 tie resolves
// differently under the two orderings.
RankTerms rank_terms(const AntennaConfig& cfg, const SchemeSpec& spec, int receiver);

struct RankCondition {
    std::array<bool, 2> holds{};
    [[nodiscard]] bool both() const { return holds[0] && holds[1]; }
};

RankCondition rank_condition(const AntennaConfig& cfg, const SchemeSpec& spec);

// Throws ValidationError on impossible phase lengths or stream counts.
void validate(const SchemeSpec& spec, const AntennaConfig& cfg);

// ---- shared randomness -----------------------------------------------------

// Channel H[k][j](t): N_k x (active antennas of j), drawn from the trial seed.
template <class Scalar>
MatrixX<Scalar> draw_channel(std::uint64_t seed, int k, int j, int t, int rows, int cols) {
    return random_matrix<Scalar>(derive_seed(seed, Stream::Channel, static_cast<std::uint64_t>(k),
                                             static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(t)),
                                 rows, cols);
}

// Transmitter j's phase-two combination matrix for slot t.
template <class Scalar>
MatrixX<Scalar> draw_combiner(std::uint64_t seed, int j, int t, int rows, int cols) {
    return random_matrix<Scalar>(
        derive_seed(seed, Stream::Combine, static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(t)), rows, cols);
}

// Per-receiver dimensions of the generic scheme.
struct GenericDims {
    std::array<int, 3> n{};        // rx antennas, 1-based
    std::array<int, 3> s{};        // active streams per tx
    std::array<int, 3> wlen{};     // phase-one length per tx
    // q[j]: interference quantities transmitter j creates per slot at the
    // other receiver; aligned[j] when they are received combinations
    // (s_j >= N_other) rather than the symbols themselves.
    std::array<int, 3> q{};
    std::array<bool, 3> aligned{};
    int w = 0;
};

GenericDims generic_dims(const AntennaConfig& cfg, const SchemeSpec& spec);

/// Receiver-i coefficient matrix of the generic scheme and its six blocks.
///
/// Columns: own symbols (s_i W_i) then the interference quantities
/// (q_ibar W_ibar). Row blocks: slots [0, Wmin), [Wmin, Wmax), [Wmax, W).
template <class Scalar>
struct BlockMatrix {
    FieldTag field = FieldTag::Prime;
    int receiver = 1;
    MatrixX<Scalar> p11, p21, p31;  // own-signal columns
    MatrixX<Scalar> p12, p22, p32;  // cross-signal columns
    MatrixX<Scalar> p;
};

template <class Scalar>
BlockMatrix<Scalar> build_coefficient_matrix(const AntennaConfig& cfg, const SchemeSpec& spec, int receiver,
                                             std::uint64_t seed);

extern template BlockMatrix<Fp> build_coefficient_matrix<Fp>(const AntennaConfig&, const SchemeSpec&, int,
                                                             std::uint64_t);
extern template BlockMatrix<double> build_coefficient_matrix<double>(const AntennaConfig&, const SchemeSpec&, int,
                                                                     std::uint64_t);

}  // namespace dofia
