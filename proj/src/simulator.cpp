#include "dofia/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <thread>

#include "dofia/errors.hpp"
#include "dofia/linalg.hpp"
#include "dofia/random.hpp"

namespace dofia {

// ---- channels and local CSI -------------------------------------------------

ChannelRealization::ChannelRealization(std::vector<int> rx_antennas, std::vector<int> tx_active, int slots,
                                       std::uint64_t seed)
    : rx_(std::move(rx_antennas)), tx_(std::move(tx_active)), slots_(slots) {
    if (rx_.size() != tx_.size()) throw ValidationError("channel realization needs one tx per rx");
    const int K = users();
    h_.resize(static_cast<std::size_t>(K * K * slots_));
    for (int k = 1; k <= K; ++k)
        for (int j = 1; j <= K; ++j)
            for (int t = 0; t < slots_; ++t)
                h_[index(k, j, t)] = draw_channel<Fp>(seed, k, j, t, this->rx_antennas(k), this->tx_active(j));
}

std::size_t ChannelRealization::index(int k, int j, int t) const {
    const int K = users();
    if (k < 1 || k > K || j < 1 || j > K || t < 0 || t >= slots_)
        throw std::out_of_range("channel index out of range");
    return static_cast<std::size_t>(((k - 1) * K + (j - 1)) * slots_ + t);
}

const MatrixXp& ChannelRealization::h(int k, int j, int t) const { return h_[index(k, j, t)]; }

void ChannelRealization::set(int k, int j, int t, const MatrixXp& m) {
    auto& dst = h_[index(k, j, t)];
    if (m.rows() != dst.rows() || m.cols() != dst.cols()) throw ValidationError("channel shape mismatch");
    dst = m;
}

const MatrixXp& LocalCsi::outgoing(int rx, int slot) const {
    if (slot >= now_)
        throw InvariantError("transmitter " + std::to_string(tx_) + " asked at slot " + std::to_string(now_) +
                             " for a channel of slot " + std::to_string(slot));
    return ch_.h(rx, tx_, slot);
}

bool TrialReport::all_decoded() const {
    return !receivers.empty() &&
           std::all_of(receivers.begin(), receivers.end(), [](const ReceiverReport& r) { return r.decoded; });
}

bool Aggregate::all_decoded() const { return failing_seeds.empty() && trials > 0; }

namespace {

VectorXp draw_symbols(std::uint64_t seed, int user, int n) {
    return random_matrix<Fp>(derive_seed(seed, Stream::Symbols, static_cast<std::uint64_t>(user)), n, 1);
}

MatrixXp draw_precoder(std::uint64_t seed, int tx, int t, int rows, int cols) {
    return random_matrix<Fp>(
        derive_seed(seed, Stream::Precoder, static_cast<std::uint64_t>(tx), static_cast<std::uint64_t>(t)), rows, cols);
}

VectorXp stack(const std::vector<VectorXp>& parts) {
    Eigen::Index n = 0;
    for (const auto& p : parts) n += p.size();
    VectorXp out(n);
    Eigen::Index off = 0;
    for (const auto& p : parts) {
        out.segment(off, p.size()) = p;
        off += p.size();
    }
    return out;
}

// Receiver-side outcome of solving coef * unknowns = y.
struct Decode {
    int rank = 0;
    bool decoded = false;
    VectorXp solution;
};

// Decoded when the rank reaches the declared unknown count; the own part of
// the solution (first `own` entries) must then match the truth exactly.
Decode decode(const MatrixXp& coef, const VectorXp& y, const VectorXp& truth, int own, int unknowns,
              const std::string& where) {
    if (coef.rows() > 0 && coef * truth != y)
        throw InvariantError(where + ": coefficient matrix does not reproduce the received signal");
    Decode d;
    const SolveResult s = solve(coef, y);
    d.rank = static_cast<int>(s.rank);
    d.solution = s.x;
    d.decoded = d.rank == unknowns;
    if (d.decoded && s.x.head(own) != truth.head(own))
        throw InvariantError(where + ": full-rank system recovered wrong symbols");
    return d;
}

}  // namespace

// ---- generic scheme -----------------------------------------------------------

ChannelRealization generic_channels(const AntennaConfig& cfg, const SchemeSpec& spec, std::uint64_t seed) {
    return ChannelRealization({cfg.n1, cfg.n2}, {spec.streams(1), spec.streams(2)}, spec.w, seed);
}

std::array<std::vector<VectorXp>, 2> generic_transmit(const AntennaConfig& cfg, const SchemeSpec& spec,
                                                      const ChannelRealization& ch, const std::array<VectorXp, 2>& u,
                                                      std::uint64_t seed) {
    const GenericDims g = generic_dims(cfg, spec);
    std::array<std::vector<VectorXp>, 2> x;
    for (int j = 1; j <= 2; ++j) {
        const auto jj = static_cast<std::size_t>(j);
        const int s = g.s[jj], Wj = g.wlen[jj], q = g.q[jj], other = 3 - j;
        auto& xj = x[jj - 1];
        for (int t = 0; t < g.w; ++t) {
            if (t < Wj) {
                xj.push_back(u[jj - 1].segment(t * s, s));
                continue;
            }
            if (Wj == 0) {
                xj.push_back(VectorXp::Zero(s));
                continue;
            }
            // Phase two: only this transmitter's own past channels are visible.
            const LocalCsi csi(ch, j, t);
            std::vector<VectorXp> caused;
            for (int k = 0; k < Wj; ++k)
                caused.push_back(g.aligned[jj] ? VectorXp(csi.outgoing(other, k) * xj[static_cast<std::size_t>(k)])
                                               : xj[static_cast<std::size_t>(k)]);
            const MatrixXp D = draw_combiner<Fp>(seed, j, t, s, q * Wj);
            xj.push_back(D * stack(caused));
        }
    }
    return x;
}

TrialReport run_generic(const AntennaConfig& cfg, const SchemeSpec& spec, std::uint64_t seed, Transcript* transcript) {
    if (!spec.generic_structure()) throw ValidationError("run_generic needs a generic-structure scheme");
    validate(spec, cfg);
    const GenericDims g = generic_dims(cfg, spec);
    const ChannelRealization ch = generic_channels(cfg, spec, seed);
    std::array<VectorXp, 2> u{draw_symbols(seed, 1, g.s[1] * g.wlen[1]), draw_symbols(seed, 2, g.s[2] * g.wlen[2])};
    const auto x = generic_transmit(cfg, spec, ch, u, seed);

    TrialReport rep;
    rep.seed = seed;
    rep.spec = spec;
    Transcript tr;
    tr.u = u;
    tr.x = x;
    for (int i = 1; i <= 2; ++i) {
        const auto ii = static_cast<std::size_t>(i), oo = 3 - ii;
        const int o = static_cast<int>(oo);
        std::vector<VectorXp> y;
        for (int t = 0; t < g.w; ++t)
            y.push_back(ch.h(i, 1, t) * x[0][static_cast<std::size_t>(t)] +
                        ch.h(i, 2, t) * x[1][static_cast<std::size_t>(t)]);
        std::vector<VectorXp> seen;
        for (int t = 0; t < g.wlen[oo]; ++t)
            seen.push_back(g.aligned[oo] ? VectorXp(ch.h(i, o, t) * x[oo - 1][static_cast<std::size_t>(t)])
                                         : x[oo - 1][static_cast<std::size_t>(t)]);
        const VectorXp z_int = stack(seen);
        VectorXp truth(u[ii - 1].size() + z_int.size());
        truth << u[ii - 1], z_int;

        const MatrixXp P = build_coefficient_matrix<Fp>(cfg, spec, i, seed).p;
        const RankTerms rt = rank_terms(cfg, spec, i);
        const Decode d = decode(P, stack(y), truth, static_cast<int>(u[ii - 1].size()), static_cast<int>(P.cols()),
                                "receiver " + std::to_string(i) + " of " + to_string(cfg));
        ReceiverReport rr;
        rr.equations = static_cast<int>(P.rows());
        rr.unknowns = static_cast<int>(P.cols());
        rr.achieved_rank = d.rank;
        rr.predicted_rank = rt.predicted_rank;
        rr.decoded = d.decoded;
        rep.receivers.push_back(rr);
        tr.y[ii - 1] = y;
        tr.interference[ii - 1] = z_int;
    }
    if (rep.all_decoded()) {
        const DofPoint p = scheme_dof(spec);
        rep.dof = std::vector<Rational>{p.d1, p.d2};
    }
    if (transcript) *transcript = std::move(tr);
    return rep;
}

// ---- special S1 / S2 schemes ---------------------------------------------------

TrialReport run_special(const AntennaConfig& cfg, const SchemeSpec& spec, std::uint64_t seed, Transcript* transcript) {
    if (spec.generic_structure() || spec.variant == SchemeVariant::Miso)
        throw ValidationError("run_special needs a T5/T8/T9 scheme");
    validate(spec, cfg);
    const int M1 = cfg.m1, N1 = cfg.n1, N2 = cfg.n2;
    const int a2 = spec.tx2_symbols_per_phase1_slot;  // tx-2 active antennas
    const int W = spec.w, W1 = spec.w1;
    const auto counts = symbol_counts(spec);
    const int S1 = counts[0], S2 = counts[1];
    const int sa = spec.variant == SchemeVariant::S1_T5   ? spec.nu1
                   : spec.variant == SchemeVariant::S1_T8 ? spec.mu1
                                                          : spec.eta1;
    const int sb = S1 - sa;

    const ChannelRealization ch({N1, N2}, {M1, a2}, W, seed);
    const VectorXp u1 = draw_symbols(seed, 1, S1), u2 = draw_symbols(seed, 2, S2);

    // Linear maps from symbols to transmitted vectors, T_j(t).
    std::vector<MatrixXp> T1, T2;
    for (int t = 0; t < W; ++t) {
        MatrixXp T = MatrixXp::Zero(M1, S1);
        if (t < W1)
            T.leftCols(sa) = draw_precoder(seed, 1, t, M1, sa);
        else
            T.rightCols(sb) = draw_precoder(seed, 1, t, M1, sb);
        T1.push_back(T);
    }
    int off = 0;
    for (int t = 0; t < W1; ++t) {
        const int om = spec.omega[static_cast<std::size_t>(t)];
        MatrixXp T = MatrixXp::Zero(a2, S2);
        T.middleCols(off, om) = draw_precoder(seed, 2, t, a2, om);
        off += om;
        T2.push_back(T);
    }

    // Signal path. Transmitter two's phase two re-sends combinations of what
    // receiver one observed from it, computed from delayed local CSI only.
    std::array<std::vector<VectorXp>, 2> x;
    for (int t = 0; t < W; ++t) x[0].push_back(T1[static_cast<std::size_t>(t)] * u1);
    for (int t = 0; t < W1; ++t) x[1].push_back(T2[static_cast<std::size_t>(t)] * u2);
    MatrixXp Q(N1 * W1, S2);  // interference terms at receiver one, as a map of u2
    for (int t = W1; t < W; ++t) {
        const LocalCsi csi(ch, 2, t);
        std::vector<VectorXp> observed;
        for (int k = 0; k < W1; ++k) observed.push_back(csi.outgoing(1, k) * x[1][static_cast<std::size_t>(k)]);
        if (t == W1)
            for (int k = 0; k < W1; ++k) Q.middleRows(k * N1, N1) = csi.outgoing(1, k) * T2[static_cast<std::size_t>(k)];
        const MatrixXp D = draw_combiner<Fp>(seed, 2, t, a2, N1 * W1);
        x[1].push_back(D * stack(observed));
        T2.push_back(D * Q);
    }

    auto stacked = [&](int k, int j, const std::vector<MatrixXp>& T, int from, int to) {
        const int Nk = ch.rx_antennas(k);
        MatrixXp A(Nk * (to - from), T.front().cols());
        for (int t = from; t < to; ++t)
            A.middleRows((t - from) * Nk, Nk) = ch.h(k, j, t) * T[static_cast<std::size_t>(t)];
        return A;
    };
    auto received = [&](int k, int from, int to) {
        std::vector<VectorXp> y;
        for (int t = from; t < to; ++t)
            y.push_back(ch.h(k, 1, t) * x[0][static_cast<std::size_t>(t)] + ch.h(k, 2, t) * x[1][static_cast<std::size_t>(t)]);
        return stack(y);
    };

    TrialReport rep;
    rep.seed = seed;
    rep.spec = spec;
    const std::string where = std::string(to_string(spec.variant)) + " " + to_string(cfg);

    // Receiver one: own S1 symbols plus the N1*W1 interference terms.
    const MatrixXp A11 = stacked(1, 1, T1, 0, W), A12 = stacked(1, 2, T2, 0, W);
    MatrixXp C1(A11.rows(), S1 + S2);
    C1 << A11, A12;
    VectorXp t1(S1 + S2);
    t1 << u1, u2;
    const VectorXp y1 = received(1, 0, W);
    const Decode d1 = decode(C1, y1, t1, S1, S1 + N1 * W1, "receiver 1 of " + where);
    rep.receivers.push_back({N1 * W, S1 + N1 * W1, d1.rank, S1 + N1 * W1, d1.decoded});

    // Receiver two: own S2 symbols plus all S1 symbols of transmitter one.
    const MatrixXp A22 = stacked(2, 2, T2, 0, W), A21 = stacked(2, 1, T1, 0, W);
    MatrixXp C2(A22.rows(), S2 + S1);
    C2 << A22, A21;
    VectorXp t2(S2 + S1);
    t2 << u2, u1;
    const VectorXp y2 = received(2, 0, W);
    const Decode d2 = decode(C2, y2, t2, S2, S2 + S1, "receiver 2 of " + where);
    rep.receivers.push_back({N2 * W, S2 + S1, d2.rank, S2 + S1, d2.decoded});

    if (spec.variant == SchemeVariant::S1_T8 || spec.variant == SchemeVariant::S2_T9) {
        // Stage 1: phase-two slots, unknowns [tx-1 phase-two symbols; Q u2].
        const int rows2 = N2 * (W - W1);
        MatrixXp B1(rows2, sb + N1 * W1);
        for (int t = W1; t < W; ++t) {
            const auto tt = static_cast<std::size_t>(t);
            B1.block((t - W1) * N2, 0, N2, sb) = ch.h(2, 1, t) * T1[tt].rightCols(sb);
            B1.block((t - W1) * N2, sb, N2, N1 * W1) =
                ch.h(2, 2, t) * draw_combiner<Fp>(seed, 2, t, a2, N1 * W1);
        }
        const SolveResult st1 = solve(B1, received(2, W1, W));
        bool staged_ok = st1.rank == B1.cols();
        VectorXp u2_staged;
        if (staged_ok) {
            // Stage 2: phase-one slots plus the recovered Q u2, unknowns [tx-1 phase-one symbols; u2].
            const int rows1 = N2 * W1;
            MatrixXp B2 = MatrixXp::Zero(rows1 + N1 * W1, sa + S2);
            for (int t = 0; t < W1; ++t) {
                const auto tt = static_cast<std::size_t>(t);
                B2.block(t * N2, 0, N2, sa) = ch.h(2, 1, t) * T1[tt].leftCols(sa);
                B2.block(t * N2, sa, N2, S2) = ch.h(2, 2, t) * T2[tt];
            }
            B2.block(rows1, sa, N1 * W1, S2) = Q;
            VectorXp rhs(rows1 + N1 * W1);
            rhs << received(2, 0, W1), st1.x.tail(N1 * W1);
            const SolveResult st2 = solve(B2, rhs);
            staged_ok = st2.rank == B2.cols();
            if (staged_ok) u2_staged = st2.x.tail(S2);
        }
        bool match = staged_ok == d2.decoded;
        if (match && staged_ok) match = u2_staged == d2.solution.head(S2);
        rep.staged_matches_joint = match;
    }

    if (rep.all_decoded()) {
        const DofPoint p = scheme_dof(spec);
        rep.dof = std::vector<Rational>{p.d1, p.d2};
    }
    if (transcript) {
        transcript->u = {u1, u2};
        transcript->x = x;
        transcript->y = {std::vector<VectorXp>{y1}, std::vector<VectorXp>{y2}};
        transcript->interference = {VectorXp(Q * u2), u1};
    }
    return rep;
}

namespace {
TrialReport run_named(const AntennaConfig& cfg, ConfigClass want, const char* label, std::uint64_t seed) {
    if (classify(cfg) != want)
        throw ValidationError(std::string("corner ") + label + " scheme needs class " + std::string(to_string(want)) +
                              ", config " + to_string(cfg) + " is " + std::string(to_string(classify(cfg))));
    return run_special(cfg, corner_scheme(cfg, label), seed);
}
}  // namespace

TrialReport run_s1_t5(const AntennaConfig& cfg, std::uint64_t seed) { return run_named(cfg, ConfigClass::S1, "T5", seed); }
TrialReport run_s1_t8(const AntennaConfig& cfg, std::uint64_t seed) { return run_named(cfg, ConfigClass::S1, "T8", seed); }
TrialReport run_s2_t9(const AntennaConfig& cfg, std::uint64_t seed) { return run_named(cfg, ConfigClass::S2, "T9", seed); }

TrialReport run_scheme(const AntennaConfig& cfg, const SchemeSpec& spec, std::uint64_t seed) {
    if (spec.generic_structure()) return run_generic(cfg, spec, seed);
    return run_special(cfg, spec, seed);
}

// ---- K-user MISO ---------------------------------------------------------------

MisoTrial run_miso_detailed(const MisoConfig& mc, std::uint64_t seed) {
    validate(mc);
    const int K = mc.k;
    const int slots = K * K - K + 1;
    // Transmitters use K of their M antennas; the rest stay silent and never
    // enter any equation.
    const ChannelRealization ch(std::vector<int>(static_cast<std::size_t>(K), 1),
                                std::vector<int>(static_cast<std::size_t>(K), K), slots, seed);
    std::vector<VectorXp> u;
    for (int j = 1; j <= K; ++j) u.push_back(draw_symbols(seed, j, K));

    // Round robin: slot_of[j][k] carries I_kj = h_kj(0) u_j, sent by j.
    std::vector<std::vector<int>> slot_of(static_cast<std::size_t>(K + 1), std::vector<int>(static_cast<std::size_t>(K + 1), -1));
    int t = 1;
    for (int j = 1; j <= K; ++j)
        for (int k = 1; k <= K; ++k)
            if (k != j) slot_of[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = t++;

    // X[j](t)
    std::vector<std::vector<VectorXp>> x(static_cast<std::size_t>(K + 1),
                                         std::vector<VectorXp>(static_cast<std::size_t>(slots), VectorXp::Zero(K)));
    for (int j = 1; j <= K; ++j) x[static_cast<std::size_t>(j)][0] = u[static_cast<std::size_t>(j - 1)];
    for (int j = 1; j <= K; ++j)
        for (int k = 1; k <= K; ++k) {
            if (k == j) continue;
            const int s = slot_of[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            const LocalCsi csi(ch, j, s);
            x[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)](0) =
                (csi.outgoing(k, 0) * x[static_cast<std::size_t>(j)][0])(0);
        }

    MisoTrial out;
    out.final_systems_invertible = true;
    TrialReport& rep = out.report;
    rep.seed = seed;
    rep.spec.variant = SchemeVariant::Miso;
    rep.spec.label = "miso";
    rep.spec.w = slots;
    rep.spec.w1 = rep.spec.w2 = 1;
    rep.spec.tx1_symbols_per_phase1_slot = rep.spec.tx2_symbols_per_phase1_slot = K;

    for (int r = 1; r <= K; ++r) {
        // Unknowns: u_r (K), then I_kj for every j != r and k != j.
        std::map<std::pair<int, int>, int> col;
        int n = K;
        for (int j = 1; j <= K; ++j)
            for (int k = 1; k <= K; ++k)
                if (j != r && k != j) col[{k, j}] = n++;
        MatrixXp C = MatrixXp::Zero(slots, n);
        VectorXp y(slots), truth(n);
        truth.head(K) = u[static_cast<std::size_t>(r - 1)];
        for (const auto& [kj, c] : col)
            truth(c) = (ch.h(kj.first, kj.second, 0) * u[static_cast<std::size_t>(kj.second - 1)])(0);
        for (int s = 0; s < slots; ++s) {
            Fp acc(0);
            for (int j = 1; j <= K; ++j)
                acc += (ch.h(r, j, s) * x[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)])(0);
            y(s) = acc;
        }
        C.block(0, 0, 1, K) = ch.h(r, r, 0);
        for (int j = 1; j <= K; ++j)
            if (j != r) C(0, col[{r, j}]) = Fp(1);
        MatrixXp own(K, K);
        own.row(0) = ch.h(r, r, 0);
        int own_row = 1;
        for (int j = 1; j <= K; ++j)
            for (int k = 1; k <= K; ++k) {
                if (k == j) continue;
                const int s = slot_of[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                const Fp g = ch.h(r, j, s)(0, 0);
                if (j == r) {
                    C.block(s, 0, 1, K) = g * ch.h(k, r, 0);
                    own.row(own_row++) = g * ch.h(k, r, 0);
                } else {
                    C(s, col[{k, j}]) = g;
                }
            }
        const Decode d = decode(C, y, truth, K, n, "MISO receiver " + std::to_string(r));
        rep.receivers.push_back({slots, n, d.rank, n, d.decoded});
        if (rank_fp(own) != K) out.final_systems_invertible = false;
    }
    if (rep.all_decoded()) rep.dof = std::vector<Rational>(static_cast<std::size_t>(K), Rational(K, slots));
    return out;
}

TrialReport run_miso(const MisoConfig& mc, std::uint64_t seed) { return run_miso_detailed(mc, seed).report; }

// ---- Monte Carlo ---------------------------------------------------------------

int worker_threads() {
    if (const char* env = std::getenv("DOFIA_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

template <class Fn>
std::vector<TrialReport> parallel_trials(int trials, std::uint64_t base_seed, Fn fn) {
    if (trials < 1) throw ValidationError("trials must be >= 1");
    std::vector<TrialReport> out(static_cast<std::size_t>(trials));
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto work = [&] {
        for (int i = next++; i < trials; i = next++) {
            try {
                out[static_cast<std::size_t>(i)] = fn(base_seed + static_cast<std::uint64_t>(i));
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
            }
        }
    };
    const int n = std::min(worker_threads(), trials);
    std::vector<std::thread> pool;
    for (int k = 1; k < n; ++k) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    return out;
}

Aggregate aggregate(std::vector<TrialReport> reports, int trials, std::uint64_t base_seed) {
    Aggregate a;
    a.trials = trials;
    a.base_seed = base_seed;
    a.spec = reports.front().spec;
    const std::size_t R = reports.front().receivers.size();
    a.decoded.assign(R, 0);
    a.rank_agreement.assign(R, 0);
    a.min_rank.assign(R, INT32_MAX);
    a.max_rank.assign(R, 0);
    for (const auto& rep : reports) {
        bool mismatch = false;
        for (std::size_t r = 0; r < R; ++r) {
            const auto& rr = rep.receivers[r];
            a.decoded[r] += rr.decoded ? 1 : 0;
            a.rank_agreement[r] += rr.achieved_rank == rr.predicted_rank ? 1 : 0;
            mismatch = mismatch || rr.achieved_rank != rr.predicted_rank;
            a.min_rank[r] = std::min(a.min_rank[r], rr.achieved_rank);
            a.max_rank[r] = std::max(a.max_rank[r], rr.achieved_rank);
        }
        if (!rep.all_decoded()) a.failing_seeds.push_back(rep.seed);
        if (mismatch) a.mismatch_seeds.push_back(rep.seed);
        if (rep.staged_matches_joint && !*rep.staged_matches_joint) ++a.staged_mismatches;
        if (!a.dof && rep.dof) a.dof = rep.dof;
    }
    a.reports = std::move(reports);
    return a;
}

}  // namespace

Aggregate monte_carlo(const AntennaConfig& cfg, const SchemeSpec& spec, int trials, std::uint64_t base_seed) {
    validate(spec, cfg);
    Aggregate a = aggregate(
        parallel_trials(trials, base_seed, [&](std::uint64_t s) { return run_scheme(cfg, spec, s); }), trials,
        base_seed);
    a.class_name = std::string(to_string(classify(cfg)));
    a.corner = spec.label;
    return a;
}

Aggregate monte_carlo(const AntennaConfig& cfg, const std::string& corner, int trials, std::uint64_t base_seed) {
    return monte_carlo(cfg, corner_scheme(cfg, corner), trials, base_seed);
}

Aggregate monte_carlo_miso(const MisoConfig& mc, int trials, std::uint64_t base_seed) {
    validate(mc);
    Aggregate a =
        aggregate(parallel_trials(trials, base_seed, [&](std::uint64_t s) { return run_miso(mc, s); }), trials, base_seed);
    a.class_name = "MISO";
    a.corner = "miso";
    return a;
}

}  // namespace dofia
