#include "dofia/schemes.hpp"

#include <algorithm>
#include <numeric>

#include "dofia/errors.hpp"

namespace dofia {

std::string_view to_string(SchemeVariant v) {
    switch (v) {
        case SchemeVariant::Generic: return "Generic";
        case SchemeVariant::S1_T5: return "S1_T5";
        case SchemeVariant::S1_T8: return "S1_T8";
        case SchemeVariant::S2_T9: return "S2_T9";
        case SchemeVariant::S_T7_Reduction: return "S_T7_reduction";
        case SchemeVariant::Miso: return "Miso";
    }
    return "?";
}

std::array<int, 2> symbol_counts(const SchemeSpec& s) {
    switch (s.variant) {
        case SchemeVariant::S1_T5:
        case SchemeVariant::S1_T8:
        case SchemeVariant::S2_T9: {
            const int tx1 = s.variant == SchemeVariant::S1_T5   ? s.nu1 + s.nu2
                            : s.variant == SchemeVariant::S1_T8 ? s.mu1 + s.mu2
                                                                : s.eta1 + s.eta2;
            return {tx1, std::accumulate(s.omega.begin(), s.omega.end(), 0)};
        }
        default: return {s.tx1_symbols_per_phase1_slot * s.w1, s.tx2_symbols_per_phase1_slot * s.w2};
    }
}

DofPoint scheme_dof(const SchemeSpec& s) {
    const auto c = symbol_counts(s);
    return {Rational(c[0], s.w), Rational(c[1], s.w)};
}

SchemeSpec generic_scheme(const AntennaConfig& cfg, int w, int w1, int w2) {
    const DerivedParams d = derived(cfg);
    SchemeSpec s;
    s.w = w;
    s.w1 = w1;
    s.w2 = w2;
    s.tx1_symbols_per_phase1_slot = d.m1_prime;
    s.tx2_symbols_per_phase1_slot = d.m2_prime;
    s.label = "custom";
    validate(s, cfg);
    return s;
}

namespace {

SchemeSpec make_generic(const AntennaConfig& cfg, const std::string& label, int w, int w1, int w2, int streams2 = 0) {
    const DerivedParams d = derived(cfg);
    SchemeSpec s;
    s.w = w;
    s.w1 = w1;
    s.w2 = w2;
    s.tx1_symbols_per_phase1_slot = d.m1_prime;
    s.tx2_symbols_per_phase1_slot = streams2 > 0 ? streams2 : d.m2_prime;
    s.label = label;
    return s;
}

SchemeSpec s1_t5(const AntennaConfig& c) {
    const int M2 = c.m2, N1 = c.n1, N2 = c.n2;
    SchemeSpec s;
    s.variant = SchemeVariant::S1_T5;
    s.label = "T5";
    s.w = M2 - N1;
    s.w1 = s.w2 = N2 - N1;
    s.nu = std::min(N1 * (N2 - N1), N2 * (M2 - N2));
    s.nu1 = s.nu - (N2 - N1) * (M2 - N2);
    s.nu2 = N2 * (M2 - N2) - s.nu;
    s.omega.assign(static_cast<std::size_t>(s.w1), M2);
    s.tx1_symbols_per_phase1_slot = c.m1;
    s.tx2_symbols_per_phase1_slot = M2;
    return s;
}

SchemeSpec s1_t8(const AntennaConfig& c) {
    const int M1 = c.m1, M2 = c.m2, N1 = c.n1;
    const int lam = derived(c).lambda;
    SchemeSpec s;
    s.variant = SchemeVariant::S1_T8;
    s.label = "T8";
    s.w = N1 - lam;
    s.w1 = s.w2 = N1 - M1;
    s.mu1 = (N1 - M1) * (M1 - lam);
    s.mu2 = M1 * (M1 - lam);
    s.omega.assign(static_cast<std::size_t>(s.w1), M2);
    s.tx1_symbols_per_phase1_slot = M1;
    s.tx2_symbols_per_phase1_slot = M2;
    return s;
}

// Every slot starts at N1+N2-M1 streams and the remainder fills the earliest
// slots up to min(M2, N1+N2). A slot with fewer streams leaves receiver two
// more spare dimensions (N1+N2-omega_t) than transmitter one can occupy there,
// and the rank condition at receiver two fails; omega_t >= N2 alone is not enough.
SchemeSpec s2_t9(const AntennaConfig& c) {
    const int M1 = c.m1, M2 = c.m2, N1 = c.n1, N2 = c.n2;
    const int lam = derived(c).lambda;
    SchemeSpec s;
    s.variant = SchemeVariant::S2_T9;
    s.label = "T9";
    s.w = M2 - lam;  // = N1 + N2 - M1
    s.w1 = s.w2 = N2 - M1;
    s.eta1 = N1 * (N1 - M1);
    s.eta2 = N1 * M1;
    const int total = N2 * (M2 - lam) - N1 * N1;
    const int lo = N1 + N2 - M1, hi = std::min(M2, N1 + N2);
    s.omega.assign(static_cast<std::size_t>(s.w1), lo);
    int rem = total - lo * s.w1;
    if (rem < 0) throw InvariantError("T9 stream budget below per-slot minimum for " + to_string(c));
    for (auto& o : s.omega) {
        const int add = std::min(rem, hi - o);
        o += add;
        rem -= add;
    }
    if (rem != 0) throw InvariantError("T9 stream budget exceeds per-slot maximum for " + to_string(c));
    s.tx1_symbols_per_phase1_slot = M1;
    s.tx2_symbols_per_phase1_slot = hi;
    return s;
}

}  // namespace

std::vector<std::string> scheme_corners(const AntennaConfig& c) {
    switch (classify(c)) {
        case ConfigClass::C3: return {"Q3"};
        case ConfigClass::C4: return {"P3", "symmetric"};
        case ConfigClass::C5: return {"S3"};
        case ConfigClass::C61:
        case ConfigClass::C62: return {"T4"};
        case ConfigClass::C63: return {"T5", "T6"};
        case ConfigClass::S1: return {"T5", "T7", "T8"};
        case ConfigClass::S2: return {"T7", "T9"};
        case ConfigClass::C6B:
            if (c.n1 == c.n2 && c.m1 < c.n1) return {"T4"};
            if (c.m1 == c.n1 && c.n1 < c.n2) return {"Q3"};
            return {};
        default: return {};
    }
}

SchemeSpec corner_scheme(const AntennaConfig& c, const std::string& label) {
    const auto valid = scheme_corners(c);
    if (std::find(valid.begin(), valid.end(), label) == valid.end()) {
        std::string list;
        for (const auto& v : valid) list += (list.empty() ? "" : ", ") + v;
        throw ValidationError("corner '" + label + "' has no scheme for class " + std::string(to_string(classify(c))) +
                              " config " + to_string(c) + "; valid: " + (list.empty() ? "none" : list));
    }
    const int M1 = c.m1, M2 = c.m2, N1 = c.n1, N2 = c.n2;
    const DerivedParams d = derived(c);
    const int M1p = d.m1_prime, M2p = d.m2_prime;
    const ConfigClass cls = classify(c);
    SchemeSpec s;

    if (label == "Q3") {
        s = make_generic(c, "Q3", M1 * (M2p - N1), N1 * (M2p - N2), M1 * (N2 - N1));
    } else if (label == "P3" || label == "symmetric") {
        s = make_generic(c, label, M1p * M2p - N1 * N2, N1 * (M2p - N2), N2 * (M1p - N1));
    } else if (label == "S3") {
        s = make_generic(c, "S3", N1, N1, N1 - M1);
    } else if (label == "T4") {
        const int rest = N1 + N2 - M1;
        if (M2 > rest)  // transmitter two keeps only N1+N2-M1 antennas
            s = make_generic(c, "T4", rest, rest, N2 - M1, rest);
        else
            s = make_generic(c, "T4", M2, M2, N2 - M1);
    } else if (label == "T5" && cls == ConfigClass::C63) {
        s = make_generic(c, "T5", M1 * (M2 - N1), N1 * (M2 - N2), M1 * (N2 - N1));
    } else if (label == "T5") {
        s = s1_t5(c);
    } else if (label == "T6") {
        s = make_generic(c, "T6", N1, N1, N1 - M1);
    } else if (label == "T7") {
        const int rest = N1 + N2 - M1;
        s = make_generic(c, "T7", N1, N1, N1 - M1, rest);
        s.variant = SchemeVariant::S_T7_Reduction;
        s.effective_m2 = rest;
    } else if (label == "T8") {
        s = s1_t8(c);
    } else {
        s = s2_t9(c);
    }
    validate(s, c);
    return s;
}

void validate(const SchemeSpec& s, const AntennaConfig& c) {
    auto fail = [&](const std::string& why) {
        throw ValidationError("invalid scheme for " + to_string(c) + ": " + why);
    };
    if (s.w < 1) fail("W must be >= 1");
    if (s.w1 < 0 || s.w1 > s.w || s.w2 < 0 || s.w2 > s.w) fail("phase-one lengths must lie in [0, W]");
    if (s.tx1_symbols_per_phase1_slot < 1 || s.tx1_symbols_per_phase1_slot > std::min(c.m1, c.n1 + c.n2))
        fail("tx-1 streams must lie in [1, M1']");
    if (s.tx2_symbols_per_phase1_slot < 1 || s.tx2_symbols_per_phase1_slot > std::min(c.m2, c.n1 + c.n2))
        fail("tx-2 streams must lie in [1, M2']");
    if (s.variant == SchemeVariant::Miso) fail("MISO specs are not two-user schemes");
    if (s.generic_structure()) return;

    if (s.w1 < 1 || s.w1 >= s.w || s.w2 != s.w1) fail("special schemes need 0 < W1 = W2 < W");
    if (static_cast<int>(s.omega.size()) != s.w1) fail("omega needs one entry per phase-one slot");
    for (int o : s.omega)
        if (o < 1 || o > c.m2) fail("omega_t must lie in [1, M2]");
    if (s.variant == SchemeVariant::S1_T5) {
        if (s.nu1 < 0 || s.nu1 > c.m1 * s.w1) fail("nu1 outside [0, M1 W1]");
        if (s.nu2 < 0 || s.nu2 > c.m1 * (s.w - s.w1)) fail("nu2 outside [0, M1 (W - W1)]");
    } else if (s.variant == SchemeVariant::S1_T8) {
        if (s.mu1 < 0 || s.mu1 > c.m1 * s.w1 || s.mu2 < 0 || s.mu2 > c.m1 * (s.w - s.w1))
            fail("mu1/mu2 exceed the transmit dimensions");
    } else if (s.variant == SchemeVariant::S2_T9) {
        if (s.eta1 < 0 || s.eta1 > c.m1 * s.w1 || s.eta2 < 0 || s.eta2 > c.m1 * (s.w - s.w1))
            fail("eta1/eta2 exceed the transmit dimensions");
        const int lam = derived(c).lambda;
        if (std::accumulate(s.omega.begin(), s.omega.end(), 0) != c.n2 * (c.m2 - lam) - c.n1 * c.n1)
            fail("sum of omega_t must equal N2(M2 - lambda) - N1^2");
        for (int o : s.omega)
            if (o < c.n2) fail("omega_t must be >= N2");
    }
}

CountConstraints count_constraints(const SchemeSpec& s, const AntennaConfig& c) {
    const int m1 = s.streams(1), m2 = s.streams(2);
    return {m1 * s.w1 + std::min(m2, c.n1) * s.w2, c.n1 * s.w, m2 * s.w2 + std::min(m1, c.n2) * s.w1, c.n2 * s.w};
}

RankTerms rank_terms(const AntennaConfig& c, const SchemeSpec& s, int receiver) {
    const int i = receiver, o = 3 - receiver;
    const std::array<int, 3> Mp{0, s.streams(1), s.streams(2)};
    const std::array<int, 3> N{0, c.n1, c.n2};
    const std::array<int, 3> Wl{0, s.w1, s.w2};
    const int W = s.w;

    auto eval = [&](int imax) {
        const int imin = 3 - imax;
        const int Wx = Wl[imax], Wn = Wl[imin];
        RankTerms t;
        t.i_max = imax;
        t.i_min = imin;
        t.r1 = std::min(N[i], Mp[i] + Mp[o]) * Wn;
        t.r2 = std::min(N[i] * (Wx - Wn),
                        Mp[imax] * (Wx - Wn) + std::min({Mp[imin] * (Wx - Wn), Mp[imin] * Wn, N[imax] * Wn}));
        t.r3 = std::min(N[i] * (W - Wx), std::min({Mp[i] * (W - Wx), Mp[i] * Wl[i], N[o] * Wl[i]}) +
                                             std::min({Mp[o] * (W - Wx), Mp[o] * Wl[o], N[i] * Wl[o]}));
        t.unknowns = Mp[i] * Wl[i] + std::min(Mp[o], N[i]) * Wl[o];
        t.predicted_rank = std::min(t.unknowns, t.r1 + t.r2 + t.r3);
        return t;
    };

    if (s.w1 > s.w2) return eval(1);
    if (s.w2 > s.w1) return eval(2);
    const RankTerms a = eval(2), b = eval(1);
    if (a.r1 != b.r1 || a.r2 != b.r2 || a.r3 != b.r3)
        throw InvariantError("rank terms depend on the W1 == W2 tie resolution");
    return a;
}

RankCondition rank_condition(const AntennaConfig& c, const SchemeSpec& s) {
    RankCondition rc;
    for (int i = 1; i <= 2; ++i) {
        const RankTerms t = rank_terms(c, s, i);
        rc.holds[static_cast<std::size_t>(i - 1)] = t.unknowns <= t.r1 + t.r2 + t.r3;
    }
    return rc;
}

GenericDims generic_dims(const AntennaConfig& c, const SchemeSpec& s) {
    GenericDims g;
    g.n = {0, c.n1, c.n2};
    g.s = {0, s.streams(1), s.streams(2)};
    g.wlen = {0, s.w1, s.w2};
    g.w = s.w;
    for (int j = 1; j <= 2; ++j) {
        const int other_rx = g.n[static_cast<std::size_t>(3 - j)];
        g.aligned[static_cast<std::size_t>(j)] = g.s[static_cast<std::size_t>(j)] >= other_rx;
        g.q[static_cast<std::size_t>(j)] = std::min(g.s[static_cast<std::size_t>(j)], other_rx);
    }
    return g;
}

template <class Scalar>
BlockMatrix<Scalar> build_coefficient_matrix(const AntennaConfig& c, const SchemeSpec& spec, int receiver,
                                             std::uint64_t seed) {
    if (!spec.generic_structure()) throw ValidationError("coefficient matrix is defined for generic schemes only");
    if (receiver != 1 && receiver != 2) throw ValidationError("receiver must be 1 or 2");
    validate(spec, c);
    const GenericDims g = generic_dims(c, spec);
    const auto i = static_cast<std::size_t>(receiver), o = 3 - i;
    const int ri = static_cast<int>(i), ro = static_cast<int>(o);
    const int Ni = g.n[i], si = g.s[i], so = g.s[o];
    const int Wi = g.wlen[i], Wo = g.wlen[o], W = g.w;
    const int qi = g.q[i], qo = g.q[o];
    const int own_cols = si * Wi, int_cols = qo * Wo;

    auto H = [&](int k, int j, int t) {
        return draw_channel<Scalar>(seed, k, j, t, g.n[static_cast<std::size_t>(k)], g.s[static_cast<std::size_t>(j)]);
    };

    // Maps transmitter i's phase-one symbols to the quantities it will
    // retransmit: received combinations at the other receiver when aligned.
    MatrixX<Scalar> A = MatrixX<Scalar>::Zero(qi * Wi, own_cols);
    if (Wi < W)
        for (int t = 0; t < Wi; ++t) {
            if (g.aligned[i])
                A.block(t * qi, t * si, qi, si) = H(ro, ri, t);
            else
                A.block(t * qi, t * si, qi, si).setIdentity();
        }

    MatrixX<Scalar> P = MatrixX<Scalar>::Zero(Ni * W, own_cols + int_cols);
    for (int t = 0; t < W; ++t) {
        const MatrixX<Scalar> Hii = H(ri, ri, t);
        if (t < Wi) {
            P.block(t * Ni, t * si, Ni, si) = Hii;
        } else if (Wi > 0) {
            const MatrixX<Scalar> D = draw_combiner<Scalar>(seed, ri, t, si, qi * Wi);
            P.block(t * Ni, 0, Ni, own_cols) = Hii * (D * A);
        }
        const MatrixX<Scalar> Hio = H(ri, ro, t);
        if (t < Wo) {
            if (g.aligned[o])
                P.block(t * Ni, own_cols + t * qo, Ni, qo).setIdentity();
            else
                P.block(t * Ni, own_cols + t * qo, Ni, qo) = Hio;
        } else if (Wo > 0) {
            const MatrixX<Scalar> D = draw_combiner<Scalar>(seed, ro, t, so, qo * Wo);
            P.block(t * Ni, own_cols, Ni, int_cols) = Hio * D;
        }
    }

    BlockMatrix<Scalar> b;
    b.field = std::is_same_v<Scalar, Fp> ? FieldTag::Prime : FieldTag::Real;
    b.receiver = receiver;
    const int wmin = std::min(spec.w1, spec.w2), wmax = std::max(spec.w1, spec.w2);
    const int r1 = Ni * wmin, r2 = Ni * (wmax - wmin), r3 = Ni * (W - wmax);
    b.p11 = P.block(0, 0, r1, own_cols);
    b.p21 = P.block(r1, 0, r2, own_cols);
    b.p31 = P.block(r1 + r2, 0, r3, own_cols);
    b.p12 = P.block(0, own_cols, r1, int_cols);
    b.p22 = P.block(r1, own_cols, r2, int_cols);
    b.p32 = P.block(r1 + r2, own_cols, r3, int_cols);
    b.p = std::move(P);
    return b;
}

template BlockMatrix<Fp> build_coefficient_matrix<Fp>(const AntennaConfig&, const SchemeSpec&, int, std::uint64_t);
template BlockMatrix<double> build_coefficient_matrix<double>(const AntennaConfig&, const SchemeSpec&, int,
                                                              std::uint64_t);

}  // namespace dofia
