#include <doctest.h>

#include "dofia/errors.hpp"
#include "dofia/random.hpp"
#include "dofia/regions.hpp"
#include "dofia/simulator.hpp"
#include "dofia/sweep.hpp"

using namespace dofia;
using R = Rational;

TEST_CASE("illustrative example decodes at both receivers") {
    const AntennaConfig c = normalize(2, 2, 1, 1);
    const TrialReport r = run_generic(c, generic_scheme(c, 3, 1, 1), 1);
    REQUIRE(r.receivers.size() == 2);
    for (const auto& rr : r.receivers) {
        CHECK(rr.decoded);
        CHECK(rr.equations == 3);
        CHECK(rr.unknowns == 3);
        CHECK(rr.achieved_rank == 3);
    }
    REQUIRE(r.dof.has_value());
    CHECK((*r.dof)[0] == R(2, 3));
    CHECK((*r.dof)[1] == R(2, 3));
}

TEST_CASE("counting-only scheme fails at receiver two") {
    const AntennaConfig c = normalize(2, 6, 3, 4);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const TrialReport r = run_generic(c, generic_scheme(c, 3, 3, 1), seed);
        CHECK(r.receivers[0].decoded);
        CHECK_FALSE(r.receivers[1].decoded);
        CHECK(r.receivers[1].achieved_rank == 11);
        CHECK(r.receivers[1].unknowns == 12);
        CHECK(r.receivers[1].predicted_rank == 11);
        CHECK_FALSE(r.dof.has_value());
    }
}

TEST_CASE("W2 = 0 reduces to the single-user point") {
    const AntennaConfig c = normalize(2, 3, 2, 3);
    const TrialReport r = run_generic(c, generic_scheme(c, 4, 3, 0), 5);
    REQUIRE(r.all_decoded());
    CHECK((*r.dof)[0] == R(3, 2));
    CHECK((*r.dof)[1] == R(0));
}

TEST_CASE("transcript is consistent and deterministic") {
    const AntennaConfig c = normalize(3, 5, 2, 3);
    const SchemeSpec s = corner_scheme(c, "Q3");
    Transcript a, b;
    const TrialReport ra = run_generic(c, s, 11, &a), rb = run_generic(c, s, 11, &b);
    CHECK(ra.receivers[0].achieved_rank == rb.receivers[0].achieved_rank);
    CHECK(a.x[0] == b.x[0]);
    CHECK(a.y[1] == b.y[1]);
    CHECK(a.u[0].size() == c.m1 * s.w1);
    CHECK(a.x[0].size() == static_cast<std::size_t>(s.w));
}

TEST_CASE("phase two uses only delayed local CSI") {
    for (const auto& cfg : {normalize(3, 5, 2, 3), normalize(4, 5, 2, 3), normalize(2, 2, 1, 1), normalize(3, 3, 1, 2)})
      for (const auto& label : scheme_corners(cfg)) {
        if (!corner_scheme(cfg, label).generic_structure()) continue;
        const SchemeSpec s = corner_scheme(cfg, label);
        const std::uint64_t seed = 77;
        const ChannelRealization ch = generic_channels(cfg, s, seed);
        const std::array<VectorXp, 2> u{random_matrix<Fp>(1, s.streams(1) * s.w1, 1),
                                        random_matrix<Fp>(2, s.streams(2) * s.w2, 1)};
        const auto base = generic_transmit(cfg, s, ch, u, seed);
        for (int j = 1; j <= 2; ++j) {
            const int other = 3 - j;
            // Perturb every channel of the other transmitter.
            ChannelRealization p = ch;
            for (int k = 1; k <= 2; ++k)
                for (int t = 0; t < s.w; ++t)
                    p.set(k, other, t, random_matrix<Fp>(1000 + static_cast<std::uint64_t>(k * 100 + t),
                                                         ch.h(k, other, t).rows(), ch.h(k, other, t).cols()));
            CHECK(generic_transmit(cfg, s, p, u, seed)[static_cast<std::size_t>(j - 1)] ==
                  base[static_cast<std::size_t>(j - 1)]);
            // Perturbing its own channel at slot t cannot change X[j] up to slot t.
            const int last = s.w - 1;
            ChannelRealization q = ch;
            for (int k = 1; k <= 2; ++k)
                q.set(k, j, last, random_matrix<Fp>(5000 + static_cast<std::uint64_t>(k), ch.h(k, j, last).rows(),
                                                    ch.h(k, j, last).cols()));
            CHECK(generic_transmit(cfg, s, q, u, seed)[static_cast<std::size_t>(j - 1)] ==
                  base[static_cast<std::size_t>(j - 1)]);
        }
      }
    const ChannelRealization ch({1, 1}, {2, 2}, 3, 1);
    const LocalCsi csi(ch, 1, 1);
    CHECK_NOTHROW(csi.outgoing(2, 0));
    CHECK_THROWS_AS(csi.outgoing(2, 1), InvariantError);
}

TEST_CASE("T9 on (2,6,3,4)") {
    const AntennaConfig c = normalize(2, 6, 3, 4);
    const TrialReport r = run_s2_t9(c, 3);
    REQUIRE(r.receivers.size() == 2);
    CHECK(r.receivers[0].unknowns == 15);
    CHECK(r.receivers[0].equations == 15);
    CHECK(r.receivers[1].unknowns == 20);
    CHECK(r.receivers[1].equations == 20);
    REQUIRE(r.all_decoded());
    CHECK((*r.dof)[0] == R(9, 5));
    CHECK((*r.dof)[1] == R(11, 5));
    CHECK(r.staged_matches_joint == true);
    CHECK_THROWS_AS(run_s1_t8(c, 1), ValidationError);
}

TEST_CASE("T8 on an S1 configuration") {
    const AntennaConfig c = normalize(3, 7, 4, 5);
    // Membership by exact rationals: Delta = 2 < M1 < N1 < N2 < N1+N2-M1 < M2 <= N1+N2-Delta.
    const DerivedParams d = derived(c);
    REQUIRE(*d.delta == R(2));
    REQUIRE(R(c.m2) <= R(c.n1 + c.n2) - *d.delta);
    REQUIRE(classify(c) == ConfigClass::S1);
    const TrialReport r = run_s1_t8(c, 9);
    CHECK(r.spec.w == 3);
    CHECK(r.spec.w1 == 1);
    REQUIRE(r.all_decoded());
    CHECK(DofPoint{(*r.dof)[0], (*r.dof)[1]} == *corner_formula(c, "T8"));
    CHECK(r.staged_matches_joint == true);
    CHECK(run_s1_t5(c, 9).all_decoded());
}

TEST_CASE("special schemes across S1 and S2 (counts <= 7)") {
    int s1 = 0, s2 = 0;
    for (const auto& c : normalized_configs(7)) {
        const ConfigClass k = classify(c);
        if (k != ConfigClass::S1 && k != ConfigClass::S2) continue;
        (k == ConfigClass::S1 ? s1 : s2)++;
        for (const auto& label : scheme_corners(c))
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                const TrialReport r = run_scheme(c, corner_scheme(c, label), seed);
                CHECK_MESSAGE(r.all_decoded(), (to_string(c) + " " + label));
                if (r.staged_matches_joint) CHECK(*r.staged_matches_joint);
                if (r.dof) CHECK(DofPoint{(*r.dof)[0], (*r.dof)[1]} == *corner_formula(c, label));
            }
    }
    CHECK(s1 > 0);
    CHECK(s2 > 0);
}

TEST_CASE("decodability matches the rank condition on small tuples") {
    // Counts <= 3 and W <= 4; the full domain is covered by the acceptance oracle.
    for (const auto& c : normalized_configs(3))
        for (int w = 2; w <= 4; ++w)
            for (int w1 = 1; w1 < w; ++w1)
                for (int w2 = 1; w2 < w; ++w2) {
                    const SchemeSpec s = generic_scheme(c, w, w1, w2);
                    const RankCondition rc = rank_condition(c, s);
                    for (std::uint64_t seed = 0; seed < 100; seed += 25) {
                        const TrialReport r = run_generic(c, s, seed);
                        for (int i = 0; i < 2; ++i) {
                            CHECK(r.receivers[static_cast<std::size_t>(i)].decoded == rc.holds[static_cast<std::size_t>(i)]);
                            CHECK(r.receivers[static_cast<std::size_t>(i)].achieved_rank ==
                                  r.receivers[static_cast<std::size_t>(i)].predicted_rank);
                        }
                    }
                }
}

TEST_CASE("MISO scheme") {
    for (int k = 2; k <= 5; ++k) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const MisoTrial t = run_miso_detailed(MisoConfig{k, k}, seed);
            CHECK(t.report.all_decoded());
            CHECK(t.final_systems_invertible);
            CHECK(t.report.spec.w == k * k - k + 1);
            for (const auto& rr : t.report.receivers) CHECK(rr.unknowns == k * k - k + 1);
        }
        const TrialReport r = run_miso(MisoConfig{k, k + 2}, 1);
        R sum = 0;
        for (const auto& d : *r.dof) sum += d;
        CHECK(sum == miso_bounds(MisoConfig{k, k}).achievable_sum);
    }
    CHECK_THROWS_AS(run_miso(MisoConfig{3, 2}, 1), ValidationError);
}

TEST_CASE("Monte Carlo aggregation") {
    const AntennaConfig c = normalize(2, 2, 1, 1);
    const Aggregate a = monte_carlo(c, "symmetric", 1, 42);
    const TrialReport r = run_scheme(c, corner_scheme(c, "symmetric"), 42);
    REQUIRE(a.reports.size() == 1);
    CHECK(a.reports[0].seed == 42);
    CHECK(a.decoded == std::vector<int>{1, 1});
    CHECK(a.min_rank[0] == r.receivers[0].achieved_rank);
    CHECK(*a.dof == *r.dof);

    const Aggregate bad = monte_carlo(normalize(2, 6, 3, 4), generic_scheme(normalize(2, 6, 3, 4), 3, 3, 1), 30, 0);
    CHECK(bad.decoded[0] == 30);
    CHECK(bad.decoded[1] == 0);
    CHECK(bad.failing_seeds.size() == 30);
    CHECK(bad.rank_agreement[1] == 30);

    const Aggregate m = monte_carlo_miso(MisoConfig{3, 3}, 10, 0);
    CHECK(m.all_decoded());
    CHECK_THROWS_AS(monte_carlo(c, "symmetric", 0, 1), ValidationError);
}
