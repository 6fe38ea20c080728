#include <doctest.h>

#include <numeric>

#include "dofia/errors.hpp"
#include "dofia/linalg.hpp"
#include "dofia/regions.hpp"
#include "dofia/schemes.hpp"

using namespace dofia;
using R = Rational;

namespace {

template <class Fn>
void for_configs(int max, Fn fn) {
    for (int m1 = 1; m1 <= max; ++m1)
        for (int m2 = 1; m2 <= max; ++m2)
            for (int n1 = 1; n1 <= max; ++n1)
                for (int n2 = n1; n2 <= max; ++n2) fn(AntennaConfig{m1, m2, n1, n2, false});
}

int exact_rank(const AntennaConfig& c, const SchemeSpec& s, int rx, std::uint64_t seed) {
    return static_cast<int>(rank(build_coefficient_matrix<Fp>(c, s, rx, seed).p));
}

}  // namespace

TEST_CASE("count constraints") {
    const AntennaConfig bad = normalize(2, 6, 3, 4);
    const CountConstraints c = count_constraints(generic_scheme(bad, 3, 3, 1), bad);
    CHECK(c.lhs1 == 9);
    CHECK(c.rhs1 == 9);
    CHECK(c.lhs2 == 12);
    CHECK(c.rhs2 == 12);
    CHECK(c.holds());

    const AntennaConfig ill = normalize(2, 2, 1, 1);
    const CountConstraints d = count_constraints(generic_scheme(ill, 3, 1, 1), ill);
    CHECK(d.lhs1 == 3);
    CHECK(d.lhs2 == 3);
    CHECK(d.holds());
    // W1 = W with M1' > N1 overloads receiver one.
    CHECK_FALSE(count_constraints(generic_scheme(ill, 3, 3, 1), ill).holds());
}

TEST_CASE("rank terms: illustrative example") {
    const AntennaConfig c = normalize(2, 2, 1, 1);
    const SchemeSpec s = generic_scheme(c, 3, 1, 1);
    const RankTerms t = rank_terms(c, s, 1);
    CHECK(t.r1 == 1);
    CHECK(t.r2 == 0);
    CHECK(t.r3 == 2);
    CHECK(t.unknowns == 3);
    CHECK(t.predicted_rank == 3);
    CHECK(t.i_max == 2);  // tie resolves to 2
    CHECK(rank_condition(c, s).both());
    const auto blocks = build_coefficient_matrix<Fp>(c, s, 1, 7);
    CHECK(blocks.p.rows() == 3);
    CHECK(blocks.p.cols() == 3);
    for (std::uint64_t seed = 0; seed < 200; ++seed) CHECK(exact_rank(c, s, 1, seed) == 3);
}

TEST_CASE("rank terms: counting is not sufficient") {
    const AntennaConfig c = normalize(2, 6, 3, 4);
    const SchemeSpec s = generic_scheme(c, 3, 3, 1);
    const RankTerms t = rank_terms(c, s, 2);
    CHECK(t.unknowns == 12);
    CHECK(t.predicted_rank == 11);
    const RankCondition rc = rank_condition(c, s);
    CHECK(rc.holds[0]);
    CHECK_FALSE(rc.holds[1]);
    const auto blocks = build_coefficient_matrix<Fp>(c, s, 2, 3);
    CHECK(blocks.p.rows() == 12);
    CHECK(blocks.p.cols() == 12);
    for (std::uint64_t seed = 0; seed < 200; ++seed) CHECK(exact_rank(c, s, 2, seed) == 11);
}

TEST_CASE("degenerate phase lengths") {
    const AntennaConfig c = normalize(2, 6, 3, 4);
    // W1 = W: no phase two for transmitter one, so r3 vanishes at i_max = 1.
    const RankTerms t = rank_terms(c, generic_scheme(c, 3, 3, 1), 1);
    CHECK(t.i_max == 1);
    CHECK(t.r3 == 0);
    // W2 = 0: a single-user scheme.
    const AntennaConfig d = normalize(2, 3, 2, 3);
    const SchemeSpec s = generic_scheme(d, 4, 3, 0);
    CHECK(scheme_dof(s) == DofPoint{R(3, 2), 0});
}

TEST_CASE("closed form over-counts when phase two is short") {
    // Receiver two sees transmitter one's four phase-one symbols through one
    // phase-two combination only; the own-signal subspace it re-observes in
    // phase two is counted in both r2 and r3.
    const AntennaConfig c = normalize(1, 3, 1, 2);
    const SchemeSpec s = generic_scheme(c, 5, 4, 2);
    const RankTerms t = rank_terms(c, s, 2);
    CHECK(t.predicted_rank == 10);
    CHECK(t.unknowns == 10);
    for (std::uint64_t seed = 0; seed < 50; ++seed) CHECK(exact_rank(c, s, 2, seed) == 9);
}

TEST_CASE("tie resolution and relabeling symmetry") {
    for_configs(4, [](const AntennaConfig& c) {
        const AntennaConfig sw{c.m2, c.m1, c.n2, c.n1, false};
        for (int w = 2; w <= 5; ++w)
            for (int w1 = 1; w1 < w; ++w1)
                for (int w2 = 1; w2 < w; ++w2) {
                    const SchemeSpec s = generic_scheme(c, w, w1, w2), t = generic_scheme(sw, w, w2, w1);
                    for (int i = 1; i <= 2; ++i) {
                        const RankTerms a = rank_terms(c, s, i), b = rank_terms(sw, t, 3 - i);
                        CHECK(a.predicted_rank == b.predicted_rank);
                        CHECK(a.unknowns == b.unknowns);
                    }
                }
    });
}

TEST_CASE("corner scheme examples") {
    const AntennaConfig s2 = normalize(2, 6, 3, 4);
    const SchemeSpec t9 = corner_scheme(s2, "T9");
    CHECK(t9.w == 5);
    CHECK(t9.w1 == 2);
    CHECK(t9.eta1 == 3);
    CHECK(t9.eta2 == 6);
    CHECK(std::accumulate(t9.omega.begin(), t9.omega.end(), 0) == 11);
    CHECK(t9.omega == std::vector<int>{6, 5});
    for (int o : t9.omega) {
        CHECK(o >= 4);
        CHECK(o <= 6);
    }
    CHECK(scheme_dof(t9) == DofPoint{R(9, 5), R(11, 5)});

    const AntennaConfig c3 = normalize(3, 5, 2, 3);
    const SchemeSpec q3 = corner_scheme(c3, "Q3");
    CHECK(q3.w == 9);
    CHECK(q3.w1 == 4);
    CHECK(q3.w2 == 3);

    const SchemeSpec sym = corner_scheme(normalize(2, 2, 1, 1), "symmetric");
    CHECK(sym.w == 3);
    CHECK(sym.w1 == 1);
    CHECK(sym.w2 == 1);

    const AntennaConfig s1 = normalize(3, 7, 4, 5);
    REQUIRE(classify(s1) == ConfigClass::S1);
    const SchemeSpec t8 = corner_scheme(s1, "T8");
    CHECK(t8.w == 3);
    CHECK(t8.w1 == 1);
    CHECK(scheme_dof(t8) == *corner_formula(s1, "T8"));

    CHECK_THROWS_AS(corner_scheme(c3, "T8"), ValidationError);
    CHECK_THROWS_AS(corner_scheme(s2, "Q3"), ValidationError);
}

TEST_CASE("every corner scheme meets counting and rank conditions (counts <= 8)") {
    for_configs(8, [](const AntennaConfig& c) {
        for (const auto& label : scheme_corners(c)) {
            const SchemeSpec s = corner_scheme(c, label);
            const auto formula = corner_formula(c, label == "symmetric" ? "P3" : label);
            REQUIRE(formula.has_value());
            CHECK_MESSAGE(scheme_dof(s) == *formula, (to_string(c) + " " + label));
            if (!s.generic_structure()) continue;
            const CountConstraints cc = count_constraints(s, c);
            CHECK_MESSAGE(cc.holds(), (to_string(c) + " " + label));
            CHECK_MESSAGE(rank_condition(c, s).both(), (to_string(c) + " " + label));
            if (label == "Q3" || label == "P3") {
                CHECK(cc.lhs1 == cc.rhs1);
                CHECK(cc.lhs2 == cc.rhs2);
            }
        }
    });
}

TEST_CASE("corner schemes: formula rank equals exact rank (counts <= 5)") {
    for_configs(5, [](const AntennaConfig& c) {
        for (const auto& label : scheme_corners(c)) {
            const SchemeSpec s = corner_scheme(c, label);
            if (!s.generic_structure()) continue;
            for (int i = 1; i <= 2; ++i)
                for (std::uint64_t seed = 0; seed < 20; ++seed)
                    CHECK_MESSAGE(exact_rank(c, s, i, seed) == rank_terms(c, s, i).predicted_rank,
                                  (to_string(c) + " " + label + " rx" + std::to_string(i) + " seed " +
                                   std::to_string(seed)));
        }
    });
}

TEST_CASE("coefficient matrix: determinism, blocks and the real path") {
    const AntennaConfig c = normalize(3, 5, 2, 3);
    const SchemeSpec s = corner_scheme(c, "Q3");
    const auto a = build_coefficient_matrix<Fp>(c, s, 2, 99), b = build_coefficient_matrix<Fp>(c, s, 2, 99);
    CHECK(a.p == b.p);
    CHECK(a.p != build_coefficient_matrix<Fp>(c, s, 2, 100).p);
    const int N = c.n2, wmin = std::min(s.w1, s.w2), wmax = std::max(s.w1, s.w2);
    CHECK(a.p11.rows() == N * wmin);
    CHECK(a.p21.rows() == N * (wmax - wmin));
    CHECK(a.p31.rows() == N * (s.w - wmax));
    CHECK(a.p11.cols() + a.p12.cols() == a.p.cols());
    CHECK(a.field == FieldTag::Prime);
    const auto r = build_coefficient_matrix<double>(c, s, 2, 99);
    CHECK(r.field == FieldTag::Real);
    for (int i = 1; i <= 2; ++i)
        for (std::uint64_t seed = 0; seed < 10; ++seed)
            CHECK(rank(build_coefficient_matrix<double>(c, s, i, seed).p) ==
                  rank(build_coefficient_matrix<Fp>(c, s, i, seed).p));
}

TEST_CASE("scheme validation") {
    const AntennaConfig c = normalize(2, 2, 1, 1);
    CHECK_THROWS_AS(generic_scheme(c, 0, 0, 0), ValidationError);
    CHECK_THROWS_AS(generic_scheme(c, 3, 4, 1), ValidationError);
    CHECK_THROWS_AS(generic_scheme(c, 3, 1, -1), ValidationError);
    SchemeSpec s = generic_scheme(c, 3, 1, 1);
    s.tx1_symbols_per_phase1_slot = 3;
    CHECK_THROWS_AS(validate(s, c), ValidationError);
    SchemeSpec t9 = corner_scheme(normalize(2, 6, 3, 4), "T9");
    t9.omega = {7, 4};
    CHECK_THROWS_AS(validate(t9, normalize(2, 6, 3, 4)), ValidationError);
    CHECK_THROWS_AS(build_coefficient_matrix<Fp>(normalize(2, 6, 3, 4), t9, 1, 1), ValidationError);
}
