#include <doctest.h>

#include "dofia/errors.hpp"
#include "dofia/regions.hpp"

using namespace dofia;
using R = Rational;

namespace {

std::vector<DofPoint> pts(std::initializer_list<std::pair<R, R>> l) {
    std::vector<DofPoint> out;
    for (auto& [a, b] : l) out.push_back({a, b});
    return out;
}

bool is_vertex(const Polytope2D& p, const DofPoint& v) {
    for (const auto& w : p.vertices())
        if (w == v) return true;
    return false;
}

template <class Fn>
void for_configs(int max, Fn fn) {
    for (int m1 = 1; m1 <= max; ++m1)
        for (int m2 = 1; m2 <= max; ++m2)
            for (int n1 = 1; n1 <= max; ++n1)
                for (int n2 = n1; n2 <= max; ++n2) fn(AntennaConfig{m1, m2, n1, n2, false});
}

}  // namespace

TEST_CASE("(2,2,1,1) regions") {
    const RegionBundle b = region_bundle(normalize(2, 2, 1, 1));
    CHECK(b.achievable.vertices() == pts({{0, 0}, {1, 0}, {R(2, 3), R(2, 3)}, {0, 1}}));
    CHECK(b.perfect_csit.vertices() == pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    CHECK(b.no_csit.vertices() == pts({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(equals(b.bc_delayed,
                 Polytope2D::from_halfplanes({HalfPlane::make(R(1, 2), 1, 1), HalfPlane::make(1, R(1, 2), 1)})));
    CHECK(equals(b.outer, intersect(b.perfect_csit, b.bc_delayed)));
    CHECK(b.tight);
    CHECK(b.tightness.case_label == 'c');
    CHECK_FALSE(b.tightness.finding);
}

TEST_CASE("(3,5,2,3) regions") {
    const AntennaConfig c = normalize(3, 5, 2, 3);
    CHECK(*corner_formula(c, "P3") == DofPoint{R(4, 3), R(5, 3)});
    CHECK(is_vertex(achievable_region(c).region, DofPoint{R(4, 3), R(5, 3)}));
    CHECK(equals(perfect_csit_region(c), Polytope2D::from_halfplanes({HalfPlane::make(1, 0, 2),
                                                                       HalfPlane::make(0, 1, 3),
                                                                       HalfPlane::make(1, 1, 3)})));
    CHECK(equals(bc_delayed_region(c), Polytope2D::from_halfplanes({intercept_form(5, 3), intercept_form(2, 5)})));
}

TEST_CASE("(2,6,3,4) regions") {
    const AntennaConfig c = normalize(2, 6, 3, 4);
    const RegionBundle b = region_bundle(c);
    CHECK(b.cls == ConfigClass::S2);
    CHECK(*corner_formula(c, "T9") == DofPoint{R(9, 5), R(11, 5)});
    CHECK(b.achievable.vertices() == pts({{0, 0}, {2, 0}, {2, R(5, 3)}, {R(9, 5), R(11, 5)}, {0, 4}}));
    CHECK(b.no_csit.vertices() == pts({{0, 0}, {2, 0}, {2, 1}, {0, 4}}));
    CHECK_FALSE(b.tight);
    CHECK_FALSE(b.tightness.case_label.has_value());
    std::vector<std::string> labels;
    for (const auto& cp : b.corner_points) labels.push_back(cp.label);
    CHECK(labels == std::vector<std::string>{"T0", "T1", "T7", "T9", "T2"});
}

TEST_CASE("single-antenna and C1") {
    const RegionBundle one = region_bundle(normalize(1, 1, 1, 1));
    CHECK(one.perfect_csit.vertices() == pts({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(one.no_csit.vertices() == pts({{0, 0}, {1, 0}, {0, 1}}));
    const RegionBundle c1 = region_bundle(normalize(1, 1, 2, 2));
    CHECK(c1.cls == ConfigClass::C1);
    CHECK(c1.tight);
    CHECK(c1.tightness.case_label == 'a');
    CHECK(equals(c1.achievable, c1.no_csit));
    CHECK(equals(c1.achievable, c1.outer));
}

TEST_CASE("BC bound saturates when M1 + M2 <= N1") {
    const AntennaConfig c = normalize(1, 1, 3, 4);
    CHECK(equals(bc_delayed_region(c), Polytope2D::from_halfplanes({intercept_form(2, 2), intercept_form(2, 2)})));
}

TEST_CASE("region sweep over counts <= 8") {
    int findings = 0;
    for_configs(8, [&](const AntennaConfig& c) {
        const RegionBundle b = region_bundle(c);  // throws on a tightness contradiction
        CHECK_MESSAGE(subset(b.no_csit, b.achievable), to_string(c));
        CHECK_MESSAGE(subset(b.achievable, b.outer), to_string(c));
        CHECK_MESSAGE(subset(b.outer, b.perfect_csit), to_string(c));
        CHECK_MESSAGE(subset(b.outer, b.bc_delayed), to_string(c));
        if (b.cls == ConfigClass::C2) CHECK(equals(b.achievable, b.no_csit));

        // Case predicate => tight; the known gap classes are never tight.
        if (b.tightness.case_label) CHECK_MESSAGE(b.tight, to_string(c));
        CHECK_MESSAGE(!(b.tight && (b.cls == ConfigClass::C2 || b.cls == ConfigClass::C5 ||
                                    b.cls == ConfigClass::C63 || b.cls == ConfigClass::S1 ||
                                    b.cls == ConfigClass::S2)),
                      to_string(c));
        findings += b.tightness.finding;

        // Labeled corners are vertices and carry their closed-form values.
        for (const auto& cp : b.corner_points) {
            CHECK(is_vertex(b.achievable, cp.point));
            if (cp.label[0] != 'V') CHECK(*corner_formula(c, cp.label) == cp.point);
        }
        // C1/C2 corners are unnamed; elsewhere only the residual C6 edge class may have unnamed vertices.
        if (!class_corner_labels(b.cls).empty() && b.cls != ConfigClass::C6B)
            for (const auto& cp : b.corner_points) CHECK_MESSAGE(cp.label[0] != 'V', (to_string(c) + " " + cp.label));

        // Interior corner formulas of the class are vertices of the achievable region.
        for (const auto& l : class_corner_labels(b.cls)) {
            if (b.cls == ConfigClass::C6B) break;
            const auto f = corner_formula(c, l);
            REQUIRE_MESSAGE(f.has_value(), (to_string(c) + " " + l));
            CHECK_MESSAGE(is_vertex(b.achievable, *f), (to_string(c) + " " + l));
        }
    });
    MESSAGE("configs tight without a case predicate: " << findings);
}

TEST_CASE("caller order mirrors swapped configs") {
    const AntennaConfig c = normalize(6, 2, 4, 3);
    REQUIRE(c.swapped);
    const RegionBundle b = region_bundle(c), m = in_caller_order(b);
    CHECK(equals(m.achievable, mirrored(b.achievable)));
    CHECK(m.cfg.m1 == 6);
    CHECK(m.cfg.n1 == 4);
    CHECK(contains(m.achievable, DofPoint{R(11, 5), R(9, 5)}));
}

TEST_CASE("MISO bounds") {
    const MisoBounds k3 = miso_bounds(MisoConfig{3, 3});
    CHECK(k3.upper_sum == R(15, 7));
    CHECK(k3.achievable_sum == R(9, 7));
    const MisoBounds k2 = miso_bounds(MisoConfig{2, 2});
    CHECK(k2.achievable_sum == R(4, 3));
    CHECK(k2.upper_sum == R(4, 3));
    CHECK(miso_bounds(MisoConfig{3, 5}).achievable_sum == R(9, 7));
}

TEST_CASE("C4 sum-DoF closed form") {
    CHECK(c4_sum_dof(normalize(2, 2, 1, 1)) == R(4, 3));
    CHECK(c4_sum_dof(normalize(3, 3, 1, 2)) == R(15, 7));
    CHECK(c4_sum_dof(normalize(4, 4, 2, 2)) == R(8, 3));
    CHECK_THROWS_AS(c4_sum_dof(normalize(3, 5, 2, 3)), ValidationError);
    for_configs(8, [](const AntennaConfig& c) {
        if (classify(c) != ConfigClass::C4 || std::min(c.m1, c.m2) < c.n1 + c.n2) return;
        const R n1 = c.n1, n2 = c.n2;
        const R closed = (R(1) - n1 * n2 / (n1 * n1 + n2 * n2 + n1 * n2)) * (n1 + n2);
        CHECK(c4_sum_dof(c) == closed);
        CHECK(max_linear(achievable_region(c).region, 1, 1) == closed);
    });
}
