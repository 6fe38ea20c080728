#include "dofia/regions.hpp"

#include <algorithm>

#include "dofia/errors.hpp"

namespace dofia {

namespace {

using R = Rational;

Polytope2D eq2_region(const AntennaConfig& c, std::vector<HalfPlane> extra = {}) {
    const DerivedParams d = derived(c);
    std::vector<HalfPlane> hs{
        HalfPlane::make(1, 0, c.m1),
        HalfPlane::make(0, 1, c.m2),
        intercept_form(std::max(d.m1_prime, c.n2), c.n2),
        intercept_form(c.n1, std::max(d.m2_prime, c.n1)),
    };
    hs.insert(hs.end(), extra.begin(), extra.end());
    return Polytope2D::from_halfplanes(std::move(hs));
}

}  // namespace

std::vector<NamedPoint> corner_formulas(const AntennaConfig& c) {
    const R M1 = c.m1, M2 = c.m2, N1 = c.n1, N2 = c.n2;
    const DerivedParams d = derived(c);
    const R M1p = d.m1_prime, M2p = d.m2_prime, L = d.lambda;
    std::vector<NamedPoint> out;
    auto add = [&](const char* label, R x, R y) { out.push_back({label, DofPoint{x, y}}); };

    add("Q0", 0, 0);
    add("Q1", N1, 0);
    add("Q2", 0, N2);
    if (M2p != N1) add("Q3", N1 * (M2p - N2) / (M2p - N1), M2p * (N2 - N1) / (M2p - N1));
    add("P0", 0, 0);
    add("P1", N1, 0);
    add("P2", 0, N2);
    if (M1p * M2p != N1 * N2)
        add("P3", M1p * N1 * (M2p - N2) / (M1p * M2p - N1 * N2), M2p * N2 * (M1p - N1) / (M1p * M2p - N1 * N2));
    add("S0", 0, 0);
    add("S1", M1, 0);
    add("S2", 0, M2);
    add("S3", M1, M2 * (N1 - M1) / N1);
    add("T0", 0, 0);
    add("T1", M1, 0);
    add("T2", 0, N2);
    add("T3", M1, N1 - M1);
    add("T4", M1, N2 - M1);
    if (M2 != N1) add("T5", N1 * (M2 - N2) / (M2 - N1), M2 * (N2 - N1) / (M2 - N1));
    add("T6", M1, M2 * (N1 - M1) / N1);
    add("T7", M1, (M2 - L) * (N1 - M1) / N1);
    if (N1 != L) add("T8", N1 * (M1 - L) / (N1 - L), M2 * (N1 - M1) / (N1 - L));
    if (M2 != L) add("T9", N1 * N1 / (M2 - L), N2 - N1 * N1 / (M2 - L));
    return out;
}

std::optional<DofPoint> corner_formula(const AntennaConfig& cfg, const std::string& label) {
    for (auto& np : corner_formulas(cfg))
        if (np.label == label) return np.point;
    return std::nullopt;
}

std::vector<std::string> class_corner_labels(ConfigClass c) {
    switch (c) {
        case ConfigClass::C1:
        case ConfigClass::C2: return {};
        case ConfigClass::C3: return {"Q0", "Q1", "Q2", "Q3"};
        case ConfigClass::C4: return {"P0", "P1", "P2", "P3"};
        case ConfigClass::C5: return {"S0", "S1", "S2", "S3"};
        case ConfigClass::C61:
        case ConfigClass::C62: return {"T0", "T1", "T2", "T4"};
        case ConfigClass::C63: return {"T0", "T1", "T2", "T5", "T6"};
        case ConfigClass::S1: return {"T0", "T1", "T2", "T5", "T7", "T8"};
        case ConfigClass::S2: return {"T0", "T1", "T2", "T7", "T9"};
        case ConfigClass::C6B: return {"T0", "T1", "T2", "T4", "T5", "T6", "Q3"};
    }
    return {};
}

LabeledRegion achievable_region(const AntennaConfig& c) {
    const ConfigClass cls = classify(c);
    LabeledRegion out;
    if (cls == ConfigClass::S1) {
        const R alpha = R(c.n1 * (c.n1 + c.n2)) / R(2 * c.n1 + c.n2 - c.m1);
        out.region = eq2_region(c, {intercept_form(alpha, c.n1 + c.n2)});
    } else if (cls == ConfigClass::S2) {
        out.region = Polytope2D::from_vertices({DofPoint{c.m1, 0}, DofPoint{0, c.n2}, *corner_formula(c, "T9"),
                                                *corner_formula(c, "T7")});
    } else {
        out.region = eq2_region(c);
    }

    const auto labels = class_corner_labels(cls);
    const auto formulas = corner_formulas(c);
    int anon = 0;
    for (const auto& v : out.region.vertices()) {
        std::string name;
        for (const auto& l : labels) {
            auto it = std::find_if(formulas.begin(), formulas.end(), [&](const NamedPoint& f) { return f.label == l; });
            if (it != formulas.end() && it->point == v) {
                name = l;
                break;
            }
        }
        if (name.empty()) name = "V" + std::to_string(anon++);
        out.corners.push_back({name, v});
    }
    return out;
}

Polytope2D perfect_csit_region(const AntennaConfig& c) {
    const int sum = std::min({c.m1 + c.m2, c.n1 + c.n2, std::max(c.m1, c.n2), std::max(c.m2, c.n1)});
    return Polytope2D::from_halfplanes({
        HalfPlane::make(1, 0, std::min(c.m1, c.n1)),
        HalfPlane::make(0, 1, std::min(c.m2, c.n2)),
        HalfPlane::make(1, 1, sum),
    });
}

Polytope2D bc_delayed_region(const AntennaConfig& c) {
    const int M = c.m1 + c.m2;
    return Polytope2D::from_halfplanes({
        intercept_form(std::min(M, c.n1 + c.n2), std::min(M, c.n2)),
        intercept_form(std::min(M, c.n1), std::min(M, c.n1 + c.n2)),
    });
}

Polytope2D no_csit_region(const AntennaConfig& c) {
    switch (classify(c)) {
        case ConfigClass::C1: return eq2_region(c);
        case ConfigClass::C2:
        case ConfigClass::C3:
        case ConfigClass::C4:
            return Polytope2D::from_halfplanes({intercept_form(std::min(c.m1, c.n1), std::min(c.m2, c.n2))});
        case ConfigClass::C5:
            return Polytope2D::from_vertices({DofPoint{c.m1, 0}, DofPoint{c.m1, c.n1 - c.m1}, DofPoint{0, c.m2}});
        default:
            return Polytope2D::from_vertices({DofPoint{c.m1, 0}, DofPoint{c.m1, c.n1 - c.m1}, DofPoint{0, c.n2}});
    }
}

std::vector<bool> tightness_cases(const AntennaConfig& c) {
    const int M1 = c.m1, M2 = c.m2, N1 = c.n1, N2 = c.n2;
    const DerivedParams d = derived(c);
    std::vector<bool> k(5, false);
    k[0] = M2 <= N1;
    k[1] = N1 < M1 && M1 <= N2 && M2 >= N1 + N2;
    k[2] = std::min(M1, M2) >= N1 + N2;
    if (d.delta) {
        const R D = *d.delta;
        k[3] = M1 <= D && D < N1 && N1 <= N2 && N2 < N1 + N2 - M1 && N1 + N2 - M1 < M2;
    }
    if (d.delta_prime) {
        const R Dp = *d.delta_prime;
        k[4] = M1 <= Dp && Dp < N1 && N1 <= N2 && N2 < M2 && M2 <= N1 + N2 - M1;
    }
    return k;
}

Tightness tightness(const AntennaConfig& cfg, const Polytope2D& achievable, const Polytope2D& outer) {
    Tightness t;
    t.geometric = equals(achievable, outer);
    const auto k = tightness_cases(cfg);
    for (int i = 0; i < 5; ++i)
        if (k[i]) {
            t.case_label = static_cast<char>('a' + i);
            break;
        }
    if (t.case_label && !t.geometric)
        throw InvariantError("tightness case (" + std::string(1, *t.case_label) + ") holds for " + to_string(cfg) +
                             " but achievable region differs from the outer bound");
    t.finding = t.geometric && !t.case_label;
    return t;
}

RegionBundle region_bundle(const AntennaConfig& cfg) {
    RegionBundle b;
    b.cfg = cfg;
    b.cls = classify(cfg);
    LabeledRegion ach = achievable_region(cfg);
    b.achievable = ach.region;
    b.corner_points = std::move(ach.corners);
    b.perfect_csit = perfect_csit_region(cfg);
    b.bc_delayed = bc_delayed_region(cfg);
    b.no_csit = no_csit_region(cfg);
    b.outer = intersect(b.perfect_csit, b.bc_delayed);
    b.tightness = tightness(cfg, b.achievable, b.outer);
    b.tight = b.tightness.geometric;
    return b;
}

RegionBundle in_caller_order(const RegionBundle& b) {
    if (!b.cfg.swapped) return b;
    RegionBundle m = b;
    m.cfg = AntennaConfig{b.cfg.m2, b.cfg.m1, b.cfg.n2, b.cfg.n1, true};
    m.achievable = mirrored(b.achievable);
    m.perfect_csit = mirrored(b.perfect_csit);
    m.bc_delayed = mirrored(b.bc_delayed);
    m.no_csit = mirrored(b.no_csit);
    m.outer = mirrored(b.outer);
    for (auto& np : m.corner_points) std::swap(np.point.d1, np.point.d2);
    // keep the origin first and the rest counterclockwise
    if (m.corner_points.size() > 2) std::reverse(m.corner_points.begin() + 1, m.corner_points.end());
    return m;
}

MisoBounds miso_bounds(const MisoConfig& mc) {
    validate(mc);
    const std::int64_t K = mc.k;
    return {R(K * K, K * K - K + 1), R(K * (K * K - 2 * K + 2), K * K - K + 1)};
}

Rational c4_sum_dof(const AntennaConfig& c) {
    if (classify(c) != ConfigClass::C4 || std::min(c.m1, c.m2) < c.n1 + c.n2)
        throw ValidationError("c4_sum_dof needs class C4 with min(M1,M2) >= N1+N2, got " + to_string(c));
    const R N1 = c.n1, N2 = c.n2;
    const R closed = (R(1) - N1 * N2 / (N1 * N1 + N2 * N2 + N1 * N2)) * (N1 + N2);
    const R geo = max_linear(achievable_region(c).region, 1, 1);
    if (closed != geo)
        throw InvariantError("C4 sum-DoF closed form " + closed.str() + " != region maximum " + geo.str() + " for " +
                             to_string(c));
    return closed;
}

}  // namespace dofia
