#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dofia/config.hpp"
#include "dofia/geometry.hpp"

namespace dofia {

struct NamedPoint {
    std::string label;
    DofPoint point;
};

// Every closed-form corner defined for this configuration (Q*, P*, S*, T*),
// whether or not it is a vertex of any region.
std::vector<NamedPoint> corner_formulas(const AntennaConfig& cfg);
std::optional<DofPoint> corner_formula(const AntennaConfig& cfg, const std::string& label);

// Labels naming the achievable region's corners for the class, e.g. Q0..Q3 for C3.
std::vector<std::string> class_corner_labels(ConfigClass c);

struct LabeledRegion {
    Polytope2D region;
    std::vector<NamedPoint> corners;  // one per vertex, counterclockwise
};

LabeledRegion achievable_region(const AntennaConfig& cfg);
Polytope2D perfect_csit_region(const AntennaConfig& cfg);
Polytope2D bc_delayed_region(const AntennaConfig& cfg);
Polytope2D no_csit_region(const AntennaConfig& cfg);

struct Tightness {
    bool geometric = false;         // achievable == outer, exactly
    std::optional<char> case_label;  // first of 'a'..'e' whose predicate holds
    // Tight geometrically while no case predicate holds. Reported, not fatal.
    bool finding = false;
};

// Independent evaluation of the five tightness predicates (index 0 = case a).
std::vector<bool> tightness_cases(const AntennaConfig& cfg);

struct RegionBundle {
    AntennaConfig cfg;
    ConfigClass cls = ConfigClass::C1;
    Polytope2D achievable;
    Polytope2D perfect_csit;
    Polytope2D bc_delayed;
    Polytope2D no_csit;
    Polytope2D outer;
    bool tight = false;
    Tightness tightness;
    std::vector<NamedPoint> corner_points;
};

// Throws InvariantError when a tightness case holds but the regions differ.
Tightness tightness(const AntennaConfig& cfg, const Polytope2D& achievable, const Polytope2D& outer);
RegionBundle region_bundle(const AntennaConfig& cfg);

// Bundle expressed in the caller's user order (mirrors every region when the
// config was swapped during normalization).
RegionBundle in_caller_order(const RegionBundle& b);

struct MisoBounds {
    Rational achievable_sum;
    Rational upper_sum;
};

MisoBounds miso_bounds(const MisoConfig& mc);

// Closed-form sum-DoF for C4 with min(M1, M2) >= N1 + N2; throws
// InvariantError if it disagrees with the maximum over the achievable region.
Rational c4_sum_dof(const AntennaConfig& cfg);

}  // namespace dofia
