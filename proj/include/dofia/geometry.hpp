#pragma once

#include <string>
#include <vector>

#include "dofia/rational.hpp"

namespace dofia {

struct DofPoint {
    Rational d1, d2;

    friend bool operator==(const DofPoint&, const DofPoint&) = default;
    friend auto operator<=>(const DofPoint&, const DofPoint&) = default;
};

std::string to_string(const DofPoint& p);

// a*d1 + b*d2 <= c
struct HalfPlane {
    Rational a, b, c;

    // Scales so the leading nonzero coefficient is +1 or -1 (scaling by a
    // negative factor would flip the inequality). Throws on a = b = 0.
    static HalfPlane make(Rational a, Rational b, Rational c);

    [[nodiscard]] Rational lhs(const DofPoint& p) const { return a * p.d1 + b * p.d2; }
    [[nodiscard]] bool satisfied(const DofPoint& p) const { return lhs(p) <= c; }
    [[nodiscard]] bool tight(const DofPoint& p) const { return lhs(p) == c; }

    friend bool operator==(const HalfPlane&, const HalfPlane&) = default;
};

// d1/x + d2/y <= 1 with x, y > 0, the shape of nearly every region bound here.
HalfPlane intercept_form(const Rational& x, const Rational& y);

/// Bounded convex polygon in the non-negative quadrant that contains the origin.
///
/// Only facet-defining constraints are kept; vertices run counterclockwise
/// from the lexicographically smallest one, which is always the origin.
class Polytope2D {
public:
    static Polytope2D from_halfplanes(std::vector<HalfPlane> hs);
    // Convex hull of the given points plus the origin.
    static Polytope2D from_vertices(const std::vector<DofPoint>& pts);

    [[nodiscard]] const std::vector<HalfPlane>& constraints() const { return constraints_; }
    [[nodiscard]] const std::vector<DofPoint>& vertices() const { return vertices_; }

private:
    std::vector<HalfPlane> constraints_;
    std::vector<DofPoint> vertices_;
};

bool contains(const Polytope2D& p, const DofPoint& pt);
bool subset(const Polytope2D& p, const Polytope2D& q);
bool equals(const Polytope2D& p, const Polytope2D& q);
Polytope2D intersect(const Polytope2D& p, const Polytope2D& q);
Rational max_linear(const Polytope2D& p, const Rational& w1, const Rational& w2);
// Exchanges the roles of d1 and d2.
Polytope2D mirrored(const Polytope2D& p);

}  // namespace dofia
