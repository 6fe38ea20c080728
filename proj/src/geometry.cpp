#include "dofia/geometry.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "dofia/errors.hpp"

namespace dofia {

std::string to_string(const DofPoint& p) { return "(" + p.d1.str() + ", " + p.d2.str() + ")"; }

HalfPlane HalfPlane::make(Rational a, Rational b, Rational c) {
    if (a.is_zero() && b.is_zero()) throw ValidationError("half-plane with zero normal");
    const Rational lead = a.is_zero() ? b : a;
    const Rational s = lead.sign() < 0 ? -lead : lead;
    return HalfPlane{a / s, b / s, c / s};
}

HalfPlane intercept_form(const Rational& x, const Rational& y) {
    return HalfPlane::make(Rational(1) / x, Rational(1) / y, Rational(1));
}

namespace {

Rational cross(const DofPoint& o, const DofPoint& a, const DofPoint& b) {
    return (a.d1 - o.d1) * (b.d2 - o.d2) - (a.d2 - o.d2) * (b.d1 - o.d1);
}

// Andrew's monotone chain; drops duplicates and collinear points, returns
// counterclockwise order starting at the lexicographic minimum.
std::vector<DofPoint> hull(std::vector<DofPoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<DofPoint> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

std::optional<DofPoint> meet(const HalfPlane& p, const HalfPlane& q) {
    const Rational det = p.a * q.b - p.b * q.a;
    if (det.is_zero()) return std::nullopt;
    return DofPoint{(p.c * q.b - p.b * q.c) / det, (p.a * q.c - p.c * q.a) / det};
}

bool feasible(const std::vector<HalfPlane>& hs, const DofPoint& p) {
    return std::all_of(hs.begin(), hs.end(), [&](const HalfPlane& h) { return h.satisfied(p); });
}

// Non-zero direction r >= 0 with a.r <= 0 for every constraint means the
// region is unbounded. Extreme rays of that cone lie on the axes or on some
// constraint line through the origin.
bool unbounded(const std::vector<HalfPlane>& hs) {
    std::vector<DofPoint> rays{{1, 0}, {0, 1}};
    for (const auto& h : hs) {
        rays.push_back({h.b, -h.a});
        rays.push_back({-h.b, h.a});
    }
    for (const auto& r : rays) {
        if (r.d1 < 0 || r.d2 < 0 || (r.d1.is_zero() && r.d2.is_zero())) continue;
        bool in_cone = true;
        for (const auto& h : hs)
            if (h.a * r.d1 + h.b * r.d2 > 0) {
                in_cone = false;
                break;
            }
        if (in_cone) return true;
    }
    return false;
}

}  // namespace

Polytope2D Polytope2D::from_halfplanes(std::vector<HalfPlane> hs) {
    hs.push_back(HalfPlane::make(-1, 0, 0));
    hs.push_back(HalfPlane::make(0, -1, 0));
    for (auto& h : hs) h = HalfPlane::make(h.a, h.b, h.c);
    std::sort(hs.begin(), hs.end(), [](const HalfPlane& x, const HalfPlane& y) {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    });
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());

    if (!feasible(hs, DofPoint{0, 0})) throw ValidationError("region does not contain the origin (empty or invalid)");
    if (unbounded(hs)) throw ValidationError("region is unbounded");

    std::vector<DofPoint> cand;
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j)
            if (auto p = meet(hs[i], hs[j]); p && feasible(hs, *p)) cand.push_back(*p);

    Polytope2D out;
    out.vertices_ = hull(std::move(cand));

    // Facets are the constraints tight at two distinct vertices; for a
    // degenerate (segment or point) region keep every tight constraint.
    const std::size_t need = out.vertices_.size() >= 3 ? 2 : 1;
    for (const auto& h : hs) {
        std::size_t t = 0;
        for (const auto& v : out.vertices_) t += h.tight(v) ? 1 : 0;
        if (t >= need) out.constraints_.push_back(h);
    }
    return out;
}

Polytope2D Polytope2D::from_vertices(const std::vector<DofPoint>& pts) {
    std::vector<DofPoint> all = pts;
    all.push_back({0, 0});
    for (const auto& p : all)
        if (p.d1 < 0 || p.d2 < 0) throw ValidationError("vertex outside the non-negative quadrant: " + to_string(p));
    const auto h = hull(all);
    if (h.size() < 3) throw ValidationError("degenerate vertex set");
    std::vector<HalfPlane> hs;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const DofPoint& p = h[i];
        const DofPoint& q = h[(i + 1) % h.size()];
        // outward normal of a counterclockwise edge
        const Rational a = q.d2 - p.d2;
        const Rational b = p.d1 - q.d1;
        hs.push_back(HalfPlane::make(a, b, a * p.d1 + b * p.d2));
    }
    return from_halfplanes(std::move(hs));
}

bool contains(const Polytope2D& p, const DofPoint& pt) { return feasible(p.constraints(), pt); }

bool subset(const Polytope2D& p, const Polytope2D& q) {
    return std::all_of(p.vertices().begin(), p.vertices().end(), [&](const DofPoint& v) { return contains(q, v); });
}

bool equals(const Polytope2D& p, const Polytope2D& q) { return subset(p, q) && subset(q, p); }

Polytope2D intersect(const Polytope2D& p, const Polytope2D& q) {
    std::vector<HalfPlane> hs = p.constraints();
    hs.insert(hs.end(), q.constraints().begin(), q.constraints().end());
    return Polytope2D::from_halfplanes(std::move(hs));
}

Rational max_linear(const Polytope2D& p, const Rational& w1, const Rational& w2) {
    Rational best = w1 * p.vertices().front().d1 + w2 * p.vertices().front().d2;
    for (const auto& v : p.vertices()) best = max(best, w1 * v.d1 + w2 * v.d2);
    return best;
}

Polytope2D mirrored(const Polytope2D& p) {
    std::vector<HalfPlane> hs;
    for (const auto& h : p.constraints()) hs.push_back(HalfPlane::make(h.b, h.a, h.c));
    return Polytope2D::from_halfplanes(std::move(hs));
}

}  // namespace dofia
