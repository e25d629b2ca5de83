#pragma once

#include <vector>

#include "quintic/poly.hpp"

namespace quintic {

// One segment of a lower Newton polygon.  slope is the common valuation of
// the roots attached to the segment (positive for Eisenstein-like parts).
struct NewtonSegment {
    Rat slope;   // root valuation
    long length; // horizontal span
    bool operator==(const NewtonSegment& o) const { return slope == o.slope && length == o.length; }
};

struct NewtonPolygon {
    std::vector<NewtonSegment> segments; // root valuations in ascending order
    long zero_roots = 0;                 // multiplicity of x dividing the input
};

// Lower convex hull of the points (i, v_p(c_i)).  A factor x^k is split off
// first and reported via zero_roots; segment lengths sum to deg f - k.
inline NewtonPolygon newton_polygon(const IntPoly& f, const Int& p) {
    if (f.is_zero()) throw InvalidInputError("newton_polygon: zero polynomial");
    if (p < 2) throw InvalidInputError("newton_polygon: p must be >= 2");
    NewtonPolygon out;
    long lo = 0;
    while (f.coeff(lo) == 0) ++lo;
    out.zero_roots = lo;
    long n = f.degree();
    if (lo == n) return out;

    // hull points, left to right; valuations as exact longs
    std::vector<std::pair<long, long>> pts;
    for (long i = lo; i <= n; ++i) {
        if (f.coeff(i) == 0) continue;
        pts.push_back({i, vp(f.coeff(i), p)});
    }
    std::vector<std::pair<long, long>> hull;
    for (auto& pt : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            // keep the hull lower-convex: drop b if it lies on or above segment a-pt
            // cross product of (b-a) x (pt-a)
            Int cross = Int(b.first - a.first) * (pt.second - a.second) -
                        Int(b.second - a.second) * (pt.first - a.first);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    // slopes left to right are increasing; root valuation = -slope, so the
    // natural left-to-right order lists valuations in descending order.
    std::vector<NewtonSegment> segs;
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        Rat val(Int(hull[i].second - hull[i + 1].second), Int(hull[i + 1].first - hull[i].first));
        segs.push_back({val, hull[i + 1].first - hull[i].first});
    }
    for (size_t i = segs.size(); i-- > 0;) out.segments.push_back(segs[i]);
    return out;
}

} // namespace quintic
