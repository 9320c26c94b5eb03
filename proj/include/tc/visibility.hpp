#pragma once

#include "tc/terrain.hpp"

#include <algorithm>
#include <optional>
#include <tuple>
#include <vector>

namespace tc {

// Closed visibility: two chain points see each other when the segment between
// them never passes strictly below the chain; grazing contact counts.
//
// For a_x < b_x this reduces to per-edge checks: every non-vertical edge whose
// column range overlaps (a_x, b_x) in more than a point must stay on or below
// the sight segment over the shared range. Vertical edges need no check of
// their own; their endpoints belong to the neighbouring edges. Two chain
// points in the same column always see each other (the chain meets a column
// in one contiguous stretch).
inline bool sees(const Terrain& tr, const ChainPoint& a, const ChainPoint& b) {
    Point pa = a.position(tr);
    Point pb = b.position(tr);
    if (pa.x == pb.x) return true;
    const Point& L = pa.x < pb.x ? pa : pb;
    const Point& R = pa.x < pb.x ? pb : pa;

    for (std::size_t e = 0; e + 1 < tr.size(); ++e) {
        const Point& u = tr[e];
        const Point& v = tr[e + 1];
        if (u.x == v.x) continue;           // walls are handled via their neighbours
        if (v.x <= L.x || u.x >= R.x) continue;

        if (u.x >= L.x) {
            if (orient(L, R, u) > 0) return false;   // u strictly above the sight line
        } else {
            if (orient(u, v, L) < 0) return false;   // L strictly below the edge line
        }
        if (v.x <= R.x) {
            if (orient(L, R, v) > 0) return false;
        } else {
            if (orient(u, v, R) < 0) return false;
        }
    }
    return true;
}

inline bool sees_vertices(const Terrain& tr, std::size_t i, std::size_t j) {
    return sees(tr, ChainPoint::vertex(tr, i), ChainPoint::vertex(tr, j));
}

// A maximal closed run of chain points visible from some guard.
struct ChainInterval {
    ChainPoint lo;
    ChainPoint hi;
};

using VisibilityRegion = std::vector<ChainInterval>;

namespace detail {

// One-sided sweep to the right of the guard. Keeps the angularly highest
// blocker seen so far; each edge contributes at most one visible sub-interval.
// `out` receives intervals in increasing chain order.
inline void sweep_right(const Terrain& tr, const ChainPoint& g, std::vector<ChainInterval>& out) {
    const Point gp = g.position(tr);
    std::optional<Point> blocker;

    auto merge_blocker = [&](const Point& w) {
        if (w.x == gp.x && w.y == gp.y) return;
        if (w.x < gp.x) return;
        if (!blocker) { blocker = w; return; }
        if (orient(gp, *blocker, w) > 0) blocker = w;
    };

    auto emit = [&](std::size_t e, const Rat& t0, const Rat& t1) {
        if (t1 < t0) return;
        out.push_back({ChainPoint::make(tr, e, t0), ChainPoint::make(tr, e, t1)});
    };

    // Visible sub-interval of [p(t0)..p(t1)] on edge e under the current blocker.
    auto clip = [&](std::size_t e, const Rat& t0, const Rat& t1) {
        if (!blocker) { emit(e, t0, t1); return; }
        const Point& u = tr[e];
        const Point& v = tr[e + 1];
        auto f = [&](const Rat& t) {
            Point p{u.x + (v.x - u.x) * t, u.y + (v.y - u.y) * t};
            return (p.x - gp.x) * (blocker->y - gp.y) - (p.y - gp.y) * (blocker->x - gp.x);
        };
        Rat f0 = f(t0), f1 = f(t1);
        bool ok0 = f0.sign() <= 0, ok1 = f1.sign() <= 0;
        if (ok0 && ok1) { emit(e, t0, t1); return; }
        if (!ok0 && !ok1) return;
        Rat ts = t0 + (t1 - t0) * (f0 / (f0 - f1));
        if (ok0) emit(e, t0, ts);
        else emit(e, ts, t1);
    };

    // Guard's own edge: the part to the right of g is always visible.
    std::size_t first = g.edge;
    if (g.t < Rat(1)) {
        emit(first, g.t, Rat(1));
        if (!tr.edge_vertical(first)) merge_blocker(tr[first + 1]);
        // vertical own edge: same column, endpoints merge via later edges
    } else {
        ++first; // g sits at the far end of its edge (last vertex case)
    }

    for (std::size_t e = first + 1; e < tr.edge_count(); ++e) {
        const Point& u = tr[e];
        const Point& v = tr[e + 1];
        if (u.x == v.x) {
            if (u.x == gp.x) { emit(e, Rat(0), Rat(1)); continue; }
            clip(e, Rat(0), Rat(1));
            continue;
        }
        merge_blocker(u);
        clip(e, Rat(0), Rat(1));
        merge_blocker(v);
    }
}

inline Terrain reflect(const Terrain& tr) {
    std::vector<Point> pts;
    pts.reserve(tr.size());
    for (std::size_t i = tr.size(); i-- > 0;) pts.push_back(Point{-tr[i].x, tr[i].y});
    return Terrain(std::move(pts), tr.rectilinear_flag());
}

inline ChainPoint reflect_point(const Terrain& tr, const ChainPoint& p) {
    std::size_t ne = tr.edge_count();
    return ChainPoint::make(tr, ne - 1 - p.edge, Rat(1) - p.t);
}

} // namespace detail

inline void normalize_region(const Terrain& tr, VisibilityRegion& r) {
    std::sort(r.begin(), r.end(), [](const ChainInterval& a, const ChainInterval& b) {
        if (a.lo < b.lo) return true;
        if (b.lo < a.lo) return false;
        return a.hi < b.hi;
    });
    VisibilityRegion merged;
    for (auto& iv : r) {
        if (!merged.empty()) {
            ChainInterval& last = merged.back();
            // Closed intervals join when they touch or overlap.
            if (iv.lo <= last.hi || iv.lo.position(tr) == last.hi.position(tr)) {
                if (last.hi < iv.hi) last.hi = iv.hi;
                continue;
            }
        }
        merged.push_back(iv);
    }
    r = std::move(merged);
}

// Maximal closed intervals of the chain visible from `g`, in chain order.
// Interval endpoints are exact: vertices or ray/edge intersections.
inline VisibilityRegion visibility_region(const Terrain& tr, const ChainPoint& g) {
    VisibilityRegion right;
    detail::sweep_right(tr, g, right);

    Terrain ref = detail::reflect(tr);
    VisibilityRegion left_ref;
    detail::sweep_right(ref, detail::reflect_point(tr, g), left_ref);

    VisibilityRegion all = std::move(right);
    for (auto& iv : left_ref)
        all.push_back({detail::reflect_point(ref, iv.hi), detail::reflect_point(ref, iv.lo)});
    normalize_region(tr, all);
    return all;
}

inline VisibilityRegion visibility_region(const Terrain& tr, std::size_t guard_vertex) {
    if (guard_vertex >= tr.size()) throw std::out_of_range("guard vertex out of range");
    return visibility_region(tr, ChainPoint::vertex(tr, guard_vertex));
}

inline bool region_contains(const Terrain& tr, const VisibilityRegion& r, const ChainPoint& p) {
    Point pp = p.position(tr);
    for (const auto& iv : r) {
        if (p < iv.lo) {
            // distinct representations of the same geometric point can differ
            if (!(pp == iv.lo.position(tr))) continue;
        }
        if (iv.hi < p) {
            if (!(pp == iv.hi.position(tr))) continue;
        }
        return true;
    }
    return false;
}

// Does the union of the given regions cover the whole chain? Returns an
// uncovered chain point when not.
inline std::optional<ChainPoint> coverage_gap(const Terrain& tr,
                                              const std::vector<VisibilityRegion>& regions) {
    std::vector<ChainInterval> all;
    for (const auto& r : regions) all.insert(all.end(), r.begin(), r.end());
    if (all.empty()) return ChainPoint{0, Rat(0)};
    normalize_region(tr, all);
    ChainPoint reach{0, Rat(0)};
    for (const auto& iv : all) {
        if (reach < iv.lo && !(reach.position(tr) == iv.lo.position(tr))) {
            // midpoint of the gap
            Rat tm = iv.lo.edge == reach.edge ? (reach.t + iv.lo.t) / Rat(2)
                                              : (reach.t + Rat(1)) / Rat(2);
            return ChainPoint::make(tr, reach.edge, tm);
        }
        if (reach < iv.hi) reach = iv.hi;
    }
    ChainPoint end{tr.edge_count() - 1, Rat(1)};
    if (reach < end) {
        Rat tm = (reach.edge == end.edge) ? (reach.t + Rat(1)) / Rat(2) : Rat(1, 2);
        return ChainPoint::make(tr, reach.edge, tm);
    }
    return std::nullopt;
}

struct OrderClaimViolation {
    std::size_t a, b, c, d;
};

// Lemma check: for vertices a<b<c<d, sees(a,c) and sees(b,d) must imply
// sees(a,d). Returns the first counterexample, which a correct `sees`
// never produces.
inline std::optional<OrderClaimViolation> check_order_claim(const Terrain& tr) {
    std::size_t n = tr.size();
    if (n < 4) return std::nullopt;
    std::vector<std::vector<bool>> vis(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        VisibilityRegion r = visibility_region(tr, i);
        for (std::size_t j = 0; j < n; ++j)
            vis[i][j] = region_contains(tr, r, ChainPoint::vertex(tr, j));
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = a + 2; c < n; ++c) {
            if (!vis[a][c]) continue;
            for (std::size_t d = c + 1; d < n; ++d) {
                if (vis[a][d]) continue;
                for (std::size_t b = a + 1; b < c; ++b)
                    if (vis[b][d]) return OrderClaimViolation{a, b, c, d};
            }
        }
    return std::nullopt;
}

} // namespace tc
