#pragma once

#include "tc/terrain.hpp"
#include "tc/visibility.hpp"

#include <random>
#include <vector>

namespace tctest {

using tc::ChainPoint;
using tc::Point;
using tc::Rat;
using tc::Terrain;

inline Terrain make_terrain(std::initializer_list<std::pair<long long, long long>> pts,
                            bool rect = false) {
    std::vector<Point> v;
    for (auto& [x, y] : pts) v.push_back(Point{Rat(x), Rat(y)});
    return Terrain(std::move(v), rect);
}

// Random terrain with strictly increasing integer x and small rational y.
inline Terrain random_terrain(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> ynum(-12, 12);
    std::uniform_int_distribution<long long> yden(1, 4);
    std::uniform_int_distribution<long long> xgap(1, 3);
    std::vector<Point> v;
    long long x = 0;
    for (std::size_t i = 0; i < n; ++i) {
        v.push_back(Point{Rat(x), Rat(ynum(rng), yden(rng))});
        x += xgap(rng);
    }
    return Terrain(std::move(v));
}

// Random rectilinear terrain: horizontal edges to the right, vertical edges
// alternating up/down with random extents. Alternation makes it strict unless
// a zero-length step collapses (lengths are >= 1, so it stays strict).
inline Terrain random_rectilinear(std::size_t steps, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> len(1, 5);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<Point> v;
    long long x = 0, y = 0;
    v.push_back(Point{Rat(x), Rat(y)});
    bool horizontal = true;
    for (std::size_t i = 0; i + 1 < steps; ++i) {
        if (horizontal) {
            x += len(rng);
        } else {
            long long d = len(rng);
            y += coin(rng) ? d : -d;
        }
        horizontal = !horizontal;
        v.push_back(Point{Rat(x), Rat(y)});
    }
    return Terrain(std::move(v), true);
}

// Deterministic dense sample of chain points: vertices, midpoints, thirds.
inline std::vector<ChainPoint> sample_chain(const Terrain& t, int per_edge = 5) {
    std::vector<ChainPoint> pts;
    for (std::size_t e = 0; e < t.edge_count(); ++e) {
        for (int k = 0; k <= per_edge; ++k) {
            Rat tt(k, per_edge);
            pts.push_back(ChainPoint::make(t, e, tt));
        }
    }
    return pts;
}

} // namespace tctest
