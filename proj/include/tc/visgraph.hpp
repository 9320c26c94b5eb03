#pragma once

#include "tc/bitset.hpp"
#include "tc/visibility.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>

namespace tc {

// Vertex-to-vertex visibility relation.
struct VisGraph {
    std::size_t n = 0;
    std::vector<Bits> adj;

    bool sees(std::size_t i, std::size_t j) const { return adj[i].test(j); }
};

inline VisGraph build_visibility_graph(const Terrain& tr) {
    VisGraph g;
    g.n = tr.size();
    g.adj.assign(g.n, Bits(g.n));
    for (std::size_t i = 0; i < g.n; ++i) {
        VisibilityRegion r = visibility_region(tr, i);
        for (std::size_t j = 0; j < g.n; ++j)
            if (region_contains(tr, r, ChainPoint::vertex(tr, j))) g.adj[i].set(j);
    }
    // symmetry is a property of `sees`; make it structural as well
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = i + 1; j < g.n; ++j)
            if (g.adj[i].test(j) != g.adj[j].test(i)) { g.adj[i].set(j); g.adj[j].set(i); }
    return g;
}

// Partition of the chain into closed atoms on which every candidate's
// visibility is all-or-nothing. Atom boundaries are the union of all
// candidates' region endpoints plus the terrain vertices.
struct AtomSet {
    std::vector<ChainInterval> atoms;     // consecutive, share endpoints
    std::vector<std::size_t> candidates;  // vertex indices
    std::vector<Bits> covers;             // per candidate: atoms fully seen
    std::vector<VisibilityRegion> regions;

    std::size_t atom_count() const { return atoms.size(); }
};

inline AtomSet atomic_intervals(const Terrain& tr, const std::vector<std::size_t>& candidates) {
    if (candidates.empty()) throw std::invalid_argument("atomic_intervals: no candidates");
    AtomSet as;
    as.candidates = candidates;

    std::vector<ChainPoint> cuts;
    for (std::size_t i = 0; i < tr.size(); ++i) cuts.push_back(ChainPoint::vertex(tr, i));
    for (std::size_t c : candidates) {
        as.regions.push_back(visibility_region(tr, c));
        for (const auto& iv : as.regions.back()) {
            cuts.push_back(iv.lo);
            cuts.push_back(iv.hi);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) as.atoms.push_back({cuts[k], cuts[k + 1]});

    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
        Bits b(as.atoms.size());
        const VisibilityRegion& r = as.regions[ci];
        std::size_t ai = 0;
        for (const auto& iv : r) {
            while (ai < as.atoms.size() && as.atoms[ai].lo < iv.lo) ++ai;
            std::size_t aj = ai;
            while (aj < as.atoms.size() && as.atoms[aj].hi <= iv.hi) b.set(aj++);
        }
        as.covers.push_back(std::move(b));
    }
    return as;
}

struct RemovalLogEntry {
    std::size_t removed;   // candidate vertex
    std::size_t kept;      // dominating candidate vertex
};

// Drops candidates whose covered-atom set is contained in another's.
// Ties keep the lower vertex index. Optimal set-cover value is unchanged.
inline std::vector<RemovalLogEntry> dominance_reduce(AtomSet& as) {
    std::vector<RemovalLogEntry> log;
    std::vector<bool> alive(as.candidates.size(), true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t u = 0; u < as.candidates.size(); ++u) {
            if (!alive[u]) continue;
            for (std::size_t v = 0; v < as.candidates.size(); ++v) {
                if (u == v || !alive[v]) continue;
                if (!as.covers[u].subset_of(as.covers[v])) continue;
                bool equal = as.covers[v].subset_of(as.covers[u]);
                // equal sets: keep the lower vertex index
                if (equal && as.candidates[v] > as.candidates[u]) continue;
                alive[u] = false;
                log.push_back({as.candidates[u], as.candidates[v]});
                changed = true;
                break;
            }
        }
    }
    AtomSet pruned;
    pruned.atoms = std::move(as.atoms);
    for (std::size_t i = 0; i < as.candidates.size(); ++i) {
        if (!alive[i]) continue;
        pruned.candidates.push_back(as.candidates[i]);
        pruned.covers.push_back(std::move(as.covers[i]));
        pruned.regions.push_back(std::move(as.regions[i]));
    }
    as = std::move(pruned);
    return log;
}

// Bipartite domination structure: red candidate guards vs blue must-see
// vertices, with an edge for every visible red-blue pair.
struct RedBlueGraph {
    std::vector<std::pair<std::size_t, std::string>> red;   // (vertex, label)
    std::vector<std::pair<std::size_t, std::string>> blue;
    std::set<std::pair<std::size_t, std::size_t>> edges;    // indices into red/blue

    bool edge(std::size_t r, std::size_t b) const { return edges.count({r, b}) > 0; }

    nlohmann::json to_json() const {
        nlohmann::json jr = nlohmann::json::array(), jb = nlohmann::json::array(),
                       je = nlohmann::json::array();
        for (auto& [v, l] : red) jr.push_back({{"vertex", v}, {"label", l}});
        for (auto& [v, l] : blue) jb.push_back({{"vertex", v}, {"label", l}});
        for (auto& [r, b] : edges) je.push_back({r, b});
        return nlohmann::json{{"kind", "red_blue_graph"}, {"red", jr}, {"blue", jb}, {"edges", je}};
    }
};

inline RedBlueGraph extract_red_blue(const Terrain& tr,
                                     const std::vector<std::pair<std::size_t, std::string>>& red,
                                     const std::vector<std::pair<std::size_t, std::string>>& blue) {
    std::set<std::size_t> reds;
    for (auto& [v, l] : red) reds.insert(v);
    for (auto& [v, l] : blue)
        if (reds.count(v))
            throw std::invalid_argument("vertex " + std::to_string(v) + " labeled red and blue");

    RedBlueGraph g;
    g.red = red;
    g.blue = blue;
    for (std::size_t r = 0; r < red.size(); ++r) {
        VisibilityRegion reg = visibility_region(tr, red[r].first);
        for (std::size_t b = 0; b < blue.size(); ++b)
            if (region_contains(tr, reg, ChainPoint::vertex(tr, blue[b].first)))
                g.edges.insert({r, b});
    }
    return g;
}

// Subdivides a strictly rectilinear terrain with 180-degree vertices so that
// dominating all vertices of the output is equivalent to covering the whole
// input chain. Cut points are every visibility event (ray through a guard
// vertex and a blocking reflex vertex, intersected with an edge) plus the
// midpoint of every resulting piece. A dominated midpoint forces a guard
// whose whole piece is covered: original-vertex guards see pieces all-or-
// nothing, and a guard on the piece's own edge covers that edge entirely.
// Output size stays O(n^2).
inline Terrain subdivide_for_domination(const Terrain& tr) {
    if (tr.classify() != TerrainClass::StrictlyRectilinear)
        throw std::invalid_argument("subdivide_for_domination needs a strictly rectilinear terrain");

    std::vector<ChainPoint> cuts;
    for (std::size_t i = 0; i < tr.size(); ++i) cuts.push_back(ChainPoint::vertex(tr, i));
    for (std::size_t g = 0; g < tr.size(); ++g) {
        VisibilityRegion r = visibility_region(tr, g);
        for (const auto& iv : r) {
            cuts.push_back(iv.lo);
            cuts.push_back(iv.hi);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<ChainPoint> with_mids;
    for (std::size_t k = 0; k < cuts.size(); ++k) {
        with_mids.push_back(cuts[k]);
        if (k + 1 == cuts.size()) break;
        const ChainPoint& a = cuts[k];
        const ChainPoint& b = cuts[k + 1];
        Rat tm = a.edge == b.edge ? (a.t + b.t) / Rat(2) : (a.t + Rat(1)) / Rat(2);
        ChainPoint mid = ChainPoint::make(tr, a.edge, tm);
        if (!(mid == a) && !(mid == b)) with_mids.push_back(mid);
    }

    std::vector<Point> out;
    for (const auto& cp : with_mids) {
        Point p = cp.position(tr);
        if (out.empty() || p != out.back()) out.push_back(p);
    }
    return Terrain(std::move(out), true);
}

} // namespace tc
