#pragma once

#include "tc/visgraph.hpp"

#include <cstdint>
#include <limits>
#include <numeric>

namespace tc {

enum class SolveStatus { Optimal, Covered, InfeasibleAtBudget, Infeasible, ResourceExhausted };

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Covered: return "covered";
        case SolveStatus::InfeasibleAtBudget: return "infeasible_at_budget";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::ResourceExhausted: return "resource_exhausted";
    }
    return "?";
}

struct SolveStats {
    std::uint64_t nodes = 0;
    std::size_t reductions = 0;
};

struct SolveResult {
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<std::size_t> guards;  // vertex indices, sorted
    std::size_t optimum = 0;          // meaningful when status is Optimal or Covered
    SolveStats stats;

    bool feasible() const {
        return status == SolveStatus::Optimal || status == SolveStatus::Covered;
    }

    nlohmann::json to_json() const {
        return nlohmann::json{{"status", to_string(status)},
                              {"guards", guards},
                              {"optimum", optimum},
                              {"nodes", stats.nodes},
                              {"reductions", stats.reductions}};
    }
};

constexpr std::uint64_t kDefaultNodeCap = 10'000'000;

namespace detail {

// Exact branch-and-bound set cover. Unit propagation fixes elements covered
// by a single set; branching picks the uncovered element with fewest covering
// sets and tries them by decreasing fresh coverage; the bound is a greedy
// family of uncovered elements with pairwise disjoint candidate sets.
// Everything is deterministically ordered.
class SetCoverSolver {
public:
    SetCoverSolver(std::size_t universe, const std::vector<Bits>& sets, std::uint64_t node_cap)
        : n_(universe), sets_(sets), cap_(node_cap), elem_sets_(universe) {
        for (std::size_t s = 0; s < sets_.size(); ++s)
            for (std::size_t e = 0; e < n_; ++e)
                if (sets_[s].test(e)) elem_sets_[e].push_back(s);
    }

    std::optional<std::vector<std::size_t>> solve(std::size_t limit) {
        best_.reset();
        limit_ = limit;
        exhausted_ = false;
        nodes_ = 0;
        Bits covered(n_);
        std::vector<std::size_t> chosen;
        dive(covered, chosen);
        return best_;
    }

    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    std::size_t effective_limit() const {
        std::size_t l = limit_;
        if (best_) l = std::min(l, best_->size() == 0 ? 0 : best_->size() - 1);
        return l;
    }

    void dive(Bits& covered, std::vector<std::size_t>& chosen) {
        if (exhausted_) return;
        if (++nodes_ > cap_) { exhausted_ = true; return; }

        std::size_t branch_elem = n_;
        std::size_t branch_deg = std::numeric_limits<std::size_t>::max();
        std::vector<std::size_t> units;
        for (std::size_t e = 0; e < n_; ++e) {
            if (covered.test(e)) continue;
            std::size_t deg = elem_sets_[e].size();
            if (deg == 0) return;
            if (deg == 1) { units.push_back(elem_sets_[e][0]); continue; }
            if (deg < branch_deg) { branch_deg = deg; branch_elem = e; }
        }

        if (!units.empty()) {
            std::sort(units.begin(), units.end());
            units.erase(std::unique(units.begin(), units.end()), units.end());
            if (chosen.size() + units.size() > limit_) return;
            Bits saved = covered;
            for (std::size_t s : units) { chosen.push_back(s); covered |= sets_[s]; }
            if (!best_ || chosen.size() <= best_->size()) dive(covered, chosen);
            for (std::size_t k = 0; k < units.size(); ++k) chosen.pop_back();
            covered = saved;
            return;
        }

        if (branch_elem == n_) {  // fully covered
            if (chosen.size() <= limit_ && (!best_ || chosen.size() < best_->size()))
                best_ = chosen;
            return;
        }

        if (chosen.size() + 1 > effective_limit()) return;  // any further set busts the bound
        if (chosen.size() + lower_bound(covered) > effective_limit()) return;

        std::vector<std::pair<std::size_t, std::size_t>> cands;
        for (std::size_t s : elem_sets_[branch_elem]) {
            Bits fresh = sets_[s];
            fresh.subtract(covered);
            cands.push_back({fresh.count(), s});
        }
        std::sort(cands.begin(), cands.end(), [](auto& a, auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });
        for (auto& [cnt, s] : cands) {
            Bits saved = covered;
            chosen.push_back(s);
            covered |= sets_[s];
            dive(covered, chosen);
            chosen.pop_back();
            covered = saved;
            if (exhausted_) return;
        }
    }

    std::size_t lower_bound(const Bits& covered) const {
        Bits used(sets_.size());
        std::size_t lb = 0;
        for (std::size_t e = 0; e < n_; ++e) {
            if (covered.test(e)) continue;
            bool clash = false;
            for (std::size_t s : elem_sets_[e])
                if (used.test(s)) { clash = true; break; }
            if (clash) continue;
            for (std::size_t s : elem_sets_[e]) used.set(s);
            ++lb;
        }
        return lb;
    }

    std::size_t n_;
    const std::vector<Bits>& sets_;
    std::uint64_t cap_;
    std::vector<std::vector<std::size_t>> elem_sets_;
    std::uint64_t nodes_ = 0;
    std::size_t limit_ = 0;
    bool exhausted_ = false;
    std::optional<std::vector<std::size_t>> best_;
};

} // namespace detail

// Minimum vertex guards covering the whole chain, solved exactly over the
// atom set-cover formulation. With a budget: decision semantics.
inline SolveResult min_guards_cover(const Terrain& tr,
                                    std::optional<std::size_t> budget = std::nullopt,
                                    std::uint64_t node_cap = kDefaultNodeCap) {
    std::vector<std::size_t> cands(tr.size());
    std::iota(cands.begin(), cands.end(), 0);
    AtomSet as = atomic_intervals(tr, cands);
    auto log = dominance_reduce(as);

    SolveResult res;
    res.stats.reductions = log.size();
    std::size_t limit = budget ? *budget : as.candidates.size();
    detail::SetCoverSolver solver(as.atom_count(), as.covers, node_cap);
    auto sol = solver.solve(limit);
    res.stats.nodes = solver.nodes();
    if (solver.exhausted()) { res.status = SolveStatus::ResourceExhausted; return res; }
    if (!sol) {
        res.status = budget ? SolveStatus::InfeasibleAtBudget : SolveStatus::Infeasible;
        return res;
    }
    for (std::size_t s : *sol) res.guards.push_back(as.candidates[s]);
    std::sort(res.guards.begin(), res.guards.end());
    res.optimum = res.guards.size();
    res.status = budget ? SolveStatus::Covered : SolveStatus::Optimal;
    return res;
}

// Minimum subset of `candidates` seeing every vertex in `targets`. Reports
// Infeasible when some target is visible from no candidate.
inline SolveResult min_guards_dominate(const Terrain& tr,
                                       const std::vector<std::size_t>& targets,
                                       const std::vector<std::size_t>& candidates,
                                       std::optional<std::size_t> budget = std::nullopt,
                                       std::uint64_t node_cap = kDefaultNodeCap) {
    SolveResult res;
    std::vector<Bits> sets;
    sets.reserve(candidates.size());
    for (std::size_t c : candidates) {
        VisibilityRegion r = visibility_region(tr, c);
        Bits b(targets.size());
        for (std::size_t t = 0; t < targets.size(); ++t)
            if (region_contains(tr, r, ChainPoint::vertex(tr, targets[t]))) b.set(t);
        sets.push_back(std::move(b));
    }
    for (std::size_t t = 0; t < targets.size(); ++t) {
        bool covered = false;
        for (auto& s : sets)
            if (s.test(t)) { covered = true; break; }
        if (!covered) { res.status = SolveStatus::Infeasible; return res; }
    }
    std::size_t limit = budget ? *budget : candidates.size();
    detail::SetCoverSolver solver(targets.size(), sets, node_cap);
    auto sol = solver.solve(limit);
    res.stats.nodes = solver.nodes();
    if (solver.exhausted()) { res.status = SolveStatus::ResourceExhausted; return res; }
    if (!sol) {
        res.status = budget ? SolveStatus::InfeasibleAtBudget : SolveStatus::Infeasible;
        return res;
    }
    for (std::size_t s : *sol) res.guards.push_back(candidates[s]);
    std::sort(res.guards.begin(), res.guards.end());
    res.optimum = res.guards.size();
    res.status = budget ? SolveStatus::Covered : SolveStatus::Optimal;
    return res;
}

// Folklore relocation for rectilinear terrains: every interior guard moves to
// an edge endpoint without losing coverage. A guard inside an edge joining a
// reflex and a convex vertex moves to the reflex one; otherwise the endpoint
// whose region contains the guard's is taken, and its absence is a hard error.
inline std::vector<std::size_t> relocate_interior_guards(const Terrain& tr,
                                                         const std::vector<ChainPoint>& guards) {
    if (tr.classify() == TerrainClass::General)
        throw std::invalid_argument("relocate_interior_guards needs a rectilinear terrain");

    auto region_subset = [&](const VisibilityRegion& a, const VisibilityRegion& b) {
        for (const auto& ia : a) {
            bool inside = false;
            for (const auto& ib : b)
                if (ib.lo <= ia.lo && ia.hi <= ib.hi) { inside = true; break; }
            if (!inside) return false;
        }
        return true;
    };

    std::vector<std::size_t> out;
    for (const auto& g : guards) {
        if (auto v = g.vertex_index(tr)) { out.push_back(*v); continue; }
        std::size_t a = g.edge, b = g.edge + 1;
        VertexClass ca = tr.vertex_class(a), cb = tr.vertex_class(b);
        if (ca == VertexClass::Reflex && cb != VertexClass::Reflex) { out.push_back(a); continue; }
        if (cb == VertexClass::Reflex && ca != VertexClass::Reflex) { out.push_back(b); continue; }
        VisibilityRegion rg = visibility_region(tr, g);
        if (region_subset(rg, visibility_region(tr, a))) { out.push_back(a); continue; }
        if (region_subset(rg, visibility_region(tr, b))) { out.push_back(b); continue; }
        throw std::logic_error("relocation: neither endpoint dominates the interior guard");
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace tc
