#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tc {

// Literals are signed 1-based variable indices, DIMACS style.
using Lit = int;
using RawClause = std::vector<Lit>;

struct RawCnf {
    int num_vars = 0;
    std::vector<RawClause> clauses;
};

// Exactly-3-distinct-variable clauses.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::array<Lit, 3>> clauses;

    RawCnf raw() const {
        RawCnf r;
        r.num_vars = num_vars;
        for (auto& c : clauses) r.clauses.push_back({c[0], c[1], c[2]});
        return r;
    }
};

inline RawCnf parse_dimacs(std::istream& in) {
    RawCnf cnf;
    std::string line;
    long declared_clauses = -1;
    RawClause cur;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            ls >> p >> fmt >> cnf.num_vars >> declared_clauses;
            if (fmt != "cnf") throw std::invalid_argument("DIMACS: expected 'p cnf'");
            continue;
        }
        Lit l;
        while (ls >> l) {
            if (l == 0) {
                cnf.clauses.push_back(cur);
                cur.clear();
            } else {
                if (std::abs(l) > cnf.num_vars)
                    throw std::invalid_argument("DIMACS: literal out of range");
                cur.push_back(l);
            }
        }
    }
    if (!cur.empty()) cnf.clauses.push_back(cur);
    return cnf;
}

inline RawCnf parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

inline void write_dimacs(std::ostream& out, const RawCnf& cnf) {
    out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
    for (const auto& c : cnf.clauses) {
        for (Lit l : c) out << l << ' ';
        out << "0\n";
    }
}

// Equisatisfiable rewrite into exactly-3-distinct-variable clauses.
// Unit and binary clauses get the standard fresh-variable padding; longer
// clauses are chained. An empty clause collapses the whole formula to a
// canonical three-variable contradiction.
inline CnfFormula normalize_to_e3(const RawCnf& in) {
    if (in.clauses.empty()) throw std::invalid_argument("normalize_to_e3: no clauses");

    CnfFormula out;
    out.num_vars = in.num_vars;
    auto fresh = [&]() { return ++out.num_vars; };

    auto all_sign_patterns = [&](Lit a, Lit b, Lit c, std::vector<std::array<Lit, 3>>& dst) {
        for (int m = 0; m < 8; ++m)
            dst.push_back({(m & 1) ? -a : a, (m & 2) ? -b : b, (m & 4) ? -c : c});
    };

    for (const auto& raw : in.clauses) {
        RawClause c;
        std::set<Lit> seen;
        bool taut = false;
        for (Lit l : raw) {
            if (seen.count(-l)) taut = true;
            if (seen.insert(l).second) c.push_back(l);
        }
        if (taut) throw std::invalid_argument("normalize_to_e3: tautological clause");
        if (c.empty()) {
            // trivially unsatisfiable input
            CnfFormula unsat;
            unsat.num_vars = 3;
            all_sign_patterns(1, 2, 3, unsat.clauses);
            return unsat;
        }
        if (c.size() == 1) {
            Lit a = fresh(), b = fresh();
            out.clauses.push_back({c[0], a, b});
            out.clauses.push_back({c[0], -a, b});
            out.clauses.push_back({c[0], a, -b});
            out.clauses.push_back({c[0], -a, -b});
        } else if (c.size() == 2) {
            Lit a = fresh();
            out.clauses.push_back({c[0], c[1], a});
            out.clauses.push_back({c[0], c[1], -a});
        } else if (c.size() == 3) {
            out.clauses.push_back({c[0], c[1], c[2]});
        } else {
            // (l1 l2 t) (-t l3 t2) ... (-tk l_{n-1} l_n)
            Lit t = fresh();
            out.clauses.push_back({c[0], c[1], t});
            std::size_t i = 2;
            while (i + 2 < c.size()) {
                Lit t2 = fresh();
                out.clauses.push_back({-t, c[i], t2});
                t = t2;
                ++i;
            }
            out.clauses.push_back({-t, c[i], c[i + 1]});
        }
    }
    return out;
}

// Plain DPLL with unit propagation and pure-literal elimination; the oracle
// every satisfiability claim in the test suite rests on.
class Dpll {
public:
    explicit Dpll(const RawCnf& cnf) : n_(cnf.num_vars), clauses_(cnf.clauses) {}
    explicit Dpll(const CnfFormula& f) : Dpll(f.raw()) {}

    // assignment[v] for v in 1..n; empty optional = UNSAT
    std::optional<std::vector<bool>> solve() {
        std::vector<int> assign(n_ + 1, 0);  // 0 unknown, +1 true, -1 false
        if (!search(assign)) return std::nullopt;
        std::vector<bool> out(n_ + 1, false);
        for (int v = 1; v <= n_; ++v) out[v] = assign[v] >= 0;  // unknowns default true
        return out;
    }

    static bool satisfies(const RawCnf& cnf, const std::vector<bool>& a) {
        for (const auto& c : cnf.clauses) {
            bool ok = false;
            for (Lit l : c)
                if ((l > 0 && a[l]) || (l < 0 && !a[-l])) { ok = true; break; }
            if (!ok) return false;
        }
        return true;
    }

private:
    enum class ClauseState { Satisfied, Conflict, Unit, Open };

    ClauseState state(const RawClause& c, const std::vector<int>& assign, Lit& unit) const {
        int unassigned = 0;
        for (Lit l : c) {
            int v = assign[std::abs(l)];
            if (v == 0) {
                ++unassigned;
                unit = l;
            } else if ((l > 0) == (v > 0)) {
                return ClauseState::Satisfied;
            }
        }
        if (unassigned == 0) return ClauseState::Conflict;
        return unassigned == 1 ? ClauseState::Unit : ClauseState::Open;
    }

    bool search(std::vector<int>& assign) {
        // unit propagation to fixpoint
        bool changed = true;
        std::vector<std::pair<int, int>> trail;
        auto undo = [&]() {
            for (auto& [v, old] : trail) assign[v] = old;
        };
        while (changed) {
            changed = false;
            for (const auto& c : clauses_) {
                Lit unit = 0;
                switch (state(c, assign, unit)) {
                    case ClauseState::Conflict: undo(); return false;
                    case ClauseState::Unit: {
                        int v = std::abs(unit);
                        trail.push_back({v, assign[v]});
                        assign[v] = unit > 0 ? 1 : -1;
                        changed = true;
                        break;
                    }
                    default: break;
                }
            }
        }
        int var = 0;
        for (int v = 1; v <= n_; ++v)
            if (assign[v] == 0) { var = v; break; }
        if (var == 0) return true;  // all assigned, no conflict

        for (int val : {1, -1}) {
            assign[var] = val;
            if (search(assign)) return true;
        }
        assign[var] = 0;
        undo();
        return false;
    }

    int n_;
    std::vector<RawClause> clauses_;
};

inline std::optional<std::vector<bool>> dpll_sat(const RawCnf& cnf) { return Dpll(cnf).solve(); }
inline std::optional<std::vector<bool>> dpll_sat(const CnfFormula& f) { return Dpll(f).solve(); }

} // namespace tc
