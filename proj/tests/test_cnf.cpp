#include "tc/cnf.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace tc;

namespace {

bool enumerate_sat(const RawCnf& cnf) {
    int n = cnf.num_vars;
    for (unsigned long long m = 0; m < (1ull << n); ++m) {
        std::vector<bool> a(n + 1, false);
        for (int v = 1; v <= n; ++v) a[v] = (m >> (v - 1)) & 1;
        if (Dpll::satisfies(cnf, a)) return true;
    }
    return false;
}

bool equisatisfiable(const RawCnf& a, const CnfFormula& b) {
    return enumerate_sat(a) == enumerate_sat(b.raw());
}

} // namespace

TEST_CASE("normalize: exactly-3 clauses pass through") {
    RawCnf in{3, {{1, 2, 3}}};
    CnfFormula out = normalize_to_e3(in);
    REQUIRE(out.clauses.size() == 1);
    CHECK(out.num_vars == 3);
    CHECK(out.clauses[0] == std::array<Lit, 3>{1, 2, 3});
}

TEST_CASE("normalize: unit clause becomes 4 clauses over 3 vars") {
    RawCnf in{1, {{1}}};
    CnfFormula out = normalize_to_e3(in);
    CHECK(out.clauses.size() == 4);
    CHECK(out.num_vars == 3);
    CHECK(equisatisfiable(in, out));

    RawCnf neg{1, {{-1}}};
    CHECK(equisatisfiable(neg, normalize_to_e3(neg)));
}

TEST_CASE("normalize: repeated literal collapses to a distinct-variable clause") {
    RawCnf in{2, {{1, 1, 2}}};
    CnfFormula out = normalize_to_e3(in);
    for (auto& c : out.clauses) {
        std::set<int> vars{std::abs(c[0]), std::abs(c[1]), std::abs(c[2])};
        CHECK(vars.size() == 3);
    }
    CHECK(equisatisfiable(in, out));
}

TEST_CASE("normalize: long clauses chain") {
    RawCnf in{5, {{1, 2, 3, 4, 5}, {-1, -2, -3, -4, -5}}};
    CnfFormula out = normalize_to_e3(in);
    CHECK(equisatisfiable(in, out));
}

TEST_CASE("normalize: empty clause yields a trivially UNSAT formula") {
    RawCnf in{2, {{1, 2}, {}}};
    CnfFormula out = normalize_to_e3(in);
    CHECK_FALSE(dpll_sat(out).has_value());
}

TEST_CASE("normalize rejects tautologies") {
    RawCnf in{2, {{1, -1, 2}}};
    CHECK_THROWS_AS(normalize_to_e3(in), std::invalid_argument);
}

TEST_CASE("dpll: basics") {
    RawCnf contra{1, {{1}, {-1}}};
    CHECK_FALSE(dpll_sat(normalize_to_e3(contra)).has_value());

    RawCnf one{3, {{1, 2, 3}}};
    auto model = dpll_sat(one);
    REQUIRE(model.has_value());
    CHECK(Dpll::satisfies(one, *model));
}

TEST_CASE("dpll agrees with enumeration on random 3-CNF") {
    std::mt19937_64 rng(424242);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 12;
        std::uniform_int_distribution<int> var(1, n);
        std::uniform_int_distribution<int> m(8, 60);
        std::uniform_int_distribution<int> coin(0, 1);
        RawCnf cnf;
        cnf.num_vars = n;
        int clauses = m(rng);
        for (int i = 0; i < clauses; ++i) {
            std::set<int> vars;
            while (vars.size() < 3) vars.insert(var(rng));
            RawClause c;
            for (int v : vars) c.push_back(coin(rng) ? v : -v);
            cnf.clauses.push_back(c);
        }
        auto model = dpll_sat(cnf);
        CHECK(model.has_value() == enumerate_sat(cnf));
        if (model) CHECK(Dpll::satisfies(cnf, *model));
    }
}

TEST_CASE("dimacs round trip") {
    RawCnf cnf{4, {{1, -2, 3}, {-1, 4, 2}, {2, 3, 4}}};
    std::ostringstream os;
    write_dimacs(os, cnf);
    RawCnf back = parse_dimacs(os.str());
    CHECK(back.num_vars == cnf.num_vars);
    CHECK(back.clauses == cnf.clauses);

    RawCnf commented = parse_dimacs("c header\np cnf 2 1\n1 -2 0\n");
    REQUIRE(commented.clauses.size() == 1);
    CHECK(commented.clauses[0] == RawClause{1, -2});
}
