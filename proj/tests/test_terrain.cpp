#include "tc/terrain.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace tc;
using tctest::make_terrain;

TEST_CASE("monotonicity is enforced with an index in the diagnostic") {
    std::vector<Point> bad{{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(1), Rat(1)}};
    try {
        Terrain t(bad);
        FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
}

TEST_CASE("classification") {
    CHECK(make_terrain({{0, 0}, {0, 1}, {1, 1}, {1, 0}}).classify() ==
          TerrainClass::StrictlyRectilinear);
    CHECK(make_terrain({{0, 0}, {1, 0}, {2, 0}}).classify() == TerrainClass::Rectilinear);
    CHECK(make_terrain({{0, 2}, {1, 0}, {2, 2}}).classify() == TerrainClass::General);
}

TEST_CASE("vertex classes") {
    // step down: (1,1) pokes into the sky (reflex), (1,0) is a pit corner (convex)
    Terrain t = make_terrain({{0, 1}, {1, 1}, {1, 0}, {2, 0}}, true);
    CHECK(t.vertex_class(1) == VertexClass::Reflex);
    CHECK(t.vertex_class(2) == VertexClass::Convex);

    Terrain fl = make_terrain({{0, 0}, {1, 0}, {2, 0}});
    CHECK(fl.vertex_class(1) == VertexClass::Straight);
}

TEST_CASE("json round trip is exact") {
    Terrain t({{Rat(0), Rat(1, 3)}, {Rat(1, 2), Rat(-5, 7)}, {Rat(2), Rat(0)}});
    auto j = t.to_json();
    Terrain u = Terrain::from_json(j);
    REQUIRE(u.size() == t.size());
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(u[i] == t[i]);
    CHECK(j["vertices"][0][1] == "1/3");

    auto bad = j;
    bad["vertices"] = {{"0", "0"}, {"-1", "0"}};
    CHECK_THROWS(Terrain::from_json(bad));
}

TEST_CASE("chain points canonicalize") {
    Terrain t = make_terrain({{0, 0}, {1, 1}, {2, 0}});
    ChainPoint p = ChainPoint::make(t, 0, Rat(1));
    CHECK(p.edge == 1);
    CHECK(p.t == Rat(0));
    ChainPoint q = ChainPoint::make(t, 1, Rat(1)); // last edge keeps t = 1
    CHECK(q.edge == 1);
    CHECK(q.t == Rat(1));
    CHECK(ChainPoint::vertex(t, 2) == q);
    CHECK_THROWS(ChainPoint::make(t, 5, Rat(0)));
    CHECK_THROWS(ChainPoint::make(t, 0, Rat(3, 2)));
}
