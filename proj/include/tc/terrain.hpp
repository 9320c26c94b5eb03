#pragma once

#include "tc/rational.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tc {

struct Point {
    Rat x;
    Rat y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

// Sign of the cross product (b-a) x (c-a): >0 when c lies left of the directed
// line a->b, <0 right, 0 collinear. For a->b pointing in +x this means
// positive = strictly above.
inline int orient(const Point& a, const Point& b, const Point& c) {
    Rat v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return v.sign();
}

enum class TerrainClass { General, Rectilinear, StrictlyRectilinear };
enum class VertexClass { Convex, Reflex, Straight };

inline const char* to_string(TerrainClass c) {
    switch (c) {
        case TerrainClass::General: return "general";
        case TerrainClass::Rectilinear: return "rectilinear";
        case TerrainClass::StrictlyRectilinear: return "strictly_rectilinear";
    }
    return "?";
}

inline const char* to_string(VertexClass c) {
    switch (c) {
        case VertexClass::Convex: return "convex";
        case VertexClass::Reflex: return "reflex";
        case VertexClass::Straight: return "180-degree";
    }
    return "?";
}

// An x-monotone polygonal chain. Vertical edges are allowed; consecutive
// duplicate vertices are not.
class Terrain {
public:
    Terrain() = default;

    explicit Terrain(std::vector<Point> vertices, bool rectilinear_flag = false)
        : v_(std::move(vertices)), rectilinear_flag_(rectilinear_flag) {
        validate();
    }

    std::size_t size() const { return v_.size(); }
    std::size_t edge_count() const { return v_.size() - 1; }
    const Point& operator[](std::size_t i) const { return v_[i]; }
    const std::vector<Point>& vertices() const { return v_; }
    bool rectilinear_flag() const { return rectilinear_flag_; }

    bool edge_vertical(std::size_t e) const { return v_[e].x == v_[e + 1].x; }

    TerrainClass classify() const {
        bool rect = true;
        for (std::size_t e = 0; e + 1 < v_.size(); ++e) {
            if (v_[e].x != v_[e + 1].x && v_[e].y != v_[e + 1].y) { rect = false; break; }
        }
        if (!rect) return TerrainClass::General;
        bool strict = true;
        for (std::size_t e = 0; e + 2 < v_.size(); ++e) {
            bool va = edge_vertical(e), vb = edge_vertical(e + 1);
            if (va == vb) { strict = false; break; }
        }
        return strict ? TerrainClass::StrictlyRectilinear : TerrainClass::Rectilinear;
    }

    // Vertex classes by turn direction; terrain endpoints count as convex.
    // Reflex = right turn = the corner pokes into the sky (interior angle
    // above the chain exceeds 180 degrees).
    VertexClass vertex_class(std::size_t i) const {
        if (i == 0 || i + 1 == v_.size()) return VertexClass::Convex;
        int o = orient(v_[i - 1], v_[i], v_[i + 1]);
        if (o < 0) return VertexClass::Reflex;
        if (o > 0) return VertexClass::Convex;
        return VertexClass::Straight;
    }

    nlohmann::json to_json() const {
        nlohmann::json verts = nlohmann::json::array();
        for (const auto& p : v_) verts.push_back({p.x.str(), p.y.str()});
        return nlohmann::json{{"kind", "terrain"},
                              {"rectilinear", rectilinear_flag_},
                              {"vertices", std::move(verts)}};
    }

    static Terrain from_json(const nlohmann::json& j) {
        if (!j.is_object() || j.value("kind", "") != std::string("terrain"))
            throw std::invalid_argument("terrain json: expected {\"kind\":\"terrain\",...}");
        std::vector<Point> pts;
        for (const auto& e : j.at("vertices"))
            pts.push_back(Point{Rat::parse(e.at(0).get<std::string>()),
                                Rat::parse(e.at(1).get<std::string>())});
        return Terrain(std::move(pts), j.value("rectilinear", false));
    }

private:
    void validate() const {
        if (v_.size() < 2) throw std::invalid_argument("terrain needs at least 2 vertices");
        for (std::size_t i = 0; i + 1 < v_.size(); ++i) {
            if (v_[i + 1].x < v_[i].x)
                throw std::invalid_argument("terrain not x-monotone at vertex index " +
                                            std::to_string(i + 1));
            if (v_[i] == v_[i + 1])
                throw std::invalid_argument("duplicate consecutive vertex at index " +
                                            std::to_string(i + 1));
        }
        if (rectilinear_flag_) {
            for (std::size_t e = 0; e + 1 < v_.size(); ++e) {
                if (v_[e].x != v_[e + 1].x && v_[e].y != v_[e + 1].y)
                    throw std::invalid_argument("edge " + std::to_string(e) +
                                                " is neither horizontal nor vertical");
            }
        }
    }

    std::vector<Point> v_;
    bool rectilinear_flag_ = false;
};

// A point on the chain: edge index plus affine parameter t in [0,1].
// Canonical form keeps t < 1 except on the last edge, so every chain point
// has exactly one representation.
struct ChainPoint {
    std::size_t edge = 0;
    Rat t;

    static ChainPoint vertex(const Terrain& tr, std::size_t i) {
        if (i + 1 == tr.size()) return ChainPoint{tr.size() - 2, Rat(1)};
        return ChainPoint{i, Rat(0)};
    }

    static ChainPoint make(const Terrain& tr, std::size_t edge, Rat t) {
        if (edge + 2 > tr.size()) throw std::out_of_range("chain point edge out of range");
        if (t.sign() < 0 || t > Rat(1)) throw std::out_of_range("chain point t outside [0,1]");
        ChainPoint p{edge, std::move(t)};
        p.canonicalize(tr);
        return p;
    }

    void canonicalize(const Terrain& tr) {
        if (t == Rat(1) && edge + 2 < tr.size()) { ++edge; t = Rat(0); }
    }

    bool is_vertex() const { return t.is_zero() || t == Rat(1); }

    std::optional<std::size_t> vertex_index(const Terrain&) const {
        if (t.is_zero()) return edge;
        if (t == Rat(1)) return edge + 1;
        return std::nullopt;
    }

    Point position(const Terrain& tr) const {
        const Point& a = tr[edge];
        const Point& b = tr[edge + 1];
        return Point{a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
    }

    friend bool operator==(const ChainPoint& a, const ChainPoint& b) {
        return a.edge == b.edge && a.t == b.t;
    }
    friend bool operator<(const ChainPoint& a, const ChainPoint& b) {
        if (a.edge != b.edge) return a.edge < b.edge;
        return a.t < b.t;
    }
    friend bool operator<=(const ChainPoint& a, const ChainPoint& b) {
        return a == b || a < b;
    }
};

} // namespace tc
