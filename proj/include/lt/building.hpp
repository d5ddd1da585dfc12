#pragma once

#include "lt/fq_subspace.hpp"
#include "lt/lattice.hpp"

#include <set>
#include <string>
#include <vector>

#include "json.hpp"

namespace lt {

// height shift along an edge Lambda -> Lambda' (Lambda inside Lambda' of F_q-index i):
// h' = h + EDGE_HEIGHT_SIGN * i
inline constexpr int EDGE_HEIGHT_SIGN = +1;

// class [Lambda, Pi^h O_D] with det-valuation of Lambda in {0, ..., n-1}
struct building_vertex {
    lattice lat;
    long h = 0;

    int n() const { return lat.n(); }
    long p() const { return lat.p(); }
    bool operator==(const building_vertex& o) const { return h == o.h && lat == o.lat; }
    bool operator<(const building_vertex& o) const {
        if (h != o.h) return h < o.h;
        return lat < o.lat;
    }
    std::string key() const { return lat.key() + "h" + std::to_string(h); }
    std::string label() const;
    nlohmann::json to_json() const;
};

// applies (Lambda, h) ~ (p Lambda, h - n)
building_vertex canonicalize(const lattice& lat, long h);
// basis columns; throws std::domain_error if singular
building_vertex canonicalize(long p, const qmatrix& basis, long h);
building_vertex standard_vertex(int n, long p, long h = 0);

struct building_edge {
    building_vertex target;
    int index = 0;    // F_q-dimension of the bigger lattice modulo the smaller one
    subspace label;   // subspace of the source's quotient that determines the edge
};

// a -> a' with Lambda < Lambda' < p^{-1} Lambda: Lambda' = Lambda + p^{-1}(E), E in p^{-1}Lambda/Lambda
std::vector<building_edge> edges_from(const building_vertex& a, int sign = EDGE_HEIGHT_SIGN);
// a' -> a with p Lambda < Lambda' < Lambda: Lambda' = p Lambda + lift(E), E in Lambda/p Lambda
std::vector<building_edge> edges_into(const building_vertex& a, int sign = EDGE_HEIGHT_SIGN);
// vertex reached from a along E (coordinates in the basis p^{-1} b_j of p^{-1}Lambda/Lambda)
building_vertex edge_target(const building_vertex& a, const subspace& E, int sign = EDGE_HEIGHT_SIGN);
// lattice p^{-1}(E) before normalization
lattice lift_subspace(const lattice& L, const subspace& E);

// (g, d) . [Lambda, M] = [g^{-1} Lambda, Pi^d M]
building_vertex act(const qmatrix& g, long d_val, const building_vertex& a);
// h -> h - 1
building_vertex descent(const building_vertex& a);

std::vector<building_vertex> ball(const building_vertex& a, int r);
std::string ball_dot(const std::vector<building_vertex>& vs);
nlohmann::json ball_json(const std::vector<building_vertex>& vs);

// chain Lambda_0 < Lambda_1 < ... < Lambda_r < p^{-1} Lambda_0 with base height h_0
class oriented_simplex {
public:
    static oriented_simplex from_flag(const building_vertex& a0, const std::vector<subspace>& flag,
                                      int sign = EDGE_HEIGHT_SIGN);
    static oriented_simplex from_chain(const std::vector<lattice>& chain, long h0, int sign = EDGE_HEIGHT_SIGN);

    int length() const { return static_cast<int>(chain_.size()) - 1; }
    const std::vector<lattice>& chain() const { return chain_; }
    long base_height() const { return h0_; }
    int sign() const { return sign_; }
    long height(int j) const;
    std::vector<building_vertex> vertices() const;
    std::vector<int> type() const;  // dim Lambda_j / Lambda_0
    // flag of the chain inside p^{-1}Lambda_0/Lambda_0 in the basis p^{-1} b_j
    std::vector<subspace> flag() const;

    // a_i -> ... -> a_r -> a_0 -> ... -> a_{i-1}
    oriented_simplex rotate(int i) const;
    bool operator==(const oriented_simplex& o) const { return vertices() == o.vertices(); }
    nlohmann::json to_json() const;

private:
    std::vector<lattice> chain_;
    long h0_ = 0;
    int sign_ = EDGE_HEIGHT_SIGN;
};

// F_p coordinates of the class of v in p^{-1}L/L (v in p^{-1}L), in the basis p^{-1} b_j
fvec quotient_coords(const lattice& L, const std::vector<rat>& v);

}  // namespace lt
