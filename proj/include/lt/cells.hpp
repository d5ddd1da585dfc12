#pragma once

#include "lt/building.hpp"
#include "lt/hecke.hpp"
#include "lt/newton_polygon.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace lt {

// cell D_{a,K} at principal congruence level K = Id + p^m End(Lambda)
struct cell {
    building_vertex vertex;
    int level = 1;
    // points satisfy Newt(H[pi]) >= constraint (Gross-Hopkins bound)
    newton_polygon constraint;

    nlohmann::json to_json() const;
};

cell make_cell(const building_vertex& a, int level);

// boundary stratum d_{i,E}; E is in p^{-1}Lambda/Lambda, coordinates in the basis p^{-1} b_j
struct boundary_component {
    cell c;
    int i = 0;
    subspace E;

    bool operator==(const boundary_component& o) const {
        return c.vertex == o.c.vertex && c.level == o.c.level && i == o.i && E == o.E;
    }
    std::string key() const { return c.vertex.key() + "|" + E.str(); }
    nlohmann::json to_json() const;
};

// one component per i-dimensional subspace; requires 1 <= i <= n-1 and level >= 1
std::vector<boundary_component> boundary_components(const cell& c, int i);
// components indexed by flags of the given type
std::vector<std::vector<boundary_component>> boundary_flags(const cell& c, const std::vector<int>& type);

// does Id + p^m End(L) lie in Id + p End(M)?
bool level_contained(const lattice& L, int m, const lattice& M);

// d_{i,E} D_{[Lambda,M]} -> d_{n-i,(p^{-1}Lambda/Lambda)/E} D_{[p^{-1}(E), Pi^{s i} M]}
// throws std::domain_error when the level is not contained in both stabilizer conditions
boundary_component glue_edge(const boundary_component& b, int sign = EDGE_HEIGHT_SIGN);
// polygon transform along the gluing; requires poly on the boundary stratum i
newton_polygon glue_polygon(const boundary_component& b, const newton_polygon& poly);

struct glued_edge {
    size_t source = 0, target = 0;  // indices into X0
    boundary_component from, to;
    nlohmann::json to_json() const;
};

struct cell_complex {
    std::vector<cell> X0;
    std::vector<glued_edge> X1;
    std::vector<boundary_component> dangling;  // partner cell outside the vertex set
    long level_blocked = 0;                    // components whose gluing the level forbids

    long index_of(const building_vertex& a) const;  // -1 if absent
    std::vector<std::pair<size_t, size_t>> face_maps() const;
    nlohmann::json to_json() const;
    std::string to_dot() const;
};

// each vertex is lifted to heights h, h+1, ..., h+lift_heights-1
cell_complex assemble_complex(const std::vector<building_vertex>& A, int level, int lift_heights = 1);

// hook applied to the intermediate relabeling (identity for a faithful check)
using relabel_fn = std::function<subspace(const subspace&)>;

// E2 inside E1 inside p^{-1}Lambda_0/Lambda_0: gluing along E2 then along E1/E2 equals gluing along E1
bool cocycle_check(const cell_complex& cx, const building_vertex& a0, const subspace& E2, const subspace& E1,
                   const relabel_fn& relabel = nullptr);
bool cocycle_check(const cell_complex& cx, const oriented_simplex& triangle, const relabel_fn& relabel = nullptr);
// oriented 2-simplices with all vertices in the complex
std::vector<oriented_simplex> triangles_in(const cell_complex& cx);

struct generator {
    long x_exp = 0;
    long pi_exp = 0;
};

// x^e / pi^k generating the integral functions on v(x) >= 1 - i/n
std::vector<generator> integral_generators(int n, int i);
// valuation >= 0 on the polytope and saturation inside the box e <= box
bool generators_valid(int n, int i, const std::vector<generator>& gens, long box);

struct constraint_model {
    int n = 0;
    long q = 0;
    std::vector<rat> alphas;
    std::vector<std::string> relations;  // x_i^{b_i} - pi^{a_i} T_i
    nlohmann::json to_json() const;
};

// throws std::invalid_argument unless 0 < alpha_i < 1 and the polygon through (1,1), (q^i, alpha_i), (q^n, 0) is convex
constraint_model make_constraint_model(int n, long q, const std::vector<rat>& alphas);

// n = 2: orbits of the boundary components (lines of F_p^2) under Id + p^l End(Lambda)
std::vector<std::vector<subspace>> crushed_orbits(long p, int l);

}  // namespace lt
