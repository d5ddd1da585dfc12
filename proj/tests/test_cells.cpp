#include "doctest.h"
#include "grid.hpp"
#include "lt/cells.hpp"

#include <random>
#include <set>

using namespace lt;

namespace {

std::set<building_vertex> targets_from(const building_vertex& a) {
    std::set<building_vertex> s;
    for (auto& e : edges_from(a)) s.insert(e.target);
    return s;
}

// lattice generated by the standard basis and p^{-1} times the rows of E
lattice naive_lift(int n, long p, const subspace& E) {
    std::vector<std::vector<rat>> gens;
    for (int j = 0; j < n; ++j) {
        std::vector<rat> e(n, rat(0));
        e[j] = 1;
        gens.push_back(e);
    }
    for (auto& r : E.rows) {
        std::vector<rat> v;
        for (long x : r) v.push_back(rat(x) / p);
        gens.push_back(v);
    }
    return lattice::from_generators(n, p, gens);
}

// boundary polygons of the Gross-Hopkins domain on a value grid
std::vector<newton_polygon> boundary_samples(int n, long q, int i) {
    std::vector<newton_polygon> out;
    std::vector<val> pool;
    for (auto& r : testgrid::rationals(6))
        if (r > 0) pool.push_back(val(r));
    testgrid::for_each_vals(n - 1, pool, [&](const std::vector<val>& v) {
        if (!in_gross_hopkins(n, q, v)) return;
        auto poly = polygon_from_vals(n, q, v);
        if (boundary_indices(poly).count(i)) out.push_back(poly);
    });
    return out;
}

}  // namespace

TEST_CASE("boundary component counts") {
    for (int n = 2; n <= 4; ++n)
        for (long q : {2L, 3L}) {
            auto c = make_cell(standard_vertex(n, q), 1);
            for (int i = 1; i < n; ++i) {
                auto bs = boundary_components(c, i);
                CHECK(static_cast<long>(bs.size()) == gaussian_binomial(n, i, q));
                std::set<std::string> keys;
                for (auto& b : bs) keys.insert(b.key());
                CHECK(keys.size() == bs.size());
            }
        }
    CHECK(boundary_components(make_cell(standard_vertex(2, 3), 1), 1).size() == 4);
    CHECK(boundary_components(make_cell(standard_vertex(3, 2), 1), 1).size() == 7);
    CHECK_THROWS_AS(boundary_components(make_cell(standard_vertex(3, 2), 1), 3), std::invalid_argument);
    CHECK_THROWS_AS(boundary_components(make_cell(standard_vertex(3, 2), 0), 1), std::invalid_argument);
    CHECK(boundary_flags(make_cell(standard_vertex(3, 2), 1), {1, 2}).size() == 21);
}

TEST_CASE("level condition for gluing") {
    auto s = standard_vertex(3, 2);
    for (auto& E : proper_subspaces(3, 2)) {
        auto L = lift_subspace(s.lat, E);
        CHECK_FALSE(level_contained(s.lat, 1, L));
        CHECK(level_contained(s.lat, 2, L));
        CHECK(level_contained(s.lat, 3, L));
        CHECK(level_contained(s.lat, 1, s.lat));
    }
    auto b = boundary_components(make_cell(s, 1), 1).front();
    CHECK_THROWS_AS(glue_edge(b), std::domain_error);
}

TEST_CASE("glue target on the tree") {
    auto s = standard_vertex(2, 3);
    for (auto& b : boundary_components(make_cell(s, 2), 1)) {
        auto g = glue_edge(b);
        CHECK(g.i == 1);
        CHECK(targets_from(s).count(g.c.vertex));
        CHECK(g.c.vertex == canonicalize(naive_lift(2, 3, b.E), 1));
    }
}

TEST_CASE("glue_edge is an involution") {
    for (auto [n, p] : std::vector<std::pair<int, long>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        int radius = (n == 3 && p == 3) ? 1 : 2;
        long checked = 0;
        for (auto& a : ball(standard_vertex(n, p), radius))
            for (int i = 1; i < n; ++i)
                for (auto& b : boundary_components(make_cell(a, 2), i)) {
                    auto g = glue_edge(b);
                    CHECK(g.i == n - i);
                    CHECK(g.E.dim() == n - i);
                    CHECK(glue_edge(g) == b);
                    ++checked;
                }
        CHECK(checked > 0);
    }
    // the opposite height sign is not involutive
    auto b = boundary_components(make_cell(standard_vertex(2, 3), 2), 1).front();
    CHECK_FALSE(glue_edge(glue_edge(b, -1), -1) == b);
}

TEST_CASE("gluing transforms polygons by the canonical quotient") {
    for (auto [n, q] : std::vector<std::pair<int, long>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}})
        for (int i = 1; i < n; ++i) {
            auto b = boundary_components(make_cell(standard_vertex(n, q), 2), i).front();
            auto g = glue_edge(b);
            auto samples = boundary_samples(n, q, i);
            CHECK(!samples.empty());
            for (auto& poly : samples) {
                newton_polygon img;
                try {
                    img = glue_polygon(b, poly);
                } catch (const collision_error&) {
                    continue;
                }
                CHECK(img == canonical_quotient(poly, i).image);
                CHECK(in_gross_hopkins(img));
                CHECK(boundary_indices(img).count(n - i));
                // back along the partner component: quotient by H[pi]
                CHECK(glue_polygon(g, img) == poly);
            }
        }
    auto b = boundary_components(make_cell(standard_vertex(2, 3), 2), 1).front();
    CHECK_THROWS_AS(glue_polygon(b, polygon_from_vals(2, 3, {val(frac(3, 4))})), std::invalid_argument);
}

TEST_CASE("complex assembly") {
    auto s = standard_vertex(2, 3);
    auto single = assemble_complex({s}, 2);
    CHECK(single.X0.size() == 1);
    CHECK(single.X1.empty());
    CHECK(single.dangling.size() == 4);

    auto b1 = ball(s, 1);
    auto cx = assemble_complex(b1, 2);
    CHECK(cx.X0.size() == 5);
    CHECK(cx.X1.size() == 4);
    CHECK(cx.dangling.size() == 12);
    auto lifted = assemble_complex(b1, 2, 2);
    CHECK(lifted.X0.size() == 10);
    CHECK(lifted.X1.size() == 8);
    for (auto [src, dst] : lifted.face_maps()) {
        CHECK(src < lifted.X0.size());
        CHECK(dst < lifted.X0.size());
    }
    for (auto& e : lifted.X1) {
        CHECK(glue_edge(e.from) == e.to);
        CHECK(glue_edge(e.to) == e.from);
    }
    auto blocked = assemble_complex(b1, 1);
    CHECK(blocked.X1.empty());
    CHECK(blocked.level_blocked == 20);
    auto j = cx.to_json();
    CHECK(j["counts"]["X1"] == 4);
    CHECK(cx.to_dot().find("graph cells") == 0);
}

TEST_CASE("complex assembly is equivariant") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-2, 2);
    for (auto [n, p] : std::vector<std::pair<int, long>>{{2, 3}, {3, 2}})
        for (int t = 0; t < 4; ++t) {
            qmatrix g(n, n);
            for (;;) {
                for (auto& x : g.a) x = d(rng);
                g(0, 0) += p;
                try {
                    g.inverse();
                    break;
                } catch (const std::domain_error&) {
                }
            }
            long dv = t;
            auto A = ball(standard_vertex(n, p), 1);
            std::vector<building_vertex> gA;
            for (auto& a : A) gA.push_back(act(g, dv, a));
            auto cx = assemble_complex(A, 2), gcx = assemble_complex(gA, 2);
            CHECK(cx.X0.size() == gcx.X0.size());
            CHECK(cx.X1.size() == gcx.X1.size());
            CHECK(cx.dangling.size() == gcx.dangling.size());
            std::set<std::pair<building_vertex, building_vertex>> moved, direct;
            for (auto& e : cx.X1) {
                auto u = act(g, dv, cx.X0[e.source].vertex), v = act(g, dv, cx.X0[e.target].vertex);
                moved.insert(std::minmax(u, v));
            }
            for (auto& e : gcx.X1) direct.insert(std::minmax(gcx.X0[e.source].vertex, gcx.X0[e.target].vertex));
            CHECK(moved == direct);
        }
}

TEST_CASE("cocycle condition") {
    auto s = standard_vertex(3, 2);
    auto cx = assemble_complex(ball(s, 2), 2);
    // all flags at the standard vertex
    int n_flags = 0;
    for (auto& fl : all_flags(3, 2, {1, 2})) {
        CHECK(cocycle_check(cx, s, fl[0], fl[1]));
        ++n_flags;
    }
    CHECK(n_flags == 21);
    // degenerate triangle
    auto E = all_subspaces(3, 2, 1).front();
    CHECK(cocycle_check(cx, s, E, E));
    // every oriented 2-simplex inside the ball
    auto tris = triangles_in(cx);
    CHECK(tris.size() > 21);
    for (auto& t : tris) CHECK(cocycle_check(cx, t));
    // corrupted relabeling
    relabel_fn corrupt = [](const subspace& G) {
        std::vector<fvec> rows = G.rows;
        for (auto& r : rows) std::rotate(r.begin(), r.begin() + 1, r.end());
        auto h = span(G.n, G.p, rows);
        if (h == G) {
            for (auto& r : rows) r[0] = (r[0] + 1) % G.p;
            h = span(G.n, G.p, rows);
        }
        return h;
    };
    int failures = 0;
    for (auto& t : tris)
        if (!cocycle_check(cx, t, corrupt)) ++failures;
    CHECK(failures == static_cast<int>(tris.size()));
    // missing vertex
    auto small = assemble_complex({s}, 2);
    CHECK_THROWS_AS(cocycle_check(small, s, all_flags(3, 2, {1, 2})[0][0], all_flags(3, 2, {1, 2})[0][1]),
                    std::invalid_argument);
}

TEST_CASE("cocycle condition, n = 3, q = 3") {
    auto s = standard_vertex(3, 3);
    auto cx = assemble_complex(ball(s, 2), 2);
    auto tris = triangles_in(cx);
    CHECK(tris.size() == 3432);
    for (auto& t : tris) CHECK(cocycle_check(cx, t));
}

TEST_CASE("integral generators") {
    auto pairs = [](const std::vector<generator>& g) {
        std::vector<std::pair<long, long>> v;
        for (auto& x : g) v.push_back({x.x_exp, x.pi_exp});
        return v;
    };
    using P = std::vector<std::pair<long, long>>;
    CHECK(pairs(integral_generators(2, 1)) == P{{2, 1}});
    CHECK(pairs(integral_generators(3, 1)) == P{{2, 1}, {3, 2}});
    CHECK(pairs(integral_generators(4, 2)) == P{{2, 1}});
    CHECK(pairs(integral_generators(3, 2)) == P{{3, 1}});
    for (int n = 2; n <= 7; ++n)
        for (int i = 1; i < n; ++i) {
            auto g = integral_generators(n, i);
            CHECK(generators_valid(n, i, g, 4 * n));
            if (g.size() > 1)
                for (size_t drop = 0; drop < g.size(); ++drop) {
                    auto h = g;
                    h.erase(h.begin() + static_cast<long>(drop));
                    // a dropped generator is needed unless it is a sum of the others
                    bool redundant = false;
                    for (size_t a = 0; a < h.size(); ++a)
                        for (size_t b = a; b < h.size(); ++b)
                            if (h[a].pi_exp + h[b].pi_exp == g[drop].pi_exp &&
                                h[a].x_exp + h[b].x_exp <= g[drop].x_exp)
                                redundant = true;
                    CHECK(generators_valid(n, i, h, 4 * n) == redundant);
                }
        }
    CHECK_FALSE(generators_valid(3, 1, {{1, 1}}, 12));
    CHECK_THROWS_AS(integral_generators(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(integral_generators(3, 0), std::invalid_argument);
}

TEST_CASE("constraint model") {
    auto m = make_constraint_model(2, 3, {frac(1, 2)});
    CHECK(m.relations == std::vector<std::string>{"x1^2 - pi^1 T1"});
    auto r = reference_polygon(3, 2);
    auto m3 = make_constraint_model(3, 2, {r.vertex_vals[1], r.vertex_vals[2]});
    CHECK(m3.relations.size() == 2);
    CHECK(m3.relations[0] == "x1^3 - pi^2 T1");
    CHECK_THROWS_AS(make_constraint_model(2, 3, {rat(1)}), std::invalid_argument);
    CHECK_THROWS_AS(make_constraint_model(3, 2, {frac(1, 10), frac(9, 10)}), std::invalid_argument);
    CHECK_THROWS_AS(make_constraint_model(3, 2, {frac(1, 2)}), std::invalid_argument);
}

TEST_CASE("crushed cells for n = 2") {
    for (long p : {2L, 3L, 5L}) {
        auto full = crushed_orbits(p, 0);
        CHECK(full.size() == 1);
        CHECK(static_cast<long>(full[0].size()) == p + 1);
        auto fine = crushed_orbits(p, 1);
        CHECK(static_cast<long>(fine.size()) == p + 1);
    }
}
