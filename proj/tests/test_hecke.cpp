#include "doctest.h"
#include "grid.hpp"
#include "lt/hecke.hpp"
#include "oracles.hpp"

#include <random>

using namespace lt;

namespace {

std::vector<rat> R(std::initializer_list<rat> l) { return l; }

}  // namespace

TEST_CASE("quotient examples") {
    auto a = polygon_from_slopes(3, 2, {frac(1, 3), frac(1, 9), frac(1, 9)});
    auto s = canonical_quotient(a, 1);
    CHECK(s.image.slopes == R({frac(2, 9), frac(2, 9), frac(1, 12)}));
    CHECK(boundary_indices(s.image).count(2));

    auto b = polygon_from_vals(2, 3, {val(3, 10)});
    CHECK(b.slopes == R({frac(7, 20), frac(1, 20)}));
    auto sb = canonical_quotient(b, 1);
    CHECK(sb.image.vertex_vals[1] == frac(7, 10));

    auto c = polygon_from_vals(3, 2, {val(parse_rat("0.9")), val(parse_rat("0.05"))});
    CHECK(c.slopes == R({frac(19, 60), frac(19, 60), frac(1, 80)}));
    auto sc = canonical_quotient(c, 2);
    CHECK(sc.image.slopes == R({frac(4, 15), frac(4, 15), frac(1, 20)}));
    CHECK(oracle::mass(sc.image) == 1);
    CHECK(multiset_count(sc.image_values) == 7);

    auto d = polygon_from_vals(2, 3, {val(1, 2)});
    CHECK(canonical_quotient(d, 1).image == d);

    CHECK_THROWS_AS(canonical_quotient(polygon_from_vals(2, 3, {val::infinity()}), 1), collision_error);
    CHECK_THROWS_AS(canonical_quotient(d, 2), std::invalid_argument);
}

TEST_CASE("tied valuations are refused") {
    auto p = polygon_from_vals(3, 2, {val(5, 24), val(1, 16)});
    CHECK(p.slopes == R({frac(19, 24), frac(7, 96), frac(1, 64)}));
    CHECK_THROWS_AS(canonical_quotient(p, 2), collision_error);
}

TEST_CASE("kernel image values and bounds") {
    auto p = polygon_from_vals(3, 2, {val(2, 3), val(1, 2)});
    for (int i = 1; i <= 2; ++i) {
        std::vector<int> flags;
        for (int j = 1; j <= i; ++j) flags.push_back(j);
        auto rep = kernel_image_values(p, {i}, flags);
        val_multiset want;
        for (int j = 1; j <= i; ++j) want.push_back({rat(p.lambda(j) / ipow(2, 3 - i)), ipow(2, j) - ipow(2, j - 1)});
        for (auto& [v, m] : want) v.canonicalize();
        CHECK(rep.values == normalize_multiset(want));
        CHECK_FALSE(rep.impossible);
    }
    for (auto kt : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {2, 2}, {2, 1, 1}}) {
        std::vector<int> flags;
        for (int j = 1; j <= kt.back(); ++j) flags.push_back(j);
        auto rep = kernel_image_values(p, kt, flags);
        CHECK(rep.impossible);
        CHECK(rep.sum <= rep.upper_bound);
    }
    CHECK(kernel_image_values(p, {}, {}).values.empty());
    CHECK_THROWS_AS(kernel_image_values(p, {1, 2}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(kernel_image_values(p, {1}, {0}), std::invalid_argument);
}

TEST_CASE("admissible targets") {
    CHECK(admissible_targets(polygon_from_vals(3, 2, {val::infinity(), val::infinity()})).empty());
    CHECK(admissible_targets(polygon_from_vals(2, 3, {val(1, 2)})) == std::set<int>{1});
    auto p = polygon_from_vals(3, 2, {val(2, 3), val(1, 2)});
    CHECK(admissible_targets(p) == std::set<int>{1});
    CHECK(boundary_indices(canonical_quotient(p, 1).image).count(2));
    CHECK_THROWS_AS(admissible_targets(polygon_from_vals(2, 3, {val(1, 20)})), std::domain_error);
}

TEST_CASE("reduction into the domain") {
    auto r = reduce_to_domain(polygon_from_vals(2, 3, {val(3, 10)}));
    CHECK(r.steps == std::vector<int>{1});
    CHECK(r.final_polygon.vertex_vals[1] == frac(7, 10));
    CHECK(reduce_to_domain(polygon_from_vals(2, 3, {val(1, 2)})).steps.empty());
    auto c = reduce_to_domain(polygon_from_vals(3, 2, {val(parse_rat("0.9")), val(parse_rat("0.05"))}));
    CHECK(c.steps == std::vector<int>{2, 2});
    CHECK(c.final_polygon.vertex_vals[1] == frac(4, 5));
    CHECK(c.final_polygon.vertex_vals[2] == frac(8, 15));
    CHECK(in_gross_hopkins(c.final_polygon));
}

TEST_CASE("boundary closed form, exchange and involution on a grid") {
    for (int n = 2; n <= 4; ++n)
        for (long q : {2L, 3L}) {
            std::vector<val> pool{val::infinity()};
            for (auto& x : testgrid::rationals(n == 4 ? 6 : 12)) pool.push_back(val(x));
            testgrid::for_each_vals(n - 1, pool, [&](const std::vector<val>& vals) {
                for (auto& v : vals)
                    if (v == val(0)) return;
                auto p = polygon_from_vals(n, q, vals);
                if (!in_gross_hopkins(p)) return;
                for (int i : boundary_indices(p)) {
                    auto st = canonical_quotient(p, i);
                    CHECK(st.image_values == oracle::boundary_closed_form(p, i));
                    CHECK(in_gross_hopkins(st.image));
                    CHECK(boundary_indices(st.image).count(n - i));
                    CHECK(canonical_quotient(st.image, n - i).image == p);
                }
            });
        }
}

TEST_CASE("prop42 certificate") {
    auto p = polygon_from_vals(2, 3, {val(3, 5)});
    auto c = prop42_distinctness(p, {1, 1});
    CHECK(c.gap == 2);
    CHECK(c.holds);
    auto p4 = polygon_from_vals(4, 2, {val(3, 4), val(1, 2), val(1, 4)});
    auto c4 = prop42_distinctness(p4, {3, 1});
    CHECK(c4.gap == 4);
    CHECK(c4.holds);
    CHECK_THROWS_AS(prop42_distinctness(p, {1}), std::invalid_argument);
    CHECK_THROWS_AS(prop42_distinctness(polygon_from_vals(2, 3, {val(1, 20)}), {1, 1}), std::domain_error);
}
