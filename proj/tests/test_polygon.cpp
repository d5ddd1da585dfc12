#include "doctest.h"
#include "grid.hpp"
#include "oracles.hpp"
#include "lt/newton_polygon.hpp"

using namespace lt;

namespace {

std::vector<rat> R(std::initializer_list<rat> l) { return l; }

}  // namespace

TEST_CASE("polygon examples") {
    CHECK(polygon_from_vals(2, 3, {val::infinity()}).slopes == R({frac(1, 8), frac(1, 8)}));
    CHECK(polygon_from_vals(2, 3, {val(1, 2)}).slopes == R({frac(1, 4), frac(1, 12)}));
    auto p = polygon_from_vals(3, 2, {val(2, 3), val(1, 2)});
    CHECK(p.slopes == R({frac(1, 3), frac(1, 9), frac(1, 9)}));
    CHECK(lambda_extremes(2, 3, {val::infinity()}) == std::make_pair(frac(1, 8), frac(1, 8)));
    CHECK(lambda_extremes(2, 3, {val(1, 2)}) == std::make_pair(frac(1, 4), frac(1, 12)));
    CHECK(lambda_extremes(3, 2, {val(2, 3), val(1, 2)}) == std::make_pair(frac(1, 3), frac(1, 9)));
    CHECK_THROWS_AS(polygon_from_vals(2, 3, {val(-1)}), std::invalid_argument);
    CHECK_THROWS_AS(polygon_from_vals(2, 3, {}), std::invalid_argument);
}

TEST_CASE("domain membership and boundary") {
    auto a = polygon_from_vals(2, 3, {val(1, 2)});
    CHECK(in_gross_hopkins(a));
    CHECK(boundary_indices(a) == std::set<int>{1});
    auto b = polygon_from_vals(3, 2, {val::infinity(), val::infinity()});
    CHECK(in_gross_hopkins(b));
    CHECK(boundary_indices(b).empty());
    auto c = polygon_from_vals(3, 2, {val(2, 3), val(1, 2)});
    CHECK(in_gross_hopkins(c));
    CHECK(boundary_indices(c) == std::set<int>{1});
    CHECK(in_H(polygon_from_vals(2, 3, {val(3, 5)})));
    CHECK_FALSE(in_H(polygon_from_vals(2, 3, {val(1, 20)})));
    CHECK_FALSE(in_gross_hopkins(2, 3, {val(1, 20)}));
}

TEST_CASE("cm polygons") {
    CHECK(cm_polygon(2, 3, 2).slopes == R({frac(1, 4), frac(1, 12)}));
    CHECK(cm_polygon(2, 3, 1).slopes == R({frac(1, 8), frac(1, 8)}));
    CHECK(cm_polygon(4, 2, 2).slopes == R({frac(1, 6), frac(1, 6), frac(1, 24), frac(1, 24)}));
    CHECK_THROWS_AS(cm_polygon(4, 2, 3), std::invalid_argument);
    for (int n = 2; n <= 5; ++n)
        for (long q : {2L, 3L, 4L}) {
            std::vector<val> th;
            for (int i = 1; i < n; ++i) th.push_back(val(frac(n - i, n)));
            auto full = cm_polygon(n, q, n);
            CHECK(full == polygon_from_vals(n, q, th));
            CHECK(full == reference_polygon(n, q));
            std::set<int> all;
            for (int i = 1; i < n; ++i) all.insert(i);
            CHECK(boundary_indices(full) == all);
            CHECK(cm_polygon(n, q, 1).slopes.front() == frac(1, ipow(q, n) - 1));
        }
}

TEST_CASE("torsion valuations") {
    auto p = polygon_from_vals(2, 3, {val(3, 5)});
    auto t = torsion_valuations(p, 2);
    val_multiset want{{frac(1, 5), 2}, {frac(1, 10), 6}, {frac(1, 45), 18}, {frac(1, 90), 54}};
    CHECK(t == want);
    CHECK(multiset_count(t) == 80);
    CHECK(torsion_valuations(p, 1) == level_one_values(p));
    CHECK(torsion_valuations(p, 0).empty());
    CHECK_THROWS_AS(torsion_valuations(polygon_from_vals(2, 3, {val(1, 20)}), 1), std::domain_error);
}

TEST_CASE("hull and closed-form extremes agree with a brute-force envelope") {
    for (int n = 2; n <= 3; ++n)
        for (long q : {2L, 3L}) {
            std::vector<val> pool{val::infinity()};
            for (auto& r : testgrid::rationals(6, rat(3, 2))) pool.push_back(val(r));
            testgrid::for_each_vals(n - 1, pool, [&](const std::vector<val>& vals) {
                for (auto& v : vals)
                    if (v == val(0)) return;
                auto p = polygon_from_vals(n, q, vals);
                CHECK(p.slopes == oracle::brute_slopes(n, q, vals));
                auto ex = lambda_extremes(n, q, vals);
                CHECK(ex.first == p.slopes.front());
                CHECK(ex.second == p.slopes.back());
                if (in_gross_hopkins(p)) CHECK(in_H(p));
                if (in_H(p)) {
                    auto one = torsion_valuations(p, 1), two = torsion_valuations(p, 2);
                    // level-2 values outside level 1 all lie below level 1
                    rat min1 = one.back().first;
                    for (auto& [v, m] : two) {
                        bool is_level1 = false;
                        for (auto& [w, c] : one) is_level1 = is_level1 || (w == v);
                        if (!is_level1) CHECK(v < min1);
                    }
                    CHECK(multiset_count(two) == ipow(q, 2 * n) - 1);
                }
            });
        }
}

TEST_CASE("multiset round trip and validation") {
    auto p = polygon_from_vals(3, 2, {val(2, 3), val(1, 2)});
    CHECK(polygon_from_multiset(3, 2, level_one_values(p)) == p);
    CHECK_THROWS_AS(polygon_from_multiset(3, 2, {{frac(1, 3), 2}, {frac(1, 9), 5}}), std::invalid_argument);
    CHECK_THROWS_AS(polygon_from_slopes(2, 3, {frac(1, 12), frac(1, 4)}), std::invalid_argument);
    CHECK_THROWS_AS(polygon_from_slopes(2, 3, {frac(1, 4), frac(1, 4)}), std::invalid_argument);
}

TEST_CASE("rendering") {
    auto p = polygon_from_vals(2, 3, {val(1, 2)});
    auto svg = polygon_svg(p);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
    CHECK(polygon_ascii(p).find('*') != std::string::npos);
    auto j = p.to_json();
    CHECK(j["slopes"][0]["num"] == "1");
    CHECK(j["slopes"][0]["den"] == "4");
    CHECK(j["boundary"] == nlohmann::json::array({1}));
}
