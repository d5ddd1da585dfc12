#include "doctest.h"
#include "lt/building.hpp"

#include <functional>
#include <random>
#include <set>

using namespace lt;

namespace {

// back substitution on an upper triangular basis
std::vector<rat> solve_upper(const qmatrix& b, const std::vector<rat>& v) {
    const int n = b.rows;
    std::vector<rat> x(n);
    for (int i = n - 1; i >= 0; --i) {
        rat s = v[i];
        for (int j = i + 1; j < n; ++j) s -= b(i, j) * x[j];
        x[i] = s / b(i, i);
    }
    return x;
}

bool p_integral(const rat& x, long p) { return mpz_divisible_ui_p(x.get_den().get_mpz_t(), p) == 0; }

bool member(const lattice& L, const std::vector<rat>& v) {
    for (auto& x : solve_upper(L.basis(), v))
        if (!p_integral(x, L.p())) return false;
    return true;
}

// the same lattice iff each basis lies in the other
bool same_lattice(const lattice& a, const lattice& b) {
    for (int j = 0; j < a.n(); ++j)
        if (!member(b, a.basis().column(j)) || !member(a, b.basis().column(j))) return false;
    return true;
}

qmatrix random_unimodular(int n, long p, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-4, 4);
    for (;;) {
        qmatrix u(n, n);
        for (auto& x : u.a) x = d(rng);
        try {
            auto inv = u.inverse();
            bool ok = true;
            for (auto& x : inv.a) ok = ok && p_integral(x, p);
            if (ok) return u;
        } catch (const std::domain_error&) {
        }
    }
}

qmatrix random_invertible(int n, long p, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-3, 3), e(-1, 1);
    for (;;) {
        qmatrix g(n, n);
        for (auto& x : g.a) {
            x = d(rng);
            int k = e(rng);
            if (k > 0) x *= p;
            if (k < 0) x /= p;
        }
        try {
            g.inverse();
            return g;
        } catch (const std::domain_error&) {
        }
    }
}

// brute-force count of k-dimensional subspaces: distinct spans of k-tuples
size_t brute_subspace_count(int n, long p, int k) {
    std::vector<fvec> all;
    long total = 1;
    for (int i = 0; i < n; ++i) total *= p;
    for (long c = 0; c < total; ++c) {
        fvec v(n);
        long t = c;
        for (int i = 0; i < n; ++i) {
            v[i] = t % p;
            t /= p;
        }
        all.push_back(v);
    }
    std::set<std::vector<fvec>> seen;
    std::vector<size_t> idx(k, 0);
    std::function<void(int)> rec = [&](int d) {
        if (d == k) {
            std::vector<fvec> vs;
            for (auto i : idx) vs.push_back(all[i]);
            auto s = span(n, p, vs);
            if (s.dim() == k) seen.insert(s.rows);
            return;
        }
        for (size_t i = 0; i < all.size(); ++i) {
            idx[d] = i;
            rec(d + 1);
        }
    };
    rec(0);
    return seen.size();
}

std::set<building_vertex> targets(const std::vector<building_edge>& es) {
    std::set<building_vertex> s;
    for (auto& e : es) s.insert(e.target);
    return s;
}

}  // namespace

TEST_CASE("subspace enumeration matches gaussian binomials") {
    for (int n = 1; n <= 3; ++n)
        for (long p : {2L, 3L})
            for (int k = 0; k <= n; ++k) {
                auto subs = all_subspaces(n, p, k);
                CHECK(static_cast<long>(subs.size()) == gaussian_binomial(n, k, p));
                if (n <= 3 && p == 2) CHECK(subs.size() == brute_subspace_count(n, p, k));
                std::set<std::vector<fvec>> uniq;
                for (auto& s : subs) uniq.insert(s.rows);
                CHECK(uniq.size() == subs.size());
            }
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(4, 2, 3) == 130);
    CHECK(all_subspaces(4, 2, 2).size() == 35);
    CHECK(all_flags(3, 2, {1, 2}).size() == 21);
}

TEST_CASE("hermite form is canonical") {
    std::mt19937 rng(7);
    for (long p : {2L, 3L, 5L})
        for (int n = 1; n <= 4; ++n)
            for (int trial = 0; trial < 20; ++trial) {
                qmatrix b = random_invertible(n, p, rng);
                lattice L = lattice::from_matrix(p, b);
                lattice M = lattice::from_matrix(p, b * random_unimodular(n, p, rng));
                CHECK(L == M);
                for (int j = 0; j < n; ++j) CHECK(member(L, b.column(j)));
                CHECK(same_lattice(L, lattice::from_matrix(p, b)));
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        if (i > j) CHECK(L.basis()(i, j) == 0);
                        if (i < j) {
                            CHECK(L.basis()(i, j) >= 0);
                            CHECK(L.basis()(i, j) < L.basis()(i, i));
                        }
                    }
            }
}

TEST_CASE("canonicalize") {
    auto s = standard_vertex(2, 3);
    CHECK(canonicalize(3, qmatrix::identity(2), 0) == s);
    CHECK(canonicalize(3, qmatrix::identity(2) * rat(3), -2) == s);
    auto b = qmatrix::from_rows({{1, 0}, {0, 3}});
    auto v = canonicalize(3, b * rat(3), 0);
    CHECK(v.lat.det_valuation() == 1);
    CHECK(v.lat.pivot_exponents() == std::vector<long>{0, 1});
    CHECK(v.h == 2);
    CHECK_THROWS_AS(canonicalize(3, qmatrix::from_rows({{1, 2}, {2, 4}}), 0), std::domain_error);
}

TEST_CASE("neighbor counts") {
    auto a = standard_vertex(2, 3);
    CHECK(edges_into(a).size() == 4);
    CHECK(targets(edges_into(a)).size() == 4);
    auto b = standard_vertex(3, 2);
    auto e = edges_into(b);
    CHECK(e.size() == 14);
    CHECK(targets(e).size() == 14);
    int one = 0, two = 0;
    for (auto& x : e) (x.index == 1 ? one : two)++;
    CHECK(one == 7);
    CHECK(two == 7);
}

TEST_CASE("edge enumerations are mutually inverse") {
    for (auto [n, p] : std::vector<std::pair<int, long>>{{2, 3}, {3, 2}, {2, 2}})
        for (auto& a : ball(standard_vertex(n, p), 1)) {
            for (auto& e : edges_into(a)) {
                bool found = false;
                for (auto& f : edges_from(e.target))
                    if (f.target == a) {
                        found = true;
                        CHECK(f.index == e.index);
                    }
                CHECK(found);
                CHECK(e.target.h + e.target.lat.det_valuation() == a.h + a.lat.det_valuation());
            }
            for (auto& e : edges_from(a)) CHECK(targets(edges_into(e.target)).count(a));
            if (n == 2) {
                // both orientations exist
                for (auto& e : edges_into(a)) CHECK(targets(edges_into(e.target)).count(a));
            }
        }
}

TEST_CASE("ball sizes on the tree") {
    for (long p : {2L, 3L})
        for (int r = 0; r <= 3; ++r) {
            long expect = 1, sphere = p + 1;
            for (int k = 1; k <= r; ++k) {
                expect += sphere;
                sphere *= p;
            }
            CHECK(static_cast<long>(ball(standard_vertex(2, p), r).size()) == expect);
        }
    auto b = ball(standard_vertex(2, 3), 2);
    CHECK(b.size() == 17);
    std::set<std::string> classes;
    for (auto& v : b) classes.insert(v.lat.key());
    CHECK(classes.size() == 17);
    CHECK(ball(standard_vertex(3, 2), 0).size() == 1);
    CHECK(ball(standard_vertex(3, 2), 1).size() == 15);
    CHECK_THROWS_AS(ball(standard_vertex(2, 3), -1), std::invalid_argument);
}

TEST_CASE("group action") {
    auto s = standard_vertex(2, 3);
    CHECK(act(qmatrix::identity(2), 0, s) == s);
    CHECK(act(qmatrix::identity(2) * rat(3), 2, s) == s);
    auto v = act(qmatrix::diag({1, 3}), 0, s);
    // Z + 3^{-1} Z normalized to 3Z + Z
    CHECK(v.lat.pivot_exponents() == std::vector<long>{1, 0});
    CHECK(v.h == -2);
    CHECK(same_lattice(v.lat, lattice::from_matrix(3, qmatrix::diag({3, 1}))));
    CHECK_THROWS_AS(act(qmatrix(2, 2), 0, s), std::domain_error);

    std::mt19937 rng(11);
    for (auto [n, p] : std::vector<std::pair<int, long>>{{2, 3}, {3, 2}})
        for (int t = 0; t < 15; ++t) {
            auto g1 = random_invertible(n, p, rng), g2 = random_invertible(n, p, rng);
            auto a = act(random_invertible(n, p, rng), t, standard_vertex(n, p));
            CHECK(act(g2, 2, act(g1, 1, a)) == act(g1 * g2, 3, a));
            // edges map to edges
            std::set<building_vertex> moved;
            for (auto& e : edges_into(a)) moved.insert(act(g1, 5, e.target));
            CHECK(moved == targets(edges_into(act(g1, 5, a))));
            CHECK(descent(act(g1, 0, a)) == act(g1, 0, descent(a)));
        }
}

TEST_CASE("descent") {
    auto s = standard_vertex(3, 2);
    auto d = descent(s);
    CHECK(d.lat == s.lat);
    CHECK(d.h == -1);
    for (auto& a : ball(s, 1)) {
        auto x = a;
        for (int i = 0; i < 3; ++i) x = descent(x);
        CHECK(x == act(qmatrix::identity(3) * rat(2), 0, a));
        CHECK(x.lat == a.lat);
        CHECK(x.h == a.h - 3);
        CHECK_FALSE(x == a);
    }
}

TEST_CASE("oriented simplices and rotation") {
    auto s = standard_vertex(3, 2);
    int count = 0;
    for (auto& fl : all_flags(3, 2, {1, 2})) {
        auto simp = oriented_simplex::from_flag(s, fl);
        CHECK(simp.type() == std::vector<int>{0, 1, 2});
        CHECK(simp.flag() == fl);
        auto vs = simp.vertices();
        for (int j = 0; j + 1 < 3; ++j) CHECK(targets(edges_from(vs[j])).count(vs[j + 1]));
        auto r1 = simp.rotate(1);
        CHECK(r1.vertices().front() == vs[1]);
        CHECK(r1.vertices().back() == vs[0]);
        CHECK(r1.rotate(1) == simp.rotate(2));
        CHECK(r1.rotate(1).rotate(1) == simp);
        CHECK(simp.rotate(0) == simp);
        ++count;
    }
    CHECK(count == 21);

    // the opposite height sign does not close up
    for (auto& fl : all_flags(3, 2, {1, 2})) {
        auto simp = oriented_simplex::from_flag(s, fl, -1);
        CHECK_FALSE(simp.rotate(1).rotate(1).rotate(1) == simp);
    }
    for (auto& fl : all_flags(2, 3, {1})) {
        auto e = oriented_simplex::from_flag(standard_vertex(2, 3), fl);
        CHECK(e.rotate(1).rotate(1) == e);
        CHECK_FALSE(oriented_simplex::from_flag(standard_vertex(2, 3), fl, -1).rotate(1).rotate(1) ==
                    oriented_simplex::from_flag(standard_vertex(2, 3), fl, -1));
    }
    CHECK_THROWS_AS(oriented_simplex::from_chain({s.lat, s.lat}, 0), std::invalid_argument);
    CHECK_THROWS_AS(oriented_simplex::from_chain({s.lat, s.lat.scaled(-1)}, 0), std::invalid_argument);
}

TEST_CASE("exports") {
    auto b = ball(standard_vertex(2, 3), 1);
    auto j = ball_json(b);
    CHECK(j["vertices"].size() == 5);
    CHECK(j["edges"].size() == 8);
    auto dot = ball_dot(b);
    CHECK(dot.find("digraph") == 0);
}
