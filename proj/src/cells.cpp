#include "lt/cells.hpp"

#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lt {

namespace {

std::vector<rat> scale_vec(std::vector<rat> v, const rat& s) {
    for (auto& x : v) x *= s;
    return v;
}

rat ppow(long p, long e) {
    rat r = 1;
    for (long k = 0; k < (e < 0 ? -e : e); ++k) r *= p;
    return e >= 0 ? r : rat(1) / r;
}

// span in p^{-1}L/L of the columns of M scaled by s
subspace image_in(const lattice& L, const lattice& M, const rat& s) {
    std::vector<fvec> vs;
    for (int j = 0; j < M.n(); ++j) vs.push_back(quotient_coords(L, scale_vec(M.basis().column(j), s)));
    return span(L.n(), L.p(), vs);
}

// exponent t with canonicalize(raw).lat = p^t raw
long normalization_shift(const lattice& raw, const lattice& normalized) {
    return (normalized.det_valuation() - raw.det_valuation()) / raw.n();
}

const cell& cell_at(const cell_complex& cx, const building_vertex& a) {
    long k = cx.index_of(a);
    if (k < 0) throw std::invalid_argument("cocycle_check: vertex " + a.label() + " is not in the complex");
    return cx.X0[static_cast<size_t>(k)];
}

}  // namespace

nlohmann::json cell::to_json() const {
    return {{"vertex", vertex.to_json()}, {"level", level}, {"constraint", constraint.to_json()}};
}

cell make_cell(const building_vertex& a, int level) {
    if (level < 0) throw std::invalid_argument("cell: level must be >= 0");
    return {a, level, reference_polygon(a.n(), a.p())};
}

nlohmann::json boundary_component::to_json() const {
    return {{"vertex", c.vertex.to_json()}, {"level", c.level}, {"i", i}, {"E", E.rows}};
}

std::vector<boundary_component> boundary_components(const cell& c, int i) {
    const int n = c.vertex.n();
    if (c.level < 1) throw std::invalid_argument("boundary_components: level must be >= 1");
    if (i < 1 || i > n - 1) throw std::invalid_argument("boundary_components: need 1 <= i <= n-1");
    std::vector<boundary_component> out;
    for (auto& E : all_subspaces(n, c.vertex.p(), i)) out.push_back({c, i, E});
    return out;
}

std::vector<std::vector<boundary_component>> boundary_flags(const cell& c, const std::vector<int>& type) {
    if (c.level < 1) throw std::invalid_argument("boundary_flags: level must be >= 1");
    std::vector<std::vector<boundary_component>> out;
    for (auto& fl : all_flags(c.vertex.n(), c.vertex.p(), type)) {
        std::vector<boundary_component> row;
        for (auto& E : fl) row.push_back({c, E.dim(), E});
        out.push_back(row);
    }
    return out;
}

bool level_contained(const lattice& L, int m, const lattice& M) {
    const int n = L.n();
    const long p = L.p();
    const qmatrix& B = L.basis();
    qmatrix Bi = B.inverse();
    lattice pM = M.scaled(1);
    rat pm = ppow(p, m);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            // X = p^m B e_ab B^{-1}
            qmatrix X(n, n);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) X(r, c) = pm * B(r, a) * Bi(b, c);
            for (int j = 0; j < n; ++j) {
                auto col = M.basis().column(j);
                std::vector<rat> v(n, rat(0));
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c) v[r] += X(r, c) * col[c];
                if (!pM.contains_vector(v)) return false;
            }
        }
    return true;
}

boundary_component glue_edge(const boundary_component& b, int sign) {
    const auto& a = b.c.vertex;
    const int n = a.n();
    if (b.c.level < 1) throw std::invalid_argument("glue_edge: level must be >= 1");
    if (b.i < 1 || b.i > n - 1 || b.E.dim() != b.i) throw std::invalid_argument("glue_edge: malformed component");
    lattice raw = lift_subspace(a.lat, b.E);
    if (!level_contained(a.lat, b.c.level, raw))
        throw std::domain_error("glue_edge: level " + std::to_string(b.c.level) +
                                " is not contained in Id + p End(p^{-1}(E))");
    building_vertex t = canonicalize(raw, a.h + sign * b.i);
    long shift = normalization_shift(raw, t.lat);
    // (p^{-1}Lambda/Lambda)/E = p^{-1}Lambda/p^{-1}(E) inside p^{-1}Lambda'/Lambda'
    subspace F = image_in(t.lat, a.lat, ppow(a.p(), shift - 1));
    return {make_cell(t, b.c.level), n - b.i, F};
}

newton_polygon glue_polygon(const boundary_component& b, const newton_polygon& poly) {
    if (!in_gross_hopkins(poly) || !boundary_indices(poly).count(b.i))
        throw std::invalid_argument("glue_polygon: polygon is not on the boundary stratum " + std::to_string(b.i));
    return canonical_quotient(poly, b.i).image;
}

nlohmann::json glued_edge::to_json() const {
    return {{"source", source}, {"target", target}, {"from", from.to_json()}, {"to", to.to_json()}};
}

long cell_complex::index_of(const building_vertex& a) const {
    for (size_t k = 0; k < X0.size(); ++k)
        if (X0[k].vertex == a) return static_cast<long>(k);
    return -1;
}

std::vector<std::pair<size_t, size_t>> cell_complex::face_maps() const {
    std::vector<std::pair<size_t, size_t>> f;
    for (auto& e : X1) f.push_back({e.source, e.target});
    return f;
}

nlohmann::json cell_complex::to_json() const {
    nlohmann::json cells = nlohmann::json::array(), edges = nlohmann::json::array(), dang = nlohmann::json::array();
    for (auto& c : X0) cells.push_back(c.to_json());
    for (auto& e : X1) edges.push_back(e.to_json());
    for (auto& d : dangling) dang.push_back(d.to_json());
    return {{"X0", cells},         {"X1", edges}, {"dangling", dang}, {"level_blocked", level_blocked},
            {"counts", {{"X0", X0.size()}, {"X1", X1.size()}, {"dangling", dangling.size()}}},
            {"edge_height_sign", EDGE_HEIGHT_SIGN}};
}

std::string cell_complex::to_dot() const {
    std::ostringstream os;
    os << "graph cells {\n";
    for (size_t k = 0; k < X0.size(); ++k) os << "  c" << k << " [label=\"" << X0[k].vertex.label() << "\"];\n";
    for (auto& e : X1)
        os << "  c" << e.source << " -- c" << e.target << " [label=\"" << e.from.E.str() << "|" << e.to.E.str()
           << "\"];\n";
    os << "}\n";
    return os.str();
}

cell_complex assemble_complex(const std::vector<building_vertex>& A, int level, int lift_heights) {
    if (lift_heights < 1) throw std::invalid_argument("assemble_complex: lift_heights must be >= 1");
    cell_complex cx;
    std::map<building_vertex, size_t> idx;
    for (auto& a : A)
        for (int t = 0; t < lift_heights; ++t) {
            building_vertex v{a.lat, a.h + t};
            if (idx.count(v)) continue;
            idx[v] = cx.X0.size();
            cx.X0.push_back(make_cell(v, level));
        }
    std::set<std::pair<std::string, std::string>> seen;
    for (size_t k = 0; k < cx.X0.size(); ++k) {
        const int n = cx.X0[k].vertex.n();
        for (int i = 1; i < n; ++i)
            for (auto& b : boundary_components(cx.X0[k], i)) {
                boundary_component g;
                try {
                    g = glue_edge(b);
                } catch (const std::domain_error&) {
                    ++cx.level_blocked;
                    continue;
                }
                auto it = idx.find(g.c.vertex);
                if (it == idx.end()) {
                    cx.dangling.push_back(b);
                    continue;
                }
                std::string kb = b.key(), kg = g.key();
                if (!seen.insert(kb < kg ? std::pair{kb, kg} : std::pair{kg, kb}).second) continue;
                cx.X1.push_back({k, it->second, b, g});
            }
    }
    return cx;
}

bool cocycle_check(const cell_complex& cx, const building_vertex& a0, const subspace& E2, const subspace& E1,
                   const relabel_fn& relabel) {
    const cell& c0 = cell_at(cx, a0);
    if (!E1.contains(E2)) throw std::invalid_argument("cocycle_check: subspaces are not nested");
    if (E2.dim() < 1 || E1.dim() > a0.n() - 1) throw std::invalid_argument("cocycle_check: subspaces must be proper");
    if (E1 == E2) return true;
    const long p = a0.p();
    // first gluing along E2
    auto b1 = glue_edge({c0, E2.dim(), E2});
    const cell& c1 = cell_at(cx, b1.c.vertex);
    lattice raw1 = lift_subspace(a0.lat, E2), raw2 = lift_subspace(a0.lat, E1);
    long t1 = normalization_shift(raw1, c1.vertex.lat);
    // E1/E2 expressed at the intermediate vertex
    subspace G = image_in(c1.vertex.lat, raw2, ppow(p, t1));
    if (relabel) G = relabel(G);
    auto b2 = glue_edge({c1, G.dim(), G});
    // direct gluing along E1
    auto bd = glue_edge({c0, E1.dim(), E1});
    cell_at(cx, bd.c.vertex);
    if (!(b2.c.vertex == bd.c.vertex)) return false;
    // composite kernel pulled back to p^{-1}Lambda_0/Lambda_0
    lattice composite = lift_subspace(c1.vertex.lat, G);
    if (!(image_in(a0.lat, composite, ppow(p, -t1)) == E1)) return false;
    // component label: image of p^{-1}(first label) at the final vertex
    lattice first = lift_subspace(c1.vertex.lat, b1.E);
    long t2 = normalization_shift(composite, bd.c.vertex.lat);
    return image_in(bd.c.vertex.lat, first, ppow(p, t2)) == bd.E;
}

bool cocycle_check(const cell_complex& cx, const oriented_simplex& triangle, const relabel_fn& relabel) {
    if (triangle.length() != 2) throw std::invalid_argument("cocycle_check: need an oriented 2-simplex");
    auto vs = triangle.vertices();
    for (auto& v : vs) cell_at(cx, v);
    // scaling the chain keeps quotient coordinates, so the flag is valid at the normalized base
    auto f = triangle.flag();
    return cocycle_check(cx, vs[0], f[0], f[1], relabel);
}

std::vector<oriented_simplex> triangles_in(const cell_complex& cx) {
    std::vector<oriented_simplex> out;
    for (auto& c : cx.X0) {
        const int n = c.vertex.n();
        for (int d2 = 1; d2 < n; ++d2)
            for (int d1 = d2 + 1; d1 < n; ++d1)
                for (auto& fl : all_flags(n, c.vertex.p(), {d2, d1})) {
                    auto s = oriented_simplex::from_flag(c.vertex, fl);
                    bool inside = true;
                    for (auto& v : s.vertices()) inside = inside && cx.index_of(v) >= 0;
                    if (inside) out.push_back(s);
                }
    }
    return out;
}

std::vector<generator> integral_generators(int n, int i) {
    if (n < 2 || i < 1 || i > n - 1) throw std::invalid_argument("integral_generators: need 1 <= i <= n-1");
    const long g = std::gcd(n, i), K = (n - i) / g;
    std::vector<generator> out;
    for (long k = 1; k <= K; ++k) out.push_back({ceil_div(k * n, n - i), k});
    return out;
}

bool generators_valid(int n, int i, const std::vector<generator>& gens, long box) {
    for (auto& g : gens)
        if (g.x_exp * (n - i) < g.pi_exp * n) return false;
    auto kmax = [&](long e) { return e * (n - i) / n; };
    std::vector<std::vector<char>> reach(static_cast<size_t>(box + 1));
    for (long e = 0; e <= box; ++e) reach[e].assign(static_cast<size_t>(kmax(e) + 2), 0);
    for (long e = 0; e <= box; ++e)
        for (long k = kmax(e); k >= 0; --k) {
            bool r = (e == 0 && k == 0);
            if (!r && e > 0 && k <= kmax(e - 1)) r = reach[e - 1][k];
            if (!r && k + 1 <= kmax(e)) r = reach[e][k + 1];
            for (auto& g : gens) {
                if (r) break;
                long e2 = e - g.x_exp, k2 = k - g.pi_exp;
                if (e2 >= 0 && k2 >= 0 && k2 <= kmax(e2)) r = reach[e2][k2];
            }
            reach[e][k] = r;
            if (!r) return false;
        }
    return true;
}

nlohmann::json constraint_model::to_json() const {
    nlohmann::json a = nlohmann::json::array();
    for (auto& x : alphas) a.push_back(rat_str(x));
    return {{"n", n}, {"q", q}, {"alphas", a}, {"relations", relations}, {"normalized", true}};
}

constraint_model make_constraint_model(int n, long q, const std::vector<rat>& alphas) {
    if (n < 2 || q < 2) throw std::invalid_argument("constraint_model: need n >= 2 and q >= 2");
    if (static_cast<int>(alphas.size()) != n - 1) throw std::invalid_argument("constraint_model: need n-1 values");
    std::vector<std::pair<rat, rat>> pts{{rat(1), rat(1)}};
    for (int i = 1; i < n; ++i) {
        if (alphas[i - 1] <= 0 || alphas[i - 1] >= 1)
            throw std::invalid_argument("constraint_model: alpha_i must lie in (0, 1)");
        pts.push_back({rat(ipow(q, i)), alphas[i - 1]});
    }
    pts.push_back({rat(ipow(q, n)), rat(0)});
    for (size_t j = 1; j + 1 < pts.size(); ++j) {
        rat s0 = (pts[j].second - pts[j - 1].second) / (pts[j].first - pts[j - 1].first);
        rat s1 = (pts[j + 1].second - pts[j].second) / (pts[j + 1].first - pts[j].first);
        if (s1 < s0) throw std::invalid_argument("constraint_model: polygon is not convex");
    }
    constraint_model m{n, q, alphas, {}};
    for (int i = 1; i < n; ++i) {
        rat a = alphas[i - 1];
        m.relations.push_back("x" + std::to_string(i) + "^" + a.get_den().get_str() + " - pi^" +
                              a.get_num().get_str() + " T" + std::to_string(i));
    }
    return m;
}

std::vector<std::vector<subspace>> crushed_orbits(long p, int l) {
    if (l < 0) throw std::invalid_argument("crushed_orbits: level must be >= 0");
    auto lines = all_subspaces(2, p, 1);
    // reductions mod p of Id + p^l End(Lambda)
    std::vector<std::array<long, 4>> group;
    if (l == 0) {
        for (long a = 0; a < p; ++a)
            for (long b = 0; b < p; ++b)
                for (long c = 0; c < p; ++c)
                    for (long d = 0; d < p; ++d)
                        if (mod_p(a * d - b * c, p)) group.push_back({a, b, c, d});
    } else {
        group.push_back({1, 0, 0, 1});
    }
    std::vector<std::vector<subspace>> orbits;
    std::set<std::vector<fvec>> done;
    for (auto& L : lines) {
        if (done.count(L.rows)) continue;
        std::set<std::vector<fvec>> orb;
        for (auto& g : group) {
            const fvec& v = L.rows[0];
            fvec w{g[0] * v[0] + g[1] * v[1], g[2] * v[0] + g[3] * v[1]};
            orb.insert(span(2, p, {w}).rows);
        }
        std::vector<subspace> o;
        for (auto& r : orb) {
            done.insert(r);
            o.push_back(subspace{2, p, r});
        }
        orbits.push_back(o);
    }
    return orbits;
}

}  // namespace lt
