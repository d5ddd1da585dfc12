#include "lt/building.hpp"

#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lt {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// x in Z_(p) reduced mod p
long rat_mod_p(const rat& x, long p) {
    mpz_class den = x.get_den(), pp = p, inv;
    if (!mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t()))
        throw std::domain_error("quotient coordinates: entry not p-integral");
    mpz_class r = (x.get_num() * inv) % pp;
    if (r < 0) r += pp;
    return r.get_si();
}

std::vector<rat> combine(const lattice& L, const fvec& e, const rat& scale) {
    const int n = L.n();
    std::vector<rat> v(n, rat(0));
    for (int j = 0; j < n; ++j) {
        if (!e[j]) continue;
        for (int i = 0; i < n; ++i) v[i] += rat(e[j]) * L.basis()(i, j);
    }
    for (auto& x : v) x *= scale;
    return v;
}

std::vector<std::vector<rat>> columns(const lattice& L) {
    std::vector<std::vector<rat>> c;
    for (int j = 0; j < L.n(); ++j) c.push_back(L.basis().column(j));
    return c;
}

}  // namespace

std::string building_vertex::label() const {
    std::ostringstream os;
    os << "[";
    auto pe = lat.pivot_exponents();
    for (size_t i = 0; i < pe.size(); ++i) os << (i ? "," : "") << pe[i];
    for (int j = 0; j < n(); ++j)
        for (int i = 0; i < j; ++i)
            if (lat.basis()(i, j) != 0) os << ";" << i << j << "=" << rat_str(lat.basis()(i, j));
    os << "|h=" << h << "]";
    return os.str();
}

nlohmann::json building_vertex::to_json() const {
    auto j = lat.to_json();
    j["h"] = h;
    return j;
}

building_vertex canonicalize(const lattice& lat, long h) {
    const long n = lat.n();
    long k = floor_div(lat.det_valuation(), n);
    if (k == 0) return {lat, h};
    return {lat.scaled(-k), h + n * k};
}

building_vertex canonicalize(long p, const qmatrix& basis, long h) {
    return canonicalize(lattice::from_matrix(p, basis), h);
}

building_vertex standard_vertex(int n, long p, long h) { return {lattice::standard(n, p), h}; }

lattice lift_subspace(const lattice& L, const subspace& E) {
    auto gens = columns(L);
    rat inv_p = rat(1) / rat(L.p());
    for (auto& e : E.rows) gens.push_back(combine(L, e, inv_p));
    return lattice::from_generators(L.n(), L.p(), gens);
}

building_vertex edge_target(const building_vertex& a, const subspace& E, int sign) {
    if (E.dim() < 1 || E.dim() > a.n() - 1) throw std::invalid_argument("edge_target: subspace must be proper and nonzero");
    if (E.n != a.n() || E.p != a.p()) throw std::invalid_argument("edge_target: subspace does not match the vertex");
    return canonicalize(lift_subspace(a.lat, E), a.h + sign * E.dim());
}

std::vector<building_edge> edges_from(const building_vertex& a, int sign) {
    std::vector<building_edge> out;
    for (auto& E : proper_subspaces(a.n(), a.p())) out.push_back({edge_target(a, E, sign), E.dim(), E});
    return out;
}

std::vector<building_edge> edges_into(const building_vertex& a, int sign) {
    std::vector<building_edge> out;
    const int n = a.n();
    const long p = a.p();
    for (auto& E : proper_subspaces(n, p)) {
        std::vector<std::vector<rat>> gens;
        for (auto& c : columns(a.lat)) {
            for (auto& x : c) x *= p;
            gens.push_back(c);
        }
        for (auto& e : E.rows) gens.push_back(combine(a.lat, e, rat(1)));
        int index = n - E.dim();
        lattice L = lattice::from_generators(n, p, gens);
        out.push_back({canonicalize(L, a.h - sign * index), index, E});
    }
    return out;
}

building_vertex act(const qmatrix& g, long d_val, const building_vertex& a) {
    qmatrix gi = g.inverse();
    return canonicalize(a.lat.transformed(gi), a.h + d_val);
}

building_vertex descent(const building_vertex& a) { return {a.lat, a.h - 1}; }

std::vector<building_vertex> ball(const building_vertex& a, int r) {
    if (r < 0) throw std::invalid_argument("ball: radius must be >= 0");
    std::vector<building_vertex> order{a};
    std::set<building_vertex> seen{a};
    std::vector<building_vertex> frontier{a};
    for (int step = 0; step < r; ++step) {
        std::vector<building_vertex> next;
        for (auto& v : frontier)
            for (auto& e : edges_into(v))
                if (seen.insert(e.target).second) {
                    order.push_back(e.target);
                    next.push_back(e.target);
                }
        frontier = std::move(next);
    }
    return order;
}

std::string ball_dot(const std::vector<building_vertex>& vs) {
    std::map<building_vertex, size_t> idx;
    for (size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = i;
    std::ostringstream os;
    os << "digraph building {\n";
    for (size_t i = 0; i < vs.size(); ++i) os << "  v" << i << " [label=\"" << vs[i].label() << "\"];\n";
    for (size_t i = 0; i < vs.size(); ++i)
        for (auto& e : edges_into(vs[i])) {
            auto it = idx.find(e.target);
            if (it != idx.end()) os << "  v" << it->second << " -> v" << i << " [label=\"" << e.index << "\"];\n";
        }
    os << "}\n";
    return os.str();
}

nlohmann::json ball_json(const std::vector<building_vertex>& vs) {
    std::map<building_vertex, size_t> idx;
    for (size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = i;
    nlohmann::json verts = nlohmann::json::array(), edges = nlohmann::json::array();
    for (auto& v : vs) verts.push_back(v.to_json());
    for (size_t i = 0; i < vs.size(); ++i)
        for (auto& e : edges_into(vs[i])) {
            auto it = idx.find(e.target);
            if (it != idx.end()) edges.push_back({{"from", it->second}, {"to", i}, {"index", e.index}});
        }
    return {{"vertices", verts}, {"edges", edges}, {"edge_height_sign", EDGE_HEIGHT_SIGN}};
}

fvec quotient_coords(const lattice& L, const std::vector<rat>& v) {
    auto c = L.coordinates(v);
    fvec out;
    for (auto& x : c) out.push_back(rat_mod_p(x * L.p(), L.p()));
    return out;
}

oriented_simplex oriented_simplex::from_chain(const std::vector<lattice>& chain, long h0, int sign) {
    if (chain.empty()) throw std::invalid_argument("oriented_simplex: empty chain");
    if (sign != 1 && sign != -1) throw std::invalid_argument("oriented_simplex: sign must be +1 or -1");
    lattice top = chain.front().scaled(-1);
    for (size_t j = 0; j < chain.size(); ++j) {
        if (!top.contains(chain[j]) || top == chain[j])
            throw std::invalid_argument("oriented_simplex: chain must lie strictly inside p^{-1} Lambda_0");
        if (j && (!chain[j].contains(chain[j - 1]) || chain[j] == chain[j - 1]))
            throw std::invalid_argument("oriented_simplex: inclusions must be strict");
    }
    oriented_simplex s;
    s.chain_ = chain;
    s.h0_ = h0;
    s.sign_ = sign;
    return s;
}

oriented_simplex oriented_simplex::from_flag(const building_vertex& a0, const std::vector<subspace>& flag, int sign) {
    std::vector<lattice> chain{a0.lat};
    for (auto& E : flag) chain.push_back(lift_subspace(a0.lat, E));
    return from_chain(chain, a0.h, sign);
}

long oriented_simplex::height(int j) const {
    return h0_ + sign_ * (chain_[0].det_valuation() - chain_[j].det_valuation());
}

std::vector<building_vertex> oriented_simplex::vertices() const {
    std::vector<building_vertex> vs;
    for (int j = 0; j <= length(); ++j) vs.push_back(canonicalize(chain_[j], height(j)));
    return vs;
}

std::vector<int> oriented_simplex::type() const {
    std::vector<int> t;
    for (int j = 0; j <= length(); ++j) t.push_back(static_cast<int>(chain_[0].det_valuation() - chain_[j].det_valuation()));
    return t;
}

std::vector<subspace> oriented_simplex::flag() const {
    std::vector<subspace> f;
    for (int j = 1; j <= length(); ++j) {
        std::vector<fvec> vs;
        for (int c = 0; c < chain_[j].n(); ++c) vs.push_back(quotient_coords(chain_[0], chain_[j].basis().column(c)));
        f.push_back(span(chain_[0].n(), chain_[0].p(), vs));
    }
    return f;
}

oriented_simplex oriented_simplex::rotate(int i) const {
    if (i < 0 || i > length()) throw std::invalid_argument("rotate: index out of range");
    std::vector<lattice> c;
    for (int j = i; j <= length(); ++j) c.push_back(chain_[j]);
    for (int j = 0; j < i; ++j) c.push_back(chain_[j].scaled(-1));
    return from_chain(c, height(i), sign_);
}

nlohmann::json oriented_simplex::to_json() const {
    nlohmann::json vs = nlohmann::json::array();
    for (auto& v : vertices()) vs.push_back(v.to_json());
    return {{"type", type()}, {"vertices", vs}, {"edge_height_sign", sign_}};
}

}  // namespace lt
