#include "lt/wittlab.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lt {

namespace {

const std::string PI = "pi";

long binom(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long smallest_prime_factor(long q) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) return d;
    return q;
}

long prime_of_power(long q) {
    long p = smallest_prime_factor(q), r = q;
    while (r % p == 0) r /= p;
    if (r != 1) throw std::invalid_argument("q must be a prime power");
    return p;
}

long vp_rat_nz(const rat& c, long p) {
    long k = 0;
    mpz_class num = abs(c.get_num()), den = c.get_den();
    while (mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(p))) {
        num /= p;
        ++k;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p))) {
        den /= p;
        --k;
    }
    return k;
}

rat rat_pow(long b, long e) {
    rat r = 1;
    for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= b;
    return e >= 0 ? r : rat(1) / r;
}

}  // namespace

sym_poly::sym_poly(long c) {
    if (c) t_[{}] = rat(c);
}

sym_poly::sym_poly(const rat& c) {
    if (c != 0) t_[{}] = c;
}

sym_poly sym_poly::var(const std::string& name, int e) {
    if (e < 0 && name != PI) throw std::invalid_argument("sym_poly: only pi may have negative exponents");
    sym_poly r;
    sym_monomial m;
    if (e) m[name] = e;
    r.t_[m] = rat(1);
    return r;
}

void sym_poly::add_term(const sym_monomial& m, const rat& c) {
    if (c == 0) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_[m] = c;
        return;
    }
    it->second += c;
    if (it->second == 0) t_.erase(it);
}

sym_poly sym_poly::operator+(const sym_poly& o) const {
    sym_poly r = *this;
    for (auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
}

sym_poly sym_poly::operator-() const {
    sym_poly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

sym_poly sym_poly::operator-(const sym_poly& o) const { return *this + (-o); }

sym_poly sym_poly::operator*(const sym_poly& o) const {
    sym_poly r;
    for (auto& [m1, c1] : t_)
        for (auto& [m2, c2] : o.t_) {
            sym_monomial m = m1;
            for (auto& [v, e] : m2) {
                int s = (m[v] += e);
                if (s == 0) m.erase(v);
            }
            r.add_term(m, c1 * c2);
        }
    return r;
}

sym_poly sym_poly::pow(long e) const {
    if (e < 0) throw std::invalid_argument("sym_poly: negative power");
    sym_poly r(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

sym_poly sym_poly::substitute(const std::map<std::string, sym_poly>& s) const {
    sym_poly r;
    std::map<std::pair<std::string, int>, sym_poly> cache;
    for (auto& [m, c] : t_) {
        sym_poly term(c);
        sym_monomial keep;
        for (auto& [v, e] : m) {
            auto it = s.find(v);
            if (it == s.end()) {
                keep[v] = e;
                continue;
            }
            auto key = std::make_pair(v, e);
            auto ct = cache.find(key);
            if (ct == cache.end()) ct = cache.emplace(key, it->second.pow(e)).first;
            term = term * ct->second;
        }
        sym_poly k;
        k.t_[keep] = rat(1);
        r += term * k;
    }
    return r;
}

std::map<sym_monomial, sym_poly> sym_poly::collect(const std::set<std::string>& vars) const {
    std::map<sym_monomial, sym_poly> out;
    for (auto& [m, c] : t_) {
        sym_monomial in, rest;
        for (auto& [v, e] : m) (vars.count(v) ? in : rest)[v] = e;
        out[in].add_term(rest, c);
    }
    return out;
}

std::set<std::string> sym_poly::variables() const {
    std::set<std::string> s;
    for (auto& [m, c] : t_)
        for (auto& [v, e] : m) s.insert(v);
    return s;
}

int sym_poly::degree_in(const std::set<std::string>& vars) const {
    int d = 0;
    for (auto& [m, c] : t_) {
        int k = 0;
        for (auto& [v, e] : m)
            if (vars.count(v)) k += e;
        d = std::max(d, k);
    }
    return d;
}

bool sym_poly::pi_integral(long p) const {
    // specialize pi = p and test each coefficient of the remaining monomial
    std::map<sym_monomial, rat> grouped;
    for (auto& [m, c] : t_) {
        sym_monomial rest = m;
        auto it = rest.find(PI);
        long k = it == rest.end() ? 0 : it->second;
        rest.erase(PI);
        grouped[rest] += c * rat_pow(p, k);
    }
    for (auto& [m, c] : grouped)
        if (c != 0 && vp_rat_nz(c, p) < 0) return false;
    return true;
}

std::string sym_poly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // constant-free terms first in a stable order: by total degree, then lexicographic
    std::vector<std::pair<sym_monomial, rat>> terms(t_.begin(), t_.end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (auto& [v, e] : a.first)
            if (v != PI) da += e;
        for (auto& [v, e] : b.first)
            if (v != PI) db += e;
        return da < db;
    });
    for (auto& [m, c] : terms) {
        rat a = c;
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (a < 0) a = -a;
        first = false;
        std::string body;
        for (auto& [v, e] : m) {
            if (!body.empty()) body += "*";
            body += v;
            if (e != 1) body += "^" + std::to_string(e);
        }
        if (body.empty()) {
            os << rat_str(a);
        } else if (a == 1) {
            os << body;
        } else {
            os << rat_str(a) << "*" << body;
        }
    }
    return os.str();
}

sym_poly ring_rules::reduce(const sym_poly& f) const {
    sym_poly r;
    for (auto& [m, c] : f.terms()) {
        int jdeg = 0;
        bool dead = false;
        for (auto& [v, e] : m) {
            auto it = nil_exp.find(v);
            if (it != nil_exp.end() && e >= it->second) dead = true;
            if (J.count(v)) jdeg += e;
        }
        if (dead || (J_power_zero && jdeg >= J_power_zero)) continue;
        auto pit = m.find(PI);
        long k = pit == m.end() ? 0 : pit->second;
        if (pi_kills_J && jdeg >= 1 && k >= 1) continue;
        sym_monomial mm = m;
        rat coef = c;
        if (char_p) {
            // a k-algebra: pi is specialized to p, then coefficients are read mod p
            mm.erase(PI);
            coef *= rat_pow(char_p, k);
            if (vp_rat_nz(coef, char_p) < 0) throw std::domain_error("ring_rules: coefficient is not p-integral");
            mpz_class pp = char_p, inv, num = coef.get_num(), den = coef.get_den();
            mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
            mpz_class red = (num * inv) % pp;
            if (red < 0) red += pp;
            coef = rat(red);
        } else if (pi_kills_J && jdeg >= 1 && k < 0) {
            throw std::domain_error("ring_rules: negative pi power on an element of J");
        }
        if (coef == 0) continue;
        sym_poly t(coef);
        for (auto& [v, e] : mm) t = t * sym_poly::var(v, e);
        r += t;
    }
    return r;
}

sym_poly ghost_component(const std::vector<sym_poly>& x, int i, long q) {
    sym_poly g;
    long e = 1;
    for (int j = i; j >= 0; --j) {
        g += sym_poly::pi(j) * x[j].pow(e);
        e *= q;
    }
    return g;
}

std::vector<sym_poly> ghost(const std::vector<sym_poly>& x, long q) {
    std::vector<sym_poly> g;
    for (int i = 0; i < static_cast<int>(x.size()); ++i) g.push_back(ghost_component(x, i, q));
    return g;
}

std::vector<sym_poly> from_ghost(const std::vector<sym_poly>& g, long q) {
    std::vector<sym_poly> x;
    for (int i = 0; i < static_cast<int>(g.size()); ++i) {
        sym_poly r = g[i];
        long e = q;
        for (int j = i - 1; j >= 0; --j) {
            r = r - sym_poly::pi(j) * x[j].pow(e);
            e *= q;
        }
        x.push_back(r * sym_poly::pi(-i));
    }
    return x;
}

std::vector<sym_poly> witt_vars(const std::string& name, int N) {
    std::vector<sym_poly> v;
    for (int i = 0; i < N; ++i) v.push_back(sym_poly::var(name + std::to_string(i)));
    return v;
}

witt_structure witt_structure_polys(int N, long q) { return witt_structure_polys(N, q, prime_of_power(q)); }

witt_structure witt_structure_polys(int N, long q, long p) {
    if (N < 1 || N > 4) throw std::invalid_argument("witt_structure_polys: need 1 <= N <= 4");
    prime_of_power(q);
    if (p != smallest_prime_factor(p)) throw std::invalid_argument("witt_structure_polys: p must be prime");
    witt_structure s{N, q, p, {}, {}};
    auto x = witt_vars("x", N), y = witt_vars("y", N);
    auto gx = ghost(x, q), gy = ghost(y, q);
    std::vector<sym_poly> gs, gp;
    for (int i = 0; i < N; ++i) {
        gs.push_back(gx[i] + gy[i]);
        gp.push_back(gx[i] * gy[i]);
    }
    s.S = from_ghost(gs, q);
    s.P = from_ghost(gp, q);
    for (int i = 0; i < N; ++i)
        if (!s.S[i].pi_integral(s.p) || !s.P[i].pi_integral(s.p))
            throw std::domain_error("witt_structure_polys: non-integral coefficient in component " + std::to_string(i));
    return s;
}

nlohmann::json witt_structure::to_json() const {
    nlohmann::json S_ = nlohmann::json::array(), P_ = nlohmann::json::array();
    for (auto& f : S) S_.push_back(f.str());
    for (auto& f : P) P_.push_back(f.str());
    return {{"N", N}, {"q", q}, {"S", S_}, {"P", P_}};
}

namespace {

std::vector<sym_poly> apply_structure(const std::vector<sym_poly>& F, const std::vector<sym_poly>& x,
                                      const std::vector<sym_poly>& y, const ring_rules* rules) {
    if (x.size() < F.size() || y.size() < F.size()) throw std::invalid_argument("witt: vectors too short");
    std::map<std::string, sym_poly> sub;
    for (size_t i = 0; i < F.size(); ++i) {
        sub["x" + std::to_string(i)] = x[i];
        sub["y" + std::to_string(i)] = y[i];
    }
    std::vector<sym_poly> out;
    for (auto& f : F) {
        auto v = f.substitute(sub);
        out.push_back(rules ? rules->reduce(v) : v);
    }
    return out;
}

}  // namespace

std::vector<sym_poly> witt_add(const witt_structure& s, const std::vector<sym_poly>& x, const std::vector<sym_poly>& y,
                               const ring_rules* rules) {
    return apply_structure(s.S, x, y, rules);
}

std::vector<sym_poly> witt_mul(const witt_structure& s, const std::vector<sym_poly>& x, const std::vector<sym_poly>& y,
                               const ring_rules* rules) {
    return apply_structure(s.P, x, y, rules);
}

std::vector<sym_poly> teichmuller(const sym_poly& a, int N) {
    std::vector<sym_poly> v(static_cast<size_t>(N));
    if (N) v[0] = a;
    return v;
}

std::vector<sym_poly> witt_F(const std::vector<sym_poly>& x, long q) {
    if (x.empty()) throw std::invalid_argument("witt_F: empty vector");
    auto g = ghost(x, q);
    return from_ghost(std::vector<sym_poly>(g.begin() + 1, g.end()), q);
}

std::vector<sym_poly> witt_V(const std::vector<sym_poly>& x) {
    std::vector<sym_poly> v(x.size());
    for (size_t i = 1; i < x.size(); ++i) v[i] = x[i - 1];
    return v;
}

std::vector<sym_poly> witt_scale(const sym_poly& a, const std::vector<sym_poly>& x, long q) {
    auto g = ghost(x, q);
    for (auto& c : g) c = a * c;
    return from_ghost(g, q);
}

std::vector<sym_poly> witt_teichmuller_scale(const sym_poly& a, const std::vector<sym_poly>& x, long q) {
    std::vector<sym_poly> v;
    long e = 1;
    for (auto& c : x) {
        v.push_back(a.pow(e) * c);
        e *= q;
    }
    return v;
}

opd opd_torsion_free(long q) {
    opd o;
    o.q = q;
    o.gamma = [q](const sym_poly& x) { return x.pow(q) * sym_poly::pi(-1); };
    o.generators = {sym_poly::var("t")};
    o.name = "x^q/pi";
    return o;
}

opd opd_square_zero(long q, long char_p, const std::map<std::string, sym_poly>& images) {
    opd o;
    o.q = q;
    o.rules.char_p = char_p;
    for (auto& [v, img] : images) o.rules.J.insert(v);
    o.rules.J_power_zero = 2;
    o.rules.pi_kills_J = true;
    auto rules = o.rules;
    o.gamma = [q, rules, images](const sym_poly& x) {
        sym_poly r;
        for (auto& [m, a] : rules.reduce(x).collect(rules.J)) {
            if (m.empty()) throw std::invalid_argument("gamma: element is not in J");
            const auto& img = images.at(m.begin()->first);
            r += a.pow(q) * img;
        }
        return rules.reduce(r);
    };
    for (auto& [v, img] : images) o.generators.push_back(sym_poly::var(v));
    o.name = "square-zero";
    return o;
}

opd_axiom_report check_opd_axioms(const opd& o, const std::vector<sym_poly>& scalars,
                                  const std::vector<sym_poly>& elements) {
    opd_axiom_report r;
    auto R = [&](const sym_poly& f) { return o.rules.reduce(f); };
    for (auto& x : elements) {
        for (auto& a : scalars)
            if (!(R(o.gamma(R(a * x))) == R(a.pow(o.q) * o.gamma(x)))) r.scaling = false;
        if (!(R(sym_poly::pi() * o.gamma(x)) == R(x.pow(o.q)))) r.pi_times = false;
        for (auto& y : elements) {
            sym_poly rhs = o.gamma(x) + o.gamma(y);
            for (long i = 1; i < o.q; ++i)
                rhs += sym_poly(rat(binom(o.q, i))) * sym_poly::pi(-1) * x.pow(i) * y.pow(o.q - i);
            if (!(R(o.gamma(R(x + y))) == R(rhs))) r.additive = false;
        }
    }
    return r;
}

sym_poly opd_delta(const opd& o, const sym_poly& x, int n) {
    if (n < 0) throw std::invalid_argument("opd_delta: n must be >= 0");
    sym_poly g = x;
    long e = 0, qk = 1;
    for (int k = 0; k < n; ++k) {
        g = o.gamma(g);
        e += qk;
        qk *= o.q;
    }
    return o.rules.reduce(g * sym_poly::pi(static_cast<int>(e - n)));
}

bool opd_nilpotent(const opd& o, int bound) {
    for (auto& g : o.generators) {
        sym_poly x = g;
        bool dies = false;
        for (int k = 0; k < bound && !dies; ++k) {
            x = o.rules.reduce(o.gamma(x));
            dies = x.is_zero();
        }
        if (!dies) return false;
    }
    return true;
}

std::vector<sym_poly> log_opd(const opd& o, const std::vector<sym_poly>& x) {
    std::vector<sym_poly> y;
    for (size_t i = 0; i < x.size(); ++i) {
        sym_poly s;
        for (size_t j = 0; j <= i; ++j) s += opd_delta(o, x[j], static_cast<int>(i - j));
        y.push_back(o.rules.reduce(s));
    }
    return y;
}

std::vector<sym_poly> exp_opd(const opd& o, const std::vector<sym_poly>& y) {
    if (!opd_nilpotent(o, 8)) throw std::domain_error("exp_opd: divided powers are not nilpotent");
    std::vector<sym_poly> x;
    for (size_t i = 0; i < y.size(); ++i) {
        sym_poly s = y[i];
        for (size_t j = 0; j < i; ++j) s = s - opd_delta(o, x[j], static_cast<int>(i - j));
        x.push_back(o.rules.reduce(s));
    }
    return x;
}

std::vector<sym_poly> exp_nilpotent_hom(const vec_map& Pi, const std::vector<sym_poly>& f, const ring_rules& rules,
                                        int bound, int* terms) {
    std::vector<sym_poly> acc = f, cur = f;
    int k = 0;
    for (;;) {
        bool zero = true;
        for (auto& c : cur) zero = zero && c.is_zero();
        if (zero) break;
        if (++k > bound) throw std::domain_error("exp_nilpotent_hom: Pi is not nilpotent on the argument");
        cur = Pi(cur);
        for (auto& c : cur) c = rules.reduce(c);
        for (size_t i = 0; i < acc.size(); ++i) acc[i] = rules.reduce(k % 2 ? acc[i] - cur[i] : acc[i] + cur[i]);
    }
    if (terms) *terms = k;
    return acc;
}

nlohmann::json sigma_module::to_json() const {
    nlohmann::json bl = nlohmann::json::array();
    for (auto& b : blocks) {
        nlohmann::json m = nlohmann::json::array();
        for (auto& row : b) {
            nlohmann::json r = nlohmann::json::array();
            for (auto& x : row) r.push_back(rat_str(x));
            m.push_back(r);
        }
        bl.push_back(m);
    }
    return {{"p", p}, {"rank", rank}, {"blocks", bl}};
}

std::vector<long> smith_valuations(const std::vector<std::vector<rat>>& m0, long p) {
    auto m = m0;
    const size_t r = m.size();
    std::vector<bool> used_r(r, false), used_c(r, false);
    std::vector<long> out;
    for (size_t step = 0; step < r; ++step) {
        long best = 0;
        int bi = -1, bj = -1;
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) {
                if (used_r[i] || used_c[j] || m[i][j] == 0) continue;
                long v = vp_rat_nz(m[i][j], p);
                if (bi < 0 || v < best) {
                    best = v;
                    bi = static_cast<int>(i);
                    bj = static_cast<int>(j);
                }
            }
        if (bi < 0) throw std::domain_error("smith_valuations: singular matrix");
        for (size_t i = 0; i < r; ++i) {
            if (used_r[i] || static_cast<int>(i) == bi || m[i][bj] == 0) continue;
            rat f = m[i][bj] / m[bi][bj];
            for (size_t j = 0; j < r; ++j) m[i][j] -= f * m[bi][j];
        }
        used_r[bi] = used_c[bj] = true;
        out.push_back(best);
    }
    std::sort(out.begin(), out.end());
    return out;
}

dieudonne_result dieudonne_O(const sigma_module& sm) {
    const int f0 = static_cast<int>(sm.blocks.size());
    const int r = sm.rank;
    if (f0 < 1 || r < 1) throw std::invalid_argument("dieudonne_O: need f0 >= 1 blocks of rank >= 1");
    for (auto& b : sm.blocks) {
        if (static_cast<int>(b.size()) != r) throw std::invalid_argument("dieudonne_O: block shape mismatch");
        for (auto& row : b)
            if (static_cast<int>(row.size()) != r) throw std::invalid_argument("dieudonne_O: block shape mismatch");
    }
    for (int t = 0; t < f0; ++t) {
        auto sv = smith_valuations(sm.blocks[t], sm.p);
        if (sv.front() < 0 || sv.back() > 1) throw std::domain_error("dieudonne_O: need p D inside phi(D) inside D");
        if (t != 0)
            for (long v : sv)
                if (v != 1) throw std::domain_error("dieudonne_O: V is not invertible at embedding " + std::to_string(t));
    }
    // phi^{f0} on D_{tau_0}: Phi_{f0-1} ... Phi_0
    std::vector<std::vector<rat>> prod(r, std::vector<rat>(r, rat(0)));
    for (int i = 0; i < r; ++i) prod[i][i] = 1;
    for (int t = 0; t < f0; ++t) {
        std::vector<std::vector<rat>> nx(r, std::vector<rat>(r, rat(0)));
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k)
                for (int j = 0; j < r; ++j) nx[i][j] += sm.blocks[t][i][k] * prod[k][j];
        prod = nx;
    }
    rat scale = rat(sm.p) / rat_pow(sm.p, f0);
    for (auto& row : prod)
        for (auto& x : row) x *= scale;
    dieudonne_result res;
    res.module = sigma_module{sm.p, r, {prod}};
    res.elementary_divisors = smith_valuations(prod, sm.p);
    res.pi_condition = res.elementary_divisors.front() >= 0 && res.elementary_divisors.back() <= 1;
    res.height_O = r;
    res.height = r * f0;
    return res;
}

nlohmann::json dieudonne_result::to_json() const {
    return {{"phi_O", module.to_json()},
            {"elementary_divisors", elementary_divisors},
            {"pi_condition", pi_condition},
            {"height_O", height_O},
            {"height", height}};
}

bool witt_selftest_report::ok() const {
    for (auto& [name, pass] : checks)
        if (!pass) return false;
    return true;
}

nlohmann::json witt_selftest_report::to_json() const {
    nlohmann::json c = nlohmann::json::array(), s = nlohmann::json::array();
    for (auto& [name, pass] : checks) c.push_back({{"check", name}, {"pass", pass}});
    for (auto& w : structures) s.push_back(w.to_json());
    return {{"ok", ok()}, {"checks", c}, {"structures", s}};
}

witt_selftest_report witt_selftest() {
    witt_selftest_report rep;
    auto add = [&](const std::string& name, bool pass) { rep.checks.push_back({name, pass}); };

    for (long q : {2L, 3L}) {
        auto s = witt_structure_polys(3, q);
        rep.structures.push_back(s);
        auto x = witt_vars("x", 3), y = witt_vars("y", 3);
        auto gx = ghost(x, q), gy = ghost(y, q), gs = ghost(s.S, q), gp = ghost(s.P, q);
        bool hom = true;
        for (int i = 0; i < 3; ++i) hom = hom && gs[i] == gx[i] + gy[i] && gp[i] == gx[i] * gy[i];
        add("ghost homomorphism q=" + std::to_string(q), hom);

        auto a = sym_poly::var("a"), b = sym_poly::var("b");
        add("teichmuller multiplicative q=" + std::to_string(q),
            witt_mul(s, teichmuller(a, 3), teichmuller(b, 3)) == teichmuller(a * b, 3));

        auto fv = ghost(witt_F(witt_V(x), q), q);
        bool fv_ok = true;
        for (int i = 0; i < 2; ++i) fv_ok = fv_ok && fv[i] == sym_poly::pi() * gx[i];
        add("FV = pi q=" + std::to_string(q), fv_ok);

        auto o = opd_torsion_free(q);
        auto lx = log_opd(o, x), lv = log_opd(o, witt_V(x)), lf = log_opd(o, witt_F(x, q));
        bool b21 = lv[0].is_zero();
        for (int i = 1; i < 3; ++i) b21 = b21 && lv[i] == lx[i - 1];
        for (int i = 0; i < 2; ++i) b21 = b21 && lf[i] == sym_poly::pi() * lx[i + 1];
        auto la = log_opd(o, witt_scale(a, x, q));
        for (int i = 0; i < 3; ++i) b21 = b21 && la[i] == a * lx[i];
        add("log intertwines F, V, [a] q=" + std::to_string(q), b21);
        add("opd axioms x^q/pi q=" + std::to_string(q),
            check_opd_axioms(o, {a, a + sym_poly::pi()}, {sym_poly::var("t"), sym_poly::var("u") * a}).ok());
    }
    add("S_1 for q=2", rep.structures[0].S[1] == sym_poly::var("x1") + sym_poly::var("y1") -
                                                     sym_poly(2) * sym_poly::pi(-1) * sym_poly::var("x0") *
                                                         sym_poly::var("y0"));

    // square-zero ideal with nilpotent divided powers
    auto o = opd_square_zero(2, 2, {{"e1", sym_poly::var("e2")}, {"e2", sym_poly(0)}});
    auto e1 = sym_poly::var("e1"), e2 = sym_poly::var("e2"), c = sym_poly::var("c");
    std::vector<sym_poly> w{c * e1, e2, e1};
    add("exp inverts log on a nilpotent ideal", exp_opd(o, log_opd(o, w)) == w);
    auto zero = opd_square_zero(2, 2, {{"e1", sym_poly(0)}});
    int terms = 0;
    std::vector<sym_poly> f{sym_poly::var("e1")};
    add("exp with gamma = 0 is the identity",
        exp_nilpotent_hom([](const std::vector<sym_poly>&) { return std::vector<sym_poly>{sym_poly(0)}; }, f,
                          zero.rules, 8, &terms) == f);

    sigma_module sm{2, 1, {{{rat(1)}}, {{rat(2)}}}};
    auto d = dieudonne_O(sm);
    add("dieudonne f0=2 blocks (1, p)", d.module.blocks[0][0][0] == 1 && d.pi_condition);
    return rep;
}

}  // namespace lt
