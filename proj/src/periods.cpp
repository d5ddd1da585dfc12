#include "lt/periods.hpp"

#include <sstream>
#include <stdexcept>

namespace lt {

namespace {

long smallest_prime_factor(long q) {
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) return d;
    return q;
}

void check_nq(int n, long q) {
    if (n < 2) throw std::invalid_argument("periods: n must be >= 2");
    if (q < 2) throw std::invalid_argument("periods: q must be >= 2");
}

long checked_cap(long q, unsigned depth) {
    long cap = 1;
    for (unsigned i = 0; i < depth; ++i) {
        if (cap > (1L << 40) / q) throw std::invalid_argument("periods: q^depth too large");
        cap *= q;
    }
    return cap;
}

trunc_series x_pow(ring_ptr r, int nv, long cap, int k, long e) {
    exponent ex(nv, 0);
    ex[k - 1] = e;
    return trunc_series::monomial(r, nv, cap, ex, laurent::from_int(r, 1));
}

}  // namespace

display_data display_matrices(int n, long q, long cap, ring_ptr ring) {
    check_nq(n, q);
    const int nv = n - 1;
    trunc_series zero(ring, nv, cap);
    auto c = [&](long e) { return trunc_series::constant(ring, nv, cap, laurent::pi_power(ring, e)); };
    auto x = [&](int k) { return trunc_series::variable(ring, nv, cap, k); };

    series_matrix A(n, n, zero), B(n, n, zero), C(n, n, zero), Bi(n, n, zero);
    A.at(0, 0) = x(1);
    for (int k = 1; k <= n - 2; ++k) A.at(0, k) = x(k + 1).shift_pi(1);
    A.at(0, n - 1) = c(1);
    A.at(1, 0) = c(0);
    for (int j = 2; j < n; ++j) A.at(j, j - 1) = c(1);

    B = A.map([](const trunc_series& s) { return s.set_vars_zero(); });

    for (int i = 0; i < n; ++i) C.at(i, i) = c(0);
    for (int k = 1; k < n; ++k) C.at(0, k) = x(k);

    Bi.at(n - 1, 0) = c(-1);
    Bi.at(0, 1) = c(0);
    for (int j = 2; j < n; ++j) Bi.at(j - 1, j) = c(-1);

    return display_data{n, q, A, B, C, Bi};
}

ring_ptr default_period_ring(long q, unsigned depth) {
    return ring_spec::make(smallest_prime_factor(q), 1, static_cast<int>(2 * depth + 8));
}

period_tuple period_series(int n, long q, unsigned depth) { return period_series(n, q, depth, default_period_ring(q, depth)); }

period_tuple period_series(int n, long q, unsigned depth, ring_ptr ring) {
    check_nq(n, q);
    const int nv = n - 1;
    const long cap = checked_cap(q, depth);
    period_tuple pt{n, q, depth, {}, {}};
    pt.f.assign(n, trunc_series(ring, nv, cap));
    pt.f[0] = trunc_series::constant(ring, nv, cap, laurent::from_int(ring, 1));

    long qk = 1, alpha_steps = 0;
    for (unsigned k = 0; k < depth; ++k, qk *= q) {
        const int b = static_cast<int>(k % n);
        pt.log.push_back({static_cast<long>(k), b, pt.f[b].min_pi_exponent(), alpha_steps});
        std::vector<trunc_series> g = pt.f;
        if (b == 0) {
            for (int i = 1; i < n; ++i) g[i] = pt.f[i] + x_pow(ring, nv, cap, i, qk) * pt.f[0];
        } else {
            for (int i = 0; i < n; ++i) {
                if (i == b) continue;
                const int alpha = (i >= 1 && i <= b - 1) ? 0 : -1;
                const int xi = (n - b + i) % n;  // never 0 since i != b
                g[i] = pt.f[i] + (x_pow(ring, nv, cap, xi, qk) * pt.f[b]).shift_pi(alpha);
            }
            ++alpha_steps;
        }
        pt.f = std::move(g);
    }
    return pt;
}

std::vector<trunc_series> period_product(int n, long q, unsigned depth, ring_ptr ring) {
    check_nq(n, q);
    const long cap = checked_cap(q, depth);
    display_data d = display_matrices(n, q, cap, ring);
    std::vector<trunc_series> v(n, trunc_series(ring, n - 1, cap));
    v[0] = trunc_series::constant(ring, n - 1, cap, laurent::from_int(ring, 1));
    for (unsigned i = 0; i < depth; ++i) {
        series_matrix Ai = d.A.map([&](const trunc_series& s) { return frobenius_twist(s, q, i); });
        v = row_times_matrix(v, Ai);
    }
    for (unsigned i = 0; i < depth; ++i) v = row_times_matrix(v, d.B_inv);
    return v;
}

nlohmann::json period_tuple::to_json() const {
    nlohmann::json fs = nlohmann::json::array();
    for (auto& s : f) fs.push_back({{"series", s.to_json()}, {"text", s.str()}});
    nlohmann::json lg = nlohmann::json::array();
    for (auto& s : log)
        lg.push_back({{"k", s.k}, {"pivot", s.pivot}, {"pivot_min_pi_exponent", s.pivot_min_pi_exp},
                      {"alpha_updates", s.alpha_updates}});
    return {{"n", n}, {"q", q}, {"depth", depth}, {"cap", f.empty() ? 0 : f[0].cap()}, {"f", fs}, {"steps", lg}};
}

// ---- n = 2 continued fraction ----

namespace {

using upoly = std::map<long, laurent>;  // exponent -> coefficient, exact polynomial in x

void upoly_add(upoly& a, long e, const laurent& c) {
    if (c.is_zero()) return;
    auto it = a.find(e);
    if (it == a.end()) {
        a.emplace(e, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) a.erase(it);
}

upoly upoly_mul(const upoly& a, const upoly& b, long cap) {
    upoly r;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b)
            if (ea + eb < cap) upoly_add(r, ea + eb, ca * cb);
    return r;
}

upoly upoly_sum(const upoly& a, const upoly& b) {
    upoly r = a;
    for (auto& [e, c] : b) upoly_add(r, e, c);
    return r;
}

// a / b as x-Laurent series with exponents < cap
laurent_x_series upoly_div(const upoly& a, const upoly& b, long cap, ring_ptr ring) {
    if (b.empty()) throw std::domain_error("continued fraction: zero denominator");
    const long d = b.begin()->first;
    const long width = cap + d + 1;  // exponents of a*b0^{-1} needed before the shift
    if (width <= 0) return laurent_x_series{cap, {}};
    // normalize b = x^d * c0 * (1 + t)
    laurent c0inv = b.begin()->second.inverse();
    upoly t;
    for (auto& [e, c] : b)
        if (e != d) upoly_add(t, e - d, c * c0inv);
    // (1 + t)^{-1} = sum (-t)^j, t has positive order
    upoly inv{{0, laurent::from_int(ring, 1)}}, term{{0, laurent::from_int(ring, 1)}};
    upoly mt;
    for (auto& [e, c] : t) mt.emplace(e, -c);
    for (long j = 1; j < width; ++j) {
        term = upoly_mul(term, mt, width);
        if (term.empty()) break;
        inv = upoly_sum(inv, term);
    }
    upoly q = upoly_mul(a, inv, width);
    laurent_x_series out{cap, {}};
    for (auto& [e, c] : q) {
        long ex = e - d;
        if (ex < cap) out.terms.emplace(ex, c * c0inv);
    }
    return out;
}

}  // namespace

long period_cf2_max_cap(long q, unsigned k) { return checked_cap(q, 2 * k + 1) - 2; }

laurent_x_series period_cf2(long q, unsigned k, long cap, ring_ptr ring) {
    if (q < 2) throw std::invalid_argument("period_cf2: q must be >= 2");
    if (cap > period_cf2_max_cap(q, k))
        throw std::invalid_argument("period_cf2: depth too small for requested cap (max " +
                                    std::to_string(period_cf2_max_cap(q, k)) + ")");
    // entries a_1..a_L: exponents q^{2k}, q^{2k-1}, ..., 1; even powers carry 1/pi
    std::vector<upoly> a;
    for (long j = 2 * static_cast<long>(k); j >= 0; --j)
        a.push_back({{checked_cap(q, static_cast<unsigned>(j)), laurent::pi_power(ring, j % 2 == 0 ? -1 : 0)}});
    // convergents of [0; a_1, ..., a_L]
    const long big = checked_cap(q, 2 * k + 1) * 4 + 8;
    upoly Pm2{{0, laurent::from_int(ring, 1)}}, Qm2{};
    upoly Pm1{}, Qm1{{0, laurent::from_int(ring, 1)}};
    for (auto& aj : a) {
        upoly P = upoly_sum(upoly_mul(aj, Pm1, big), Pm2);
        upoly Q = upoly_sum(upoly_mul(aj, Qm1, big), Qm2);
        Pm2 = Pm1;
        Qm2 = Qm1;
        Pm1 = P;
        Qm1 = Q;
    }
    return upoly_div(Pm1, Qm1, cap, ring);
}

laurent_x_series period_ratio2(const period_tuple& pt, long cap) {
    if (pt.n != 2) throw std::invalid_argument("period_ratio2: n = 2 only");
    if (cap > pt.f[0].cap() - 1) throw std::invalid_argument("period_ratio2: cap beyond the tuple's precision");
    ring_ptr r = pt.f[0].ring();
    upoly num, den;
    for (auto& [e, c] : pt.f[0].terms()) upoly_add(num, e[0], c.shift(1));
    for (auto& [e, c] : pt.f[1].terms()) upoly_add(den, e[0], c);
    return upoly_div(num, den, cap, r);
}

std::string laurent_x_series::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms) {
        std::string cs;
        try {
            rat r = c.to_rational();
            if (!first) os << (r < 0 ? " - " : " + ");
            else if (r < 0) os << "-";
            cs = rat_str(abs(r));
        } catch (const std::domain_error&) {
            if (!first) os << " + ";
            cs = "[" + c.unit_part().digit_string() + "]*pi^" + std::to_string(c.pi_exponent());
        }
        first = false;
        if (e == 0)
            os << cs;
        else {
            if (cs != "1") os << cs << "*";
            os << "x";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

nlohmann::json laurent_x_series::to_json() const {
    nlohmann::json t = nlohmann::json::array();
    for (auto& [e, c] : terms)
        t.push_back({{"x_exponent", e}, {"pi_exponent", c.pi_exponent()}, {"digits", c.unit_part().digit_string()}});
    return {{"cap", cap}, {"terms", t}, {"text", str()}};
}

// ---- evaluation ----

val period_tail_bound(long q, unsigned depth, const val& vmin) {
    if (vmin.is_inf()) return val::infinity();
    const rat cap(checked_cap(q, depth));
    // monomials of degree D >= cap carry pi-exponent >= -(log_q D + 1); the bound
    // D*vmin - log_q D - 1 increases in D once cap*vmin >= 2
    if (cap * vmin.value() < 2) return val(rat(-1000000));
    return val(rat(cap * vmin.value() - static_cast<long>(depth) - 1));
}

std::vector<period_value> evaluate_periods(const period_tuple& pt, const std::vector<ram_elem>& point) {
    if (static_cast<int>(point.size()) != pt.n - 1) throw std::invalid_argument("evaluate_periods: point dimension mismatch");
    val vmin = val::infinity();
    std::vector<laurent> pts;
    for (auto& x : point) {
        auto v = x.valuation();
        if (!v.v.is_inf() && v.v <= val(0))
            throw std::invalid_argument("evaluate_periods: coordinates must have positive valuation");
        vmin = min(vmin, v.v);
        pts.push_back(x.is_zero() ? laurent(x.ring()) : laurent(x, 0));
    }
    const val tail = period_tail_bound(pt.q, pt.depth, vmin);
    std::vector<period_value> out;
    for (auto& f : pt.f) {
        laurent y = f.evaluate(pts);
        period_value pv;
        pv.v = y.valuation();
        pv.below_precision = y.below_precision();
        bool exact_zero = y.is_zero() && !y.below_precision() && vmin.is_inf();
        pv.determined = exact_zero || (!pv.below_precision && pv.v < tail);
        if (!pv.determined)
            throw std::runtime_error("evaluate_periods: precision exhausted before the valuation of f_" +
                                     std::to_string(out.size()) + " was determined (raise depth or N)");
        out.push_back(pv);
    }
    return out;
}

thm23_result thm23_domains(int n, long q, const std::vector<val>& vals) {
    check_nq(n, q);
    if (static_cast<int>(vals.size()) != n - 1) throw std::invalid_argument("thm23_domains: need n-1 valuations");
    auto v = [&](int i) -> val {
        if (i == 0) return val(1);
        if (i == n) return val(0);
        return vals[i - 1];
    };
    const rat qn(ipow(q, n));
    bool have_lhs = false;
    rat max_lhs;
    for (int i = 1; i <= n; ++i) {
        if (v(i).is_inf()) continue;
        rat l = (1 - v(i).value()) / (qn * (ipow(q, i) - 1));
        if (!have_lhs || l > max_lhs) max_lhs = l;
        have_lhs = true;
    }
    val min_rhs = val::infinity();
    for (int j = 0; j < n; ++j) {
        if (v(j).is_inf()) continue;
        min_rhs = min(min_rhs, val(rat(v(j).value() / (qn - ipow(q, j)))));
    }
    thm23_result r;
    r.max_lhs = val(max_lhs);
    r.min_rhs = min_rhs;
    r.source = val(max_lhs) < min_rhs;
    return r;
}

}  // namespace lt
