#include "lt/hecke.hpp"

#include <algorithm>
#include <map>

namespace lt {

namespace {

struct pt {
    rat x, y;
};

std::vector<pt> lower_hull(const std::vector<pt>& pts) {
    std::vector<pt> h;
    for (auto& p : pts) {
        while (h.size() >= 2) {
            const pt& a = h[h.size() - 2];
            const pt& b = h.back();
            if ((b.y - a.y) * (p.x - a.x) >= (p.y - a.y) * (b.x - a.x))
                h.pop_back();
            else
                break;
        }
        h.push_back(p);
    }
    return h;
}

void check_kernel_type(int n, const std::vector<int>& kt) {
    for (size_t j = 0; j < kt.size(); ++j) {
        if (kt[j] < 1 || kt[j] > n - 1) throw std::invalid_argument("kernel type: entries must lie in [1, n-1]");
        if (j && kt[j] > kt[j - 1]) throw std::invalid_argument("kernel type: entries must be non-increasing");
    }
}

}  // namespace

isogeny_step canonical_quotient(const newton_polygon& poly, int i) {
    const int n = poly.n;
    const long q = poly.q;
    if (i < 1 || i > n - 1) throw std::invalid_argument("canonical_quotient: rank must lie in [1, n-1]");
    if (!(poly.lambda(i) > poly.lambda(i + 1)))
        throw collision_error("non-generic valuation collision: no rupture at rank " + std::to_string(i));
    const long qi = ipow(q, i);
    std::map<rat, rat> out;  // value -> multiplicity (rational until checked)

    // torsion points outside the kernel: v(f(a)) = q^i v(a)
    for (int j = i + 1; j <= n; ++j)
        out[rat(poly.lambda(j) * qi)] += frac(poly.abscissa(j) - poly.abscissa(j - 1), qi);

    // kernel valuations with multiplicity
    std::map<rat, long> ker;
    for (int j = 1; j <= i; ++j) ker[poly.lambda(j)] += poly.abscissa(j) - poly.abscissa(j - 1);

    // roots g of [pi](g) = b for b in the kernel; v(f(g)) = sum over kernel points k of v(g - k)
    for (auto& [b, mb] : ker) {
        std::vector<pt> pts{{rat(0), b}};
        for (int j = 0; j <= n; ++j) pts.push_back({rat(poly.abscissa(j)), poly.vertex_vals[j]});
        auto h = lower_hull(pts);
        for (size_t s = 0; s + 1 < h.size(); ++s) {
            rat w = h[s + 1].x - h[s].x;
            rat r = (h[s].y - h[s + 1].y) / w;
            r.canonicalize();
            if (ker.count(r))
                throw collision_error("non-generic valuation collision: root valuation " + rat_str(r) +
                                      " equals a kernel valuation");
            rat image = r;  // the point 0
            for (auto& [kv, km] : ker) image += std::min(r, kv) * km;
            image.canonicalize();
            out[image] += rat(w * mb) / qi;
        }
    }

    val_multiset ms;
    for (auto& [v, m] : out) {
        rat mm = m;
        mm.canonicalize();
        if (mm.get_den() != 1)
            throw std::logic_error("canonical_quotient: non-integer multiplicity " + rat_str(mm) + " (hull error)");
        ms.push_back({v, mm.get_num().get_si()});
    }
    ms = normalize_multiset(ms);
    isogeny_step st{i, poly, polygon_from_multiset(n, q, ms), ms};
    return st;
}

nlohmann::json isogeny_step::to_json() const {
    return {{"rank", rank}, {"source", source.to_json()}, {"image", image.to_json()}, {"image_values", multiset_json(image_values)}};
}

kernel_image_report kernel_image_values(const newton_polygon& poly, const std::vector<int>& kt,
                                        const std::vector<int>& flags) {
    const int n = poly.n;
    const long q = poly.q;
    check_kernel_type(n, kt);
    kernel_image_report rep{};
    if (kt.empty()) {
        if (!flags.empty()) throw std::invalid_argument("kernel_image_values: flags given for the trivial type");
        rep.sum = 0;
        rep.middle_bound = rep.upper_bound = rep.lower_bound = 0;
        rep.impossible = false;
        return rep;
    }
    if (!in_gross_hopkins(poly)) throw std::domain_error("kernel_image_values: polygon not in D");
    const int k = static_cast<int>(kt.size());
    const int r = kt.back();
    if (static_cast<int>(flags.size()) != r) throw std::invalid_argument("kernel_image_values: need r_k flag indices");
    int sum_r = 0;
    for (int x : kt) sum_r += x;
    for (int j = 1; j <= r; ++j) {
        int a = flags[j - 1];
        if (a < j || a > n) throw std::invalid_argument("kernel_image_values: flag index a_j must satisfy j <= a_j <= n");
        if (j > 1 && a < flags[j - 2]) throw std::invalid_argument("kernel_image_values: flag indices must be non-decreasing");
    }
    const long e = static_cast<long>(n) * k - sum_r;
    if (e > 40) throw std::invalid_argument("kernel_image_values: exponent too large");
    const rat scale(ipow(q, static_cast<unsigned>(e)));
    rep.sum = 0;
    for (int j = 1; j <= r; ++j) {
        rat v = poly.lambda(flags[j - 1]) / scale;
        v.canonicalize();
        long m = ipow(q, j) - ipow(q, j - 1);
        rep.values.push_back({v, m});
        rep.sum += v * m;
    }
    rep.values = normalize_multiset(rep.values);
    rat partial = 0;
    for (int j = 1; j <= r; ++j) partial += rat(ipow(q, j) - ipow(q, j - 1)) * poly.lambda(j);
    rep.middle_bound = partial / rat(ipow(q, static_cast<unsigned>(n * k - (n - 1) * (k - 1) - r)));
    rep.upper_bound = rat(r) / rat(n * ipow(q, static_cast<unsigned>(n + (k - 1) - r)));
    rep.lower_bound = rat(r) / rat(n * ipow(q, static_cast<unsigned>(n - r)));
    for (rat* x : {&rep.sum, &rep.middle_bound, &rep.upper_bound, &rep.lower_bound}) x->canonicalize();
    if (rep.sum > rep.middle_bound || rep.middle_bound > rep.upper_bound)
        throw std::logic_error("kernel_image_values: bound chain violated");
    rep.impossible = rep.upper_bound < rep.lower_bound;
    return rep;
}

std::set<int> admissible_targets(const newton_polygon& poly) {
    if (!in_gross_hopkins(poly)) throw std::domain_error("admissible_targets: polygon not in D");
    auto b = boundary_indices(poly);
    for (int i : b) {
        auto st = canonical_quotient(poly, i);
        if (!in_gross_hopkins(st.image) || !boundary_indices(st.image).count(poly.n - i))
            throw std::logic_error("admissible_targets: quotient left the boundary stratum");
    }
    return b;
}

reduction reduce_to_domain(const newton_polygon& poly, int budget) {
    reduction red{poly, {}, {}};
    while (!in_gross_hopkins(red.final_polygon)) {
        if (static_cast<int>(red.steps.size()) >= budget)
            throw std::runtime_error("reduce_to_domain: step budget " + std::to_string(budget) + " exceeded");
        int i = 0;
        for (int j = 1; j < poly.n; ++j)
            if (red.final_polygon.lambda(j) > red.final_polygon.lambda(j + 1)) i = j;
        if (i == 0) throw std::logic_error("reduce_to_domain: single-slope polygon outside D");
        auto st = canonical_quotient(red.final_polygon, i);
        red.steps.push_back(i);
        red.final_polygon = st.image;
        red.log.push_back(std::move(st));
    }
    return red;
}

nlohmann::json reduction::to_json() const {
    nlohmann::json lg = nlohmann::json::array();
    for (auto& s : log) lg.push_back(s.to_json());
    nlohmann::json fv = nlohmann::json::array(), ft = nlohmann::json::array();
    for (int i = 1; i < final_polygon.n; ++i) {
        fv.push_back(rat_json(final_polygon.vertex_vals[i]));
        ft.push_back(rat_str(final_polygon.vertex_vals[i]));
    }
    return {{"steps", steps}, {"final", final_polygon.to_json()}, {"final_vals", fv}, {"final_vals_text", ft}, {"log", lg}};
}

prop42_certificate prop42_distinctness(const newton_polygon& poly, const std::vector<int>& kt) {
    const int n = poly.n;
    check_kernel_type(n, kt);
    if (kt.empty()) throw std::invalid_argument("prop42_distinctness: empty kernel type");
    if (!in_H(poly)) throw std::domain_error("prop42_distinctness: polygon not in H");
    int sum_r = 0;
    for (int x : kt) sum_r += x;
    if (sum_r % n) throw std::invalid_argument("prop42_distinctness: height must be divisible by n");
    prop42_certificate c{};
    c.gap = static_cast<long>(n) * static_cast<long>(kt.size()) - sum_r;
    if (c.gap > 40) throw std::invalid_argument("prop42_distinctness: exponent too large");
    c.max_candidate = poly.lambda(1) / rat(ipow(poly.q, static_cast<unsigned>(c.gap)));
    c.bound = poly.lambda(1) / rat(ipow(poly.q, static_cast<unsigned>(n)));
    c.min_slope = poly.lambda(n);
    c.max_candidate.canonicalize();
    c.bound.canonicalize();
    c.holds = c.gap >= n && c.max_candidate <= c.bound && c.bound < c.min_slope;
    return c;
}

}  // namespace lt
