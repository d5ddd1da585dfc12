#include "lt/newton_polygon.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lt {

namespace {

void check_nq(int n, long q) {
    if (n < 1) throw std::invalid_argument("polygon: n must be >= 1");
    if (q < 2) throw std::invalid_argument("polygon: q must be >= 2");
    if (n > 30) throw std::invalid_argument("polygon: n too large");
}

struct pt {
    rat x, y;
};

// lower convex hull of points sorted by x (ties: keep the lowest y)
std::vector<pt> lower_hull(std::vector<pt> pts) {
    std::sort(pts.begin(), pts.end(), [](const pt& a, const pt& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    std::vector<pt> h;
    for (auto& p : pts) {
        if (!h.empty() && h.back().x == p.x) continue;
        while (h.size() >= 2) {
            const pt& a = h[h.size() - 2];
            const pt& b = h.back();
            // drop b if it lies on or above segment a-p
            if ((b.y - a.y) * (p.x - a.x) >= (p.y - a.y) * (b.x - a.x))
                h.pop_back();
            else
                break;
        }
        h.push_back(p);
    }
    return h;
}

rat hull_at(const std::vector<pt>& h, const rat& x) {
    for (size_t k = 0; k + 1 < h.size(); ++k)
        if (h[k].x <= x && x <= h[k + 1].x) return h[k].y + (h[k + 1].y - h[k].y) * (x - h[k].x) / (h[k + 1].x - h[k].x);
    throw std::logic_error("hull_at: abscissa outside hull");
}

}  // namespace

std::vector<int> newton_polygon::break_indices() const {
    std::vector<int> b{0};
    for (int j = 1; j < n; ++j)
        if (slopes[j - 1] != slopes[j]) b.push_back(j);
    b.push_back(n);
    return b;
}

std::string newton_polygon::str() const {
    std::string s = "(";
    for (size_t j = 0; j < slopes.size(); ++j) s += (j ? ", " : "") + rat_str(slopes[j]);
    return s + ")";
}

nlohmann::json rat_json(const rat& r) {
    rat c = r;
    c.canonicalize();
    return {{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}};
}

nlohmann::json val_json(const val& v) {
    if (v.is_inf()) return "inf";
    return rat_json(v.value());
}

nlohmann::json newton_polygon::to_json() const {
    nlohmann::json sl = nlohmann::json::array(), vv = nlohmann::json::array(), st = nlohmann::json::array();
    for (auto& s : slopes) {
        sl.push_back(rat_json(s));
        st.push_back(rat_str(s));
    }
    for (auto& v : vertex_vals) vv.push_back(rat_json(v));
    auto bd = boundary_indices(*this);
    return {{"n", n},
            {"q", q},
            {"slopes", sl},
            {"slopes_text", st},
            {"vertex_vals", vv},
            {"in_D", in_gross_hopkins(*this)},
            {"in_H", in_H(*this)},
            {"boundary", std::vector<int>(bd.begin(), bd.end())}};
}

newton_polygon polygon_from_slopes(int n, long q, std::vector<rat> slopes) {
    check_nq(n, q);
    if (static_cast<int>(slopes.size()) != n) throw std::invalid_argument("polygon: need exactly n slopes");
    newton_polygon p{n, q, std::move(slopes), {}};
    rat mass = 0;
    for (int j = 1; j <= n; ++j) {
        if (sgn(p.slopes[j - 1]) <= 0) throw std::invalid_argument("polygon: slopes must be positive");
        if (j > 1 && p.slopes[j - 1] > p.slopes[j - 2]) throw std::invalid_argument("polygon: slopes must be non-increasing");
        mass += rat(p.abscissa(j) - p.abscissa(j - 1)) * p.slopes[j - 1];
    }
    if (mass != 1) throw std::invalid_argument("polygon: slope mass " + rat_str(mass) + " != 1");
    p.vertex_vals.push_back(rat(1));
    for (int j = 1; j <= n; ++j)
        p.vertex_vals.push_back(p.vertex_vals.back() - rat(p.abscissa(j) - p.abscissa(j - 1)) * p.slopes[j - 1]);
    return p;
}

newton_polygon polygon_from_vals(int n, long q, const std::vector<val>& vals) {
    check_nq(n, q);
    if (static_cast<int>(vals.size()) != n - 1) throw std::invalid_argument("polygon: need n-1 valuations");
    std::vector<pt> pts{{rat(1), rat(1)}, {rat(ipow(q, n)), rat(0)}};
    for (int i = 1; i < n; ++i) {
        if (vals[i - 1].is_inf()) continue;
        if (vals[i - 1] < val(0)) throw std::invalid_argument("polygon: valuations must be >= 0");
        pts.push_back({rat(ipow(q, i)), vals[i - 1].value()});
    }
    auto h = lower_hull(pts);
    std::vector<rat> V;
    for (int j = 0; j <= n; ++j) V.push_back(hull_at(h, rat(ipow(q, j))));
    std::vector<rat> sl;
    for (int j = 1; j <= n; ++j) sl.push_back((V[j - 1] - V[j]) / rat(ipow(q, j) - ipow(q, j - 1)));
    for (auto& s : sl) s.canonicalize();
    if (sgn(sl.back()) <= 0) throw std::invalid_argument("polygon: a coordinate of valuation 0 gives a non-positive slope");
    return polygon_from_slopes(n, q, sl);
}

newton_polygon polygon_from_multiset(int n, long q, const val_multiset& ms0) {
    check_nq(n, q);
    val_multiset ms = normalize_multiset(ms0);
    const long total = ipow(q, n) - 1;
    if (multiset_count(ms) != total)
        throw std::invalid_argument("polygon_from_multiset: count " + std::to_string(multiset_count(ms)) + " != q^n - 1");
    // expand lazily: position -> value
    auto value_at = [&](long pos) {
        for (auto& [v, m] : ms) {
            if (pos < m) return v;
            pos -= m;
        }
        throw std::logic_error("position outside multiset");
    };
    std::vector<rat> sl;
    for (int j = 1; j <= n; ++j) {
        long a = ipow(q, j - 1) - 1, b = ipow(q, j) - 1;  // positions [a, b)
        rat v = value_at(a);
        if (value_at(b - 1) != v)
            throw std::invalid_argument("polygon_from_multiset: values in block " + std::to_string(j) + " are not constant");
        sl.push_back(v);
    }
    return polygon_from_slopes(n, q, sl);
}

std::pair<rat, rat> lambda_extremes(int n, long q, const std::vector<val>& vals) {
    check_nq(n, q);
    if (static_cast<int>(vals.size()) != n - 1) throw std::invalid_argument("lambda_extremes: need n-1 valuations");
    auto v = [&](int i) -> val {
        if (i == 0) return val(1);
        if (i == n) return val(0);
        return vals[i - 1];
    };
    bool have = false;
    rat l1, ln;
    for (int i = 1; i <= n; ++i) {
        if (v(i).is_inf()) continue;
        rat t = (1 - v(i).value()) / rat(ipow(q, i) - 1);
        if (!have || t > l1) l1 = t;
        have = true;
    }
    have = false;
    for (int j = 0; j < n; ++j) {
        if (v(j).is_inf()) continue;
        rat t = v(j).value() / rat(ipow(q, n) - ipow(q, j));
        if (!have || t < ln) ln = t;
        have = true;
    }
    l1.canonicalize();
    ln.canonicalize();
    return {l1, ln};
}

bool in_gross_hopkins(const newton_polygon& p) {
    for (int i = 1; i < p.n; ++i)
        if (p.vertex_vals[i] < 1 - frac(i, p.n)) return false;
    return true;
}

bool in_gross_hopkins(int n, long q, const std::vector<val>& vals) { return in_gross_hopkins(polygon_from_vals(n, q, vals)); }

std::set<int> boundary_indices(const newton_polygon& p) {
    std::set<int> b;
    for (int i = 1; i < p.n; ++i)
        if (p.vertex_vals[i] == 1 - frac(i, p.n)) b.insert(i);
    return b;
}

bool in_H(const newton_polygon& p) { return p.slopes.front() / rat(ipow(p.q, p.n)) < p.slopes.back(); }

newton_polygon reference_polygon(int n, long q) {
    std::vector<rat> sl;
    for (int j = 1; j <= n; ++j) sl.push_back(frac(1, n * (ipow(q, j) - ipow(q, j - 1))));
    for (auto& s : sl) s.canonicalize();
    return polygon_from_slopes(n, q, sl);
}

newton_polygon cm_polygon(int n, long q, int e) {
    check_nq(n, q);
    if (e < 1 || n % e != 0) throw std::invalid_argument("cm_polygon: e must divide n");
    const int f = n / e;
    std::vector<rat> sl;
    for (int k = 0; k < e; ++k) {
        rat s = frac(1, e * (ipow(q, (k + 1) * f) - ipow(q, k * f)));
        s.canonicalize();
        for (int t = 0; t < f; ++t) sl.push_back(s);
    }
    return polygon_from_slopes(n, q, sl);
}

val_multiset normalize_multiset(val_multiset ms) {
    std::map<rat, long> m;
    for (auto& [v, c] : ms) {
        if (c < 0) throw std::invalid_argument("multiset: negative multiplicity");
        if (c) m[v] += c;
    }
    val_multiset out(m.rbegin(), m.rend());
    return out;
}

long multiset_count(const val_multiset& ms) {
    long c = 0;
    for (auto& [v, m] : ms) c += m;
    return c;
}

nlohmann::json multiset_json(const val_multiset& ms) {
    nlohmann::json a = nlohmann::json::array();
    for (auto& [v, m] : ms) a.push_back({{"value", rat_json(v)}, {"text", rat_str(v)}, {"multiplicity", m}});
    return a;
}

val_multiset level_one_values(const newton_polygon& p) {
    val_multiset ms;
    for (int j = 1; j <= p.n; ++j) ms.push_back({p.lambda(j), p.abscissa(j) - p.abscissa(j - 1)});
    return normalize_multiset(ms);
}

val_multiset torsion_valuations(const newton_polygon& p, int k) {
    if (k < 0) throw std::invalid_argument("torsion_valuations: k must be >= 0");
    if (!in_H(p)) throw std::domain_error("torsion_valuations: polygon not in H");
    if (static_cast<double>(p.n) * k * std::log2(static_cast<double>(p.q)) > 60)
        throw std::invalid_argument("torsion_valuations: count exceeds 2^60");
    val_multiset ms;
    for (int m = 1; m <= k; ++m) {
        const long scale = ipow(p.q, static_cast<unsigned>(p.n * (m - 1)));
        for (int j = 1; j <= p.n; ++j) {
            rat v = p.lambda(j) / rat(scale);
            v.canonicalize();
            ms.push_back({v, (p.abscissa(j) - p.abscissa(j - 1)) * scale});
        }
    }
    return normalize_multiset(ms);
}

std::string polygon_svg(const newton_polygon& p, bool overlay) {
    const double W = 480, H = 320, pad = 40;
    const double xmax = static_cast<double>(p.abscissa(p.n));
    auto X = [&](double x) { return pad + (W - 2 * pad) * (x - 1) / (xmax - 1); };
    auto Y = [&](double y) { return H - pad - (H - 2 * pad) * y; };
    auto path = [&](const newton_polygon& poly) {
        std::ostringstream os;
        for (int j = 0; j <= poly.n; ++j)
            os << (j ? " L " : "M ") << X(static_cast<double>(poly.abscissa(j))) << " "
               << Y(poly.vertex_vals[j].get_d());
        return os.str();
    };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    os << "<line x1=\"" << pad << "\" y1=\"" << Y(0) << "\" x2=\"" << W - pad << "\" y2=\"" << Y(0)
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << pad << "\" y1=\"" << Y(0) << "\" x2=\"" << pad << "\" y2=\"" << Y(1)
       << "\" stroke=\"black\"/>\n";
    if (overlay) {
        auto ref = reference_polygon(p.n, p.q);
        os << "<path d=\"" << path(ref) << "\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    }
    os << "<path d=\"" << path(p) << "\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\"/>\n";
    for (int j = 0; j <= p.n; ++j) {
        double cx = X(static_cast<double>(p.abscissa(j))), cy = Y(p.vertex_vals[j].get_d());
        os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"3\" fill=\"steelblue\"/>\n";
        os << "<text x=\"" << cx + 4 << "\" y=\"" << cy - 6 << "\" font-size=\"10\">" << rat_str(p.vertex_vals[j])
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string polygon_ascii(const newton_polygon& p, int width, int height) {
    std::vector<std::string> g(height + 1, std::string(width + 1, ' '));
    const double xmax = static_cast<double>(p.abscissa(p.n));
    auto plot = [&](const newton_polygon& poly, char c) {
        for (int col = 0; col <= width; ++col) {
            double x = 1 + (xmax - 1) * col / width;
            int j = 1;
            while (j < poly.n && x > static_cast<double>(poly.abscissa(j))) ++j;
            double x0 = static_cast<double>(poly.abscissa(j - 1)), x1 = static_cast<double>(poly.abscissa(j));
            double y0 = poly.vertex_vals[j - 1].get_d(), y1 = poly.vertex_vals[j].get_d();
            double y = y0 + (y1 - y0) * (x - x0) / (x1 - x0);
            int row = height - static_cast<int>(y * height + 0.5);
            if (row >= 0 && row <= height && (g[row][col] == ' ' || c == '*')) g[row][col] = c;
        }
    };
    plot(reference_polygon(p.n, p.q), '.');
    plot(p, '*');
    std::string s;
    for (auto& r : g) s += "|" + r + "\n";
    s += "+" + std::string(width + 1, '-') + "\n";
    return s;
}

}  // namespace lt
