#include "lt/fq_subspace.hpp"

#include <functional>
#include <stdexcept>

namespace lt {

long mod_p(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

long inv_mod_p(long a, long p) {
    a = mod_p(a, p);
    if (a == 0) throw std::domain_error("inverse of 0 mod p");
    long r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

subspace span(int n, long p, const std::vector<fvec>& vs) {
    std::vector<fvec> m;
    for (auto& v : vs) {
        if (static_cast<int>(v.size()) != n) throw std::invalid_argument("span: vector length mismatch");
        fvec w(n);
        for (int i = 0; i < n; ++i) w[i] = mod_p(v[i], p);
        m.push_back(w);
    }
    int r = 0;
    for (int c = 0; c < n && r < static_cast<int>(m.size()); ++c) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(m.size()); ++i)
            if (m[i][c]) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        long iv = inv_mod_p(m[r][c], p);
        for (auto& x : m[r]) x = x * iv % p;
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
            if (i == r || !m[i][c]) continue;
            long f = m[i][c];
            for (int j = 0; j < n; ++j) m[i][j] = mod_p(m[i][j] - f * m[r][j], p);
        }
        ++r;
    }
    m.resize(r);
    return subspace{n, p, m};
}

subspace subspace_sum(const subspace& a, const subspace& b) {
    std::vector<fvec> v = a.rows;
    v.insert(v.end(), b.rows.begin(), b.rows.end());
    return span(a.n, a.p, v);
}

bool subspace::contains(const fvec& v) const {
    std::vector<fvec> all = rows;
    all.push_back(v);
    return span(n, p, all).dim() == dim();
}

bool subspace::contains(const subspace& o) const {
    for (auto& r : o.rows)
        if (!contains(r)) return false;
    return true;
}

std::string subspace::str() const {
    std::string s = "<";
    for (size_t i = 0; i < rows.size(); ++i) {
        s += i ? ";" : "";
        for (long x : rows[i]) s += std::to_string(x);
    }
    return s + ">";
}

std::vector<subspace> all_subspaces(int n, long p, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("all_subspaces: dimension out of range");
    std::vector<subspace> out;
    // choose pivot columns, then fill the free entries
    std::vector<int> piv(k);
    std::function<void(int, int)> choose = [&](int idx, int start) {
        if (idx == k) {
            std::vector<std::pair<int, int>> free;  // (row, col)
            for (int r = 0; r < k; ++r)
                for (int c = piv[r] + 1; c < n; ++c) {
                    bool is_piv = false;
                    for (int t = 0; t < k; ++t) is_piv = is_piv || piv[t] == c;
                    if (!is_piv) free.push_back({r, c});
                }
            std::vector<fvec> m(k, fvec(n, 0));
            for (int r = 0; r < k; ++r) m[r][piv[r]] = 1;
            std::function<void(size_t)> fill = [&](size_t f) {
                if (f == free.size()) {
                    out.push_back(subspace{n, p, m});
                    return;
                }
                for (long x = 0; x < p; ++x) {
                    m[free[f].first][free[f].second] = x;
                    fill(f + 1);
                }
                m[free[f].first][free[f].second] = 0;
            };
            fill(0);
            return;
        }
        for (int c = start; c < n; ++c) {
            piv[idx] = c;
            choose(idx + 1, c + 1);
        }
    };
    choose(0, 0);
    return out;
}

std::vector<subspace> proper_subspaces(int n, long p) {
    std::vector<subspace> out;
    for (int k = 1; k < n; ++k) {
        auto s = all_subspaces(n, p, k);
        out.insert(out.end(), s.begin(), s.end());
    }
    return out;
}

std::vector<std::vector<subspace>> all_flags(int n, long p, const std::vector<int>& dims) {
    for (size_t i = 0; i < dims.size(); ++i)
        if (dims[i] < 1 || dims[i] > n - 1 || (i && dims[i] <= dims[i - 1]))
            throw std::invalid_argument("all_flags: dimensions must increase within [1, n-1]");
    std::vector<std::vector<subspace>> level;
    for (int d : dims) level.push_back(all_subspaces(n, p, d));
    std::vector<std::vector<subspace>> out;
    std::vector<subspace> cur;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == dims.size()) {
            out.push_back(cur);
            return;
        }
        for (auto& s : level[i]) {
            if (i && !s.contains(cur.back())) continue;
            cur.push_back(s);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

long gaussian_binomial(int n, int k, long q) {
    if (k < 0 || k > n) return 0;
    long num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        long a = 1, b = 1;
        for (int t = 0; t < n - i; ++t) a *= q;
        for (int t = 0; t < i + 1; ++t) b *= q;
        num *= (a - 1);
        den *= (b - 1);
    }
    return num / den;
}

fvec coordinates_in(const std::vector<fvec>& basis, const fvec& v, long p) {
    const int k = static_cast<int>(basis.size());
    if (k == 0) {
        for (long x : v)
            if (mod_p(x, p)) throw std::domain_error("coordinates_in: vector outside the span");
        return {};
    }
    const int n = static_cast<int>(v.size());
    // augmented system: columns are basis vectors
    std::vector<fvec> m(n, fvec(k + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) m[i][j] = mod_p(basis[j][i], p);
        m[i][k] = mod_p(v[i], p);
    }
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < k && r < n; ++c) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (m[i][c]) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::domain_error("coordinates_in: basis is dependent");
        std::swap(m[r], m[piv]);
        long iv = inv_mod_p(m[r][c], p);
        for (auto& x : m[r]) x = x * iv % p;
        for (int i = 0; i < n; ++i) {
            if (i == r || !m[i][c]) continue;
            long f = m[i][c];
            for (int j = 0; j <= k; ++j) m[i][j] = mod_p(m[i][j] - f * m[r][j], p);
        }
        pivcol.push_back(c);
        ++r;
    }
    for (int i = r; i < n; ++i)
        if (m[i][k]) throw std::domain_error("coordinates_in: vector outside the span");
    fvec c(k);
    for (int i = 0; i < r; ++i) c[pivcol[i]] = m[i][k];
    return c;
}

}  // namespace lt
