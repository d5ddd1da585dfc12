#include "lt/lattice.hpp"

#include <sstream>
#include <stdexcept>

namespace lt {

qmatrix qmatrix::identity(int n) {
    qmatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

qmatrix qmatrix::diag(const std::vector<rat>& d) {
    qmatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

qmatrix qmatrix::from_rows(const std::vector<std::vector<rat>>& r) {
    if (r.empty()) throw std::invalid_argument("matrix: no rows");
    qmatrix m(static_cast<int>(r.size()), static_cast<int>(r[0].size()));
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(r[i].size()) != m.cols) throw std::invalid_argument("matrix: ragged rows");
        for (int j = 0; j < m.cols; ++j) m(i, j) = r[i][j];
    }
    return m;
}

qmatrix qmatrix::operator*(const qmatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix product: shape mismatch");
    qmatrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            if ((*this)(i, k) == 0) continue;
            for (int j = 0; j < o.cols; ++j) r(i, j) += (*this)(i, k) * o(k, j);
        }
    return r;
}

qmatrix qmatrix::operator*(const rat& s) const {
    qmatrix r = *this;
    for (auto& x : r.a) x *= s;
    return r;
}

std::vector<rat> qmatrix::column(int j) const {
    std::vector<rat> c(rows);
    for (int i = 0; i < rows; ++i) c[i] = (*this)(i, j);
    return c;
}

qmatrix qmatrix::inverse() const {
    if (rows != cols) throw std::invalid_argument("inverse: matrix not square");
    const int n = rows;
    qmatrix m = *this, inv = identity(n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (m(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("inverse: singular matrix");
        if (piv != c)
            for (int j = 0; j < n; ++j) {
                std::swap(m(c, j), m(piv, j));
                std::swap(inv(c, j), inv(piv, j));
            }
        rat d = m(c, c);
        for (int j = 0; j < n; ++j) {
            m(c, j) /= d;
            inv(c, j) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || m(r, c) == 0) continue;
            rat f = m(r, c);
            for (int j = 0; j < n; ++j) {
                m(r, j) -= f * m(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

std::string qmatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols; ++j) os << (j ? ", " : "") << rat_str((*this)(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

long vp_rat(const rat& x, long p) {
    if (x == 0) throw std::domain_error("vp_rat: valuation of zero");
    long k = 0;
    mpz_class num = abs(x.get_num()), den = x.get_den();
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

namespace {

mpz_class zpow(long p, long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return r;
}

rat ppow(long p, long e) {
    if (e >= 0) return rat(zpow(p, e));
    return rat(mpz_class(1), zpow(p, -e));
}

}  // namespace

rat reduce_mod_ppow(const rat& x, long p, long a) {
    if (x == 0) return rat(0);
    // x = num / (p^s d'), gcd(d', p) = 1
    mpz_class num = x.get_num(), den = x.get_den();
    long s = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p))) {
        den /= p;
        ++s;
    }
    if (a + s <= 0) return rat(0);
    mpz_class M = zpow(p, a + s), inv, y;
    if (!mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), M.get_mpz_t())) throw std::logic_error("reduce_mod_ppow: no inverse");
    y = (num * inv) % M;
    if (y < 0) y += M;
    rat r(y, zpow(p, s));
    r.canonicalize();
    return r;
}

lattice lattice::from_generators(int n, long p, const std::vector<std::vector<rat>>& columns) {
    if (n < 1) throw std::invalid_argument("lattice: n must be >= 1");
    std::vector<std::vector<rat>> act;
    for (auto& c : columns) {
        if (static_cast<int>(c.size()) != n) throw std::invalid_argument("lattice: generator length mismatch");
        act.push_back(c);
    }
    std::vector<std::vector<rat>> basis(n);
    for (int row = n - 1; row >= 0; --row) {
        int piv = -1;
        long best = 0;
        for (size_t c = 0; c < act.size(); ++c) {
            if (act[c][row] == 0) continue;
            long v = vp_rat(act[c][row], p);
            if (piv < 0 || v < best) {
                piv = static_cast<int>(c);
                best = v;
            }
        }
        if (piv < 0) throw std::domain_error("lattice: generators do not span (singular matrix)");
        std::vector<rat> pc = act[piv];
        act.erase(act.begin() + piv);
        // scale by a unit so the pivot is exactly p^best
        rat unit = pc[row] / ppow(p, best);
        for (auto& x : pc) x /= unit;
        for (auto& c : act) {
            if (c[row] == 0) continue;
            rat f = c[row] / pc[row];  // in Z_(p)
            for (int i = 0; i <= row; ++i) c[i] -= f * pc[i];
        }
        basis[row] = pc;
    }
    for (auto& c : act)
        for (auto& x : c)
            if (x != 0) throw std::logic_error("lattice: leftover generator not reduced");
    // reduce entries above each pivot
    for (int j = 0; j < n; ++j)
        for (int i = j - 1; i >= 0; --i) {
            long a = vp_rat(basis[i][i], p);
            rat r = reduce_mod_ppow(basis[j][i], p, a);
            rat f = (basis[j][i] - r) / basis[i][i];
            if (f != 0)
                for (int t = 0; t <= i; ++t) basis[j][t] -= f * basis[i][t];
            basis[j][i] = r;
        }
    lattice L;
    L.n_ = n;
    L.p_ = p;
    L.b_ = qmatrix(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            rat x = basis[j][i];
            x.canonicalize();
            L.b_(i, j) = x;
        }
    return L;
}

lattice lattice::from_matrix(long p, const qmatrix& m) {
    std::vector<std::vector<rat>> cols;
    for (int j = 0; j < m.cols; ++j) cols.push_back(m.column(j));
    return from_generators(m.rows, p, cols);
}

lattice lattice::standard(int n, long p) { return from_matrix(p, qmatrix::identity(n)); }

std::vector<long> lattice::pivot_exponents() const {
    std::vector<long> e;
    for (int i = 0; i < n_; ++i) e.push_back(vp_rat(b_(i, i), p_));
    return e;
}

long lattice::det_valuation() const {
    long s = 0;
    for (long e : pivot_exponents()) s += e;
    return s;
}

lattice lattice::scaled(long k) const { return from_matrix(p_, b_ * ppow(p_, k)); }

lattice lattice::transformed(const qmatrix& g) const { return from_matrix(p_, g * b_); }

lattice lattice::sum(const lattice& o) const {
    std::vector<std::vector<rat>> cols;
    for (int j = 0; j < n_; ++j) cols.push_back(b_.column(j));
    for (int j = 0; j < n_; ++j) cols.push_back(o.b_.column(j));
    return from_generators(n_, p_, cols);
}

bool lattice::contains(const lattice& o) const { return sum(o) == *this; }

std::vector<rat> lattice::coordinates(const std::vector<rat>& v) const {
    if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("coordinates: length mismatch");
    std::vector<rat> c(n_), r = v;
    for (int i = n_ - 1; i >= 0; --i) {
        c[i] = r[i] / b_(i, i);
        for (int t = 0; t <= i; ++t) r[t] -= c[i] * b_(t, i);
    }
    return c;
}

bool lattice::contains_vector(const std::vector<rat>& v) const {
    for (auto& c : coordinates(v))
        if (c != 0 && vp_rat(c, p_) < 0) return false;
    return true;
}

std::string lattice::key() const {
    std::string s = std::to_string(n_) + ":";
    for (auto& x : b_.a) s += rat_str(x) + ",";
    return s;
}

nlohmann::json lattice::to_json() const {
    nlohmann::json off = nlohmann::json::array();
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < j; ++i)
            if (b_(i, j) != 0) off.push_back({{"row", i}, {"col", j}, {"value", rat_str(b_(i, j))}});
    return {{"n", n_}, {"p", p_}, {"pivot_exponents", pivot_exponents()}, {"offdiag", off}};
}

}  // namespace lt
