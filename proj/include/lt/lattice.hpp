#pragma once

#include "lt/val.hpp"

#include <string>
#include <vector>

#include "json.hpp"

namespace lt {

// dense rational matrix, row-major
struct qmatrix {
    int rows = 0, cols = 0;
    std::vector<rat> a;

    qmatrix() = default;
    qmatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, rat(0)) {}
    static qmatrix identity(int n);
    static qmatrix diag(const std::vector<rat>& d);
    static qmatrix from_rows(const std::vector<std::vector<rat>>& r);

    rat& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const rat& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
    qmatrix operator*(const qmatrix& o) const;
    qmatrix operator*(const rat& s) const;
    bool operator==(const qmatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    std::vector<rat> column(int j) const;
    // throws std::domain_error when singular
    qmatrix inverse() const;
    std::string str() const;
};

long vp_rat(const rat& x, long p);  // -1 sentinel never used: throws on 0

// canonical representative of x modulo p^a Z_(p), in Z[1/p] and [0, p^a)
rat reduce_mod_ppow(const rat& x, long p, long a);

// Z_(p)-lattice of full rank in Q^n: basis columns in upper triangular Hermite form,
// pivots p^{a_j}, entries above a pivot reduced modulo that pivot
class lattice {
public:
    // generators as columns (any number >= n); throws if they do not span Q^n
    static lattice from_generators(int n, long p, const std::vector<std::vector<rat>>& columns);
    static lattice from_matrix(long p, const qmatrix& basis);
    static lattice standard(int n, long p);

    int n() const { return n_; }
    long p() const { return p_; }
    const qmatrix& basis() const { return b_; }
    std::vector<long> pivot_exponents() const;
    long det_valuation() const;

    lattice scaled(long k) const;             // p^k * L
    lattice transformed(const qmatrix& g) const;  // g * L
    lattice sum(const lattice& o) const;
    bool contains(const lattice& o) const;
    bool contains_vector(const std::vector<rat>& v) const;
    // coordinates of v in the basis (rational)
    std::vector<rat> coordinates(const std::vector<rat>& v) const;

    bool operator==(const lattice& o) const { return n_ == o.n_ && p_ == o.p_ && b_ == o.b_; }
    bool operator<(const lattice& o) const { return key() < o.key(); }
    std::string key() const;
    nlohmann::json to_json() const;

private:
    int n_ = 0;
    long p_ = 0;
    qmatrix b_;
};

}  // namespace lt
