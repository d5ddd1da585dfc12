#pragma once

#include <string>
#include <vector>

namespace lt {

using fvec = std::vector<long>;

// subspace of F_p^n given by its reduced row echelon basis
struct subspace {
    int n = 0;
    long p = 0;
    std::vector<fvec> rows;

    int dim() const { return static_cast<int>(rows.size()); }
    bool operator==(const subspace& o) const { return n == o.n && p == o.p && rows == o.rows; }
    bool operator<(const subspace& o) const { return rows < o.rows; }
    bool contains(const fvec& v) const;
    bool contains(const subspace& o) const;
    std::string str() const;
};

long mod_p(long a, long p);
long inv_mod_p(long a, long p);

// RREF of the span of the given vectors
subspace span(int n, long p, const std::vector<fvec>& vs);
subspace subspace_sum(const subspace& a, const subspace& b);

// every k-dimensional subspace of F_p^n, in a fixed order
std::vector<subspace> all_subspaces(int n, long p, int k);
// every proper nonzero subspace
std::vector<subspace> proper_subspaces(int n, long p);
// chains E_1 < E_2 < ... with the given dimensions
std::vector<std::vector<subspace>> all_flags(int n, long p, const std::vector<int>& dims);

long gaussian_binomial(int n, int k, long q);

// solve sum c_i basis[i] = v over F_p; throws if v is outside the span
fvec coordinates_in(const std::vector<fvec>& basis, const fvec& v, long p);

}  // namespace lt
