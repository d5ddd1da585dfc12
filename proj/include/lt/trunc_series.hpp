#pragma once

#include "lt/laurent.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace lt {

using exponent = std::vector<long>;

// Power series in x_1..x_nvars over laurent coefficients, modulo (x_k^cap).
class trunc_series {
public:
    trunc_series(ring_ptr r, int nvars, long cap);

    static trunc_series constant(ring_ptr r, int nvars, long cap, const laurent& c);
    static trunc_series variable(ring_ptr r, int nvars, long cap, int k);  // x_k, 1-based
    static trunc_series monomial(ring_ptr r, int nvars, long cap, const exponent& e, const laurent& c);

    const ring_ptr& ring() const { return ring_; }
    int nvars() const { return nvars_; }
    long cap() const { return cap_; }
    const std::map<exponent, laurent>& terms() const { return coeffs_; }
    laurent coeff(const exponent& e) const;
    laurent constant_term() const { return coeff(exponent(nvars_, 0)); }
    bool is_zero() const { return coeffs_.empty(); }
    size_t size() const { return coeffs_.size(); }

    void add_term(const exponent& e, const laurent& c);

    trunc_series operator+(const trunc_series& o) const;
    trunc_series operator-(const trunc_series& o) const;
    trunc_series operator-() const;
    trunc_series operator*(const trunc_series& o) const;
    trunc_series scale(const laurent& c) const;
    trunc_series shift_pi(long k) const;
    bool operator==(const trunc_series& o) const;

    // smallest pi-exponent among stored coefficients (0 for the zero series)
    long min_pi_exponent() const;
    // drop to a smaller cap
    trunc_series truncate(long cap2) const;
    trunc_series set_vars_zero() const;

    // substitute x_k -> values[k-1]; values live in the coefficient ring or an extension of it
    laurent evaluate(const std::vector<laurent>& point) const;

    std::string str() const;
    nlohmann::json to_json() const;

private:
    void check(const trunc_series& o) const;
    ring_ptr ring_;
    int nvars_;
    long cap_;
    std::map<exponent, laurent> coeffs_;
};

// x_k -> x_k^{q^i}; monomials reaching the cap are dropped
trunc_series frobenius_twist(const trunc_series& a, long q, unsigned i);

class series_matrix {
public:
    series_matrix(int rows, int cols, const trunc_series& zero);
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    trunc_series& at(int i, int j);
    const trunc_series& at(int i, int j) const;
    series_matrix operator*(const series_matrix& o) const;
    bool operator==(const series_matrix& o) const;
    series_matrix map(const std::function<trunc_series(const trunc_series&)>& f) const;
    nlohmann::json to_json() const;

private:
    int rows_, cols_;
    std::vector<trunc_series> e_;
};

// (vM)_j = sum_i v_i M_ij
std::vector<trunc_series> row_times_matrix(const std::vector<trunc_series>& v, const series_matrix& m);

}  // namespace lt
