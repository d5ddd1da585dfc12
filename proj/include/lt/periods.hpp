#pragma once

#include "lt/trunc_series.hpp"

#include <map>
#include <vector>

namespace lt {

struct display_data {
    int n;
    long q;
    series_matrix A, B, C;
    series_matrix B_inv;  // B^{-1}: a permutation with 1/pi entries
    // F on the basis e, Ve, ..., V^{n-1}e; coincides with A
    const series_matrix& f_operator() const { return A; }
};

display_data display_matrices(int n, long q, long cap, ring_ptr ring);

struct period_step {
    long k;
    int pivot;               // b = k mod n
    long pivot_min_pi_exp;   // min pi-exponent of f_b when used
    long alpha_updates;      // steps with b != 0 before this one
};

struct period_tuple {
    int n;
    long q;
    unsigned depth;
    std::vector<trunc_series> f;  // f_0 .. f_{n-1}, cap q^depth
    std::vector<period_step> log;
    nlohmann::json to_json() const;
};

// default coefficient ring: Z_p mod p^N with N large enough for exact coefficients
ring_ptr default_period_ring(long q, unsigned depth);

period_tuple period_series(int n, long q, unsigned depth, ring_ptr ring);
period_tuple period_series(int n, long q, unsigned depth);

// (1,0,...,0) A A^(s) ... A^(s^{depth-1}) B^{-depth}
std::vector<trunc_series> period_product(int n, long q, unsigned depth, ring_ptr ring);

// Laurent series in one variable x: exponent -> coefficient, exponents < cap
struct laurent_x_series {
    long cap;
    std::map<long, laurent> terms;
    std::string str() const;
    nlohmann::json to_json() const;
};

// <x^{q^{2k}}/pi, x^{q^{2k-1}}, ..., x/pi> expanded modulo x^cap
laurent_x_series period_cf2(long q, unsigned k, long cap, ring_ptr ring);
// largest cap for which the k-th continued fraction is a valid truncation
long period_cf2_max_cap(long q, unsigned k);
// x-adic ratio pi*f_0/f_1 from a depth-(2k+1) tuple, to compare with period_cf2
laurent_x_series period_ratio2(const period_tuple& pt, long cap);

struct period_value {
    val v;
    bool below_precision = false;
    bool determined = false;  // v lies below both the precision horizon and the truncation tail
};

// valuation the omitted tail of the tuple is guaranteed to exceed, given min v(x_k) over nonzero coordinates
val period_tail_bound(long q, unsigned depth, const val& vmin);

std::vector<period_value> evaluate_periods(const period_tuple& pt, const std::vector<ram_elem>& point);

struct thm23_result {
    bool source;
    val max_lhs;  // sup_i (1 - v_i) / (q^n (q^i - 1))
    val min_rhs;  // inf_j v_j / (q^n - q^j)
};

// source-domain inequalities with v_0 = 1 (x_0 = pi) and v_n = 0 (x_n = 1)
thm23_result thm23_domains(int n, long q, const std::vector<val>& vals);

}  // namespace lt
