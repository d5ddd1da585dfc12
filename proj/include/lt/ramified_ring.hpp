#pragma once

#include "lt/val.hpp"

#include <memory>
#include <string>
#include <vector>

namespace lt {

// Z_p[u]/(u^m - p) known modulo p^N (= pi^N with pi = p).
struct ring_spec {
    long p;
    int m;
    int N;
    mpz_class pN;

    static std::shared_ptr<const ring_spec> make(long p, int m, int N);
    bool same(const ring_spec& o) const { return p == o.p && m == o.m && N == o.N; }
};
using ring_ptr = std::shared_ptr<const ring_spec>;

struct valuation_result {
    val v;
    bool below_precision = false;
};

class ram_elem {
public:
    explicit ram_elem(ring_ptr r);  // zero
    ram_elem(ring_ptr r, const mpz_class& n);
    ram_elem(ring_ptr r, long n) : ram_elem(std::move(r), mpz_class(n)) {}

    static ram_elem uniformizer(ring_ptr r);
    // base-p digits d_k of sum d_k u^k, k < m*N
    static ram_elem from_digits(ring_ptr r, const std::vector<int>& d);
    // a/b with b prime to p
    static ram_elem from_rational(ring_ptr r, const rat& x);

    const ring_ptr& ring() const { return ring_; }
    const std::vector<mpz_class>& residues() const { return res_; }
    std::vector<int> digits() const;
    std::string digit_string() const;

    bool is_zero() const;
    valuation_result valuation() const;
    // index k of the lowest nonzero u-digit, -1 for zero
    long lowest_digit() const;

    ram_elem operator+(const ram_elem& o) const;
    ram_elem operator-(const ram_elem& o) const;
    ram_elem operator-() const;
    ram_elem operator*(const ram_elem& o) const;
    ram_elem pow(unsigned long e) const;
    ram_elem inverse() const;
    bool operator==(const ram_elem& o) const;

    // exact division by p^k; requires v >= k
    ram_elem divide_p(long k) const;
    ram_elem mul_p(long k) const;
    ram_elem reduce(int N2) const;
    // zero every u-digit of index >= k
    ram_elem truncate_digits(long k) const;
    // same element viewed in a ring with the same p, m and precision N2 (zero-padded if larger)
    ram_elem with_precision(int N2) const;
    // embed Z_p[u]/(u^m-p) into Z_p[w]/(w^{m*k}-p) via u = w^k
    ram_elem embed(ring_ptr target) const;

    // signed representative of residue 0 when all higher residues vanish
    mpz_class balanced_integer() const;

private:
    void check(const ram_elem& o) const;
    void normalize();
    ring_ptr ring_;
    std::vector<mpz_class> res_;
};

long vp_mpz(const mpz_class& a, long p);

}  // namespace lt
