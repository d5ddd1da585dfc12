#pragma once

#include "lt/val.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

namespace lt {

// monomial: variable -> exponent; the variable "pi" may carry a negative exponent
using sym_monomial = std::map<std::string, int>;

// polynomial in named variables over Q, Laurent in pi
class sym_poly {
public:
    sym_poly() = default;
    sym_poly(long c);
    sym_poly(const rat& c);
    static sym_poly var(const std::string& name, int e = 1);
    static sym_poly pi(int e = 1) { return var("pi", e); }

    const std::map<sym_monomial, rat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    sym_poly operator+(const sym_poly& o) const;
    sym_poly operator-(const sym_poly& o) const;
    sym_poly operator-() const;
    sym_poly operator*(const sym_poly& o) const;
    sym_poly pow(long e) const;
    sym_poly& operator+=(const sym_poly& o) { return *this = *this + o; }
    bool operator==(const sym_poly& o) const { return t_ == o.t_; }

    // replace variables by polynomials
    sym_poly substitute(const std::map<std::string, sym_poly>& s) const;
    // coefficient of a monomial in the given variables, as a polynomial in the others
    std::map<sym_monomial, sym_poly> collect(const std::set<std::string>& vars) const;
    std::set<std::string> variables() const;
    int degree_in(const std::set<std::string>& vars) const;  // max total degree
    // p-integral after specializing pi = p
    bool pi_integral(long p) const;
    std::string str() const;

private:
    std::map<sym_monomial, rat> t_;
    void add_term(const sym_monomial& m, const rat& c);
};

// quotient of the symbolic ring by nilpotence relations
struct ring_rules {
    long char_p = 0;                     // reduce coefficients mod p (0: none)
    std::map<std::string, int> nil_exp;  // var^k = 0
    std::set<std::string> J;             // generators of the ideal J
    int J_power_zero = 0;                // J^k = 0 (0: no relation)
    bool pi_kills_J = false;             // pi J = 0

    sym_poly reduce(const sym_poly& f) const;
};

// ghost component w_i = sum_j pi^j x_j^{q^{i-j}}
sym_poly ghost_component(const std::vector<sym_poly>& x, int i, long q);
std::vector<sym_poly> ghost(const std::vector<sym_poly>& x, long q);
// inverse of the ghost map over the pi-torsion-free ring
std::vector<sym_poly> from_ghost(const std::vector<sym_poly>& g, long q);

struct witt_structure {
    int N = 0;
    long q = 0;
    long p = 0;
    std::vector<sym_poly> S, P;  // sum and product in x_i, y_i
    nlohmann::json to_json() const;
};

std::vector<sym_poly> witt_vars(const std::string& name, int N);
// throws std::domain_error on a non-integral coefficient
witt_structure witt_structure_polys(int N, long q);
// integrality tested against an explicit prime p (a wrong p signals a wrong (q, pi) hypothesis)
witt_structure witt_structure_polys(int N, long q, long p);

std::vector<sym_poly> witt_add(const witt_structure& s, const std::vector<sym_poly>& x, const std::vector<sym_poly>& y,
                               const ring_rules* rules = nullptr);
std::vector<sym_poly> witt_mul(const witt_structure& s, const std::vector<sym_poly>& x, const std::vector<sym_poly>& y,
                               const ring_rules* rules = nullptr);
std::vector<sym_poly> teichmuller(const sym_poly& a, int N);

// F through the ghost shift (the result has length N-1), V as shift, scalings
std::vector<sym_poly> witt_F(const std::vector<sym_poly>& x, long q);
std::vector<sym_poly> witt_V(const std::vector<sym_poly>& x);
// O-module action of a: ghost components all multiplied by a
std::vector<sym_poly> witt_scale(const sym_poly& a, const std::vector<sym_poly>& x, long q);
// product with the Teichmuller lift [a]: x_i -> a^{q^i} x_i
std::vector<sym_poly> witt_teichmuller_scale(const sym_poly& a, const std::vector<sym_poly>& x, long q);

// O-divided powers on an ideal J of a test ring
struct opd {
    long q = 0;
    ring_rules rules;
    std::function<sym_poly(const sym_poly&)> gamma;
    std::vector<sym_poly> generators;  // of J, used for the nilpotence test
    std::string name;
};

// gamma(x) = x^q / pi on a pi-torsion-free ring
opd opd_torsion_free(long q);
// J^2 = pi J = 0, gamma Frobenius-linear with gamma(eps_k) = images[eps_k]
opd opd_square_zero(long q, long char_p, const std::map<std::string, sym_poly>& images);

struct opd_axiom_report {
    bool scaling = true;    // gamma(a x) = a^q gamma(x)
    bool pi_times = true;   // pi gamma(x) = x^q
    bool additive = true;   // q-binomial addition law
    bool ok() const { return scaling && pi_times && additive; }
};

opd_axiom_report check_opd_axioms(const opd& o, const std::vector<sym_poly>& scalars,
                                  const std::vector<sym_poly>& elements);
// gamma^n(x) pi^{1+q+...+q^{n-1}-n}
sym_poly opd_delta(const opd& o, const sym_poly& x, int n);
bool opd_nilpotent(const opd& o, int bound = 16);

// log_i = sum_j delta_{i-j}(x_j)
std::vector<sym_poly> log_opd(const opd& o, const std::vector<sym_poly>& x);
// inverse of log_opd; throws std::domain_error unless the divided powers are nilpotent
std::vector<sym_poly> exp_opd(const opd& o, const std::vector<sym_poly>& y);

// exp f = sum (-1)^k Pi^k f, throws std::domain_error if Pi^k f does not vanish within the bound
using vec_map = std::function<std::vector<sym_poly>(const std::vector<sym_poly>&)>;
std::vector<sym_poly> exp_nilpotent_hom(const vec_map& Pi, const std::vector<sym_poly>& f, const ring_rules& rules,
                                        int bound = 64, int* terms = nullptr);

// sigma-module over W(k) with blocks Phi_tau : D_tau -> D_{tau+1}, tau in Z/f0; entries rational (sigma acts trivially)
struct sigma_module {
    long p = 0;
    int rank = 0;
    std::vector<std::vector<std::vector<rat>>> blocks;  // f0 blocks, rank x rank
    nlohmann::json to_json() const;
};

// p-adic valuations of the elementary divisors
std::vector<long> smith_valuations(const std::vector<std::vector<rat>>& m, long p);

struct dieudonne_result {
    sigma_module module;  // single block phi_O on D_{tau_0}
    std::vector<long> elementary_divisors;
    bool pi_condition = false;  // pi M inside phi_O(M)
    int height_O = 0;
    int height = 0;
    nlohmann::json to_json() const;
};

// (D_{tau_0}, (pi / p^{f0}) phi^{f0}) with pi = p; throws std::domain_error if V is not invertible off tau_0
dieudonne_result dieudonne_O(const sigma_module& sm);

struct witt_selftest_report {
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<witt_structure> structures;
    bool ok() const;
    nlohmann::json to_json() const;
};

witt_selftest_report witt_selftest();

}  // namespace lt
