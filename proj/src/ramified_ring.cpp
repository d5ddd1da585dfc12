#include "lt/ramified_ring.hpp"

#include <stdexcept>

namespace lt {

ring_ptr ring_spec::make(long p, int m, int N) {
    if (p < 2) throw std::invalid_argument("ring: p must be a prime >= 2");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("ring: p must be prime");
    if (m < 1) throw std::invalid_argument("ring: ramification index must be >= 1");
    if (N < 1) throw std::invalid_argument("ring: precision must be >= 1");
    auto r = std::make_shared<ring_spec>();
    r->p = p;
    r->m = m;
    r->N = N;
    mpz_ui_pow_ui(r->pN.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(N));
    return r;
}

long vp_mpz(const mpz_class& a, long p) {
    if (a == 0) return -1;
    mpz_class t = abs(a);
    long k = 0;
    while (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p))) {
        t /= p;
        ++k;
    }
    return k;
}

ram_elem::ram_elem(ring_ptr r) : ring_(std::move(r)), res_(ring_->m, mpz_class(0)) {}

ram_elem::ram_elem(ring_ptr r, const mpz_class& n) : ram_elem(std::move(r)) {
    res_[0] = n;
    normalize();
}

void ram_elem::normalize() {
    for (auto& a : res_) {
        a %= ring_->pN;
        if (a < 0) a += ring_->pN;
    }
}

void ram_elem::check(const ram_elem& o) const {
    if (!ring_->same(*o.ring_)) throw std::invalid_argument("ring mismatch (p, m, N differ)");
}

ram_elem ram_elem::uniformizer(ring_ptr r) {
    ram_elem u(r);
    if (r->m == 1)
        u.res_[0] = r->p;
    else
        u.res_[1] = 1;
    u.normalize();
    return u;
}

ram_elem ram_elem::from_digits(ring_ptr r, const std::vector<int>& d) {
    const long mN = static_cast<long>(r->m) * r->N;
    if (static_cast<long>(d.size()) > mN) throw std::invalid_argument("too many digits for precision");
    ram_elem x(r);
    for (long k = static_cast<long>(d.size()) - 1; k >= 0; --k) {
        if (d[k] < 0 || d[k] >= r->p) throw std::invalid_argument("digit out of range");
        if (d[k] == 0) continue;
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(r->p), static_cast<unsigned long>(k / r->m));
        x.res_[k % r->m] += t * d[k];
    }
    x.normalize();
    return x;
}

ram_elem ram_elem::from_rational(ring_ptr r, const rat& x) {
    mpz_class den = x.get_den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(r->p)))
        throw std::invalid_argument("from_rational: denominator divisible by p");
    ram_elem a(r, mpz_class(x.get_num()));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), r->pN.get_mpz_t());
    return a * ram_elem(r, inv);
}

std::vector<int> ram_elem::digits() const {
    const int m = ring_->m, N = ring_->N;
    std::vector<int> d(static_cast<size_t>(m) * N, 0);
    for (int r = 0; r < m; ++r) {
        mpz_class a = res_[r];
        for (int t = 0; t < N && a != 0; ++t) {
            mpz_class dig = a % ring_->p;
            d[static_cast<size_t>(t) * m + r] = static_cast<int>(dig.get_si());
            a /= ring_->p;
        }
    }
    return d;
}

std::string ram_elem::digit_string() const {
    std::string s;
    for (int x : digits()) {
        if (!s.empty()) s += ring_->p > 10 ? "," : "";
        s += std::to_string(x);
    }
    return s;
}

bool ram_elem::is_zero() const {
    for (auto& a : res_)
        if (a != 0) return false;
    return true;
}

long ram_elem::lowest_digit() const {
    long best = -1;
    for (int r = 0; r < ring_->m; ++r) {
        if (res_[r] == 0) continue;
        long k = vp_mpz(res_[r], ring_->p) * ring_->m + r;
        if (best < 0 || k < best) best = k;
    }
    return best;
}

valuation_result ram_elem::valuation() const {
    long k = lowest_digit();
    if (k < 0) return {val::infinity(), true};
    return {val(frac(k, ring_->m)), false};
}

ram_elem ram_elem::operator+(const ram_elem& o) const {
    check(o);
    ram_elem s(ring_);
    for (int r = 0; r < ring_->m; ++r) s.res_[r] = res_[r] + o.res_[r];
    s.normalize();
    return s;
}

ram_elem ram_elem::operator-(const ram_elem& o) const {
    check(o);
    ram_elem s(ring_);
    for (int r = 0; r < ring_->m; ++r) s.res_[r] = res_[r] - o.res_[r];
    s.normalize();
    return s;
}

ram_elem ram_elem::operator-() const { return ram_elem(ring_) - *this; }

ram_elem ram_elem::operator*(const ram_elem& o) const {
    check(o);
    const int m = ring_->m;
    std::vector<mpz_class> acc(2 * m, mpz_class(0));
    for (int r = 0; r < m; ++r) {
        if (res_[r] == 0) continue;
        for (int s = 0; s < m; ++s)
            if (o.res_[s] != 0) acc[r + s] += res_[r] * o.res_[s];
    }
    ram_elem out(ring_);
    for (int t = 0; t < 2 * m; ++t) {
        if (t < m)
            out.res_[t] += acc[t];
        else
            out.res_[t - m] += acc[t] * ring_->p;  // u^m = p
    }
    out.normalize();
    return out;
}

ram_elem ram_elem::pow(unsigned long e) const {
    ram_elem r(ring_, 1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

ram_elem ram_elem::inverse() const {
    auto v = valuation();
    if (v.v != val(0)) throw std::domain_error("inverse of a non-unit");
    mpz_class a0inv;
    mpz_invert(a0inv.get_mpz_t(), res_[0].get_mpz_t(), mpz_class(ring_->p).get_mpz_t());
    ram_elem x(ring_, a0inv), two(ring_, 2), one(ring_, 1);
    // Newton: error valuation doubles each round
    for (int it = 0; it < 80; ++it) {
        if (*this * x == one) return x;
        x = x * (two - *this * x);
    }
    throw std::runtime_error("inverse: Newton iteration did not converge");
}

bool ram_elem::operator==(const ram_elem& o) const { return ring_->same(*o.ring_) && res_ == o.res_; }

ram_elem ram_elem::divide_p(long k) const {
    if (k < 0) return mul_p(-k);
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(ring_->p), static_cast<unsigned long>(k));
    ram_elem out(ring_);
    for (int r = 0; r < ring_->m; ++r) {
        if (!mpz_divisible_p(res_[r].get_mpz_t(), pk.get_mpz_t()))
            throw std::domain_error("divide_p: element not divisible");
        out.res_[r] = res_[r] / pk;
    }
    return out;
}

ram_elem ram_elem::mul_p(long k) const {
    if (k < 0) return divide_p(-k);
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(ring_->p), static_cast<unsigned long>(k));
    ram_elem out(ring_);
    for (int r = 0; r < ring_->m; ++r) out.res_[r] = res_[r] * pk;
    out.normalize();
    return out;
}

ram_elem ram_elem::reduce(int N2) const {
    if (N2 > ring_->N) throw std::invalid_argument("reduce: target precision exceeds source");
    return with_precision(N2);
}

ram_elem ram_elem::truncate_digits(long k) const {
    ram_elem out = *this;
    const int m = ring_->m;
    for (int r = 0; r < m; ++r) {
        long t = k <= r ? 0 : (k - r + m - 1) / m;
        if (t >= ring_->N) continue;
        mpz_class pt;
        mpz_ui_pow_ui(pt.get_mpz_t(), static_cast<unsigned long>(ring_->p), static_cast<unsigned long>(t));
        out.res_[r] %= pt;
    }
    return out;
}

ram_elem ram_elem::with_precision(int N2) const {
    auto r2 = ring_spec::make(ring_->p, ring_->m, N2);
    ram_elem out(r2);
    for (int r = 0; r < ring_->m; ++r) out.res_[r] = res_[r];
    out.normalize();
    return out;
}

ram_elem ram_elem::embed(ring_ptr target) const {
    if (target->p != ring_->p || target->m % ring_->m != 0)
        throw std::invalid_argument("embed: incompatible target ring");
    const int k = target->m / ring_->m;
    ram_elem out(target);
    for (int r = 0; r < ring_->m; ++r) out.res_[r * k] = res_[r];
    out.normalize();
    return out;
}

mpz_class ram_elem::balanced_integer() const {
    for (int r = 1; r < ring_->m; ++r)
        if (res_[r] != 0) throw std::domain_error("balanced_integer: element is not in Z_p");
    mpz_class a = res_[0];
    if (2 * a > ring_->pN) a -= ring_->pN;
    return a;
}

}  // namespace lt
