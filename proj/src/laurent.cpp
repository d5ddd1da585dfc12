#include "lt/laurent.hpp"

#include <stdexcept>

namespace lt {

laurent::laurent(ring_ptr r) : unit_(std::move(r)), e_(0), horizon_(val::infinity()), zero_(true) {}

laurent::laurent(const ram_elem& unit, long e) : laurent(unit, e, val(e + unit.ring()->N)) {}

laurent::laurent(ram_elem unit, long e, val horizon)
    : unit_(std::move(unit)), e_(e), horizon_(std::move(horizon)), zero_(false) {
    horizon_ = min(horizon_, val(e_ + unit_.ring()->N));
    normalize();
}

laurent laurent::from_rational(ring_ptr r, const rat& x) {
    if (x == 0) return laurent(r);
    long k = vp_mpz(x.get_num(), r->p) - vp_mpz(x.get_den(), r->p);
    rat y = x;
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(r->p), static_cast<unsigned long>(std::labs(k)));
    if (k > 0)
        y /= pk;
    else
        y *= pk;
    return laurent(ram_elem::from_rational(r, y), k);
}

void laurent::normalize() {
    auto vr = unit_.valuation();
    if (vr.v.is_inf()) {
        zero_ = true;
        unit_ = ram_elem(unit_.ring());
        e_ = 0;
        return;
    }
    long k = floor_rat(vr.v.value()).get_num().get_si();
    if (k > 0) {
        unit_ = unit_.divide_p(k);
        e_ += k;
    }
    if (val(rat(e_) + unit_.valuation().v.value()) >= horizon_) {
        zero_ = true;
        unit_ = ram_elem(unit_.ring());
        e_ = 0;
        return;
    }
    // digits past the horizon are not meaningful; keep the representative canonical
    if (horizon_.is_finite()) {
        rat kd = (horizon_.value() - e_) * unit_.ring()->m;
        unit_ = unit_.truncate_digits(ceil_rat(kd).get_num().get_si());
    }
}

val laurent::valuation() const {
    if (zero_) return val::infinity();
    return val(rat(e_) + unit_.valuation().v.value());
}

laurent laurent::operator+(const laurent& o) const {
    if (!ring()->same(*o.ring())) throw std::invalid_argument("laurent: ring mismatch");
    val h = min(horizon_, o.horizon_);
    if (zero_ && o.zero_) {
        laurent z(ring());
        z.horizon_ = h;
        return z;
    }
    if (zero_) return laurent(o.unit_, o.e_, h);
    if (o.zero_) return laurent(unit_, e_, h);
    long e0 = std::min(e_, o.e_);
    ram_elem s = unit_.mul_p(e_ - e0) + o.unit_.mul_p(o.e_ - e0);
    laurent out(ring());
    out.unit_ = s;
    out.e_ = e0;
    out.horizon_ = min(h, val(e0 + ring()->N));
    out.zero_ = false;
    out.normalize();
    return out;
}

laurent laurent::operator-() const {
    laurent out = *this;
    if (!zero_) out.unit_ = -unit_;
    return out;
}

laurent laurent::operator-(const laurent& o) const { return *this + (-o); }

laurent laurent::operator*(const laurent& o) const {
    if (!ring()->same(*o.ring())) throw std::invalid_argument("laurent: ring mismatch");
    if (zero_ || o.zero_) {
        laurent z(ring());
        if (zero_ && o.zero_)
            z.horizon_ = horizon_ + o.horizon_;
        else if (zero_)
            z.horizon_ = horizon_ + o.valuation();
        else
            z.horizon_ = o.horizon_ + valuation();
        return z;
    }
    val h = min(horizon_ + o.valuation(), o.horizon_ + valuation());
    return laurent(unit_ * o.unit_, e_ + o.e_, h);
}

laurent laurent::pow(unsigned long k) const {
    laurent r = from_int(ring(), 1), b = *this;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

laurent laurent::shift(long k) const {
    laurent out = *this;
    if (!zero_) out.e_ += k;
    if (out.horizon_.is_finite()) out.horizon_ = out.horizon_ + val(k);
    return out;
}

laurent laurent::inverse() const {
    if (zero_) throw std::domain_error("laurent: inverse of zero");
    // unit part may carry u-digits below 1; strip them through the uniformizer when m > 1
    auto vu = unit_.valuation().v.value();
    if (vu != 0) {
        // u^k * w with w a unit; u^{-k} = u^{m-k} / p
        const int m = ring()->m;
        long k = rat(vu * m).get_num().get_si();
        ram_elem u = ram_elem::uniformizer(ring());
        ram_elem w(ring());
        // w = unit / u^k, computed as unit * u^{m-k} / p
        w = (unit_ * u.pow(static_cast<unsigned long>(m - k))).divide_p(1);
        ram_elem winv = w.inverse();
        // 1/(u^k w) = u^{m-k} winv / p
        ram_elem inv_unit = winv * u.pow(static_cast<unsigned long>(m - k));
        val rel = horizon_ - valuation();
        return laurent(inv_unit, -e_ - 1, val(rat(-e_) - vu) + rel);
    }
    val rel = horizon_ - valuation();
    return laurent(unit_.inverse(), -e_, val(-e_) + rel);
}

bool laurent::operator==(const laurent& o) const {
    if (zero_ || o.zero_) return zero_ == o.zero_;
    return e_ == o.e_ && unit_ == o.unit_;
}

namespace {

// a/b == x mod M with |a|, b <= sqrt(M/2)
rat reconstruct(const mpz_class& x, const mpz_class& M) {
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), mpz_class(M / 2).get_mpz_t());
    mpz_class r0 = M, r1 = x % M, t0 = 0, t1 = 1;
    if (r1 < 0) r1 += M;
    while (r1 > bound) {
        mpz_class qq = r0 / r1;
        mpz_class r2 = r0 - qq * r1, t2 = t0 - qq * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) throw std::domain_error("rational reconstruction failed");
    rat out(r1, t1);
    out.canonicalize();
    return out;
}

}  // namespace

rat laurent::to_rational() const {
    if (zero_) return rat(0);
    rat r = reconstruct(unit_.balanced_integer(), ring()->pN);
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(ring()->p), static_cast<unsigned long>(std::labs(e_)));
    if (e_ >= 0)
        r *= pk;
    else
        r /= pk;
    r.canonicalize();
    return r;
}

}  // namespace lt
