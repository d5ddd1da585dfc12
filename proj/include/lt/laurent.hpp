#pragma once

#include "lt/ramified_ring.hpp"

namespace lt {

// unit * pi^e, with 0 <= v(unit) < 1. The element is known modulo pi^horizon.
class laurent {
public:
    explicit laurent(ring_ptr r);  // exact zero
    laurent(const ram_elem& unit, long e);
    laurent(ram_elem unit, long e, val horizon);

    static laurent from_int(ring_ptr r, long n) { return laurent(ram_elem(r, n), 0); }
    static laurent pi_power(ring_ptr r, long e) { return laurent(ram_elem(r, 1), e); }
    static laurent from_rational(ring_ptr r, const rat& x);

    const ring_ptr& ring() const { return unit_.ring(); }
    const ram_elem& unit_part() const { return unit_; }
    long pi_exponent() const { return e_; }
    const val& horizon() const { return horizon_; }

    bool is_zero() const { return zero_; }
    // zero only because every known digit vanished
    bool below_precision() const { return zero_ && horizon_.is_finite(); }
    val valuation() const;

    laurent operator+(const laurent& o) const;
    laurent operator-(const laurent& o) const;
    laurent operator-() const;
    laurent operator*(const laurent& o) const;
    laurent pow(unsigned long k) const;
    laurent shift(long k) const;  // times pi^k
    laurent inverse() const;
    bool operator==(const laurent& o) const;

    // exact rational value when the unit is in Z_p (balanced lift)
    rat to_rational() const;

private:
    void normalize();
    ram_elem unit_;
    long e_ = 0;
    val horizon_;
    bool zero_ = true;
};

}  // namespace lt
