#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <vector>

namespace lt {

using rat = mpq_class;

// Exact valuation: a rational or +infinity. Normalized so that v(pi) = 1.
class val {
public:
    val() : inf_(true) {}
    val(const rat& r) : inf_(false), v_(r) { v_.canonicalize(); }
    val(long n) : inf_(false), v_(n) {}
    val(long a, long b) : inf_(false), v_(a, b) { v_.canonicalize(); }

    static val infinity() { return val(); }

    bool is_inf() const { return inf_; }
    bool is_finite() const { return !inf_; }
    // throws std::domain_error on INF
    const rat& value() const;

    val operator+(const val& o) const;
    val operator-(const val& o) const;  // INF - finite only
    val operator*(const rat& s) const;   // s > 0 unless *this is finite

    bool operator==(const val& o) const;
    std::strong_ordering operator<=>(const val& o) const;

    std::string str() const;

private:
    bool inf_;
    rat v_;
};

val min(const val& a, const val& b);
val max(const val& a, const val& b);

std::ostream& operator<<(std::ostream& os, const val& v);

// "a/b", "a", "inf"; also accepts decimals like "0.05"
val parse_val(const std::string& s);
rat parse_rat(const std::string& s);
std::vector<val> parse_vals(const std::string& csv);

std::string rat_str(const rat& r);

// canonical a/b
rat frac(long a, long b);

rat ceil_rat(const rat& r);
rat floor_rat(const rat& r);
long ceil_div(long a, long b);

long ipow(long b, unsigned e);

}  // namespace lt
