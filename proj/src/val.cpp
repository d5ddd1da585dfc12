#include "lt/val.hpp"

#include <sstream>
#include <stdexcept>

namespace lt {

const rat& val::value() const {
    if (inf_) throw std::domain_error("value() of infinite valuation");
    return v_;
}

val val::operator+(const val& o) const {
    if (inf_ || o.inf_) return val();
    return val(rat(v_ + o.v_));
}

val val::operator-(const val& o) const {
    if (o.inf_) throw std::domain_error("subtracting an infinite valuation");
    if (inf_) return val();
    return val(rat(v_ - o.v_));
}

val val::operator*(const rat& s) const {
    if (inf_) {
        if (sgn(s) <= 0) throw std::domain_error("INF scaled by a non-positive rational");
        return val();
    }
    return val(rat(v_ * s));
}

bool val::operator==(const val& o) const {
    if (inf_ || o.inf_) return inf_ == o.inf_;
    return v_ == o.v_;
}

std::strong_ordering val::operator<=>(const val& o) const {
    if (inf_ && o.inf_) return std::strong_ordering::equal;
    if (inf_) return std::strong_ordering::greater;
    if (o.inf_) return std::strong_ordering::less;
    int c = cmp(v_, o.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string val::str() const { return inf_ ? "inf" : rat_str(v_); }

val min(const val& a, const val& b) { return a <= b ? a : b; }
val max(const val& a, const val& b) { return a >= b ? a : b; }

std::ostream& operator<<(std::ostream& os, const val& v) { return os << v.str(); }

std::string rat_str(const rat& r) {
    rat c = r;
    c.canonicalize();
    return c.get_str();
}

rat parse_rat(const std::string& s0) {
    std::string s;
    for (char c : s0)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto dot = s.find('.');
    try {
        if (dot != std::string::npos) {
            std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
            bool neg = !ip.empty() && ip[0] == '-';
            if (neg || (!ip.empty() && ip[0] == '+')) ip = ip.substr(1);
            if (ip.empty()) ip = "0";
            if (fp.empty() || fp.find_first_not_of("0123456789") != std::string::npos ||
                ip.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("bad decimal");
            mpz_class den, numer(ip + fp, 10);
            mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
            rat r(numer, den);
            r.canonicalize();
            return neg ? rat(-r) : r;
        }
        if (s.find_first_not_of("+-/0123456789") != std::string::npos)
            throw std::invalid_argument("bad rational");
        if (s[0] == '+') s = s.substr(1);
        rat r(s);
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("cannot parse rational '" + s0 + "'");
    }
}

val parse_val(const std::string& s) {
    if (s == "inf" || s == "INF" || s == "Inf") return val::infinity();
    return val(parse_rat(s));
}

std::vector<val> parse_vals(const std::string& csv) {
    std::vector<val> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_val(tok));
    return out;
}

rat frac(long a, long b) {
    if (b == 0) throw std::invalid_argument("frac: zero denominator");
    rat r(a, b);
    r.canonicalize();
    return r;
}

rat floor_rat(const rat& r) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return rat(f);
}

rat ceil_rat(const rat& r) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return rat(c);
}

long ceil_div(long a, long b) {
    if (b <= 0) throw std::invalid_argument("ceil_div: non-positive divisor");
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

long ipow(long b, unsigned e) {
    long r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace lt
