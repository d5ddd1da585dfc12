#include "lt/trunc_series.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace lt {

trunc_series::trunc_series(ring_ptr r, int nvars, long cap) : ring_(std::move(r)), nvars_(nvars), cap_(cap) {
    if (nvars < 0) throw std::invalid_argument("series: negative variable count");
    if (cap < 1) throw std::invalid_argument("series: cap must be >= 1");
}

trunc_series trunc_series::constant(ring_ptr r, int nvars, long cap, const laurent& c) {
    trunc_series s(r, nvars, cap);
    s.add_term(exponent(nvars, 0), c);
    return s;
}

trunc_series trunc_series::variable(ring_ptr r, int nvars, long cap, int k) {
    if (k < 1 || k > nvars) throw std::invalid_argument("series: variable index out of range");
    exponent e(nvars, 0);
    e[k - 1] = 1;
    return monomial(r, nvars, cap, e, laurent::from_int(r, 1));
}

trunc_series trunc_series::monomial(ring_ptr r, int nvars, long cap, const exponent& e, const laurent& c) {
    trunc_series s(r, nvars, cap);
    s.add_term(e, c);
    return s;
}

void trunc_series::check(const trunc_series& o) const {
    if (nvars_ != o.nvars_ || cap_ != o.cap_) throw std::invalid_argument("series: shape mismatch (nvars or cap)");
    if (!ring_->same(*o.ring_)) throw std::invalid_argument("series: coefficient ring mismatch");
}

laurent trunc_series::coeff(const exponent& e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? laurent(ring_) : it->second;
}

void trunc_series::add_term(const exponent& e, const laurent& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("series: exponent length mismatch");
    for (long k : e) {
        if (k < 0) throw std::invalid_argument("series: negative exponent");
        if (k >= cap_) return;
    }
    if (c.is_zero()) return;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
        coeffs_.emplace(e, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) coeffs_.erase(it);
}

trunc_series trunc_series::operator+(const trunc_series& o) const {
    check(o);
    trunc_series s = *this;
    for (auto& [e, c] : o.coeffs_) s.add_term(e, c);
    return s;
}

trunc_series trunc_series::operator-() const {
    trunc_series s(ring_, nvars_, cap_);
    for (auto& [e, c] : coeffs_) s.coeffs_.emplace(e, -c);
    return s;
}

trunc_series trunc_series::operator-(const trunc_series& o) const { return *this + (-o); }

trunc_series trunc_series::operator*(const trunc_series& o) const {
    check(o);
    trunc_series s(ring_, nvars_, cap_);
    exponent e(nvars_);
    for (auto& [ea, ca] : coeffs_) {
        for (auto& [eb, cb] : o.coeffs_) {
            bool keep = true;
            for (int k = 0; k < nvars_; ++k) {
                e[k] = ea[k] + eb[k];
                if (e[k] >= cap_) {
                    keep = false;
                    break;
                }
            }
            if (keep) s.add_term(e, ca * cb);
        }
    }
    return s;
}

trunc_series trunc_series::scale(const laurent& c) const {
    trunc_series s(ring_, nvars_, cap_);
    for (auto& [e, a] : coeffs_) s.add_term(e, a * c);
    return s;
}

trunc_series trunc_series::shift_pi(long k) const {
    trunc_series s(ring_, nvars_, cap_);
    for (auto& [e, a] : coeffs_) s.coeffs_.emplace(e, a.shift(k));
    return s;
}

bool trunc_series::operator==(const trunc_series& o) const {
    return nvars_ == o.nvars_ && cap_ == o.cap_ && coeffs_ == o.coeffs_;
}

long trunc_series::min_pi_exponent() const {
    if (coeffs_.empty()) return 0;
    long m = coeffs_.begin()->second.pi_exponent();
    for (auto& [e, c] : coeffs_) m = std::min(m, c.pi_exponent());
    return m;
}

trunc_series trunc_series::truncate(long cap2) const {
    if (cap2 > cap_) throw std::invalid_argument("series: cannot raise the cap");
    trunc_series s(ring_, nvars_, cap2);
    for (auto& [e, c] : coeffs_) s.add_term(e, c);
    return s;
}

trunc_series trunc_series::set_vars_zero() const { return constant(ring_, nvars_, cap_, constant_term()); }

laurent trunc_series::evaluate(const std::vector<laurent>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluate: point dimension mismatch");
    if (point.empty()) return constant_term();
    ring_ptr tr = point[0].ring();
    if (tr->p != ring_->p || tr->m % ring_->m != 0 || tr->N > ring_->N)
        throw std::invalid_argument("evaluate: incompatible point ring");
    // cache powers per variable
    std::vector<std::map<long, laurent>> pw(nvars_);
    auto power = [&](int k, long e) -> laurent {
        auto it = pw[k].find(e);
        if (it != pw[k].end()) return it->second;
        laurent v = point[k].pow(static_cast<unsigned long>(e));
        pw[k].emplace(e, v);
        return v;
    };
    laurent acc(tr);
    for (auto& [e, c] : coeffs_) {
        laurent term(c.unit_part().reduce(tr->N).embed(tr), c.pi_exponent(), c.horizon());
        for (int k = 0; k < nvars_; ++k)
            if (e[k]) term = term * power(k, e[k]);
        acc = acc + term;
    }
    return acc;
}

std::string trunc_series::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : coeffs_) {
        std::string cs;
        rat r;
        bool exact = true;
        try {
            r = c.to_rational();
        } catch (const std::domain_error&) {
            exact = false;
        }
        if (exact) {
            cs = rat_str(r);
            if (!first) {
                if (r < 0) {
                    os << " - ";
                    cs = rat_str(rat(-r));
                } else {
                    os << " + ";
                }
            }
        } else {
            cs = "[" + c.unit_part().digit_string() + "]*pi^" + std::to_string(c.pi_exponent());
            if (!first) os << " + ";
        }
        first = false;
        std::string mono;
        for (int k = 0; k < nvars_; ++k) {
            if (!e[k]) continue;
            if (!mono.empty()) mono += "*";
            mono += nvars_ == 1 ? "x" : "x" + std::to_string(k + 1);
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        if (mono.empty())
            os << cs;
        else if (cs == "1")
            os << mono;
        else
            os << cs << "*" << mono;
    }
    return os.str();
}

nlohmann::json trunc_series::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [e, c] : coeffs_)
        terms.push_back({{"exponent", e}, {"pi_exponent", c.pi_exponent()}, {"digits", c.unit_part().digit_string()}});
    return {{"nvars", nvars_},
            {"cap", cap_},
            {"ring", {{"p", ring_->p}, {"m", ring_->m}, {"N", ring_->N}}},
            {"terms", terms}};
}

trunc_series frobenius_twist(const trunc_series& a, long q, unsigned i) {
    if (q < 2) throw std::invalid_argument("frobenius_twist: q must be >= 2");
    trunc_series s(a.ring(), a.nvars(), a.cap());
    long qi = 1;
    bool overflow = false;
    for (unsigned t = 0; t < i; ++t) {
        qi *= q;
        if (qi >= a.cap()) {
            overflow = true;
            break;
        }
    }
    for (auto& [e, c] : a.terms()) {
        exponent e2(e.size());
        bool keep = true;
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) {
                e2[k] = 0;
                continue;
            }
            if (overflow || e[k] * qi >= a.cap()) {
                keep = false;
                break;
            }
            e2[k] = e[k] * qi;
        }
        if (keep) s.add_term(e2, c);
    }
    return s;
}

series_matrix::series_matrix(int rows, int cols, const trunc_series& zero)
    : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, trunc_series(zero.ring(), zero.nvars(), zero.cap())) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix: empty shape");
}

trunc_series& series_matrix::at(int i, int j) {
    if (i < 0 || j < 0 || i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    return e_[static_cast<size_t>(i) * cols_ + j];
}

const trunc_series& series_matrix::at(int i, int j) const {
    if (i < 0 || j < 0 || i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    return e_[static_cast<size_t>(i) * cols_ + j];
}

series_matrix series_matrix::operator*(const series_matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    series_matrix r(rows_, o.cols_, e_[0]);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            trunc_series s(e_[0].ring(), e_[0].nvars(), e_[0].cap());
            for (int k = 0; k < cols_; ++k)
                if (!at(i, k).is_zero() && !o.at(k, j).is_zero()) s = s + at(i, k) * o.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

bool series_matrix::operator==(const series_matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

series_matrix series_matrix::map(const std::function<trunc_series(const trunc_series&)>& f) const {
    series_matrix r = *this;
    for (auto& x : r.e_) x = f(x);
    return r;
}

nlohmann::json series_matrix::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < rows_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < cols_; ++j) row.push_back(at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

std::vector<trunc_series> row_times_matrix(const std::vector<trunc_series>& v, const series_matrix& m) {
    if (static_cast<int>(v.size()) != m.rows()) throw std::invalid_argument("row_times_matrix: shape mismatch");
    std::vector<trunc_series> out;
    for (int j = 0; j < m.cols(); ++j) {
        trunc_series s(v[0].ring(), v[0].nvars(), v[0].cap());
        for (int i = 0; i < m.rows(); ++i)
            if (!v[i].is_zero() && !m.at(i, j).is_zero()) s = s + v[i] * m.at(i, j);
        out.push_back(s);
    }
    return out;
}

}  // namespace lt
