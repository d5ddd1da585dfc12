#pragma once

#include "lt/newton_polygon.hpp"

#include <stdexcept>

namespace lt {

// valuation tie between a root and a kernel point: v(x - beta) is not determined
struct collision_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct isogeny_step {
    int rank;
    newton_polygon source;
    newton_polygon image;
    val_multiset image_values;  // valuations of the image pi-torsion
    nlohmann::json to_json() const;
};

// quotient by the q^i points of largest valuation
isogeny_step canonical_quotient(const newton_polygon& poly, int i);

struct kernel_image_report {
    val_multiset values;  // lambda_{a_j} / q^{nk - sum r}, (q^j - q^{j-1}) each
    rat sum;              // sum of the values with multiplicity
    rat middle_bound;     // (sum_{j<=r} (q^j - q^{j-1}) lambda_j) / q^{nk-(n-1)(k-1)-r}
    rat upper_bound;      // r / (n q^{n+(k-1)-r})
    rat lower_bound;      // r / (n q^{n-r})
    bool impossible;      // upper_bound < lower_bound
};

// kt = (r_1 >= ... >= r_k), flags = (a_1 <= ... <= a_r) with r = r_k
kernel_image_report kernel_image_values(const newton_polygon& poly, const std::vector<int>& kt,
                                        const std::vector<int>& flags);

std::set<int> admissible_targets(const newton_polygon& poly);

struct reduction {
    newton_polygon final_polygon;
    std::vector<int> steps;
    std::vector<isogeny_step> log;
    nlohmann::json to_json() const;
};

reduction reduce_to_domain(const newton_polygon& poly, int budget = 10);

struct prop42_certificate {
    long gap;           // nk - sum r
    rat max_candidate;  // lambda_1 / q^gap
    rat bound;          // lambda_1 / q^n
    rat min_slope;      // lambda_n
    bool holds;
};

prop42_certificate prop42_distinctness(const newton_polygon& poly, const std::vector<int>& kt);

}  // namespace lt
