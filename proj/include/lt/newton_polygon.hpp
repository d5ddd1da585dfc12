#pragma once

#include "lt/val.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace lt {

// value -> multiplicity, sorted by decreasing value
using val_multiset = std::vector<std::pair<rat, long>>;

struct newton_polygon {
    int n = 0;
    long q = 0;
    std::vector<rat> slopes;       // lambda_1 >= ... >= lambda_n, lambda_j spans q^{j-1}..q^j
    std::vector<rat> vertex_vals;  // hull value at q^0 .. q^n

    long abscissa(int j) const { return ipow(q, static_cast<unsigned>(j)); }
    rat lambda(int j) const { return slopes.at(j - 1); }
    // abscissas q^j where the slope changes (plus the endpoints)
    std::vector<int> break_indices() const;
    bool operator==(const newton_polygon& o) const {
        return n == o.n && q == o.q && slopes == o.slopes;
    }
    std::string str() const;
    nlohmann::json to_json() const;
};

// throws std::invalid_argument if the slope list is not a valid polygon
newton_polygon polygon_from_slopes(int n, long q, std::vector<rat> slopes);
newton_polygon polygon_from_vals(int n, long q, const std::vector<val>& vals);
// rebuild from a value multiset of size q^n - 1
newton_polygon polygon_from_multiset(int n, long q, const val_multiset& ms);

std::pair<rat, rat> lambda_extremes(int n, long q, const std::vector<val>& vals);

bool in_gross_hopkins(const newton_polygon& poly);
bool in_gross_hopkins(int n, long q, const std::vector<val>& vals);
std::set<int> boundary_indices(const newton_polygon& poly);
bool in_H(const newton_polygon& poly);

// boundary polygon lambda_j = 1/(n (q^j - q^{j-1}))
newton_polygon reference_polygon(int n, long q);
newton_polygon cm_polygon(int n, long q, int e);

// the polygon's own slopes with multiplicities q^j - q^{j-1}
val_multiset level_one_values(const newton_polygon& poly);
// all nonzero pi^k-torsion valuations; requires poly in H
val_multiset torsion_valuations(const newton_polygon& poly, int k);
val_multiset normalize_multiset(val_multiset ms);
long multiset_count(const val_multiset& ms);
nlohmann::json multiset_json(const val_multiset& ms);

std::string polygon_svg(const newton_polygon& poly, bool overlay_reference = true);
std::string polygon_ascii(const newton_polygon& poly, int width = 64, int height = 20);

// JSON encoding of a rational valuation
nlohmann::json rat_json(const rat& r);
nlohmann::json val_json(const val& v);

}  // namespace lt
