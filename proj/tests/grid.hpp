#pragma once
// Shared sampling helpers for tests.

#include "lt/val.hpp"

#include <functional>
#include <set>
#include <vector>

namespace testgrid {

// all rationals a/d in [0, hi] with d <= max_den
inline std::vector<lt::rat> rationals(int max_den, lt::rat hi = 1) {
    std::set<lt::rat> s;
    for (int d = 1; d <= max_den; ++d)
        for (int a = 0; lt::frac(a, d) <= hi; ++a) s.insert(lt::frac(a, d));
    return {s.begin(), s.end()};
}

// every vector of length len with entries from pool plus INF
inline void for_each_vals(int len, const std::vector<lt::val>& pool,
                          const std::function<void(const std::vector<lt::val>&)>& f) {
    std::vector<lt::val> cur(len);
    std::function<void(int)> rec = [&](int i) {
        if (i == len) {
            f(cur);
            return;
        }
        for (auto& v : pool) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
}

}  // namespace testgrid
