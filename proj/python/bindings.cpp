// Python bindings: results cross the boundary as JSON text and are decoded in lttower/__init__.py
#include "lt/building.hpp"
#include "lt/cells.hpp"
#include "lt/fq_subspace.hpp"
#include "lt/hecke.hpp"
#include "lt/newton_polygon.hpp"
#include "lt/periods.hpp"
#include "lt/val.hpp"
#include "lt/wittlab.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

std::string polygon_json(int n, long q, const std::string& vals) {
    return lt::polygon_from_vals(n, q, lt::parse_vals(vals)).to_json().dump();
}

std::string periods_json(int n, long q, unsigned depth) { return lt::period_series(n, q, depth).to_json().dump(); }

std::string reduce_json(int n, long q, const std::string& vals, int budget) {
    return lt::reduce_to_domain(lt::polygon_from_vals(n, q, lt::parse_vals(vals)), budget).to_json().dump();
}

std::string quotient_json(int n, long q, const std::string& vals, int i) {
    return lt::canonical_quotient(lt::polygon_from_vals(n, q, lt::parse_vals(vals)), i).to_json().dump();
}

std::pair<std::string, std::string> extremes(int n, long q, const std::string& vals) {
    auto [lo, hi] = lt::lambda_extremes(n, q, lt::parse_vals(vals));
    return {lt::rat_str(lo), lt::rat_str(hi)};
}

std::string ball_json(int n, long p, int radius) {
    return lt::ball_json(lt::ball(lt::standard_vertex(n, p), radius)).dump();
}

std::string complex_json(int n, long p, int radius, int level, int lifts) {
    return lt::assemble_complex(lt::ball(lt::standard_vertex(n, p), radius), level, lifts).to_json().dump();
}

std::pair<long, long> cocycle_counts(int n, long p, int radius, int level) {
    auto cx = lt::assemble_complex(lt::ball(lt::standard_vertex(n, p), radius), level);
    long passed = 0, total = 0;
    for (auto& t : lt::triangles_in(cx)) {
        ++total;
        if (lt::cocycle_check(cx, t)) ++passed;
    }
    return {passed, total};
}

std::vector<std::pair<long, long>> generators(int n, int i) {
    std::vector<std::pair<long, long>> out;
    for (auto& g : lt::integral_generators(n, i)) out.emplace_back(g.x_exp, g.pi_exp);
    return out;
}

}  // namespace

PYBIND11_MODULE(_lttower, m) {
    m.doc() = "Lubin-Tate tower toolkit";
    m.def("polygon_json", &polygon_json, py::arg("n"), py::arg("q"), py::arg("vals"));
    m.def("periods_json", &periods_json, py::arg("n"), py::arg("q"), py::arg("depth"));
    m.def("reduce_json", &reduce_json, py::arg("n"), py::arg("q"), py::arg("vals"), py::arg("budget") = 10);
    m.def("quotient_json", &quotient_json, py::arg("n"), py::arg("q"), py::arg("vals"), py::arg("i"));
    m.def("lambda_extremes", &extremes, py::arg("n"), py::arg("q"), py::arg("vals"));
    m.def("ball_json", &ball_json, py::arg("n"), py::arg("p"), py::arg("radius"));
    m.def("complex_json", &complex_json, py::arg("n"), py::arg("p"), py::arg("radius"), py::arg("level") = 2,
          py::arg("lifts") = 1);
    m.def("cocycle_counts", &cocycle_counts, py::arg("n"), py::arg("p"), py::arg("radius"), py::arg("level") = 2);
    m.def("integral_generators", &generators, py::arg("n"), py::arg("i"));
    m.def("gaussian_binomial", &lt::gaussian_binomial, py::arg("n"), py::arg("k"), py::arg("q"));
    m.def("witt_selftest_json", [] { return lt::witt_selftest().to_json().dump(); });
}
