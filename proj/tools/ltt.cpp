// ltt: command-line front end for the lttower library
#include "lt/building.hpp"
#include "lt/cells.hpp"
#include "lt/hecke.hpp"
#include "lt/newton_polygon.hpp"
#include "lt/periods.hpp"
#include "lt/ramified_ring.hpp"
#include "lt/val.hpp"
#include "lt/wittlab.hpp"

#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

struct run_config {
    long p = 0;
    long q = 3;
    int n = 2;
    int precision = 0;  // 0: derived from depth
    unsigned depth = 2;
    int radius = 1;
    int level = 2;
    int lifts = 1;
    int rank = 1;
    int stratum = 0;  // 0: all strata
    int budget = 10;
    int samples = 200;
    unsigned long long seed = 1;
    std::string vals;
    std::string point;
    std::string format = "json";
    std::string out;
};

long prime_of(long q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    long p = 2;
    while (q % p != 0) ++p;
    long r = q;
    while (r % p == 0) r /= p;
    if (r != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return p;
}

void require_positive(long v, const char* name) {
    if (v <= 0) throw std::invalid_argument(std::string(name) + " must be positive");
}

void emit(const run_config& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + cfg.out);
    f << text;
    if (text.empty() || text.back() != '\n') f << '\n';
}

void require_format(const run_config& cfg, std::initializer_list<const char*> allowed) {
    for (auto a : allowed)
        if (cfg.format == a) return;
    throw std::invalid_argument("format '" + cfg.format + "' not supported by this subcommand");
}

std::string run_periods(const run_config& cfg) {
    require_format(cfg, {"json"});
    require_positive(cfg.depth, "depth");
    const long p = prime_of(cfg.q);
    const int N = cfg.precision > 0 ? cfg.precision : static_cast<int>(2 * cfg.depth + 8);
    auto pt = lt::period_series(cfg.n, cfg.q, cfg.depth, lt::ring_spec::make(p, 1, N));
    json j = pt.to_json();
    if (!cfg.point.empty()) {
        auto vs = lt::parse_vals(cfg.point);
        long m = 1;
        for (auto& v : vs)
            if (!v.is_inf()) m = std::lcm(m, v.value().get_den().get_si());
        auto R = lt::ring_spec::make(p, static_cast<int>(m), N);
        std::vector<lt::ram_elem> xs;
        for (auto& v : vs) {
            if (v.is_inf()) {
                xs.emplace_back(R);
                continue;
            }
            lt::rat e = v.value() * m;
            if (e < 0) throw std::invalid_argument("point valuations must be nonnegative");
            xs.push_back(lt::ram_elem::uniformizer(R).pow(e.get_num().get_ui()));
        }
        auto values = lt::evaluate_periods(pt, xs);
        json rep = json::array();
        for (size_t i = 0; i < values.size(); ++i) {
            json r{{"index", i}, {"valuation", lt::val_json(values[i].v)}};
            if (i > 0) r["ratio_valuation"] = lt::val_json(values[i].v - values[0].v);
            rep.push_back(r);
        }
        json pj = json::array();
        for (auto& v : vs) pj.push_back(lt::val_json(v));
        auto dom = lt::thm23_domains(cfg.n, cfg.q, vs);
        j["evaluation"] = {{"point", pj}, {"precision", N}, {"ramification", m}, {"values", rep},
                           {"in_source_domain", dom.source}};
    }
    return j.dump(2);
}

std::vector<lt::val> require_vals(const run_config& cfg) {
    if (cfg.vals.empty()) throw std::invalid_argument("--vals is required");
    return lt::parse_vals(cfg.vals);
}

std::string run_polygon(const run_config& cfg) {
    require_format(cfg, {"json", "svg", "ascii"});
    prime_of(cfg.q);
    auto poly = lt::polygon_from_vals(cfg.n, cfg.q, require_vals(cfg));
    if (cfg.format == "svg") return lt::polygon_svg(poly);
    if (cfg.format == "ascii") return lt::polygon_ascii(poly);
    return poly.to_json().dump(2);
}

std::string run_hecke(const run_config& cfg, const std::string& action) {
    require_format(cfg, {"json"});
    prime_of(cfg.q);
    auto poly = lt::polygon_from_vals(cfg.n, cfg.q, require_vals(cfg));
    if (action == "reduce") return lt::reduce_to_domain(poly, cfg.budget).to_json().dump(2);
    return lt::canonical_quotient(poly, cfg.rank).to_json().dump(2);
}

std::vector<lt::building_vertex> config_ball(const run_config& cfg) {
    const long p = cfg.p > 0 ? cfg.p : prime_of(cfg.q);
    if (prime_of(p) != p) throw std::invalid_argument("the building needs a prime p");
    if (cfg.radius < 0) throw std::invalid_argument("radius must be nonnegative");
    return lt::ball(lt::standard_vertex(cfg.n, p), cfg.radius);
}

std::string run_building(const run_config& cfg) {
    require_format(cfg, {"json", "dot"});
    auto vs = config_ball(cfg);
    if (cfg.format == "dot") return lt::ball_dot(vs);
    return lt::ball_json(vs).dump(2);
}

std::string run_cells(const run_config& cfg, const std::string& action) {
    if (action == "generators") {
        require_format(cfg, {"json"});
        if (cfg.n < 2) throw std::invalid_argument("n must be at least 2");
        json rows = json::array();
        for (int i = 1; i < cfg.n; ++i) {
            if (cfg.stratum > 0 && i != cfg.stratum) continue;
            json gens = json::array();
            auto g = lt::integral_generators(cfg.n, i);
            for (auto& x : g) gens.push_back({{"x_exp", x.x_exp}, {"pi_exp", x.pi_exp}});
            rows.push_back({{"i", i}, {"generators", gens}});
        }
        return json{{"n", cfg.n}, {"strata", rows}}.dump(2);
    }
    require_format(cfg, {"json", "dot"});
    require_positive(cfg.lifts, "lifts");
    auto cx = lt::assemble_complex(config_ball(cfg), cfg.level, cfg.lifts);
    if (action == "cocycle") {
        long passed = 0, total = 0;
        for (auto& t : lt::triangles_in(cx)) {
            ++total;
            if (lt::cocycle_check(cx, t)) ++passed;
        }
        return json{{"triangles", total}, {"passed", passed}, {"ok", passed == total}}.dump(2);
    }
    if (cfg.format == "dot") return cx.to_dot();
    return cx.to_json().dump(2);
}

// seeded polygon sampler with rational valuations of denominator <= 12
std::vector<lt::val> random_vals(std::mt19937_64& rng, int n) {
    std::vector<lt::val> v;
    for (int i = 1; i < n; ++i) {
        long den = 1 + static_cast<long>(rng() % 12);
        long num = 1 + static_cast<long>(rng() % (2 * den));
        v.emplace_back(lt::rat(num, den));
    }
    return v;
}

std::string run_selftest(const run_config& cfg, bool& ok) {
    require_format(cfg, {"json"});
    json checks = json::array();
    auto record = [&](const std::string& name, bool pass) {
        checks.push_back({{"name", name}, {"ok", pass}});
        ok = ok && pass;
    };
    {
        auto poly = lt::polygon_from_vals(2, 3, lt::parse_vals("1/2"));
        record("polygon slopes 1/4 1/12",
               poly.slopes == std::vector<lt::rat>{lt::rat(1, 4), lt::rat(1, 12)} && lt::in_gross_hopkins(poly));
    }
    {
        auto pt = lt::period_series(2, 3, 2);
        auto j = pt.to_json();
        record("periods depth 2", j["f"][0]["text"] == "1 + 1/3*x^4" && j["f"][1]["text"] == "x");
    }
    {
        auto red = lt::reduce_to_domain(lt::polygon_from_vals(2, 3, lt::parse_vals("3/10")));
        record("hecke reduce 3/10", red.steps == std::vector<int>{1} &&
                                        red.final_polygon == lt::polygon_from_vals(2, 3, lt::parse_vals("7/10")));
    }
    {
        auto a = lt::standard_vertex(2, 3);
        record("tree ball sizes", lt::ball(a, 0).size() == 1 && lt::ball(a, 1).size() == 5 && lt::ball(a, 2).size() == 17);
    }
    {
        bool good = true;
        for (int n = 2; n <= 6 && good; ++n)
            for (int i = 1; i < n && good; ++i)
                good = lt::generators_valid(n, i, lt::integral_generators(n, i), 2 * n);
        record("integral generators", good);
    }
    {
        std::mt19937_64 rng(cfg.seed);
        bool good = true;
        int drawn = 0, collisions = 0;
        while (drawn < cfg.samples && good) {
            int n = 2 + static_cast<int>(rng() % 2);
            auto poly = lt::polygon_from_vals(n, 2 + static_cast<long>(rng() % 2), random_vals(rng, n));
            int i = 1 + static_cast<int>(rng() % (n - 1));
            try {
                auto st = lt::canonical_quotient(poly, i);
                lt::rat mass = 0;
                long count = 0;
                for (auto& [v, m] : st.image_values) {
                    mass += v * m;
                    count += m;
                }
                good = mass == 1 && count == lt::ipow(poly.q, n) - 1;
                ++drawn;
            } catch (const lt::collision_error&) {
                ++collisions;
            }
        }
        record("isogeny image mass", good);
    }
    record("witt identities", lt::witt_selftest().ok());
    return json{{"seed", cfg.seed}, {"checks", checks}, {"ok", ok}}.dump(2);
}

void add_common(CLI::App* sub, run_config& cfg) {
    sub->add_option("--n", cfg.n, "dimension / height n")->check(CLI::Range(1, 64));
    sub->add_option("--q", cfg.q, "residue field size q (prime power)")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "svg", "dot", "ascii"}));
    sub->add_option("--out", cfg.out, "write output to this file instead of stdout");
    sub->add_option("--seed", cfg.seed, "random seed");
}

}  // namespace

int main(int argc, char** argv) {
    run_config cfg;
    CLI::App app{"ltt: Lubin-Tate tower toolkit"};
    app.require_subcommand(1);

    auto* periods = app.add_subcommand("periods", "period map series (JSON)");
    add_common(periods, cfg);
    periods->add_option("--depth", cfg.depth, "number of display steps")->check(CLI::PositiveNumber);
    periods->add_option("--precision", cfg.precision, "coefficient precision N")->check(CLI::PositiveNumber);
    periods->add_option("--point", cfg.point, "valuations of x_1..x_{n-1} at which to evaluate, e.g. 1/2");

    auto* polygon = app.add_subcommand("polygon", "Newton polygon of the pi-torsion");
    add_common(polygon, cfg);
    polygon->add_option("--vals", cfg.vals, "valuations v(x_1),...,v(x_{n-1})")->required();

    auto* hecke = app.add_subcommand("hecke", "isogeny calculus on polygons");
    hecke->require_subcommand(1);
    std::string hecke_action;
    for (const char* name : {"reduce", "quotient"}) {
        auto* s = hecke->add_subcommand(name, std::string(name) == "reduce" ? "reduce into the domain" : "canonical quotient");
        add_common(s, cfg);
        s->add_option("--vals", cfg.vals, "valuations v(x_1),...,v(x_{n-1})")->required();
        if (std::string(name) == "reduce")
            s->add_option("--budget", cfg.budget, "maximum number of steps")->check(CLI::PositiveNumber);
        else
            s->add_option("--rank", cfg.rank, "quotient by the q^rank largest-valuation points");
        s->callback([&hecke_action, name] { hecke_action = name; });
    }

    auto* building = app.add_subcommand("building", "ball in the building (JSON or DOT)");
    add_common(building, cfg);
    building->add_option("--p", cfg.p, "prime p (defaults to the prime of q)");
    building->add_option("--radius", cfg.radius, "ball radius")->check(CLI::NonNegativeNumber);

    auto* cells = app.add_subcommand("cells", "cell complex and integral generators");
    cells->require_subcommand(1);
    std::string cells_action;
    for (const char* name : {"complex", "cocycle", "generators"}) {
        auto* s = cells->add_subcommand(name);
        add_common(s, cfg);
        if (std::string(name) == "generators") {
            s->description("generators of the integral functions on each boundary stratum");
            s->add_option("--i", cfg.stratum, "only this stratum index");
        } else {
            s->description(std::string(name) == "complex" ? "assemble cells over a ball" : "check gluing cocycles on all triangles");
            s->add_option("--p", cfg.p, "prime p (defaults to the prime of q)");
            s->add_option("--radius", cfg.radius, "ball radius")->check(CLI::NonNegativeNumber);
            s->add_option("--level", cfg.level, "level m of the cells")->check(CLI::PositiveNumber);
            s->add_option("--lifts", cfg.lifts, "heights per lattice class")->check(CLI::PositiveNumber);
        }
        s->callback([&cells_action, name] { cells_action = name; });
    }

    auto* witt = app.add_subcommand("witt", "ramified Witt vector laboratory");
    witt->require_subcommand(1);
    auto* witt_self = witt->add_subcommand("selftest", "run the identity suite and print structure polynomials");
    witt_self->add_option("--out", cfg.out, "write output to this file instead of stdout");

    auto* selftest = app.add_subcommand("selftest", "quick cross-module consistency checks");
    add_common(selftest, cfg);
    selftest->add_option("--samples", cfg.samples, "random polygons to test")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        bool ok = true;
        if (*periods) {
            emit(cfg, run_periods(cfg));
        } else if (*polygon) {
            emit(cfg, run_polygon(cfg));
        } else if (*hecke) {
            emit(cfg, run_hecke(cfg, hecke_action));
        } else if (*building) {
            emit(cfg, run_building(cfg));
        } else if (*cells) {
            emit(cfg, run_cells(cfg, cells_action));
        } else if (*witt) {
            auto rep = lt::witt_selftest();
            ok = rep.ok();
            emit(cfg, rep.to_json().dump(2));
        } else if (*selftest) {
            emit(cfg, run_selftest(cfg, ok));
        }
        return ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
