// pseudotrap: generate finite dynamical systems and run the shadowing
// verifiers on them. Reports are canonical JSON.
//
// Exit status: 0 verdict computed (pass or fail), 2 usage or input error,
// 3 undecided because a resource cap was hit.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pseudotrap/pseudotrap.hpp"

namespace pt = pseudotrap;
using json = pt::report::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_undecided = 3;

struct RunConfig {
    std::string system_path;
    std::string output_path;
    std::string eps = "";
    pt::Distance delta = 0;
    std::optional<std::size_t> n;
    std::size_t horizon = 0;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::size_t max_listed = 100;
    std::optional<pt::Point> point;
    std::vector<pt::Point> set_a, set_b;
    bool search = false;
    bool oracle = false;
    std::optional<std::uint64_t> state_cap;
    std::optional<std::uint64_t> walk_cap;

    // generate
    std::string family;
    std::size_t q = 8;
    std::string metric = "";
    pt::Distance scale = 1;
    std::string kind = "tent";
    std::string r = "4";
    std::size_t grid = 8;
    std::size_t size = 8;
    pt::Distance max_weight = 8;
    std::vector<std::size_t> gaps;
    pt::Distance separation = 10;
};

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.output_path.empty() || cfg.output_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw pt::error("cannot write " + cfg.output_path);
    out << text;
}

void emit(const RunConfig& cfg, const json& j) { write_output(cfg, j.dump(2) + "\n"); }

pt::SearchConfig search_config(const RunConfig& cfg) {
    auto c = pt::SearchConfig::from_environment();
    if (cfg.state_cap) c.state_cap = *cfg.state_cap;
    if (cfg.walk_cap) c.walk_cap = *cfg.walk_cap;
    return c;
}

std::vector<pt::Distance> eps_values(const RunConfig& cfg, const pt::FiniteSystem& s) {
    if (cfg.eps == "grid") return pt::eps_grid(s);
    try {
        std::size_t used = 0;
        const long long v = std::stoll(cfg.eps, &used);
        if (used != cfg.eps.size() || v < 1) throw usage_error("");
        return {v};
    } catch (const std::exception&) {
        throw usage_error("--eps must be a positive integer or \"grid\"");
    }
}

pt::Distance single_eps(const RunConfig& cfg, const pt::FiniteSystem& s) {
    if (cfg.eps == "grid") throw usage_error("this subcommand needs a single integer --eps");
    return eps_values(cfg, s).front();
}

// One report per eps; a bare object for a single eps, an array for the grid.
json collect(const RunConfig& cfg, std::vector<json> reports) {
    if (cfg.eps != "grid") return std::move(reports.front());
    return json(std::move(reports));
}

int cmd_generate(const RunConfig& cfg) {
    std::optional<pt::FiniteSystem> s;
    if (cfg.family == "rotation") {
        const std::string m = cfg.metric.empty() ? "arc" : cfg.metric;
        if (m != "arc" && m != "chordlike") throw usage_error("rotation --metric must be arc or chordlike");
        s = pt::cyclic_rotation(cfg.q, m == "arc" ? pt::RotationMetric::arc : pt::RotationMetric::chordlike, cfg.scale);
    } else if (cfg.family == "interval") {
        pt::IntervalMap m = pt::IntervalMap::make_tent();
        if (cfg.kind == "logistic") {
            long long num = 0, den = 1;
            char slash = 0;
            std::istringstream in(cfg.r);
            in >> num;
            if (in >> slash) {
                if (slash != '/' || !(in >> den)) throw usage_error("--r must look like 4 or 7/2");
            }
            if (den <= 0) throw usage_error("--r denominator must be positive");
            m = pt::IntervalMap::make_logistic(num, den);
        } else if (cfg.kind != "tent") {
            throw usage_error("interval --kind must be logistic or tent");
        }
        s = pt::interval_map_grid(m, cfg.grid, cfg.scale);
    } else if (cfg.family == "random") {
        const std::string m = cfg.metric.empty() ? "line" : cfg.metric;
        if (m != "line" && m != "random-valid") throw usage_error("random --metric must be line or random-valid");
        s = pt::random_map(cfg.size, m == "line" ? pt::RandomMetric::line : pt::RandomMetric::random_valid, cfg.seed,
                           cfg.scale, cfg.max_weight);
    } else if (cfg.family == "attractors") {
        s = pt::disjoint_attractors(cfg.gaps, cfg.separation);
    } else {
        throw usage_error("unknown family \"" + cfg.family + "\" (rotation, interval, random, attractors)");
    }
    write_output(cfg, pt::save_system(*s));
    return exit_ok;
}

int cmd_omega(const RunConfig& cfg, const pt::FiniteSystem& s) {
    std::optional<pt::OmegaSet> at;
    if (cfg.point) at = pt::omega_limit(s, *cfg.point);
    emit(cfg, pt::report::omega(s, pt::all_omega_sets(s), at));
    return exit_ok;
}

int cmd_minimal(const RunConfig& cfg, const pt::FiniteSystem& s) {
    json j = pt::report::header(s, "minimal");
    j["minimal"] = pt::is_minimal(s);
    emit(cfg, j);
    return exit_ok;
}

int cmd_hausdorff(const RunConfig& cfg, const pt::FiniteSystem& s) {
    pt::PointSet a(s.size()), b(s.size());
    for (auto p : cfg.set_a) a.insert(p);
    for (auto p : cfg.set_b) b.insert(p);
    const auto h = pt::hausdorff_distance(s, a, b);
    json j = pt::report::header(s, "hausdorff");
    j["a"] = pt::report::point_set(a);
    j["b"] = pt::report::point_set(b);
    j["h"] = h.classical;
    j["least_eps"] = h.least_eps;
    emit(cfg, j);
    return exit_ok;
}

int cmd_uniformity(const RunConfig& cfg, const pt::FiniteSystem& s) {
    const auto grid = pt::eps_grid(s);
    std::vector<pt::Entourage> fam;
    for (auto e : grid) fam.push_back(pt::metric_entourage(s, e));
    emit(cfg, pt::report::uniformity(s, grid, pt::check_uniformity_base(fam)));
    return exit_ok;
}

// Re-verifies a feasible (delta, n) by enumeration: pass at n, fail at n - 1.
bool oracle_confirms(const pt::FiniteSystem& s, pt::CoverTarget target, pt::Distance eps, const pt::Witness& w,
                     const pt::SearchConfig& sc) {
    auto run = [&](std::size_t n) {
        return target == pt::CoverTarget::whole_space ? pt::oracle_cover_check(s, eps, w.delta, n, sc)
                                                      : pt::oracle_trap_check(s, eps, w.delta, n, sc);
    };
    const auto at = run(w.n);
    if (at.verdict == pt::Verdict::undecided_resource) return false;
    if (at.verdict != pt::Verdict::pass) throw std::logic_error("oracle disagrees with the product search at n");
    if (w.n > 0) {
        const auto below = run(w.n - 1);
        if (below.verdict == pt::Verdict::undecided_resource) return false;
        if (below.verdict != pt::Verdict::fail) throw std::logic_error("oracle disagrees with the product search at n - 1");
    }
    return true;
}

int cmd_prefix(const RunConfig& cfg, const pt::FiniteSystem& s, pt::CoverTarget target) {
    const auto sc = search_config(cfg);
    bool undecided = false;
    std::vector<json> reports;
    for (auto eps : eps_values(cfg, s)) {
        if (cfg.search) {
            const auto r = pt::threshold_search(s, target, eps, sc);
            undecided = undecided || r.undecided();
            bool checked = false;
            if (cfg.oracle && r.recommended) checked = oracle_confirms(s, target, eps, *r.recommended, sc);
            reports.push_back(pt::report::search(s, r, checked));
        } else {
            const auto c = target == pt::CoverTarget::whole_space ? pt::cover_check(s, eps, cfg.delta, *cfg.n, sc)
                                                                  : pt::trap_check(s, eps, cfg.delta, *cfg.n, sc);
            undecided = undecided || c.verdict == pt::Verdict::undecided_resource;
            bool checked = false;
            if (cfg.oracle && c.verdict != pt::Verdict::undecided_resource) {
                const auto o = target == pt::CoverTarget::whole_space ? pt::oracle_cover_check(s, eps, cfg.delta, *cfg.n, sc)
                                                                      : pt::oracle_trap_check(s, eps, cfg.delta, *cfg.n, sc);
                if (o.verdict != pt::Verdict::undecided_resource) {
                    if (o.verdict != c.verdict || o.counterexample != c.counterexample)
                        throw std::logic_error("oracle disagrees with the product search");
                    checked = true;
                }
            }
            reports.push_back(pt::report::prefix_check(s, c, checked));
        }
    }
    emit(cfg, collect(cfg, std::move(reports)));
    return undecided ? exit_undecided : exit_ok;
}

int cmd_sws(const RunConfig& cfg, const pt::FiniteSystem& s) {
    const auto sc = search_config(cfg);
    bool undecided = false;
    std::vector<json> reports;
    for (auto eps : eps_values(cfg, s)) {
        const auto c = pt::certify_second_weak_shadowing(s, eps, sc);
        undecided = undecided || c.verdict == pt::Verdict::undecided_resource;
        reports.push_back(pt::report::second_weak(s, c));
    }
    emit(cfg, collect(cfg, std::move(reports)));
    return undecided ? exit_undecided : exit_ok;
}

int cmd_minimality(const RunConfig& cfg, const pt::FiniteSystem& s) {
    const auto v = pt::minimality_criterion(s, search_config(cfg));
    emit(cfg, pt::report::minimality(s, v));
    return v.undecided ? exit_undecided : exit_ok;
}

int cmd_strong(const RunConfig& cfg, const pt::FiniteSystem& s) {
    const auto r = pt::strong_orbital_check_minimal(s, single_eps(cfg, s), cfg.horizon, cfg.seed,
                                                    cfg.samples ? cfg.samples : 16, search_config(cfg));
    emit(cfg, pt::report::strong_orbital(s, r, cfg.seed));
    return r.verdict == pt::Verdict::undecided_resource ? exit_undecided : exit_ok;
}

int cmd_orbital(const RunConfig& cfg, const pt::FiniteSystem& s) {
    const auto r = pt::orbital_shadowing_check(s, single_eps(cfg, s), cfg.delta, cfg.horizon, cfg.seed, cfg.max_listed,
                                               cfg.samples ? cfg.samples : 10'000, search_config(cfg));
    emit(cfg, pt::report::orbital(s, r, cfg.seed));
    return exit_ok;
}

int cmd_dot(const RunConfig& cfg, const pt::FiniteSystem& s) {
    write_output(cfg, pt::to_dot(s, pt::build_graph(s, cfg.delta)));
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shadowing and pseudo-orbit verifiers for finite dynamical systems", "pseudotrap"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto system_opt = [&](CLI::App* sub) {
        sub->add_option("-s,--system", cfg.system_path, "System JSON file")->required();
        sub->add_option("-o,--output", cfg.output_path, "Write the report here instead of stdout");
        sub->add_option("--state-cap", cfg.state_cap, "Product-search state cap (overrides PSEUDOTRAP_STATE_CAP)");
        sub->add_option("--walk-cap", cfg.walk_cap, "Walk enumeration cap");
    };

    auto* gen = app.add_subcommand("generate", "Emit a zoo system as JSON");
    gen->add_option("family", cfg.family, "rotation | interval | random | attractors")->required();
    gen->add_option("-o,--output", cfg.output_path, "Output file (default stdout)");
    gen->add_option("--q", cfg.q, "Rotation size");
    gen->add_option("--metric", cfg.metric, "arc|chordlike (rotation), line|random-valid (random)");
    gen->add_option("--scale", cfg.scale, "Distance scale")->check(CLI::PositiveNumber);
    gen->add_option("--kind", cfg.kind, "logistic | tent");
    gen->add_option("--r", cfg.r, "Logistic parameter as an integer or fraction, e.g. 7/2");
    gen->add_option("--grid", cfg.grid, "Interval grid size");
    gen->add_option("--n", cfg.size, "Random map size");
    gen->add_option("--seed", cfg.seed, "Random map seed");
    gen->add_option("--max-weight", cfg.max_weight, "Random-valid weight bound")->check(CLI::PositiveNumber);
    gen->add_option("--gaps", cfg.gaps, "Attractor cycle sizes, comma separated")->delimiter(',');
    gen->add_option("--separation", cfg.separation, "Distance between attractors");

    auto* omega = app.add_subcommand("omega", "Cycles of the map (omega-limit sets)");
    system_opt(omega);
    omega->add_option("--point", cfg.point, "Also report omega(point)");

    auto* minimal = app.add_subcommand("minimal", "Is the map one cyclic permutation?");
    system_opt(minimal);

    auto* haus = app.add_subcommand("hausdorff", "Hausdorff distance of two point sets");
    system_opt(haus);
    haus->add_option("--a", cfg.set_a, "First set, comma separated")->delimiter(',')->required();
    haus->add_option("--b", cfg.set_b, "Second set, comma separated")->delimiter(',')->required();

    auto* unif = app.add_subcommand("uniformity-check", "Base axioms for the metric entourage family");
    system_opt(unif);

    auto* trap = app.add_subcommand("trap", "Prefix balls of delta-pseudo-orbits trap an omega-limit set");
    system_opt(trap);
    trap->add_option("--eps", cfg.eps, "Positive integer or \"grid\"")->required();
    auto* trap_delta = trap->add_option("--delta", cfg.delta, "Pseudo-orbit threshold")->check(CLI::PositiveNumber);
    auto* trap_n = trap->add_option("--n", cfg.n, "Prefix length (steps)");
    auto* trap_search = trap->add_flag("--search", cfg.search, "Sweep the delta grid for the least n");
    trap->add_flag("--oracle", cfg.oracle, "Re-check by walk enumeration");
    trap_search->excludes(trap_delta)->excludes(trap_n);
    trap_delta->needs(trap_n);
    trap_n->needs(trap_delta);

    auto* sws = app.add_subcommand("sws", "Second weak shadowing certificate");
    system_opt(sws);
    sws->add_option("--eps", cfg.eps, "Positive integer or \"grid\"")->required();

    auto* cover = app.add_subcommand("cover", "Prefix balls of delta-pseudo-orbits cover X");
    system_opt(cover);
    cover->add_option("--eps", cfg.eps, "Positive integer or \"grid\"")->required();
    auto* cover_delta = cover->add_option("--delta", cfg.delta, "Pseudo-orbit threshold")->check(CLI::PositiveNumber);
    auto* cover_n = cover->add_option("--n", cfg.n, "Prefix length (steps)");
    auto* cover_search = cover->add_flag("--search", cfg.search, "Sweep the delta grid for the least n");
    cover->add_flag("--oracle", cfg.oracle, "Re-check by walk enumeration");
    cover_search->excludes(cover_delta)->excludes(cover_n);
    cover_delta->needs(cover_n);
    cover_n->needs(cover_delta);

    auto* mincrit = app.add_subcommand("minimality-criterion", "Pseudo-orbit characterization of minimality");
    system_opt(mincrit);

    auto* strong = app.add_subcommand("strong-orbital", "Strong orbital shadowing on a minimal system");
    system_opt(strong);
    strong->add_option("--eps", cfg.eps, "Positive integer")->required();
    strong->add_option("--horizon", cfg.horizon, "Largest tail offset N")->required();
    strong->add_option("--seed", cfg.seed, "Seed for sampled pseudo-orbits");
    strong->add_option("--samples", cfg.samples, "Number of sampled pseudo-orbits (default 16)");

    auto* orbital = app.add_subcommand("orbital", "Orbital shadowing diagnostic at a finite horizon");
    system_opt(orbital);
    orbital->add_option("--eps", cfg.eps, "Positive integer")->required();
    orbital->add_option("--delta", cfg.delta, "Pseudo-orbit threshold")->required()->check(CLI::PositiveNumber);
    orbital->add_option("--horizon", cfg.horizon, "Walk length (steps)")->required();
    orbital->add_option("--seed", cfg.seed, "Seed used when sampling above the walk cap");
    orbital->add_option("--samples", cfg.samples, "Sample count above the walk cap (default 10000)");
    orbital->add_option("--max-listed", cfg.max_listed, "Per-walk entries to list in the report");

    auto* dot = app.add_subcommand("export-dot", "Pseudo-orbit graph in Graphviz format");
    system_opt(dot);
    dot->add_option("--delta", cfg.delta, "Pseudo-orbit threshold")->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (gen->parsed()) return cmd_generate(cfg);
        const auto s = pt::load_system_file(cfg.system_path);
        if ((trap->parsed() || cover->parsed()) && !cfg.search && !cfg.n)
            throw usage_error("give either --delta and --n, or --search");
        if (omega->parsed()) return cmd_omega(cfg, s);
        if (minimal->parsed()) return cmd_minimal(cfg, s);
        if (haus->parsed()) return cmd_hausdorff(cfg, s);
        if (unif->parsed()) return cmd_uniformity(cfg, s);
        if (trap->parsed()) return cmd_prefix(cfg, s, pt::CoverTarget::some_omega_set);
        if (sws->parsed()) return cmd_sws(cfg, s);
        if (cover->parsed()) return cmd_prefix(cfg, s, pt::CoverTarget::whole_space);
        if (mincrit->parsed()) return cmd_minimality(cfg, s);
        if (strong->parsed()) return cmd_strong(cfg, s);
        if (orbital->parsed()) return cmd_orbital(cfg, s);
        if (dot->parsed()) return cmd_dot(cfg, s);
    } catch (const usage_error& e) {
        std::cerr << "pseudotrap: " << e.what() << "\n";
        return exit_usage;
    } catch (const pt::resource_cap_exceeded& e) {
        std::cerr << "pseudotrap: undecided: " << e.what() << "\n";
        return exit_undecided;
    } catch (const pt::error& e) {
        std::cerr << "pseudotrap: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "pseudotrap: " << e.what() << "\n";
        return 1;
    }
    return exit_usage;
}
