#ifndef PSEUDOTRAP_REPORT_HPP
#define PSEUDOTRAP_REPORT_HPP

#include <string>

#include <json.hpp>

#include "pseudotrap/entourage.hpp"
#include "pseudotrap/orbit.hpp"
#include "pseudotrap/serialization.hpp"
#include "pseudotrap/verifier.hpp"

// JSON renderings of verdicts. Keys are emitted in insertion order, so every
// report has one canonical byte form for given inputs and seeds.

namespace pseudotrap::report {

using json = nlohmann::ordered_json;

inline json walk(const Walk& w) { return json(w.points); }
inline json point_set(const PointSet& s) { return json(s.members()); }

inline json header(const FiniteSystem& s, const std::string& theorem) {
    json j;
    j["system"] = system_hash(s);
    j["theorem"] = theorem;
    return j;
}

inline json witness(const std::optional<Witness>& w) {
    if (!w) return nullptr;
    return json{{"delta", w->delta}, {"n", w->n}};
}

inline json delta_outcome(const DeltaOutcome& r) {
    json j;
    j["delta"] = r.delta;
    j["feasible"] = r.feasible();
    if (r.n) j["n"] = *r.n;
    j["lasso"] = r.lasso;
    if (r.counterexample) j["counterexample"] = walk(*r.counterexample);
    if (r.loop_start) j["loop_start"] = *r.loop_start;
    if (r.status == Feasibility::undecided_resource) j["status"] = "undecided-resource";
    return j;
}

inline json certificate_entry(const PrefixCertificate& c) {
    json j;
    j["delta"] = c.delta;
    j["feasible"] = c.verdict == Verdict::pass;
    j["n"] = c.n;
    j["lasso"] = false;
    if (c.counterexample) j["counterexample"] = walk(*c.counterexample);
    j["status"] = to_string(c.verdict);
    if (c.degenerate()) j["degenerate"] = true;
    return j;
}

/// Fixed-(eps, delta, n) trap or cover check.
inline json prefix_check(const FiniteSystem& s, const PrefixCertificate& c, bool oracle_checked) {
    json j = header(s, c.target == CoverTarget::whole_space ? "cover" : "trap");
    j["eps"] = c.eps;
    j["results"] = json::array({certificate_entry(c)});
    j["recommended"] = c.verdict == Verdict::pass ? witness(Witness{c.delta, c.n}) : json(nullptr);
    j["oracle_checked"] = oracle_checked;
    j["witness_mode"] = c.witness_mode;
    return j;
}

inline json search(const FiniteSystem& s, const SearchResult& r, bool oracle_checked) {
    json j = header(s, r.target == CoverTarget::whole_space ? "cover-search" : "trap-search");
    j["eps"] = r.eps;
    json rows = json::array();
    for (const auto& d : r.results) rows.push_back(delta_outcome(d));
    j["results"] = std::move(rows);
    j["recommended"] = witness(r.recommended);
    j["oracle_checked"] = oracle_checked;
    return j;
}

inline json second_weak(const FiniteSystem& s, const SecondWeakShadowingCertificate& c) {
    json j = header(s, "second-weak-shadowing");
    j["eps"] = c.eps;
    j["verdict"] = to_string(c.verdict);
    j["recommended"] = witness(c.witness);
    j["justification"] = c.justification;
    j["oracle_checked"] = false;
    return j;
}

inline json pair(const CounterexamplePair& p) {
    json j;
    j["eps"] = p.eps;
    j["base"] = p.base;
    j["y_walk"] = walk(p.y_walk);
    j["z_walk"] = walk(p.z_walk);
    j["escaping_point"] = p.escaping_point;
    j["violated"] = "Orb(z) not within B_eps(Orb(y))";
    return j;
}

inline json minimality(const FiniteSystem& s, const MinimalityVerdict& v) {
    json j = header(s, "minimality-criterion");
    j["minimal"] = v.minimal;
    j["is_minimal"] = is_minimal(s);
    if (v.undecided) j["status"] = "undecided-resource";
    json rows = json::array();
    for (const auto& e : v.per_eps) {
        json r;
        r["eps"] = e.eps;
        r["witness"] = witness(e.witness);
        if (e.counterexample) r["counterexample"] = pair(*e.counterexample);
        if (e.undecided) r["status"] = "undecided-resource";
        rows.push_back(std::move(r));
    }
    j["results"] = std::move(rows);
    j["counterexample"] = v.counterexample ? pair(*v.counterexample) : json(nullptr);
    return j;
}

inline json strong_orbital(const FiniteSystem& s, const StrongOrbitalReport& r, std::uint64_t seed) {
    json j = header(s, "strong-orbital-shadowing");
    j["eps"] = r.eps;
    j["horizon"] = r.horizon;
    j["seed"] = seed;
    j["verdict"] = to_string(r.verdict);
    j["recommended"] = witness(r.witness);
    j["orbit_instances"] = r.orbit_instances;
    j["sampled_walks"] = r.sampled_walks;
    j["sampled_instances"] = r.sampled_instances;
    j["failure"] = r.failure ? json(*r.failure) : json(nullptr);
    return j;
}

inline json orbital(const FiniteSystem& s, const OrbitalReport& r, std::uint64_t seed) {
    json j = header(s, "orbital-shadowing");
    j["mode"] = "semi-decision at horizon";
    j["eps"] = r.eps;
    j["delta"] = r.delta;
    j["horizon"] = r.horizon;
    j["seed"] = seed;
    j["exhaustive"] = r.exhaustive;
    j["sampled_warning"] = r.sampled_warning;
    j["verdict"] = r.pass() ? "pass" : "fail";
    j["walks_checked"] = r.walks_checked;
    j["walks_passed"] = r.walks_passed;
    j["distinct_point_sets"] = r.distinct_point_sets;
    auto entry = [](const OrbitalWalkResult& w) {
        json e;
        e["walk"] = walk(w.walk);
        e["pass"] = w.pass;
        e["z"] = w.z ? json(*w.z) : json(nullptr);
        return e;
    };
    json rows = json::array();
    for (const auto& w : r.listed) rows.push_back(entry(w));
    j["walks"] = std::move(rows);
    j["first_failure"] = r.first_failure ? entry(*r.first_failure) : json(nullptr);
    return j;
}

inline json omega(const FiniteSystem& s, const std::vector<OmegaSet>& cycles, const std::optional<OmegaSet>& point) {
    json j = header(s, "omega");
    json rows = json::array();
    for (const auto& c : cycles) rows.push_back(point_set(c.cycle));
    j["cycles"] = std::move(rows);
    if (point) {
        json p;
        p["anchor"] = point->anchor;
        p["cycle"] = point_set(point->cycle);
        p["entry_time"] = point->entry_time;
        p["orbit"] = walk(orbit(s, point->anchor));
        j["point"] = std::move(p);
    }
    return j;
}

inline json axiom(const AxiomResult& a) {
    json j;
    j["pass"] = a.pass;
    j["witness"] = a.witness ? json::array({a.witness->first, a.witness->second}) : json(nullptr);
    return j;
}

inline json uniformity(const FiniteSystem& s, const std::vector<Distance>& eps_values, const UniformityBaseReport& r) {
    json j = header(s, "uniformity-base");
    j["family"] = eps_values;
    j["intersection"] = axiom(r.intersection);
    j["composition"] = axiom(r.composition);
    j["inversion"] = axiom(r.inversion);
    j["separating"] = r.separating;
    j["all_pass"] = r.all_pass();
    return j;
}

} // namespace pseudotrap::report

#endif // PSEUDOTRAP_REPORT_HPP
