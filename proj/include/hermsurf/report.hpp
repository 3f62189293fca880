#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "hermsurf/census.hpp"

namespace hermsurf {

using ordered_json = nlohmann::ordered_json;

inline ordered_json field_json(const CensusReport& rep) {
    return ordered_json{{"t", rep.t}, {"q", rep.q}, {"poly", rep.poly}};
}

inline ordered_json weights_json(const WeightDistribution& wd) {
    ordered_json rows = ordered_json::array();
    for (auto& [w, c] : wd.counts)
        rows.push_back({{"weight", w}, {"codeword_count", c}, {"projective_count", c / (wd.q - 1)}});
    return ordered_json{{"t", wd.t}, {"q", wd.q}, {"total_nonzero_codewords", wd.total()},
                        {"rows", rows}};
}

inline std::string weights_csv(const WeightDistribution& wd) {
    std::ostringstream os;
    os << "weight,codeword_count,projective_count\n";
    for (auto& [w, c] : wd.counts) os << w << "," << c << "," << c / (wd.q - 1) << "\n";
    return os.str();
}

inline ordered_json census_json(const CensusReport& rep) {
    ordered_json rows = ordered_json::array();
    for (int ty = 1; ty <= 15; ++ty) {
        const TypeRow& r = rep.rows[ty];
        ordered_json hist;
        for (auto& [sec, n] : r.hist) hist[std::to_string(sec)] = n;
        rows.push_back({{"type", ty},
                        {"rank", type_rank(ty)},
                        {"description", type_description(ty)},
                        {"count", r.count},
                        {"min", r.min_sec},
                        {"max", r.max_sec},
                        {"histogram", hist},
                        {"mode", r.exact ? "exact" : "sampled"},
                        {"verdict", r.verdict},
                        {"ok", r.ok}});
    }
    ordered_json pairs;
    for (auto& [key, hist] : rep.pair_hist) {
        ordered_json h;
        for (auto& [sec, n] : hist) h[std::to_string(sec)] = n;
        pairs[key] = h;
    }
    ordered_json cones;
    for (auto& [ng, hist] : rep.cone_hist) {
        ordered_json h;
        for (auto& [sec, n] : hist) h[std::to_string(sec)] = n;
        cones[std::to_string(ng) + "_generators"] = h;
    }
    ordered_json j{{"field", field_json(rep)},
                   {"mode", rep.mode},
                   {"rows", rows},
                   {"plane_pairs", pairs},
                   {"cones", cones},
                   {"all_ok", rep.all_ok},
                   {"violations", rep.violations},
                   {"provenance",
                    {{"seed", rep.seed},
                     {"shards", rep.shards},
                     {"samples", rep.samples},
                     {"samples_low_rank", rep.samples_low_rank},
                     {"poly", rep.poly}}}};
    if (!rep.weights.counts.empty()) j["weights"] = weights_json(rep.weights);
    return j;
}

inline ordered_json family_json(const FamilyResult& r) {
    return ordered_json{{"family", r.family},
                        {"constructed", r.constructed},
                        {"formula", r.formula},
                        {"ok", r.ok}};
}

inline ordered_json conjecture_json(const ConjectureReport& c) {
    ordered_json fourth, fifth;
    for (auto& [k, n] : c.fourth_types) fourth[k] = n;
    for (auto& [k, n] : c.fifth_types) fifth[k] = n;
    return ordered_json{{"t", c.t},
                        {"fourth_weight", c.fourth_weight},
                        {"fourth_expected", c.fourth_expected},
                        {"fourth_ok", c.fourth_ok},
                        {"fourth_type_decomposition", fourth},
                        {"fifth_weight", c.fifth_weight},
                        {"fifth_expected", c.fifth_expected},
                        {"fifth_ok", c.fifth_ok},
                        {"fifth_type_decomposition", fifth}};
}

inline ordered_json two_gen_hyperbolic_json(const TwoGenHyperbolicReport& r) {
    ordered_json hist;
    for (auto& [sec, n] : r.hist) hist[std::to_string(sec)] = n;
    return ordered_json{{"t", r.t},
                        {"mode", r.exact ? "exact" : "sampled"},
                        {"count", r.count},
                        {"max_section", r.max_section},
                        {"histogram", hist},
                        {"ok", r.ok}};
}

/// Aligned text table, one "predicted / observed" pair per type row.
inline std::string census_text(const CensusReport& rep) {
    std::ostringstream os;
    os << "quadric section census  t=" << rep.t << "  q=" << rep.q << "  poly=" << rep.poly
       << "  mode=" << rep.mode;
    if (rep.mode == "stratified")
        os << "  seed=" << rep.seed << "  samples=" << rep.samples << "  shards=" << rep.shards;
    os << "\n";
    os << "type rank count      mode     predicted                                  observed\n";
    for (int ty = 1; ty <= 15; ++ty) {
        const TypeRow& r = rep.rows[ty];
        std::ostringstream hist;
        for (auto& [sec, n] : r.hist) hist << sec << ":" << n << " ";
        char line[256];
        std::snprintf(line, sizeof(line), "%-4d %-4d %-10lld %-8s %-42s %s[%s]\n", ty,
                      type_rank(ty), r.count, r.exact ? "exact" : "sampled", r.verdict.c_str(),
                      hist.str().c_str(), r.ok ? "ok" : "VIOLATED");
        os << line;
    }
    for (auto& v : rep.violations) os << "violation: " << v << "\n";
    os << (rep.all_ok ? "all checks passed\n" : "CHECKS FAILED\n");
    return os.str();
}

}  // namespace hermsurf
