#pragma once

#include <json.hpp>

#include "linsys/cohomology.hpp"
#include "linsys/cremona.hpp"
#include "linsys/oracle.hpp"
#include "linsys/star.hpp"

namespace linsys {

using json = nlohmann::json;

inline json bint_json(const Bint& v) {
    if (v <= (std::numeric_limits<long long>::max)() && v >= (std::numeric_limits<long long>::min)())
        return static_cast<long long>(v);
    return v.str();  // past 64 bits, emit the decimal string
}

inline json spec_json(const LinearSystemSpec& spec) {
    return json{{"n", spec.n()}, {"d", spec.d()}, {"mults", spec.mults()}};
}

inline json multiindex_json(const MultiIndex& I) { return json(I.labels()); }

inline json dimension_report_json(const LinearSystemSpec& spec, const DimensionReport& rep) {
    json terms = json::array();
    for (const auto& t : rep.terms)
        terms.push_back(json{{"I", multiindex_json(t.I)}, {"r", t.r}, {"k", t.k}, {"term", bint_json(t.term)}});
    json j = spec_json(spec);
    j["vdim"] = bint_json(rep.vdim);
    j["edim"] = bint_json(rep.edim);
    j["ldim"] = bint_json(rep.ldim);
    if (rep.lexpdim)
        j["lexpdim"] = bint_json(*rep.lexpdim);
    else
        j["lexpdim"] = "unknown";
    j["b"] = rep.b;
    j["terms"] = std::move(terms);
    return j;
}

inline json base_locus_json(const BaseLocusTable& t) {
    json entries = json::array();
    for (const auto& [I, k] : t.entries)
        entries.push_back(json{{"I", multiindex_json(I)}, {"k", k}});
    return json{{"b", t.b}, {"rbar", t.rbar}, {"entries", std::move(entries)}};
}

inline json picard_json(const PicardClass& c) {
    json exc = json::array();
    for (const auto& [I, v] : c.exc)
        exc.push_back(json{{"I", multiindex_json(I)}, {"c", v}});
    return json{{"degree", c.degree}, {"exc", std::move(exc)}};
}

inline json conditions_json(const ConditionsReport& r) {
    json w = json::array();
    for (const auto& [a, b] : r.witnesses)
        w.push_back(json{{"I", multiindex_json(a)}, {"J", multiindex_json(b)}});
    return json{{"holds_I", r.holds_I},
                {"holds_II", r.holds_II},
                {"holds_III", r.holds_III},
                {"witnesses", std::move(w)}};
}

inline json moves_json(const std::vector<CremonaMove>& moves) {
    json out = json::array();
    for (const auto& m : moves) out.push_back(json{{"base", m.base}, {"c", m.c}});
    return out;
}

inline json regime_json(const RegimeReport& r) {
    return json{{"tag", regime_name(r.tag)},          {"effective", effectivity_name(r.effective)},
                {"guaranteed", r.guaranteed},         {"b", r.b},
                {"s_d", r.s_d},                       {"s_stripped", r.s_stripped},
                {"chamber", r.chamber}};
}

inline json cohomology_table_json(const CohomologyTable& t) {
    json levels = json::array();
    for (size_t i = 0; i < t.levels.size(); ++i)
        levels.push_back(json{{"r", static_cast<int>(i) - 1}, {"h", t.levels[i]}});
    json j{{"regime", regime_name(t.regime.tag)},
           {"guaranteed", t.guaranteed},
           {"levels", std::move(levels)}};
    if (t.binomial_part_only)
        j["note"] = "entries are the binomial tails only; the unknown h^i of the fully "
                    "blown-up transform are not guessed";
    if (t.chi_top) j["chi_top"] = *t.chi_top;
    return j;
}

inline json oracle_json(const OracleResult& r) {
    return json{{"h0", r.h0},
                {"cols", bint_json(r.cols)},
                {"rows", bint_json(r.rows)},
                {"rank", r.rank},
                {"per_trial_h0", r.per_trial_h0},
                {"prime", r.prime},
                {"seed", r.seed},
                {"failure_bound", r.failure_bound}};
}

inline json points_json(const std::vector<std::vector<uint64_t>>& pts) {
    json out = json::array();
    for (const auto& p : pts) out.push_back(p);
    return out;
}

inline json containment_json(const ContainmentReport& r) {
    return json{{"multiplicity", r.multiplicity}, {"per_draw", r.per_draw}, {"consistent", r.consistent}};
}

}  // namespace linsys
