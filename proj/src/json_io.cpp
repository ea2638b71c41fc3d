#include "teachdim/json_io.hpp"

#include <algorithm>

#include "teachdim/explore.hpp"

namespace teachdim {

using nlohmann::json;

AnalysisReport analyze_class(const ConceptClass& C, int profile_max) {
    if (C.empty()) throw domain_error("analyze of the empty class");
    AnalysisReport rep;
    rep.n = C.n();
    rep.size = C.size();
    rep.vcd = vc_dimension(C);
    rep.td = td_spectrum(C);
    rep.td_min = *std::min_element(rep.td.begin(), rep.td.end());
    rep.td_max = *std::max_element(rep.td.begin(), rep.td.end());
    rep.plan = recursive_teaching_plan(C);
    rep.rtd = rep.plan.rtd;
    rep.profile = pattern_profile(C, std::min(profile_max, C.n()));
    rep.maximal = is_maximal_class(C);
    rep.intersection_closed = is_intersection_closed(C);
    return rep;
}

json to_json(const AnalysisReport& rep, const ConceptClass& C) {
    json j;
    j["n"] = rep.n;
    j["size"] = rep.size;
    j["vcd"] = rep.vcd;
    json td = json::object();
    for (size_t i = 0; i < rep.td.size(); ++i)
        td[concept_to_string(C.word(i), rep.n)] = rep.td[i];
    j["td"] = td;
    j["td_min"] = rep.td_min;
    j["td_max"] = rep.td_max;
    j["rtd"] = rep.rtd;
    json plan = json::array();
    for (const auto& lvl : rep.plan.levels) {
        json l;
        l["level_td"] = lvl.level_td;
        json removed = json::array();
        for (Concept c : lvl.removed) removed.push_back(concept_to_string(c, rep.n));
        l["removed"] = removed;
        plan.push_back(l);
    }
    j["plan"] = plan;
    json prof = json::object();
    for (const auto& [x, m] : rep.profile.max_patterns) prof[std::to_string(x)] = m;
    j["profile"] = prof;
    j["maximal"] = rep.maximal;
    j["intersection_closed"] = rep.intersection_closed;
    return j;
}

json to_json(const BoundReport& rep) {
    json j;
    j["d"] = rep.d;
    j["alpha"] = rep.alpha;
    j["lambda_star"] = rep.lambda_star;
    j["x_start"] = rep.x_start;
    json chain = json::array();
    for (const auto& st : rep.chain) {
        json s;
        s["x"] = st.x;
        if (st.y)
            s["y"] = *st.y;
        else
            s["y"] = nullptr;
        s["k"] = st.k;
        if (st.restriction_size)
            s["restriction_size"] = *st.restriction_size;
        else
            s["restriction_size"] = nullptr;
        chain.push_back(s);
    }
    j["chain"] = chain;
    if (rep.ts_size)
        j["ts_size"] = *rep.ts_size;
    else
        j["ts_size"] = nullptr;
    j["rtd_bound"] = rep.rtd_bound;
    return j;
}

json to_json(const ExperimentStats& st) {
    json j;
    j["n"] = st.n;
    j["N"] = st.N;
    j["trials"] = st.trials;
    j["seed"] = st.seed;
    j["frac_rtd_lt_vcd"] = st.frac_rtd_lt_vcd;
    j["frac_rtd_eq_vcd"] = st.frac_rtd_eq_vcd;
    j["frac_rtd_gt_vcd"] = st.frac_rtd_gt_vcd;
    json rh = json::object(), vh = json::object();
    for (const auto& [k, v] : st.rtd_histogram) rh[std::to_string(k)] = v;
    for (const auto& [k, v] : st.vcd_histogram) vh[std::to_string(k)] = v;
    j["rtd_histogram"] = rh;
    j["vcd_histogram"] = vh;
    return j;
}

json to_json(const SearchResult& sr) {
    json j;
    j["n"] = sr.n;
    json cls = json::array();
    for (Concept c : sr.best_class) cls.push_back(concept_to_string(c, sr.n));
    j["best_class"] = cls;
    j["rtd"] = sr.rtd;
    j["vcd"] = sr.vcd;
    j["ratio"] = sr.ratio;
    j["evaluations"] = sr.evaluations;
    j["seed"] = sr.seed;
    return j;
}

namespace {

json item_json(const CorpusItem& it) {
    json j;
    j["name"] = it.name;
    if (it.skipped) {
        j["skipped"] = true;
        j["notice"] = it.notice;
        return j;
    }
    json checks = json::array();
    for (const auto& c : it.checks) {
        json cj;
        cj["what"] = c.what;
        cj["pass"] = c.pass;
        cj["detail"] = c.detail;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    return j;
}

} // namespace

json to_json(const CorpusReport& rep) {
    json j;
    json items = json::array();
    for (const auto& it : rep.items) items.push_back(item_json(it));
    j["classes"] = items;
    json pitems = json::array();
    for (const auto& it : rep.pair_items) pitems.push_back(item_json(it));
    j["pairs"] = pitems;
    j["all_pass"] = rep.all_pass;
    return j;
}

} // namespace teachdim
