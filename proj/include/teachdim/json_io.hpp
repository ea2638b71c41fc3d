#pragma once
#include <string>

#include <json.hpp>

#include "teachdim/bounds.hpp"
#include "teachdim/explore.hpp"
#include "teachdim/measures.hpp"

namespace teachdim {

// full analysis of one class, the `analyze` subcommand's payload
struct AnalysisReport {
    int n = 0;
    size_t size = 0;
    int vcd = 0;
    std::vector<int> td;
    int td_min = 0;
    int td_max = 0;
    int rtd = 0;
    TeachingPlan plan;
    PatternProfile profile;
    bool maximal = false;
    bool intersection_closed = false;
};

AnalysisReport analyze_class(const ConceptClass& C, int profile_max);

nlohmann::json to_json(const AnalysisReport& rep, const ConceptClass& C);
nlohmann::json to_json(const BoundReport& rep);
nlohmann::json to_json(const ExperimentStats& st);
nlohmann::json to_json(const SearchResult& sr);
nlohmann::json to_json(const CorpusReport& rep);

} // namespace teachdim
