#include "teachdim/concepts.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace teachdim {

ConceptClass::ConceptClass(int n, std::vector<Concept> words) : n_(n), words_(std::move(words)) {
    if (n_ < 1 || n_ > kMaxInstances)
        throw capacity_error("instance-space size must be in [1, " +
                             std::to_string(kMaxInstances) + "], got " + std::to_string(n_));
    uint32_t full = (1u << n_) - 1;
    for (Concept c : words_)
        if (c & ~full) throw input_error("concept has bits beyond instance " + std::to_string(n_));
    std::sort(words_.begin(), words_.end());
    if (std::adjacent_find(words_.begin(), words_.end()) != words_.end())
        throw input_error("duplicate concept in class");
}

bool ConceptClass::contains(Concept c) const {
    return std::binary_search(words_.begin(), words_.end(), c);
}

std::string concept_to_string(Concept c, int n) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if (c >> i & 1) s[i] = '1';
    return s;
}

Concept concept_from_string(const std::string& s) {
    if (s.empty() || (int)s.size() > kMaxInstances)
        throw input_error("concept string length must be in [1, " + std::to_string(kMaxInstances) + "]");
    Concept c = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            c |= 1u << i;
        else if (s[i] != '0')
            throw input_error("concept string must be over {0,1}");
    }
    return c;
}

std::vector<Pattern> project(const ConceptClass& C, InstanceSet A) {
    if (A & ~C.full_mask()) throw input_error("projection set has coordinates beyond the instance space");
    std::vector<uint32_t> pats;
    pats.reserve(C.size());
    for (Concept c : C.words()) pats.push_back(extract_bits(c, A));
    std::sort(pats.begin(), pats.end());
    pats.erase(std::unique(pats.begin(), pats.end()), pats.end());
    int w = popcount(A);
    std::vector<Pattern> out;
    out.reserve(pats.size());
    for (uint32_t p : pats) out.push_back(Pattern{p, w});
    return out;
}

namespace {

// reusable stamp table for distinct-pattern counting; thread safe via
// thread_local, generation counter avoids clearing between calls
struct StampTable {
    std::vector<uint32_t> stamp;
    uint32_t gen = 0;

    void begin(size_t need) {
        if (stamp.size() < need) stamp.assign(need, 0);
        if (++gen == 0) {
            std::fill(stamp.begin(), stamp.end(), 0);
            gen = 1;
        }
    }
    bool mark(uint32_t v) { // true when v is new
        if (stamp[v] == gen) return false;
        stamp[v] = gen;
        return true;
    }
};

thread_local StampTable tl_stamps;

} // namespace

size_t project_count(const ConceptClass& C, InstanceSet A) {
    if (A & ~C.full_mask()) throw input_error("projection set has coordinates beyond the instance space");
    int w = popcount(A);
    if (w <= 22) {
        tl_stamps.begin(size_t(1) << w);
        size_t distinct = 0;
        for (Concept c : C.words())
            if (tl_stamps.mark(extract_bits(c, A))) ++distinct;
        return distinct;
    }
    return project(C, A).size();
}

bool project_count_exceeds(const ConceptClass& C, InstanceSet A, size_t cap) {
    if (A & ~C.full_mask()) throw input_error("projection set has coordinates beyond the instance space");
    int w = popcount(A);
    if (w <= 22) {
        tl_stamps.begin(size_t(1) << w);
        size_t distinct = 0;
        for (Concept c : C.words()) {
            if (tl_stamps.mark(extract_bits(c, A)) && ++distinct > cap) return true;
        }
        return false;
    }
    return project(C, A).size() > cap;
}

ConceptClass restrict_class(const ConceptClass& C, InstanceSet Y, Pattern b) {
    if (popcount(Y) != b.width) throw input_error("pattern width does not match |Y|");
    if (Y & ~C.full_mask()) throw input_error("restriction set has coordinates beyond the instance space");
    std::vector<Concept> kept;
    for (Concept c : C.words())
        if (extract_bits(c, Y) == b.bits) kept.push_back(c);
    return ConceptClass(C.n(), std::move(kept));
}

ConceptClass product(const ConceptClass& C1, const ConceptClass& C2) {
    if (C1.empty() || C2.empty()) throw domain_error("product factors must be nonempty");
    int n = C1.n() + C2.n();
    if (n > kMaxInstances)
        throw capacity_error("product instance space " + std::to_string(n) + " exceeds " +
                             std::to_string(kMaxInstances));
    std::vector<Concept> words;
    words.reserve(C1.size() * C2.size());
    for (Concept c2 : C2.words())
        for (Concept c1 : C1.words()) words.push_back(c1 | (c2 << C1.n()));
    return ConceptClass(n, std::move(words));
}

InstanceSet difference_set(Concept c, Concept cp, int n) {
    uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
    if ((c & ~full) || (cp & ~full)) throw input_error("concept has bits beyond instance " + std::to_string(n));
    return c ^ cp;
}

ConceptClass parse_class(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Concept> words;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        line.erase(0, start);
        if (n < 0) {
            if (line.rfind("n=", 0) != 0) throw parse_error(lineno, "expected header n=<int>");
            try {
                size_t used = 0;
                n = std::stoi(line.substr(2), &used);
                if (used != line.size() - 2) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw parse_error(lineno, "malformed header, expected n=<int>");
            }
            if (n < 1 || n > kMaxInstances)
                throw parse_error(lineno, "n must be in [1, " + std::to_string(kMaxInstances) + "]");
            continue;
        }
        if ((int)line.size() != n)
            throw parse_error(lineno, "concept has length " + std::to_string(line.size()) +
                                          ", expected " + std::to_string(n));
        for (char ch : line)
            if (ch != '0' && ch != '1') throw parse_error(lineno, "concept must be over {0,1}");
        Concept c = concept_from_string(line);
        for (Concept prev : words)
            if (prev == c) throw parse_error(lineno, "duplicate concept " + line);
        words.push_back(c);
    }
    if (n < 0) throw parse_error(lineno, "missing header n=<int>");
    if (words.empty()) throw parse_error(lineno, "class has no concepts");
    return ConceptClass(n, std::move(words));
}

ConceptClass parse_class_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    return parse_class(in);
}

void write_class(std::ostream& out, const ConceptClass& C) {
    out << "n=" << C.n() << "\n";
    for (Concept c : C.words()) out << concept_to_string(c, C.n()) << "\n";
}

void write_class_file(const std::string& path, const ConceptClass& C) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open " + path + " for writing");
    write_class(out, C);
}

} // namespace teachdim
