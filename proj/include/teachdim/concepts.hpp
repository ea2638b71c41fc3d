#pragma once
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "teachdim/bits.hpp"
#include "teachdim/errors.hpp"

namespace teachdim {

// one concept = one machine word; bit i-1 carries the label of instance i
using Concept = uint32_t;

inline constexpr int kMaxInstances = 30;

// labels of a concept on an instance set, packed in increasing coordinate order
struct Pattern {
    uint32_t bits = 0;
    int width = 0;

    friend bool operator==(const Pattern&, const Pattern&) = default;
};

inline Pattern project_one(Concept c, InstanceSet a) {
    return Pattern{extract_bits(c, a), popcount(a)};
}

// finite set of distinct concepts over [n]; immutable, iteration order is
// ascending word order
class ConceptClass {
  public:
    ConceptClass(int n, std::vector<Concept> words);

    int n() const { return n_; }
    size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }
    const std::vector<Concept>& words() const { return words_; }
    Concept word(size_t i) const { return words_[i]; }
    bool contains(Concept c) const;
    uint32_t full_mask() const { return (n_ == 32) ? ~0u : (1u << n_) - 1; }

    friend bool operator==(const ConceptClass&, const ConceptClass&) = default;

  private:
    int n_;
    std::vector<Concept> words_;
};

std::string concept_to_string(Concept c, int n);
Concept concept_from_string(const std::string& s);

// {c|_A : c in C}, deduplicated, sorted by pattern bits
std::vector<Pattern> project(const ConceptClass& C, InstanceSet A);

// number of distinct patterns of C on A
size_t project_count(const ConceptClass& C, InstanceSet A);

// true as soon as the distinct-pattern count on A exceeds cap
bool project_count_exceeds(const ConceptClass& C, InstanceSet A, size_t cap);

// C^{Y,b} = {c in C : c|_Y = b}; may be empty; n unchanged
ConceptClass restrict_class(const ConceptClass& C, InstanceSet Y, Pattern b);

// class over [n1+n2] of all concatenations c1*c2 (factor 1 in the low bits)
ConceptClass product(const ConceptClass& C1, const ConceptClass& C2);

// coordinates where the two concepts disagree
InstanceSet difference_set(Concept c, Concept cp, int n);

// text format: first line "n=<int>", then one n-char {0,1} string per line;
// '#' starts a comment, blank lines ignored, duplicate concepts rejected
ConceptClass parse_class(std::istream& in);
ConceptClass parse_class_file(const std::string& path);
void write_class(std::ostream& out, const ConceptClass& C);
void write_class_file(const std::string& path, const ConceptClass& C);

} // namespace teachdim
