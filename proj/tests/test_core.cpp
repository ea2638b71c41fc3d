#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "teachdim/bits.hpp"
#include "teachdim/canonical.hpp"
#include "teachdim/concepts.hpp"
#include "teachdim/rng.hpp"

#include "oracles.hpp"

using namespace teachdim;

static ConceptClass from_strings(const std::vector<std::string>& ss) {
    std::vector<Concept> words;
    for (auto& s : ss) words.push_back(concept_from_string(s));
    return ConceptClass((int)ss[0].size(), std::move(words));
}

TEST_CASE("bit helpers agree with index arithmetic") {
    CHECK(extract_bits(0b1011, 0b0011) == 0b11);
    CHECK(extract_bits(0b1011, 0b1010) == 0b11);
    CHECK(extract_bits(0b1011, 0b0100) == 0b0);
    CHECK(deposit_bits(0b11, 0b1010) == 0b1010);
    CHECK(deposit_bits(0b01, 0b1010) == 0b0010);
    for (uint32_t mask : {0b1u, 0b1010u, 0b110101u, 0x3FFFFFFFu}) {
        int w = popcount(mask);
        for (uint32_t v = 0; v < (1u << std::min(w, 6)); ++v) {
            CHECK(extract_bits(deposit_bits(v, mask), mask) == v);
        }
    }
}

TEST_CASE("next_combination enumerates binomial(n, k) masks in increasing order") {
    for (int n = 1; n <= 10; ++n) {
        for (int k = 1; k <= n; ++k) {
            uint32_t m = first_combination(k);
            uint32_t prev = 0;
            size_t count = 0;
            while (m != 0 && m < (1u << n)) {
                CHECK(popcount(m) == k);
                CHECK(m > prev);
                prev = m;
                ++count;
                m = next_combination(m, n);
            }
            // binomial(n, k) by Pascal recurrence
            uint64_t binom = 1;
            for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
            CHECK(count == binom);
        }
    }
}

TEST_CASE("set and pattern orderings match the documented comparisons") {
    // {1} before {3}: sets of equal size compare by lowest differing instance
    CHECK(set_lex_less(0b001, 0b100));
    CHECK_FALSE(set_lex_less(0b100, 0b001));
    // {1,3} vs {2,3}: instance 1 is the lowest difference and only the first
    // set holds it
    CHECK(set_lex_less(0b101, 0b110));
    CHECK_FALSE(set_lex_less(0b101, 0b101));

    // patterns of equal width compare by the first differing label, 0 first;
    // bit 0 is the first label, so 0b10 reads "01" and precedes 0b01 = "10"
    CHECK(pattern_lex_less(0b00, 0b01));
    CHECK(pattern_lex_less(0b10, 0b11));
    CHECK(pattern_lex_less(0b10, 0b01));
    CHECK_FALSE(pattern_lex_less(0b01, 0b10));
}

TEST_CASE("pattern ordering cross-checked against label-string comparison") {
    for (int w = 1; w <= 4; ++w) {
        for (uint32_t a = 0; a < (1u << w); ++a) {
            for (uint32_t b = 0; b < (1u << w); ++b) {
                std::string sa, sb;
                for (int j = 0; j < w; ++j) {
                    sa.push_back((a >> j) & 1 ? '1' : '0');
                    sb.push_back((b >> j) & 1 ? '1' : '0');
                }
                CHECK(pattern_lex_less(a, b) == (sa < sb));
            }
        }
    }
}

TEST_CASE("set ordering cross-checked against index-vector comparison") {
    for (uint32_t a = 1; a < 64; ++a) {
        for (uint32_t b = 1; b < 64; ++b) {
            if (popcount(a) != popcount(b)) continue;
            auto ia = set_indices(a), ib = set_indices(b);
            CHECK(set_lex_less(a, b) == (ia < ib));
        }
    }
}

TEST_CASE("set_indices round trip") {
    for (uint32_t m : {0b1u, 0b101u, 0b11100u}) {
        CHECK(set_from_indices(set_indices(m)) == m);
    }
    CHECK(set_indices(0b101) == std::vector<int>{1, 3});
}

TEST_CASE("concept string conversions") {
    CHECK(concept_to_string(0, 3) == "000");
    CHECK(concept_to_string(0b001, 3) == "100");
    CHECK(concept_to_string(0b100, 3) == "001");
    CHECK(concept_from_string("100") == 0b001);
    CHECK(concept_from_string("011") == 0b110);
    for (uint32_t c = 0; c < 32; ++c) {
        CHECK(concept_from_string(concept_to_string(c, 5)) == c);
    }
    // the oracle's independent string-to-word helper agrees
    for (auto& s : oracle::classes::rotation_strings()) {
        CHECK(concept_from_string(s) == oracle::word_from_string(s));
    }
}

TEST_CASE("class construction validates and sorts") {
    ConceptClass C(3, {0b110, 0b000, 0b100});
    CHECK(C.size() == 3);
    CHECK(C.word(0) == 0b000);
    CHECK(C.word(1) == 0b100);
    CHECK(C.word(2) == 0b110);
    CHECK(C.contains(0b100));
    CHECK_FALSE(C.contains(0b001));

    CHECK_THROWS_AS(ConceptClass(3, {0b001, 0b001}), input_error);
    CHECK_THROWS_AS(ConceptClass(3, {0b1000}), input_error);
    CHECK_THROWS_AS(ConceptClass(0, {0}), capacity_error);
    CHECK_THROWS_AS(ConceptClass(31, {0}), capacity_error);
    CHECK_NOTHROW(ConceptClass(30, {0}));
    CHECK_NOTHROW(ConceptClass(3, {}));
}

TEST_CASE("parse_class accepts the documented format") {
    std::istringstream in(
        "# a comment\n"
        "n=3\n"
        "\n"
        "000\n"
        "  001  \n"
        "# mid comment\n"
        "011\r\n"
        "111\n");
    ConceptClass C = parse_class(in);
    CHECK(C.n() == 3);
    CHECK(C.size() == 4);
    CHECK(C == from_strings(oracle::classes::chain_strings()));
}

TEST_CASE("parse_class rejects malformed input with line numbers") {
    auto expect_parse_error = [](const std::string& text, const std::string& needle) {
        std::istringstream in(text);
        try {
            parse_class(in);
            FAIL("expected parse_error for: ", text);
        } catch (const parse_error& e) {
            std::string msg = e.what();
            CHECK_MESSAGE(msg.find(needle) != std::string::npos, msg);
        }
    };
    expect_parse_error("000\n", "line 1");
    expect_parse_error("n=3\n00\n", "line 2");
    expect_parse_error("n=3\n0001\n", "line 2");
    expect_parse_error("n=3\n0x0\n", "line 2");
    expect_parse_error("n=3\n000\n001\n000\n", "line 4");
    expect_parse_error("n=abc\n", "line 1");
    expect_parse_error("n=0\n", "line 1");
    expect_parse_error("n=31\n", "line 1");
    expect_parse_error("n=3\n", "no concepts");
}

TEST_CASE("write then parse is the identity") {
    ConceptClass C = from_strings(oracle::classes::rotation_strings());
    std::ostringstream out;
    write_class(out, C);
    std::istringstream in(out.str());
    CHECK(parse_class(in) == C);

    auto path = std::filesystem::temp_directory_path() / "td_roundtrip.cls";
    write_class_file(path.string(), C);
    CHECK(parse_class_file(path.string()) == C);
    std::filesystem::remove(path);
}

TEST_CASE("projection examples") {
    ConceptClass C = from_strings(oracle::classes::chain_strings());
    // onto instance 3 both labels appear
    auto p3 = project(C, 0b100);
    CHECK(p3.size() == 2);
    // onto the empty set only the empty pattern
    auto p0 = project(C, 0);
    CHECK(p0.size() == 1);
    CHECK(p0[0].width == 0);
    // onto {1,2} three of four patterns appear (00, 01, 11 as label strings)
    CHECK(project_count(C, 0b011) == 3);

    ConceptClass cube = from_strings({"00", "10", "01", "11"});
    CHECK(project_count(cube, 0b11) == 4);
}

TEST_CASE("projection counts match the oracle on random classes") {
    rng g(11);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + (int)g.bounded(3);
        int N = 1 + (int)g.bounded(12);
        auto words = sample_distinct(1u << n, (uint32_t)std::min<uint64_t>(N, 1u << n), g);
        ConceptClass C(n, {words.begin(), words.end()});
        for (uint32_t A = 0; A < (1u << n); ++A) {
            auto idx = set_indices(A);
            size_t expect = oracle::project_set(C.words(), idx).size();
            CHECK(project_count(C, A) == expect);
            CHECK(project(C, A).size() == expect);
            CHECK_FALSE(project_count_exceeds(C, A, expect));
            CHECK(project_count_exceeds(C, A, expect - 1));
        }
    }
}

TEST_CASE("projection is monotone under coordinate growth") {
    rng g(12);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4;
        auto words = sample_distinct(1u << n, 6, g);
        ConceptClass C(n, {words.begin(), words.end()});
        const uint32_t full = (1u << n) - 1;
        for (uint32_t A = 0; A <= full; ++A) {
            for (uint32_t B = A;; B = (B + 1) | A) {
                CHECK(project_count(C, A) <= project_count(C, B));
                if (B == full) break;
            }
        }
    }
}

TEST_CASE("restriction examples and the partition property") {
    ConceptClass C = from_strings(oracle::classes::chain_strings());
    ConceptClass r0 = restrict_class(C, 0b001, Pattern{0, 1});
    CHECK(r0 == from_strings({"000", "001", "011"}));
    ConceptClass r1 = restrict_class(C, 0b001, Pattern{1, 1});
    CHECK(r1 == from_strings({"111"}));
    CHECK(restrict_class(C, 0, Pattern{0, 0}) == C);

    ConceptClass none = restrict_class(from_strings({"000", "100"}), 0b010, Pattern{1, 1});
    CHECK(none.empty());

    rng g(13);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 5;
        auto words = sample_distinct(1u << n, 10, g);
        ConceptClass R(n, {words.begin(), words.end()});
        for (uint32_t Y : {0b00101u, 0b11000u, 0b10110u}) {
            int w = popcount(Y);
            size_t total = 0;
            std::set<Concept> seen;
            for (uint32_t b = 0; b < (1u << w); ++b) {
                ConceptClass part = restrict_class(R, Y, Pattern{b, w});
                total += part.size();
                for (Concept c : part.words()) {
                    CHECK(seen.insert(c).second);
                    CHECK(extract_bits(c, Y) == b);
                }
            }
            CHECK(total == R.size());
        }
    }
}

TEST_CASE("product structure") {
    ConceptClass bit = from_strings({"0", "1"});
    ConceptClass cube2 = product(bit, bit);
    CHECK(cube2.n() == 2);
    CHECK(cube2.size() == 4);

    ConceptClass chain = from_strings(oracle::classes::chain_strings());
    ConceptClass P = product(chain, chain);
    CHECK(P.n() == 6);
    CHECK(P.size() == 16);
    // low coordinates carry the first factor
    CHECK(P.contains(concept_from_string("011000")));
    CHECK(P.contains(concept_from_string("000011")));
    CHECK_FALSE(P.contains(concept_from_string("010000")));
    CHECK(oracle::vcd(P.words(), P.n()) == 2);

    ConceptClass big(20, {0});
    ConceptClass also(11, {0});
    CHECK_THROWS_AS(product(big, also), capacity_error);
}

TEST_CASE("difference sets") {
    CHECK(difference_set(concept_from_string("000"), concept_from_string("111"), 3) == 0b111);
    CHECK(difference_set(concept_from_string("0110"), concept_from_string("0101"), 4) == 0b1100);
    CHECK(difference_set(5, 5, 3) == 0);
    CHECK_THROWS_AS(difference_set(0b1000, 0, 3), input_error);
}

// apply an instance permutation and a label-flip mask at the string level,
// independent of the library's representation
static ConceptClass transform(const ConceptClass& C, const std::vector<int>& perm,
                              uint32_t flips) {
    std::vector<Concept> out;
    for (Concept c : C.words()) {
        std::string s = concept_to_string(c, C.n());
        std::string t(s.size(), '0');
        for (int j = 0; j < C.n(); ++j) {
            char v = s[perm[j]];
            if ((flips >> j) & 1) v = (v == '0') ? '1' : '0';
            t[j] = v;
        }
        out.push_back(concept_from_string(t));
    }
    return ConceptClass(C.n(), std::move(out));
}

TEST_CASE("canonical form is invariant under every symmetry for small n") {
    rng g(14);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 3;
        auto words = sample_distinct(1u << n, 1 + (uint32_t)g.bounded(6), g);
        ConceptClass C(n, {words.begin(), words.end()});
        ConceptClass canon = canonical_form(C);
        CHECK(canonical_form(canon) == canon);
        std::vector<int> perm{0, 1, 2};
        do {
            for (uint32_t flips = 0; flips < 8; ++flips) {
                CHECK(canonical_form(transform(C, perm, flips)) == canon);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    // one larger exhaustive check: all 4! * 2^4 symmetries
    ConceptClass C4(4, {0b0000, 0b0011, 0b0101, 0b1110, 0b1001});
    ConceptClass canon4 = canonical_form(C4);
    std::vector<int> perm{0, 1, 2, 3};
    do {
        for (uint32_t flips = 0; flips < 16; ++flips) {
            CHECK(canonical_form(transform(C4, perm, flips)) == canon4);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("canonical form separates genuinely different classes") {
    ConceptClass a = from_strings({"00", "11"});
    ConceptClass b = from_strings({"00", "01"});
    CHECK(canonical_is_exact(2));
    CHECK_FALSE(canonical_form(a) == canonical_form(b));
    // {00,01} and {10,11} are the same class up to symmetry
    ConceptClass c = from_strings({"10", "11"});
    CHECK(canonical_form(b) == canonical_form(c));
}

TEST_CASE("canonical form above the exact cutoff is still deterministic and symmetric") {
    CHECK_FALSE(canonical_is_exact(10));
    rng g(15);
    auto words = sample_distinct(1u << 10, 30, g);
    ConceptClass C(10, {words.begin(), words.end()});
    ConceptClass k1 = canonical_form(C);
    ConceptClass k2 = canonical_form(C);
    CHECK(k1 == k2);
    CHECK(k1.size() == C.size());
}
