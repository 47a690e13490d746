#include <doctest.h>

#include "richwords/eertree.hpp"
#include "richwords/prng.hpp"
#include "richwords/reference.hpp"
#include "richwords/word.hpp"

using namespace richwords;

namespace {

Word random_word(SplitMix64& rng, std::size_t max_len, int alphabet) {
    std::size_t len = rng.below(max_len + 1);
    std::vector<Symbol> s(len);
    for (auto& c : s) c = static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(alphabet)));
    return Word(s, alphabet);
}

std::vector<bool> push_sequence(const Word& w) {
    Eertree tree(w.alphabet_size());
    std::vector<bool> created;
    for (Symbol s : w.symbols()) created.push_back(tree.push(s));
    return created;
}

}  // namespace

TEST_CASE("push creation sequence") {
    CHECK(push_sequence(Word::parse("0120", 3)) == std::vector<bool>{true, true, true, false});
    CHECK(push_sequence(Word::parse("0", 3)) == std::vector<bool>{true});
    CHECK(push_sequence(Word::parse("011", 3)) == std::vector<bool>{true, true, true});
}

TEST_CASE("longest palindromic suffix is tracked") {
    Eertree tree(2);
    Word w = Word::parse("0110");
    int expected[] = {1, 1, 2, 4};  // 0, 1, 11, 0110
    for (std::size_t i = 0; i < w.size(); ++i) {
        tree.push(w[i]);
        CHECK(tree.longest_suffix_palindrome_length() == expected[i]);
    }
}

TEST_CASE("richness examples") {
    CHECK_FALSE(is_rich(Word::parse("2102", 3)));
    CHECK(is_rich(Word::parse("", 3)));
    CHECK_FALSE(is_rich(Word::parse("01220", 3)));
    CHECK(is_rich(Word::parse("0110")));
    CHECK(is_rich(Word::parse("011011")));
}

TEST_CASE("richness report") {
    RichnessReport r = richness_report(Word::parse("0120", 3));
    CHECK(r.defect == 1);
    REQUIRE(r.first_defect_position.has_value());
    CHECK(*r.first_defect_position == 4);

    r = richness_report(Word::parse("011", 3));
    CHECK(r.defect == 0);
    CHECK_FALSE(r.first_defect_position.has_value());

    r = richness_report(Word::parse("210102", 3));
    CHECK(r.defect >= 1);
    CHECK(r.word_length == 6);
    CHECK(r.defect == r.word_length - r.distinct_palindromes);
}

TEST_CASE("rollback restores the tree exactly") {
    Word w = Word::parse("0120112102", 3);
    Eertree tree(3);
    std::vector<bool> first;
    for (Symbol s : w.symbols()) first.push_back(tree.push(s));
    std::size_t counts_at_4 = 0;
    {
        Eertree fresh(3);
        for (std::size_t i = 0; i < 4; ++i) fresh.push(w[i]);
        counts_at_4 = fresh.palindrome_count();
    }
    tree.rollback(4);
    CHECK(tree.length() == 4);
    CHECK(tree.palindrome_count() == counts_at_4);
    // replaying after rollback gives the same creation flags
    for (std::size_t i = 4; i < w.size(); ++i) {
        CHECK(tree.push(w[i]) == first[i]);
    }
    tree.rollback(0);
    CHECK(tree.palindrome_count() == 0);
}

TEST_CASE("eertree agrees with the brute-force palindrome count") {
    SplitMix64 rng(11);
    for (int i = 0; i < 500; ++i) {
        Word w = random_word(rng, 16, 3);
        Eertree tree(3);
        for (Symbol s : w.symbols()) tree.push(s);
        CHECK(tree.palindrome_count() == reference::count_distinct_palindromes(w));
        CHECK(is_rich(w) == reference::is_rich(w));
    }
}

TEST_CASE("palindrome count is bounded by length") {
    SplitMix64 rng(12);
    for (int i = 0; i < 300; ++i) {
        Word w = random_word(rng, 40, 3);
        RichnessReport r = richness_report(w);
        CHECK(r.distinct_palindromes <= r.word_length);
    }
}

TEST_CASE("richness is hereditary to factors") {
    SplitMix64 rng(13);
    int rich_seen = 0;
    while (rich_seen < 100) {
        Word w = random_word(rng, 14, 2);
        if (!is_rich(w)) continue;
        ++rich_seen;
        for (int t = 0; t < 10; ++t) {
            std::size_t pos = rng.below(w.size() + 1);
            std::size_t len = rng.below(w.size() - pos + 1);
            CHECK(is_rich(w.subword(pos, len)));
        }
    }
}

TEST_CASE("defect never repairs under extension") {
    SplitMix64 rng(14);
    for (int i = 0; i < 200; ++i) {
        Word w = random_word(rng, 24, 3);
        bool broken = false;
        Eertree tree(3);
        for (Symbol s : w.symbols()) {
            bool created = tree.push(s);
            if (broken) {
                // once a push fails to create, the word stays non-rich; the
                // prefix is non-rich exactly when some push did not create
                CHECK(tree.palindrome_count() < tree.length());
            }
            broken = broken || !created;
        }
        CHECK(broken == !is_rich(w));
    }
}
