#include <doctest.h>

#include <sstream>

#include "richwords/prng.hpp"
#include "richwords/rational.hpp"
#include "richwords/word.hpp"

using namespace richwords;

namespace {

Word random_word(SplitMix64& rng, std::size_t max_len, int alphabet) {
    std::size_t len = rng.below(max_len + 1);
    std::vector<Symbol> s(len);
    for (auto& c : s) c = static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(alphabet)));
    return Word(s, alphabet);
}

}  // namespace

TEST_CASE("reverse") {
    CHECK(reverse(Word::parse("")) == Word::parse(""));
    CHECK(reverse(Word::parse("011")) == Word::parse("110"));
    CHECK(reverse(Word::parse("0110")) == Word::parse("0110"));
    SplitMix64 rng(1);
    for (int i = 0; i < 200; ++i) {
        Word w = random_word(rng, 24, 3);
        CHECK(reverse(reverse(w)) == w);
    }
}

TEST_CASE("complement") {
    CHECK(complement(Word::parse("01")) == Word::parse("10"));
    CHECK(complement(Word::parse("")) == Word::parse(""));
    CHECK(complement(Word::parse("0011")) == Word::parse("1100"));
    CHECK_THROWS_AS(complement(Word::parse("012")), std::invalid_argument);
    SplitMix64 rng(2);
    for (int i = 0; i < 200; ++i) {
        Word w = random_word(rng, 24, 2);
        CHECK(reverse(complement(w)) == complement(reverse(w)));
    }
}

TEST_CASE("distinct factors") {
    std::set<Word> f2 = distinct_factors(Word::parse("0101"), 2);
    CHECK(f2 == std::set<Word>{Word::parse("01"), Word::parse("10")});
    CHECK(distinct_factors(Word::parse("0110"), 0) == std::set<Word>{Word::parse("")});
    std::set<Word> f1 = distinct_factors(Word::parse("0120"), 1);
    CHECK(f1 == std::set<Word>{Word::parse("0"), Word::parse("1"), Word::parse("2")});
    CHECK(distinct_factors(Word::parse("01"), 5).empty());

    SplitMix64 rng(3);
    for (int i = 0; i < 100; ++i) {
        Word w = random_word(rng, 30, 3);
        CHECK(distinct_factors(w, 1).size() <= static_cast<std::size_t>(w.alphabet_size()));
    }
}

TEST_CASE("word parsing and validation") {
    CHECK(Word::parse("0120").alphabet_size() == 3);
    CHECK(Word::parse("0110").alphabet_size() == 2);
    CHECK(Word::parse("01", 3).alphabet_size() == 3);
    CHECK_THROWS_AS(Word::parse("013"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("2", 2), std::invalid_argument);
    CHECK(Word::parse("0120").str() == "0120");
}

TEST_CASE("word containment helpers") {
    Word w = Word::parse("0121012", 3);
    CHECK(w.contains(Word::parse("2101", 3)));
    CHECK_FALSE(w.contains(Word::parse("22", 3)));
    CHECK(w.starts_with(Word::parse("0121", 3)));
    CHECK(w.ends_with(Word::parse("012", 3)));
    CHECK(w.contains(Word::parse("", 3)));
}

TEST_CASE("rational ordering and parsing") {
    CHECK(Rational(14, 5) > Rational(7, 3));
    CHECK(Rational(7, 3) > Rational(2));
    CHECK(Rational::parse("14/5") == Rational(14, 5));
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("3").str() == "3/1");
    CHECK(Rational(28, 10) == Rational(14, 5));  // canonical form
    CHECK_THROWS_AS(Rational::parse("2.8"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("14/0"), std::invalid_argument);
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK((Rational(14, 5) / Rational(7, 3)) == Rational(6, 5));
}

TEST_CASE("exact sqrt2 comparisons") {
    // 2 + sqrt(2)/2 = 2.7071...: 27/10 below, 272/100 above.
    CHECK(compare_to_sqrt2_combination(Rational(27, 10), Rational(2), Rational(1, 2)) < 0);
    CHECK(compare_to_sqrt2_combination(Rational(272, 100), Rational(2), Rational(1, 2)) > 0);
    CHECK(compare_to_sqrt2_combination(Rational(3), Rational(3), Rational(0)) == 0);
    // 3 + sqrt(2) = 4.414...
    CHECK(compare_to_sqrt2_combination(Rational(441, 100), Rational(3), Rational(1)) < 0);
    CHECK(compare_to_sqrt2_combination(Rational(442, 100), Rational(3), Rational(1)) > 0);
    // negative side: -2 vs -sqrt(2)
    CHECK(compare_to_sqrt2_combination(Rational(-2), Rational(0), Rational(-1)) < 0);
    CHECK(compare_to_sqrt2_combination(Rational(-1), Rational(0), Rational(-1)) > 0);
}

TEST_CASE("word file round trip") {
    std::vector<Word> words = {Word::parse("0110"), Word::parse(""), Word::parse("0120")};
    std::stringstream buffer;
    write_word_lines(buffer, words);
    CHECK(buffer.str() == "0110\n\n0120\n");
    auto back = read_word_lines(buffer);
    REQUIRE(back.size() == 3);
    CHECK(back[0] == words[0]);
    CHECK(back[1] == words[1]);
    CHECK(back[2] == words[2]);
}
