#include <doctest.h>

#include <algorithm>

#include "richwords/morphism.hpp"
#include "richwords/prng.hpp"
#include "richwords/reference.hpp"
#include "richwords/repetition.hpp"
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

TEST_CASE("smallest period") {
    CHECK(smallest_period(Word::parse("0000")) == 1);
    CHECK(smallest_period(Word::parse("01")) == 2);
    CHECK(smallest_period(Word::parse("0110110")) == 3);
    CHECK_THROWS_AS(smallest_period(Word::parse("")), std::invalid_argument);
}

TEST_CASE("exponent") {
    CHECK(exponent(Word::parse("0000")) == Rational(4));
    CHECK(exponent(Word::parse("0110110")) == Rational(7, 3));
    CHECK(exponent(Word::parse("010101")) == Rational(3));
    CHECK_THROWS_AS(exponent(Word::parse("")), std::invalid_argument);
}

TEST_CASE("max exponent factor with witness") {
    auto [e1, w1] = max_exponent_factor(Word::parse("0101011"));
    CHECK(e1 == Rational(3));
    CHECK(w1.start == 0);
    CHECK(w1.period == 2);
    CHECK(w1.length == 6);

    auto [e2, w2] = max_exponent_factor(Word::parse("01"));
    CHECK(e2 == Rational(1));

    auto [e3, w3] = max_exponent_factor(Word::parse("0110"));
    CHECK(e3 == Rational(2));
    CHECK(Word::parse("0110").subword(w3.start, w3.length) == Word::parse("11"));
}

TEST_CASE("witness invariants") {
    SplitMix64 rng(21);
    for (int i = 0; i < 300; ++i) {
        Word w = random_word(rng, 20, 2);
        if (w.empty()) continue;
        auto [e, wit] = max_exponent_factor(w);
        Word factor = w.subword(wit.start, wit.length);
        CHECK(smallest_period(factor) == wit.period);
        CHECK(Rational(static_cast<long>(wit.length), static_cast<long>(wit.period)) == e);
        CHECK(wit.period <= wit.length);
    }
}

TEST_CASE("alpha-freeness") {
    CHECK_FALSE(is_alpha_free(Word::parse("010101"), Rational(14, 5)));
    CHECK(is_alpha_free(Word::parse("0110110"), Rational(14, 5)));
    CHECK_FALSE(is_alpha_free(Word::parse("00"), Rational(2)));
    CHECK(is_alpha_free(Word::parse(""), Rational(14, 5)));
    CHECK_THROWS_AS(is_alpha_free(Word::parse("01"), Rational(1)), std::invalid_argument);
}

TEST_CASE("alpha-freeness is antitone in alpha and closed under factors") {
    SplitMix64 rng(22);
    const Rational alphas[] = {Rational(2), Rational(7, 3), Rational(14, 5), Rational(3)};
    for (int i = 0; i < 200; ++i) {
        Word w = random_word(rng, 18, 2);
        bool previous = false;
        for (const Rational& alpha : alphas) {
            bool free = is_alpha_free(w, alpha);
            if (previous) CHECK(free);  // alpha <= beta: alpha-free implies beta-free
            previous = free;
        }
        if (!w.empty() && is_alpha_free(w, Rational(14, 5))) {
            std::size_t pos = rng.below(w.size());
            std::size_t len = rng.below(w.size() - pos + 1);
            CHECK(is_alpha_free(w.subword(pos, len), Rational(14, 5)));
        }
    }
}

TEST_CASE("suffix extension safety") {
    CHECK(suffix_extension_safe(Word::parse("01010"), Rational(14, 5)));
    CHECK_FALSE(suffix_extension_safe(Word::parse("010101"), Rational(14, 5)));
    CHECK(suffix_extension_safe(Word::parse("0"), Rational(14, 5)));
}

TEST_CASE("incremental soundness of the suffix check") {
    SplitMix64 rng(23);
    for (int i = 0; i < 300; ++i) {
        Word w = random_word(rng, 20, 2);
        if (w.empty()) continue;
        bool all_safe = true;
        for (std::size_t len = 1; len <= w.size(); ++len) {
            all_safe = all_safe && suffix_extension_safe(w.prefix(len), Rational(14, 5));
        }
        CHECK(all_safe == is_alpha_free(w, Rational(14, 5)));
    }
}

TEST_CASE("good words") {
    CHECK(is_good(morphisms::f()(Word::parse("00", 3))));
    CHECK_FALSE(is_good(morphisms::f()(Word::parse("112", 3))));
    CHECK(is_good(Word::parse("")));
    CHECK(good_threshold() == Rational(14, 5));
}

TEST_CASE("cube detection") {
    CHECK(contains_cube(Word::parse("000")));
    CHECK_FALSE(contains_cube(Word::parse("0110110")));
    auto cube = find_cube(Word::parse("110111"));
    REQUIRE(cube.has_value());
    CHECK(*cube == Word::parse("111"));
    CHECK_FALSE(find_cube(Word::parse("0110")).has_value());
}

TEST_CASE("kernel agrees with the serial reference on random words") {
    SplitMix64 rng(24);
    for (int i = 0; i < 400; ++i) {
        Word w = random_word(rng, 16, i % 2 ? 2 : 3);
        if (w.empty()) continue;
        auto [ef, wf] = max_exponent_factor(w);
        auto [er, wr] = reference::max_exponent_factor(w);
        CHECK(ef == er);
        CHECK(wf.start == wr.start);
        CHECK(wf.period == wr.period);
        CHECK(wf.length == wr.length);
        CHECK(is_alpha_free(w, Rational(14, 5)) == reference::is_alpha_free(w, Rational(14, 5)));
    }
}

TEST_CASE("attained exponents") {
    // 0110110: the run 0110110 has period 3 and exponent 7/3; 11 gives 2.
    auto exps = attained_exponents(Word::parse("0110110"), Rational(2));
    CHECK(std::count(exps.begin(), exps.end(), Rational(7, 3)) == 1);
    CHECK(std::count(exps.begin(), exps.end(), Rational(2)) == 1);
    for (std::size_t i = 1; i < exps.size(); ++i) CHECK(exps[i - 1] < exps[i]);
}
