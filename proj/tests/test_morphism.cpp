#include <doctest.h>

#include <cmath>

#include "richwords/eertree.hpp"
#include "richwords/morphism.hpp"
#include "richwords/prng.hpp"
#include "richwords/word.hpp"

using namespace richwords;

namespace {

Word ternary(const char* s) { return Word::parse(s, 3); }

Word random_ternary(SplitMix64& rng, std::size_t max_len) {
    std::size_t len = rng.below(max_len + 1);
    std::vector<Symbol> s(len);
    for (auto& c : s) c = static_cast<Symbol>(rng.below(3));
    return Word(s, 3);
}

// All ternary words of length 0..max_len, by counting.
template <typename F>
void for_all_ternary(std::size_t max_len, F&& fn) {
    for (std::size_t len = 0; len <= max_len; ++len) {
        std::size_t count = 1;
        for (std::size_t i = 0; i < len; ++i) count *= 3;
        for (std::size_t index = 0; index < count; ++index) {
            std::size_t code = index;
            std::vector<Symbol> s(len);
            for (std::size_t i = 0; i < len; ++i) {
                s[i] = static_cast<Symbol>(code % 3);
                code /= 3;
            }
            fn(Word(s, 3));
        }
    }
}

}  // namespace

TEST_CASE("registered images") {
    CHECK(morphisms::f().image(0) == Word::parse("0"));
    CHECK(morphisms::f().image(1) == Word::parse("01"));
    CHECK(morphisms::f().image(2) == Word::parse("011"));
    CHECK(morphisms::g().image(2) == ternary("012121"));
    CHECK(morphisms::h().image(2) == ternary("022"));
    CHECK(morphisms::gtilde().image(1) == ternary("1"));
    CHECK(morphisms::lambda().image(2) == Word::parse("101"));
    CHECK(morphisms::mu().image(2) == Word::parse("0111011110111"));
    CHECK(morphisms::xi().image(0) == Word::parse("011"));
    CHECK(morphisms::eta().image(1) == Word::parse("1"));
    CHECK(morphisms::xibar().image(1) == Word::parse("001"));
    CHECK(morphisms::etabar().image(0) == Word::parse("0"));
    CHECK(morphisms::registry().size() == 12);  // ten named plus two identities
    CHECK(morphisms::f().is_zero_block_code());
    CHECK(morphisms::g().is_zero_block_code());
    CHECK(morphisms::h().is_zero_block_code());
    CHECK_FALSE(morphisms::lambda().is_zero_block_code());
}

TEST_CASE("apply") {
    CHECK(morphisms::f()(ternary("011")) == Word::parse("00101"));
    CHECK(morphisms::g()(ternary("0")) == ternary("011"));
    CHECK(morphisms::f()(ternary("")) == Word::parse(""));
}

TEST_CASE("compose") {
    Morphism gth = compose(morphisms::gtilde(), morphisms::h());
    for (Symbol a = 0; a < 3; ++a) CHECK(gth.image(a) == morphisms::g().image(a));

    Morphism lh = compose(morphisms::lambda(), morphisms::h());
    Morphism xl = compose(morphisms::xi(), morphisms::lambda());
    for (Symbol a = 0; a < 3; ++a) CHECK(lh.image(a) == xl.image(a));

    Morphism id_f = compose(morphisms::identity(2), morphisms::f());
    for (Symbol a = 0; a < 3; ++a) CHECK(id_f.image(a) == morphisms::f().image(a));

    CHECK_THROWS_AS(compose(morphisms::f(), morphisms::f()), std::invalid_argument);
}

TEST_CASE("fixed point prefixes") {
    CHECK(fixed_point_prefix(morphisms::h(), 0, 7) == ternary("0102010"));
    CHECK(fixed_point_prefix(morphisms::h(), 0, 2) == ternary("01"));
    CHECK(fixed_point_prefix(morphisms::xi(), 0, 3) == Word::parse("011"));
    CHECK(fixed_point_prefix(morphisms::h(), 0, 0) == ternary(""));
    // 1 is not prolongable under h (h(1) = 02 does not start with 1)
    CHECK_THROWS_AS(fixed_point_prefix(morphisms::h(), 1, 5), std::invalid_argument);
    // prefixes are nested
    Word p40 = fixed_point_prefix(morphisms::h(), 0, 40);
    for (std::size_t len : {1u, 7u, 20u, 39u}) {
        CHECK(p40.starts_with(fixed_point_prefix(morphisms::h(), 0, len)));
    }
}

TEST_CASE("generated words") {
    CHECK(generate(Recipe::FH, 3) == Word::parse("001"));
    CHECK(generate(Recipe::FGH, 5) == Word::parse("00101"));
    CHECK(generate(Recipe::FH, 0) == Word::parse(""));
    Word longer = generate(Recipe::FGH, 2000);
    CHECK(longer.starts_with(generate(Recipe::FGH, 1999)));
    CHECK(is_rich(generate(Recipe::FH, 2000)));
    CHECK(is_rich(longer));
}

TEST_CASE("morphic stream caching") {
    MorphicStream stream = MorphicStream::fixed_point(morphisms::h(), 0);
    Word a = stream.prefix(10);
    Word b = stream.prefix(4);
    CHECK(a.starts_with(b));
    Word c = stream.prefix(50);
    CHECK(c.starts_with(a));
}

TEST_CASE("delta") {
    CHECK(delta(Word::parse("00")) == Word::parse("0"));
    CHECK(delta(morphisms::f()(ternary("2")).append(0)) == Word::parse("101"));
    CHECK(delta(morphisms::f()(morphisms::g()(ternary("0"))).append(0)) == Word::parse("01111"));
    CHECK_THROWS_AS(delta(Word::parse("")), std::invalid_argument);
}

TEST_CASE("delta turns f and f.g images into lambda and mu images") {
    SplitMix64 rng(31);
    for (int i = 0; i < 200; ++i) {
        Word w = random_ternary(rng, 12);
        CHECK(delta(morphisms::f()(w).append(0)) == morphisms::lambda()(w));
        CHECK(delta(morphisms::f()(morphisms::g()(w)).append(0)) == morphisms::mu()(w));
    }
}

TEST_CASE("reversal identity for f, g, h") {
    // 0 . reverse(phi(w)) == phi(reverse(w)) . 0, exhaustively to length 8
    std::vector<const Morphism*> phis = {&morphisms::f(), &morphisms::g(), &morphisms::h()};
    for_all_ternary(8, [&](const Word& w) {
        for (const Morphism* phi : phis) {
            Word lhs = Word({0}, phi->target_alphabet()).concat(reverse(phi->apply(w)));
            Word rhs = phi->apply(reverse(w)).append(0);
            CHECK(lhs == rhs);
        }
    });
}

TEST_CASE("morphisms preserve non-richness on small words") {
    std::vector<const Morphism*> phis = {&morphisms::f(), &morphisms::g(), &morphisms::h()};
    for_all_ternary(5, [&](const Word& w) {
        if (is_rich(w)) return;
        for (const Morphism* phi : phis) {
            CHECK_FALSE(is_rich(phi->apply(w).append(0)));
        }
    });
}

TEST_CASE("desubstitution examples") {
    Desubstitution d = desubstitute(Word::parse("00101"), morphisms::f());
    CHECK(d.preimage == ternary("011"));
    CHECK(d.dropped_prefix == 0);
    CHECK(d.dropped_suffix == 0);

    d = desubstitute(ternary("01022"), morphisms::h());
    CHECK(d.preimage == ternary("02"));
    CHECK(d.dropped_prefix == 0);
    CHECK(d.dropped_suffix == 0);

    CHECK_THROWS_AS(desubstitute(ternary("0120110"), morphisms::g()), UnparsableBlockError);
    try {
        desubstitute(ternary("0120110"), morphisms::g());
    } catch (const UnparsableBlockError& e) {
        CHECK(e.position == 0);
        CHECK(e.block == ternary("012"));
    }

    // ragged edges: leading partial block, trailing proper prefix of an image
    d = desubstitute(Word::parse("100101"), morphisms::f());
    CHECK(d.preimage == ternary("011"));
    CHECK(d.dropped_prefix == 1);
    d = desubstitute(ternary("010"), morphisms::h());
    CHECK(d.preimage == ternary("0"));
    CHECK(d.dropped_suffix == 1);
    d = desubstitute(ternary("01101212"), morphisms::g());
    CHECK(d.preimage == ternary("0"));
    CHECK(d.dropped_suffix == 5);

    CHECK_THROWS_AS(desubstitute(Word::parse("01"), morphisms::lambda()), std::invalid_argument);
}

TEST_CASE("desubstitution inverts apply") {
    SplitMix64 rng(32);
    std::vector<const Morphism*> phis = {&morphisms::f(), &morphisms::g(), &morphisms::h()};
    for (int i = 0; i < 300; ++i) {
        Word w = random_ternary(rng, 30);
        for (const Morphism* phi : phis) {
            Desubstitution d = desubstitute(phi->apply(w), *phi);
            CHECK(d.preimage == w);
            CHECK(d.dropped_prefix == 0);
            CHECK(d.dropped_suffix == 0);
        }
    }
}

TEST_CASE("incidence analysis") {
    IncidenceAnalysis xibar = incidence_analysis(morphisms::xibar());
    CHECK(xibar.matrix[0][0] == 1);
    CHECK(xibar.matrix[0][1] == 2);
    CHECK(xibar.matrix[1][0] == 1);
    CHECK(xibar.matrix[1][1] == 1);
    CHECK(xibar.dominant_eigenvalue == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-12));
    CHECK(xibar.frequencies[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-12));
    CHECK(xibar.frequencies[1] == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-12));
    CHECK(xibar.frequencies[0] + xibar.frequencies[1] == doctest::Approx(1.0).epsilon(1e-12));

    auto propagated = propagate_frequencies(morphisms::etabar(), xibar.frequencies);
    CHECK(propagated[1] == doctest::Approx((3.0 - std::sqrt(2.0)) / 7.0).epsilon(1e-12));

    IncidenceAnalysis id = incidence_analysis(morphisms::identity(2));
    CHECK(id.frequencies[0] == doctest::Approx(0.5));
    CHECK(id.frequencies[1] == doctest::Approx(0.5));

    Morphism degenerate("empty", {Word::parse(""), Word::parse("")}, 2, 2);
    CHECK_THROWS_AS(incidence_analysis(degenerate), std::invalid_argument);
    CHECK_THROWS_AS(incidence_analysis(morphisms::f()), std::invalid_argument);
}

TEST_CASE("morphism literals") {
    Morphism m = parse_morphism_literal("m: 0->01,1->02,2->022");
    for (Symbol a = 0; a < 3; ++a) CHECK(m.image(a) == morphisms::h().image(a));
    CHECK(m.name() == "m");

    Morphism b = parse_morphism_literal("b: 0->01, 1->1");
    CHECK(b.source_alphabet() == 2);
    CHECK(b.image(1) == Word::parse("1"));

    CHECK_THROWS_AS(parse_morphism_literal("nocolon"), std::invalid_argument);
    CHECK_THROWS_AS(parse_morphism_literal("m: 0->01"), std::invalid_argument);
    CHECK_THROWS_AS(parse_morphism_literal("m: 0->01,0->1,1->0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_morphism_literal("m: 0->0x,1->1"), std::invalid_argument);
}
