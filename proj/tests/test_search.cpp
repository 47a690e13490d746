#include <doctest.h>

#include <deque>

#include "richwords/eertree.hpp"
#include "richwords/morphism.hpp"
#include "richwords/parallel.hpp"
#include "richwords/prng.hpp"
#include "richwords/repetition.hpp"
#include "richwords/search.hpp"
#include "richwords/word.hpp"

using namespace richwords;

namespace {

Word ternary(const char* s) { return Word::parse(s, 3); }

bool good_under(const Word& source, const SearchConfig& cfg) {
    const Morphism& phi = cfg.image_morphism ? *cfg.image_morphism : morphisms::f();
    for (const Word& banned : cfg.banned_factors) {
        if (source.contains(banned)) return false;
    }
    Word image = phi.apply(source);
    return is_rich(image) && is_alpha_free(image, cfg.threshold);
}

// Breadth-first search recomputing everything per node: the slow oracle for
// longest_good_extension on small seeds.
ExtensionResult naive_longest_good_extension(const Word& v, const SearchConfig& cfg) {
    if (!good_under(v, cfg)) return {ExtensionResult::Kind::ImmediateFail, 0, std::nullopt};
    std::deque<Word> frontier = {v};
    Word best = v;
    while (!frontier.empty()) {
        Word current = frontier.front();
        frontier.pop_front();
        if (current.size() >= cfg.depth_cap) {
            return {ExtensionResult::Kind::CapExceeded, cfg.depth_cap, std::nullopt};
        }
        if (current.size() > best.size()) best = current;
        for (Symbol a = 0; a < 3; ++a) {
            Word child = current.append(a);
            if (good_under(child, cfg)) frontier.push_back(child);
        }
    }
    return {ExtensionResult::Kind::LongestGood, best.size(), best};
}

}  // namespace

TEST_CASE("longest good extension on the fast seeds") {
    SearchConfig cfg;
    ExtensionResult r = longest_good_extension(ternary("00"), cfg);
    CHECK(r.kind == ExtensionResult::Kind::LongestGood);
    CHECK(r.length == 2);

    r = longest_good_extension(ternary("112"), cfg);
    CHECK(r.kind == ExtensionResult::Kind::ImmediateFail);

    r = longest_good_extension(ternary("211"), cfg);
    CHECK(r.kind == ExtensionResult::Kind::LongestGood);
    CHECK(r.length == 3);

    r = longest_good_extension(ternary("21010"), cfg);
    CHECK(r.length == 6);

    CHECK_THROWS_AS(longest_good_extension(ternary(""), cfg), std::invalid_argument);
    SearchConfig bad = cfg;
    bad.threshold = Rational(2);
    CHECK_THROWS_AS(longest_good_extension(ternary("00"), bad), std::invalid_argument);
}

TEST_CASE("search agrees with the naive breadth-first oracle") {
    SearchConfig cfg;
    for (const char* seed : {"00", "211", "21010", "122", "0221"}) {
        ExtensionResult fast = longest_good_extension(ternary(seed), cfg);
        ExtensionResult slow = naive_longest_good_extension(ternary(seed), cfg);
        CHECK(fast.kind == slow.kind);
        CHECK(fast.length == slow.length);
    }
}

TEST_CASE("witness is re-checkable and maximal") {
    SearchConfig cfg;
    for (const char* seed : {"021", "0221", "122", "11010"}) {
        ExtensionResult r = longest_good_extension(ternary(seed), cfg);
        REQUIRE(r.kind == ExtensionResult::Kind::LongestGood);
        REQUIRE(r.witness.has_value());
        const Word& witness = *r.witness;
        CHECK(witness.size() == r.length);
        CHECK(witness.starts_with(ternary(seed)));
        CHECK(good_under(witness, cfg));
        // no child of the witness survives
        for (Symbol a = 0; a < 3; ++a) {
            CHECK_FALSE(good_under(witness.append(a), cfg));
        }
    }
}

TEST_CASE("failed images are absorbing under extension") {
    SearchConfig cfg;
    SplitMix64 rng(51);
    int pruned_seen = 0;
    while (pruned_seen < 50) {
        std::size_t len = 1 + rng.below(6);
        std::vector<Symbol> s(len);
        for (auto& c : s) c = static_cast<Symbol>(rng.below(3));
        Word w(s, 3);
        if (good_under(w, cfg)) continue;
        ++pruned_seen;
        for (int t = 0; t < 5; ++t) {
            Word ext = w;
            for (std::size_t k = 0; k < rng.below(5); ++k) {
                ext = ext.append(static_cast<Symbol>(rng.below(3)));
            }
            CHECK_FALSE(good_under(ext, cfg));
        }
    }
}

TEST_CASE("banned factors prune the search") {
    SearchConfig cfg;
    cfg.banned_factors = {ternary("0110")};
    ExtensionResult r = longest_good_extension(ternary("212"), cfg);
    CHECK(r.kind == ExtensionResult::Kind::LongestGood);
    CHECK(r.length == 21);
    REQUIRE(r.witness.has_value());
    CHECK_FALSE(r.witness->contains(ternary("0110")));

    // a seed containing a banned factor fails immediately
    SearchConfig self_banned;
    self_banned.banned_factors = {ternary("00")};
    CHECK(longest_good_extension(ternary("00"), self_banned).kind ==
          ExtensionResult::Kind::ImmediateFail);
}

TEST_CASE("depth cap reports a live branch") {
    SearchConfig cfg;
    cfg.depth_cap = 4;
    ExtensionResult r = longest_good_extension(ternary("021"), cfg);
    CHECK(r.kind == ExtensionResult::Kind::CapExceeded);
    CHECK(r.length == 4);
    CHECK(r.str() == ">=4");
    CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("extension table spot rows and determinism across job counts") {
    SearchConfig cfg;
    auto once = verify_extension_table(cfg);
    REQUIRE(once.size() == 13);
    CHECK(once[0].got.length == 2);     // 00
    CHECK(once[12].got.length == 3);    // 211
    CHECK(once[7].got.kind == ExtensionResult::Kind::ImmediateFail);  // 112

    set_jobs(1);
    auto serial = verify_extension_table(cfg);
    set_jobs(effective_jobs(0));
    for (std::size_t i = 0; i < once.size(); ++i) {
        CHECK(once[i].got.kind == serial[i].got.kind);
        CHECK(once[i].got.length == serial[i].got.length);
        CHECK(once[i].got.witness.has_value() == serial[i].got.witness.has_value());
        if (once[i].got.witness) CHECK(*once[i].got.witness == *serial[i].got.witness);
    }
}

TEST_CASE("cube-free run bound") {
    CHECK(binary_run_bound(morphisms::f()) == 6);
    CHECK(binary_run_bound(morphisms::g()) == 6);
    CHECK(binary_run_bound(morphisms::h()) == 6);
    CHECK_THROWS_AS(binary_run_bound(morphisms::xi()), std::invalid_argument);
}

TEST_CASE("g-image block tree") {
    auto leaves = enumerate_block_tree(BlockTreeKind::GImageBlocks);
    REQUIRE(leaves.size() == 15);
    std::vector<Word> accepted = accepted_blocks(leaves);
    CHECK(accepted == std::vector<Word>{ternary("011"), ternary("0121"), ternary("012121")});

    using K = LeafVerdict::Kind;
    struct Expected { const char* path; K kind; const char* witness; };
    const Expected expected[] = {
        {"00", K::ForbiddenTable, "00"},     {"010", K::ForbiddenTable, "11010"},
        {"0110", K::Accepted, "011"},        {"0111", K::Cube, "111"},
        {"0112", K::ForbiddenTable, "112"},  {"0120", K::NonRich, "0120"},
        {"01210", K::Accepted, "0121"},      {"01211", K::ForbiddenTable, "211"},
        {"012120", K::NonRich, "012120"},    {"0121210", K::Accepted, "012121"},
        {"0121211", K::ForbiddenTable, "211"}, {"0121212", K::Cube, "121212"},
        {"012122", K::ForbiddenTable, "122"},  {"0122", K::ForbiddenTable, "122"},
        {"02", K::ForbiddenTable, "1102"},
    };
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        CHECK(leaves[i].path == ternary(expected[i].path));
        CHECK(leaves[i].verdict.kind == expected[i].kind);
        CHECK(leaves[i].verdict.witness == ternary(expected[i].witness));
    }
    // the two context-dependent leaves carry a second verdict
    REQUIRE(leaves[1].alt.has_value());
    CHECK(leaves[1].alt->kind == K::ForbiddenTable);
    CHECK(leaves[1].alt->witness == ternary("21010"));
    REQUIRE(leaves[14].alt.has_value());
    CHECK(leaves[14].alt->kind == K::NonRich);
    CHECK(leaves[14].alt->witness == ternary("2102"));
    CHECK_FALSE(leaves[0].alt.has_value());
}

TEST_CASE("h-image block trees") {
    auto nested = enumerate_block_tree(BlockTreeKind::NestedHImageBlocks);
    REQUIRE(nested.size() == 9);
    CHECK(accepted_blocks(nested) ==
          std::vector<Word>{ternary("01"), ternary("02"), ternary("022")});
    CHECK(nested[8].path == ternary("0222"));
    CHECK(nested[8].verdict.kind == LeafVerdict::Kind::Cube);
    CHECK(nested[8].verdict.witness == ternary("222"));

    auto direct = enumerate_block_tree(BlockTreeKind::HImageBlocks);
    REQUIRE(direct.size() == 19);
    CHECK(accepted_blocks(direct) ==
          std::vector<Word>{ternary("01"), ternary("0121"), ternary("02"), ternary("022")});
    // spot-check rejection witnesses
    CHECK(direct[3].path == ternary("0120"));
    CHECK(direct[3].verdict.kind == LeafVerdict::Kind::NonRich);
    CHECK(direct[6].path == ternary("01212"));
    CHECK(direct[6].verdict.kind == LeafVerdict::Kind::ForbiddenF);
    CHECK(direct[6].verdict.witness == ternary("212"));
    CHECK(direct[8].path == ternary("01221"));
    CHECK(direct[8].verdict.witness == ternary("1221"));

    auto elimination = h_block_0121_elimination();
    REQUIRE(elimination.size() == 4);
    for (const NamedCheck& check : elimination) CHECK(check.ok);
}

TEST_CASE("morphism claims") {
    FClaimsReport report = verify_morphism_claims();
    CHECK(report.all_ok);
    CHECK(morphisms::h()(ternary("212")) == ternary("02202022"));
    CHECK(contains_cube(morphisms::h()(ternary("1221"))));
    CHECK(contains_cube(morphisms::f()(morphisms::h()(morphisms::h()(ternary("000"))))));
}

TEST_CASE("structure check") {
    auto fgh_rows = check_structure_theorem(generate(Recipe::FGH, 2000), 3);
    REQUIRE(fgh_rows.size() == 3);
    for (const auto& row : fgh_rows) {
        CHECK(row.fgh_ok);
        CHECK_FALSE(row.fh_ok);
        CHECK(row.residual_length > 0);
    }
    auto fh_rows = check_structure_theorem(generate(Recipe::FH, 2000), 3);
    for (const auto& row : fh_rows) {
        CHECK(row.fh_ok);
        CHECK_FALSE(row.fgh_ok);
    }
    CHECK_THROWS_AS(check_structure_theorem(Word::parse("01").repeat(40), 2), NotGoodError);
}
