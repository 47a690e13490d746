#include "richwords/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "richwords/eertree.hpp"
#include "richwords/morphism.hpp"
#include "richwords/prng.hpp"
#include "richwords/rational.hpp"
#include "richwords/reference.hpp"
#include "richwords/repetition.hpp"
#include "richwords/search.hpp"
#include "richwords/sturmian.hpp"
#include "richwords/word.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace richwords::verify {

namespace {

using Clock = std::chrono::steady_clock;

CriterionResult make_result(int id, std::string name, bool pass, std::string detail) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.pass = pass;
    r.detail = std::move(detail);
    return r;
}

// --- criterion 1: the 13-row extension table at threshold 14/5 -------------

CriterionResult run_extension_table() {
    auto start = Clock::now();
    SearchConfig cfg;
    auto rows = verify_extension_table(cfg);
    int matched = 0;
    std::string mismatches;
    for (const auto& row : rows) {
        if (row.match) {
            ++matched;
        } else {
            mismatches += " " + row.seed.str() + ":" + row.got.str() + "!=" + row.expected.str();
        }
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    bool in_budget = secs <= 300.0;
    std::string detail = std::to_string(matched) + "/13 rows match";
    if (!mismatches.empty()) detail += "; mismatches:" + mismatches;
    if (!in_budget) detail += "; over 300s budget";
    return make_result(1, "extension-table reproduction", matched == 13 && in_budget, detail);
}

// --- criterion 2: longest good extension of 212 with 0110 banned -----------

CriterionResult run_banned_0110_bound() {
    auto start = Clock::now();
    SearchConfig cfg;
    cfg.banned_factors = {Word::parse("0110", 3)};
    ExtensionResult r = longest_good_extension(Word::parse("212", 3), cfg);
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    bool ok = r.kind == ExtensionResult::Kind::LongestGood && r.length == 21 && secs <= 30.0;
    return make_result(2, "212 extension bound with 0110 banned", ok, "result " + r.str());
}

// --- criterion 3: cube-free run bound over {1,2} ----------------------------

CriterionResult run_binary_run_bound() {
    std::size_t bf = binary_run_bound(morphisms::f());
    std::size_t bg = binary_run_bound(morphisms::g());
    std::size_t bh = binary_run_bound(morphisms::h());
    bool ok = bf == 6 && bg == 6 && bh == 6;
    return make_result(3, "cube-free run bound over {1,2}", ok,
                       "f=" + std::to_string(bf) + " g=" + std::to_string(bg) +
                           " h=" + std::to_string(bh));
}

// --- criterion 4: threshold 3 makes some branch outlive the cap ------------

CriterionResult run_threshold_sensitivity() {
    SearchConfig cfg;
    cfg.threshold = Rational(3);
    cfg.depth_cap = 200;
    auto rows = verify_extension_table(cfg);
    int capped = 0;
    for (const auto& row : rows) {
        if (row.got.kind == ExtensionResult::Kind::CapExceeded) ++capped;
    }
    return make_result(4, "threshold-3 searches outlive the cap", capped >= 1,
                       std::to_string(capped) + " rows reach the cap of 200");
}

// --- criterion 5: block trees ------------------------------------------------

struct ExpectedLeaf {
    const char* path;
    LeafVerdict::Kind kind;
    const char* witness;
    const char* alt_witness;  // nullptr = no alt verdict expected
    LeafVerdict::Kind alt_kind;
};

bool leaves_match(const std::vector<LeafReport>& got, const std::vector<ExpectedLeaf>& expected,
                  std::string& detail) {
    if (got.size() != expected.size()) {
        detail += " leaf count " + std::to_string(got.size()) + " != " +
                  std::to_string(expected.size()) + ";";
        return false;
    }
    bool ok = true;
    for (std::size_t i = 0; i < got.size(); ++i) {
        const LeafReport& leaf = got[i];
        const ExpectedLeaf& exp = expected[i];
        bool match = leaf.path == Word::parse(exp.path, 3) && leaf.verdict.kind == exp.kind &&
                     leaf.verdict.witness == Word::parse(exp.witness, 3);
        if (exp.alt_witness) {
            match = match && leaf.alt && leaf.alt->kind == exp.alt_kind &&
                    leaf.alt->witness == Word::parse(exp.alt_witness, 3);
        } else {
            match = match && !leaf.alt;
        }
        if (!match) {
            ok = false;
            detail += " leaf " + leaf.path.str() + " unexpected;";
        }
    }
    return ok;
}

// Every rejection witness must be independently re-checkable.
bool verify_leaf_witnesses(const std::vector<LeafReport>& leaves,
                           const std::vector<Word>& contexts,
                           const std::vector<Word>* table,
                           const std::vector<Word>* fset, std::string& detail) {
    bool ok = true;
    for (const LeafReport& leaf : leaves) {
        auto check_one = [&](const LeafVerdict& v, const Word& context) {
            Word host = context.concat(leaf.path);
            if (!host.contains(v.witness)) return false;
            switch (v.kind) {
                case LeafVerdict::Kind::Accepted: return true;
                case LeafVerdict::Kind::Cube: return exponent(v.witness) >= Rational(3);
                case LeafVerdict::Kind::NonRich: return !is_rich(v.witness);
                case LeafVerdict::Kind::ForbiddenTable:
                    return table && std::count(table->begin(), table->end(), v.witness) > 0;
                case LeafVerdict::Kind::ForbiddenF:
                    return fset && std::count(fset->begin(), fset->end(), v.witness) > 0;
            }
            return false;
        };
        bool leaf_ok = true;
        if (leaf.verdict.kind == LeafVerdict::Kind::Accepted) {
            leaf_ok = leaf.path == leaf.verdict.witness.append(0);
        } else if (leaf.alt) {
            leaf_ok = check_one(leaf.verdict, contexts.at(0)) && check_one(*leaf.alt, contexts.at(1));
        } else {
            // Context-free rejection: the witness lives in the path itself.
            leaf_ok = check_one(leaf.verdict, Word({}, 3));
        }
        if (!leaf_ok) {
            ok = false;
            detail += " witness for " + leaf.path.str() + " failed;";
        }
    }
    return ok;
}

CriterionResult run_block_trees() {
    using K = LeafVerdict::Kind;
    std::string detail;
    bool ok = true;

    auto g_leaves = enumerate_block_tree(BlockTreeKind::GImageBlocks);
    const std::vector<ExpectedLeaf> g_expected = {
        {"00", K::ForbiddenTable, "00", nullptr, K::Accepted},
        {"010", K::ForbiddenTable, "11010", "21010", K::ForbiddenTable},
        {"0110", K::Accepted, "011", nullptr, K::Accepted},
        {"0111", K::Cube, "111", nullptr, K::Accepted},
        {"0112", K::ForbiddenTable, "112", nullptr, K::Accepted},
        {"0120", K::NonRich, "0120", nullptr, K::Accepted},
        {"01210", K::Accepted, "0121", nullptr, K::Accepted},
        {"01211", K::ForbiddenTable, "211", nullptr, K::Accepted},
        {"012120", K::NonRich, "012120", nullptr, K::Accepted},
        {"0121210", K::Accepted, "012121", nullptr, K::Accepted},
        {"0121211", K::ForbiddenTable, "211", nullptr, K::Accepted},
        {"0121212", K::Cube, "121212", nullptr, K::Accepted},
        {"012122", K::ForbiddenTable, "122", nullptr, K::Accepted},
        {"0122", K::ForbiddenTable, "122", nullptr, K::Accepted},
        {"02", K::ForbiddenTable, "1102", "2102", K::NonRich},
    };
    ok = leaves_match(g_leaves, g_expected, detail) && ok;

    auto nested_leaves = enumerate_block_tree(BlockTreeKind::NestedHImageBlocks);
    const std::vector<ExpectedLeaf> nested_expected = {
        {"00", K::ForbiddenF, "00", nullptr, K::Accepted},
        {"010", K::Accepted, "01", nullptr, K::Accepted},
        {"011", K::ForbiddenF, "11", nullptr, K::Accepted},
        {"012", K::ForbiddenF, "12", nullptr, K::Accepted},
        {"020", K::Accepted, "02", nullptr, K::Accepted},
        {"021", K::ForbiddenF, "21", nullptr, K::Accepted},
        {"0220", K::Accepted, "022", nullptr, K::Accepted},
        {"0221", K::ForbiddenF, "21", nullptr, K::Accepted},
        {"0222", K::Cube, "222", nullptr, K::Accepted},
    };
    ok = leaves_match(nested_leaves, nested_expected, detail) && ok;

    auto h_leaves = enumerate_block_tree(BlockTreeKind::HImageBlocks);
    const std::vector<ExpectedLeaf> h_expected = {
        {"00", K::ForbiddenF, "00", nullptr, K::Accepted},
        {"010", K::Accepted, "01", nullptr, K::Accepted},
        {"011", K::ForbiddenF, "11", nullptr, K::Accepted},
        {"0120", K::NonRich, "0120", nullptr, K::Accepted},
        {"01210", K::Accepted, "0121", nullptr, K::Accepted},
        {"01211", K::ForbiddenF, "11", nullptr, K::Accepted},
        {"01212", K::ForbiddenF, "212", nullptr, K::Accepted},
        {"01220", K::NonRich, "01220", nullptr, K::Accepted},
        {"01221", K::ForbiddenF, "1221", nullptr, K::Accepted},
        {"01222", K::Cube, "222", nullptr, K::Accepted},
        {"020", K::Accepted, "02", nullptr, K::Accepted},
        {"0210", K::NonRich, "0210", nullptr, K::Accepted},
        {"0211", K::ForbiddenF, "11", nullptr, K::Accepted},
        {"0212", K::ForbiddenF, "212", nullptr, K::Accepted},
        {"0220", K::Accepted, "022", nullptr, K::Accepted},
        {"02210", K::NonRich, "02210", nullptr, K::Accepted},
        {"02211", K::ForbiddenF, "11", nullptr, K::Accepted},
        {"02212", K::ForbiddenF, "212", nullptr, K::Accepted},
        {"0222", K::Cube, "222", nullptr, K::Accepted},
    };
    ok = leaves_match(h_leaves, h_expected, detail) && ok;

    auto accepted_eq = [](const std::vector<LeafReport>& leaves,
                          std::initializer_list<const char*> expected) {
        std::vector<Word> got = accepted_blocks(leaves);
        std::vector<Word> want;
        for (const char* e : expected) want.push_back(Word::parse(e, 3));
        return got == want;
    };
    ok = accepted_eq(g_leaves, {"011", "0121", "012121"}) && ok;
    ok = accepted_eq(nested_leaves, {"01", "02", "022"}) && ok;
    ok = accepted_eq(h_leaves, {"01", "0121", "02", "022"}) && ok;

    // The separate argument eliminating 0121 from the raw h-block acceptance.
    for (const NamedCheck& check : h_block_0121_elimination()) {
        if (!check.ok) {
            ok = false;
            detail += " elimination check '" + check.name + "' failed;";
        }
    }

    // Re-verify every rejection witness mechanically.
    std::vector<Word> g_contexts = {Word::parse("11", 3), Word::parse("21", 3)};
    std::vector<Word> table_words;
    for (const auto& [seed, expected] : extension_table_expected()) table_words.push_back(seed);
    std::vector<Word> nested_set = {Word::parse("00", 3), Word::parse("11", 3),
                                    Word::parse("12", 3), Word::parse("21", 3)};
    ok = verify_leaf_witnesses(g_leaves, g_contexts, &table_words, nullptr, detail) && ok;
    ok = verify_leaf_witnesses(nested_leaves, {}, nullptr, &nested_set, detail) && ok;
    ok = verify_leaf_witnesses(h_leaves, {}, nullptr, &forbidden_set_f(), detail) && ok;

    if (detail.empty()) {
        detail = "g-blocks {011,0121,012121}; h-blocks {01,02,022} after 0121 elimination";
    }
    return make_result(5, "block-tree enumeration", ok, detail);
}

// --- criterion 6: richness of the generated words at length 1e5 ------------

CriterionResult run_richness_at_scale() {
    bool ok = true;
    std::string detail;
    for (Recipe recipe : {Recipe::FH, Recipe::FGH}) {
        auto start = Clock::now();
        Word w = generate(recipe, 100000);
        RichnessReport report = richness_report(w);
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        bool this_ok = report.defect == 0 && secs <= 10.0;
        ok = ok && this_ok;
        detail += std::string(recipe == Recipe::FH ? "FH" : "FGH") + " defect " +
                  std::to_string(report.defect) + "; ";
    }
    return make_result(6, "generated words are rich at length 100000", ok, detail);
}

// --- criterion 7: 14/5-freeness and the attained exponent ladder -----------

CriterionResult run_freeness_and_ladder() {
    bool ok = true;
    std::string detail;
    const Rational threshold(14, 5);
    for (Recipe recipe : {Recipe::FH, Recipe::FGH}) {
        Word w = generate(recipe, 10000);
        bool free = is_alpha_free(w, threshold);
        ok = ok && free;
        detail += std::string(recipe == Recipe::FH ? "FH" : "FGH") +
                  (free ? " is" : " is NOT") + " 14/5-free; ";
    }

    Word u = generate(Recipe::FGH, 10000);
    auto [max_exp, witness] = max_exponent_factor(u);
    ConvergentTable table(ContinuedFraction::fgh_slope(), 13);
    bool max_on_ladder = false;
    for (std::size_t k = 2; k <= 12; ++k) {
        if (repetition_exponent(table, k) == max_exp) max_on_ladder = true;
    }
    auto attained = attained_exponents(u, Rational(2));
    auto contains_value = [&](const Rational& r) {
        return std::count(attained.begin(), attained.end(), r) > 0;
    };
    bool e2 = contains_value(Rational(13, 5));
    bool e3 = contains_value(Rational(34, 13));
    ok = ok && max_on_ladder && e2 && e3;
    detail += "FGH max exponent " + max_exp.str() + (max_on_ladder ? " on ladder" : " OFF ladder") +
              "; 13/5 " + (e2 ? "attained" : "missing") + "; 34/13 " + (e3 ? "attained" : "missing");
    return make_result(7, "14/5-freeness and exponent ladder", ok, detail);
}

// --- criterion 8: difference-word identities --------------------------------

CriterionResult run_delta_identities() {
    const Morphism& f = morphisms::f();
    const Morphism& g = morphisms::g();
    const Morphism& h = morphisms::h();
    const Morphism& xi = morphisms::xi();
    const Morphism& eta = morphisms::eta();
    const Morphism& lam = morphisms::lambda();

    bool ok = true;
    std::string detail;
    Word zero3 = Word::parse("0", 3);
    Word hn = zero3;   // h^n(0)
    Word xin = Word::parse("0", 2);  // xi^n(0)
    for (int n = 0; n <= 12; ++n) {
        Word lhs1 = delta(f(hn).append(0));
        if (lhs1 != xin) {
            ok = false;
            detail += " fh identity fails at n=" + std::to_string(n) + ";";
        }
        Word lhs2 = delta(f(g(hn)).append(0));
        Word rhs2 = eta(xi(xin));
        if (lhs2 != rhs2) {
            ok = false;
            detail += " fgh identity fails at n=" + std::to_string(n) + ";";
        }
        hn = h(hn);
        xin = xi(xin);
    }

    auto letterwise_equal = [](const Morphism& a, const Morphism& b) {
        if (a.source_alphabet() != b.source_alphabet()) return false;
        for (int s = 0; s < a.source_alphabet(); ++s) {
            if (a.image(static_cast<Symbol>(s)) != b.image(static_cast<Symbol>(s))) return false;
        }
        return true;
    };
    bool id1 = letterwise_equal(compose(lam, h), compose(xi, lam));
    bool id2 = letterwise_equal(compose(eta, compose(xi, lam)), morphisms::mu());
    bool id3 = letterwise_equal(compose(morphisms::gtilde(), h), g);
    if (!id1) detail += " lambda.h != xi.lambda;";
    if (!id2) detail += " mu != eta.xi.lambda;";
    if (!id3) detail += " g != gtilde.h;";
    ok = ok && id1 && id2 && id3;
    if (detail.empty()) detail = "n=0..12 and all three morphism identities hold";
    return make_result(8, "difference-word identities", ok, detail);
}

// --- criterion 9: convergent identity and the exponent limit ---------------

CriterionResult run_convergent_identities() {
    ConvergentTable table(ContinuedFraction::fgh_slope(), 41);
    QIdentityReport identity = verify_q_identity(table, 40);
    bool increasing = true;
    bool below_limit = true;
    for (std::size_t k = 2; k <= 40; ++k) {
        Rational ek = repetition_exponent(table, k);
        if (k < 40 && !(repetition_exponent(table, k + 1) > ek)) increasing = false;
        if (compare_to_sqrt2_combination(ek, Rational(2), Rational(1, 2)) >= 0) below_limit = false;
    }
    double e40 = repetition_exponent(table, 40).to_double();
    double limit = 2.0 + std::sqrt(2.0) / 2.0;
    bool limit_ok = std::fabs(e40 - limit) < 1e-12;
    bool ok = identity.all_ok && increasing && below_limit && limit_ok;
    std::ostringstream detail;
    detail << "identity " << (identity.all_ok ? "ok" : "BROKEN") << " to k=40; ladder "
           << (increasing ? "increasing" : "NOT increasing") << ", "
           << (below_limit ? "below limit" : "NOT below limit");
    return make_result(9, "convergent identities and limit", ok, detail.str());
}

// --- criterion 10: longest-factor lengths per period ------------------------

CriterionResult run_period_factor_lengths() {
    ConvergentTable table(ContinuedFraction::fgh_slope(), 10);
    Word prefix = characteristic_prefix(ContinuedFraction::fgh_slope(), 20000);
    bool ok = true;
    std::string detail;
    for (long k = 2; k <= 6; ++k) {
        std::size_t period =
            static_cast<std::size_t>(mpz_class(table.q(k - 2) + table.q(k - 1)).get_si());
        std::size_t expected = static_cast<std::size_t>(
            mpz_class(2 * (table.q(k - 2) + table.q(k - 1)) + table.q(k - 1) - 2).get_si());
        std::size_t got = longest_factor_with_period(prefix, period);
        if (got != expected) {
            ok = false;
            detail += " k=" + std::to_string(k) + ": got " + std::to_string(got) + " expected " +
                      std::to_string(expected) + ";";
        }
    }
    if (detail.empty()) detail = "periods q_{k-2}+q_{k-1} for k=2..6 all exact";
    return make_result(10, "longest factor per period", ok, detail);
}

// --- criterion 11: Rote structure at scale ----------------------------------

CriterionResult run_rote_checks() {
    bool ok = true;
    std::string detail;
    for (Recipe recipe : {Recipe::FH, Recipe::FGH}) {
        Word w = generate(recipe, 100000);
        RoteReport report = rote_check(w, 50);
        ok = ok && report.strict && report.all_ok;
        detail += std::string(recipe == Recipe::FH ? "FH" : "FGH") +
                  (report.all_ok ? " ok" : " FAILED") + "; ";
    }
    return make_result(11, "factor complexity 2n and complement closure", ok, detail);
}

// --- criterion 12: non-richness is preserved by f, g, h ---------------------

CriterionResult run_nonrichness_preservation() {
    long checked = 0;
    bool ok = true;
    std::vector<const Morphism*> phis = {&morphisms::f(), &morphisms::g(), &morphisms::h()};
    for (std::size_t len = 1; len <= 7 && ok; ++len) {
        std::size_t count = 1;
        for (std::size_t i = 0; i < len; ++i) count *= 3;
        for (std::size_t index = 0; index < count && ok; ++index) {
            std::size_t code = index;
            std::vector<Symbol> symbols(len);
            for (std::size_t i = 0; i < len; ++i) {
                symbols[i] = static_cast<Symbol>(code % 3);
                code /= 3;
            }
            Word w(symbols, 3);
            if (is_rich(w)) continue;
            ++checked;
            for (const Morphism* phi : phis) {
                if (is_rich(phi->apply(w).append(0))) {
                    ok = false;
                    break;
                }
            }
        }
    }
    return make_result(12, "morphisms preserve non-richness (|w| <= 7)", ok,
                       std::to_string(checked) + " non-rich words checked");
}

// --- criterion 13: repetition transfer through the difference map ----------

CriterionResult run_delta_transfer_property() {
    SplitMix64 rng(0x5eed0013u);
    std::size_t repetitions = 0;
    std::size_t violations = 0;
    for (int it = 0; it < 10000; ++it) {
        std::size_t len = 3 + rng.below(28);
        std::vector<Symbol> symbols(len);
        for (auto& s : symbols) s = static_cast<Symbol>(rng.below(2));
        DeltaTransferReport report = delta_repetition_transfer(Word(symbols, 2));
        repetitions += report.repetitions_checked;
        violations += report.violations.size();
    }
    return make_result(13, "repetition transfer through delta", violations == 0,
                       std::to_string(repetitions) + " repetitions, " +
                           std::to_string(violations) + " violations");
}

// --- criterion 14: structure check on generated prefixes --------------------

CriterionResult run_structure_check() {
    bool ok = true;
    std::string detail;
    {
        auto rows = check_structure_theorem(generate(Recipe::FGH, 5000), 4);
        for (const auto& row : rows) {
            if (!row.fgh_ok) {
                ok = false;
                detail += " FGH fails at n=" + std::to_string(row.n) + ";";
            }
        }
    }
    {
        auto rows = check_structure_theorem(generate(Recipe::FH, 5000), 4);
        for (const auto& row : rows) {
            if (!row.fh_ok) {
                ok = false;
                detail += " FH fails at n=" + std::to_string(row.n) + ";";
            }
        }
    }
    if (detail.empty()) detail = "both recipes parse for n=1..4";
    return make_result(14, "structure check on generated prefixes", ok, detail);
}

// --- criterion 15: oracle equivalences --------------------------------------

CriterionResult run_oracle_equivalences() {
    bool rich_ok = true;
    // All ternary words of length <= 12 against the O(n^3) palindrome count.
    for (std::size_t len = 0; len <= 12 && rich_ok; ++len) {
        std::size_t count = 1;
        for (std::size_t i = 0; i < len; ++i) count *= 3;
        std::atomic<bool> failed{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1024)
#endif
        for (std::int64_t index = 0; index < static_cast<std::int64_t>(count); ++index) {
            if (failed.load(std::memory_order_relaxed)) continue;
            std::size_t code = static_cast<std::size_t>(index);
            std::vector<Symbol> symbols(len);
            for (std::size_t i = 0; i < len; ++i) {
                symbols[i] = static_cast<Symbol>(code % 3);
                code /= 3;
            }
            Word w(symbols, 3);
            if (is_rich(w) != (reference::count_distinct_palindromes(w) == len)) {
                failed.store(true, std::memory_order_relaxed);
            }
        }
        rich_ok = !failed.load();
    }

    bool exponent_ok = true;
    // All binary words of length <= 14 against the brute-force witness.
    for (std::size_t len = 1; len <= 14 && exponent_ok; ++len) {
        std::atomic<bool> failed{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256)
#endif
        for (std::int64_t index = 0; index < (std::int64_t{1} << len); ++index) {
            if (failed.load(std::memory_order_relaxed)) continue;
            std::vector<Symbol> symbols(len);
            for (std::size_t i = 0; i < len; ++i) {
                symbols[i] = static_cast<Symbol>((index >> i) & 1);
            }
            Word w(symbols, 2);
            auto [exp_fast, wit_fast] = max_exponent_factor(w);
            auto [exp_ref, wit_ref] = reference::max_exponent_factor(w);
            if (exp_fast != exp_ref || wit_fast.start != wit_ref.start ||
                wit_fast.period != wit_ref.period || wit_fast.length != wit_ref.length) {
                failed.store(true, std::memory_order_relaxed);
            }
        }
        exponent_ok = !failed.load();
    }

    bool ok = rich_ok && exponent_ok;
    std::string detail = std::string("richness vs brute force ") + (rich_ok ? "ok" : "FAILED") +
                         "; max exponent vs brute force " + (exponent_ok ? "ok" : "FAILED");
    return make_result(15, "oracle equivalences", ok, detail);
}

}  // namespace

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {1, "extension-table reproduction", run_extension_table},
        {2, "212 extension bound with 0110 banned", run_banned_0110_bound},
        {3, "cube-free run bound over {1,2}", run_binary_run_bound},
        {4, "threshold-3 searches outlive the cap", run_threshold_sensitivity},
        {5, "block-tree enumeration", run_block_trees},
        {6, "generated words are rich at length 100000", run_richness_at_scale},
        {7, "14/5-freeness and exponent ladder", run_freeness_and_ladder},
        {8, "difference-word identities", run_delta_identities},
        {9, "convergent identities and limit", run_convergent_identities},
        {10, "longest factor per period", run_period_factor_lengths},
        {11, "factor complexity 2n and complement closure", run_rote_checks},
        {12, "morphisms preserve non-richness (|w| <= 7)", run_nonrichness_preservation},
        {13, "repetition transfer through delta", run_delta_transfer_property},
        {14, "structure check on generated prefixes", run_structure_check},
        {15, "oracle equivalences", run_oracle_equivalences},
    };
    return list;
}

std::vector<CriterionResult> run_all(std::ostream* progress) {
    std::vector<CriterionResult> results;
    for (const Criterion& criterion : criteria()) {
        auto start = Clock::now();
        CriterionResult result = criterion.run();
        result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (progress) {
            char line[512];
            std::snprintf(line, sizeof(line), "criterion %02d  %s  %7.2fs  %s — %s\n", result.id,
                          result.pass ? "PASS" : "FAIL", result.seconds, result.name.c_str(),
                          result.detail.c_str());
            (*progress) << line << std::flush;
        }
        results.push_back(std::move(result));
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const CriterionResult& r : results) {
        if (!r.pass) return false;
    }
    return results.size() == criteria().size();
}

}  // namespace richwords::verify
