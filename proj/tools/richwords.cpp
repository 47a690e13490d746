// Command-line front end: orchestrates the verification suites and emits
// machine-readable reports.  Reports are byte-identical across runs and
// across --jobs settings; timing goes to stderr only.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "richwords/eertree.hpp"
#include "richwords/morphism.hpp"
#include "richwords/parallel.hpp"
#include "richwords/prng.hpp"
#include "richwords/rational.hpp"
#include "richwords/repetition.hpp"
#include "richwords/search.hpp"
#include "richwords/sturmian.hpp"
#include "richwords/verify.hpp"
#include "richwords/word.hpp"

using json = nlohmann::ordered_json;
using namespace richwords;

namespace {

constexpr std::size_t kMaxCommandLineWord = 4096;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    std::string format = "json";
    std::string path;

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw ConfigError("cannot open output file: " + path);
        out << text;
    }
};

std::vector<Word> input_words(const std::string& word_flag, const std::string& input_path) {
    if (!word_flag.empty() && !input_path.empty()) {
        throw ConfigError("--word and --input are mutually exclusive");
    }
    if (!word_flag.empty()) {
        if (word_flag.size() > kMaxCommandLineWord) {
            throw ConfigError("command-line words are limited to 4096 symbols; use --input FILE");
        }
        return {Word::parse(word_flag)};
    }
    if (!input_path.empty()) {
        std::ifstream in(input_path, std::ios::binary);
        if (!in) throw ConfigError("cannot open input file: " + input_path);
        return read_word_lines(in);
    }
    throw ConfigError("need --word W or --input FILE");
}

Recipe parse_recipe(const std::string& name) {
    if (name == "FH") return Recipe::FH;
    if (name == "FGH") return Recipe::FGH;
    throw ConfigError("unknown recipe '" + name + "' (expected FH or FGH)");
}

const char* verdict_name(LeafVerdict::Kind kind) {
    switch (kind) {
        case LeafVerdict::Kind::Accepted: return "accepted";
        case LeafVerdict::Kind::Cube: return "cube";
        case LeafVerdict::Kind::NonRich: return "non-rich";
        case LeafVerdict::Kind::ForbiddenTable: return "forbidden-table";
        case LeafVerdict::Kind::ForbiddenF: return "forbidden-f";
    }
    return "?";
}

std::string render_tsv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out += '\t';
        out += header[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += '\t';
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

void emit(const Output& output, const json& report, const std::vector<std::string>& header,
          const std::vector<std::vector<std::string>>& rows) {
    if (output.format == "json") {
        output.write(report.dump(2) + "\n");
    } else {
        output.write(render_tsv(header, rows));
    }
}

std::string opt_str(const std::optional<Word>& w) { return w ? w->str() : ""; }

// --- command handlers --------------------------------------------------------

int cmd_generate(const Output& output, const std::string& recipe, const std::string& morphism,
                 int seed, std::size_t length) {
    Word w;
    if (!morphism.empty()) {
        Morphism m = parse_morphism_literal(morphism);
        w = fixed_point_prefix(m, static_cast<Symbol>(seed), length);
    } else {
        w = generate(parse_recipe(recipe), length);
    }
    output.write(w.str() + "\n");
    return 0;
}

int cmd_rich_check(const Output& output, const std::string& word, const std::string& input) {
    std::vector<Word> words = input_words(word, input);
    auto row = [](const RichnessReport& r) {
        json j;
        j["word_length"] = r.word_length;
        j["distinct_palindromes"] = r.distinct_palindromes;
        j["defect"] = r.defect;
        j["first_defect_position"] =
            r.first_defect_position ? json(*r.first_defect_position) : json(nullptr);
        j["rich"] = r.defect == 0;
        return j;
    };
    json report;
    report["schema"] = 1;
    report["command"] = "rich-check";
    std::vector<std::vector<std::string>> tsv;
    auto tsv_row = [&](const RichnessReport& r) {
        tsv.push_back({std::to_string(r.word_length), std::to_string(r.distinct_palindromes),
                       std::to_string(r.defect),
                       r.first_defect_position ? std::to_string(*r.first_defect_position) : "-",
                       r.defect == 0 ? "true" : "false"});
    };
    if (words.size() == 1) {
        RichnessReport r = richness_report(words[0]);
        report.update(row(r));
        tsv_row(r);
    } else {
        json results = json::array();
        for (const Word& w : words) {
            RichnessReport r = richness_report(w);
            results.push_back(row(r));
            tsv_row(r);
        }
        report["results"] = results;
    }
    emit(output, report,
         {"word_length", "distinct_palindromes", "defect", "first_defect_position", "rich"}, tsv);
    return 0;
}

int cmd_exponent(const Output& output, const std::string& word, const std::string& input,
                 const std::string& threshold) {
    std::vector<Word> words = input_words(word, input);
    std::optional<Rational> alpha;
    if (!threshold.empty()) alpha = Rational::parse(threshold);
    json report;
    report["schema"] = 1;
    report["command"] = "exponent";
    std::vector<std::vector<std::string>> tsv;
    auto row = [&](const Word& w) {
        auto [exp, witness] = max_exponent_factor(w);
        json j;
        j["max_exponent"] = exp.str();
        j["witness"] = {{"start", witness.start}, {"period", witness.period},
                        {"length", witness.length}};
        bool free = alpha ? is_alpha_free(w, *alpha) : false;
        if (alpha) j["alpha_free"] = free;
        tsv.push_back({exp.str(), std::to_string(witness.start), std::to_string(witness.period),
                       std::to_string(witness.length),
                       alpha ? (free ? "true" : "false") : "-"});
        return j;
    };
    if (words.size() == 1) {
        report.update(row(words[0]));
    } else {
        json results = json::array();
        for (const Word& w : words) results.push_back(row(w));
        report["results"] = results;
    }
    emit(output, report, {"max_exponent", "start", "period", "length", "alpha_free"}, tsv);
    return 0;
}

int cmd_table1(const Output& output, const std::string& threshold, std::size_t depth_cap) {
    SearchConfig cfg;
    cfg.threshold = Rational::parse(threshold);
    cfg.depth_cap = depth_cap;
    const bool default_threshold = cfg.threshold == Rational(14, 5);
    auto rows = verify_extension_table(cfg);

    json report;
    report["schema"] = 1;
    report["command"] = "table1";
    report["threshold"] = cfg.threshold.str();
    report["depth_cap"] = cfg.depth_cap;
    json jrows = json::array();
    std::vector<std::vector<std::string>> tsv;
    bool all_match = true;
    for (const auto& row : rows) {
        json j;
        j["v"] = row.seed.str();
        j["expected"] = default_threshold ? json(row.expected.str()) : json(nullptr);
        j["got"] = row.got.str();
        j["match"] = default_threshold ? json(row.match) : json(nullptr);
        j["witness_extension"] = row.got.witness ? json(row.got.witness->str()) : json(nullptr);
        jrows.push_back(j);
        if (default_threshold && !row.match) all_match = false;
        tsv.push_back({row.seed.str(), default_threshold ? row.expected.str() : "-", row.got.str(),
                       default_threshold ? (row.match ? "true" : "false") : "-",
                       opt_str(row.got.witness)});
    }
    report["rows"] = jrows;
    report["all_match"] = default_threshold ? json(all_match) : json(nullptr);
    emit(output, report, {"v", "expected", "got", "match", "witness_extension"}, tsv);
    return default_threshold && !all_match ? 1 : 0;
}

int cmd_run_bound(const Output& output) {
    json report;
    report["schema"] = 1;
    report["command"] = "run-bound";
    json bounds;
    std::vector<std::vector<std::string>> tsv;
    bool all_match = true;
    for (const auto* m : {&morphisms::f(), &morphisms::g(), &morphisms::h()}) {
        std::size_t bound = binary_run_bound(*m);
        bounds[m->name()] = bound;
        all_match = all_match && bound == 6;
        tsv.push_back({m->name(), std::to_string(bound), "6"});
    }
    report["bounds"] = bounds;
    report["expected"] = 6;
    report["all_match"] = all_match;
    emit(output, report, {"morphism", "bound", "expected"}, tsv);
    return all_match ? 0 : 1;
}

json leaves_to_json(const std::vector<LeafReport>& leaves) {
    json out = json::array();
    for (const LeafReport& leaf : leaves) {
        json j;
        j["path"] = leaf.path.str();
        j["verdict"] = verdict_name(leaf.verdict.kind);
        j["witness"] = leaf.verdict.witness.str();
        if (leaf.alt) {
            j["alt_verdict"] = verdict_name(leaf.alt->kind);
            j["alt_witness"] = leaf.alt->witness.str();
        } else {
            j["alt_verdict"] = nullptr;
            j["alt_witness"] = nullptr;
        }
        out.push_back(j);
    }
    return out;
}

int cmd_lemma_trees(const Output& output) {
    json report;
    report["schema"] = 1;
    report["command"] = "lemma-trees";
    std::vector<std::vector<std::string>> tsv;
    bool all_match = true;

    auto section = [&](BlockTreeKind kind, const char* key,
                       std::initializer_list<const char*> expected) {
        auto leaves = enumerate_block_tree(kind);
        auto accepted = accepted_blocks(leaves);
        std::vector<Word> want;
        for (const char* e : expected) want.push_back(Word::parse(e, 3));
        bool match = accepted == want;
        all_match = all_match && match;
        json j;
        json jacc = json::array();
        for (const Word& b : accepted) jacc.push_back(b.str());
        j["accepted"] = jacc;
        j["accepted_match"] = match;
        j["leaves"] = leaves_to_json(leaves);
        report[key] = j;
        for (const LeafReport& leaf : leaves) {
            tsv.push_back({key, leaf.path.str(), verdict_name(leaf.verdict.kind),
                           leaf.verdict.witness.str(),
                           leaf.alt ? verdict_name(leaf.alt->kind) : "-",
                           leaf.alt ? leaf.alt->witness.str() : "-"});
        }
    };

    section(BlockTreeKind::GImageBlocks, "g_image_blocks", {"011", "0121", "012121"});
    section(BlockTreeKind::NestedHImageBlocks, "nested_h_image_blocks", {"01", "02", "022"});
    section(BlockTreeKind::HImageBlocks, "h_image_blocks", {"01", "0121", "02", "022"});

    json elim = json::array();
    bool elim_ok = true;
    for (const NamedCheck& check : h_block_0121_elimination()) {
        elim.push_back({{"name", check.name}, {"ok", check.ok}});
        elim_ok = elim_ok && check.ok;
    }
    report["h_image_blocks"]["block_0121_elimination"] = elim;
    report["h_image_blocks"]["final_accepted"] = {"01", "02", "022"};
    all_match = all_match && elim_ok;

    report["all_match"] = all_match;
    emit(output, report, {"tree", "path", "verdict", "witness", "alt_verdict", "alt_witness"}, tsv);
    return all_match ? 0 : 1;
}

int cmd_f_claims(const Output& output) {
    FClaimsReport claims = verify_morphism_claims();
    json report;
    report["schema"] = 1;
    report["command"] = "f-claims";
    json checks = json::array();
    std::vector<std::vector<std::string>> tsv;
    for (const NamedCheck& c : claims.checks) {
        checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        tsv.push_back({c.name, c.ok ? "true" : "false", c.detail});
    }
    report["checks"] = checks;
    report["all_ok"] = claims.all_ok;
    emit(output, report, {"name", "ok", "detail"}, tsv);
    return claims.all_ok ? 0 : 1;
}

int cmd_structure_check(const Output& output, const std::string& recipe, const std::string& word,
                        const std::string& input, std::size_t length, std::size_t n_max) {
    Word w;
    std::string source;
    if (!word.empty() || !input.empty()) {
        w = input_words(word, input).at(0);
        source = "input";
    } else {
        w = generate(parse_recipe(recipe), length);
        source = recipe;
    }
    auto rows = check_structure_theorem(w, n_max);
    json report;
    report["schema"] = 1;
    report["command"] = "structure-check";
    report["word_source"] = source;
    report["length"] = w.size();
    json jrows = json::array();
    std::vector<std::vector<std::string>> tsv;
    bool all_ok = true;
    for (const auto& row : rows) {
        bool ok = row.fh_ok || row.fgh_ok;
        all_ok = all_ok && ok;
        jrows.push_back({{"n", row.n},
                         {"fh", row.fh_ok},
                         {"fgh", row.fgh_ok},
                         {"residual_length", row.residual_length}});
        tsv.push_back({std::to_string(row.n), row.fh_ok ? "true" : "false",
                       row.fgh_ok ? "true" : "false", std::to_string(row.residual_length)});
    }
    report["rows"] = jrows;
    report["all_ok"] = all_ok;
    emit(output, report, {"n", "fh", "fgh", "residual_length"}, tsv);
    return all_ok ? 0 : 1;
}

int cmd_sturmian_report(const Output& output, std::size_t n_max, std::size_t justin_max,
                        std::size_t justin_length) {
    if (n_max < 2) throw ConfigError("sturmian-report: --n-max must be at least 2");
    const ContinuedFraction& cf = ContinuedFraction::fgh_slope();
    ConvergentTable table(cf, n_max + 1);
    QIdentityReport identity = verify_q_identity(table, n_max);
    Word prefix = characteristic_prefix(cf, justin_length);

    json report;
    report["schema"] = 1;
    report["command"] = "sturmian-report";
    report["slope"] = cf.str();
    json jrows = json::array();
    std::vector<std::vector<std::string>> tsv;
    bool all_ok = true;
    for (std::size_t k = 2; k <= n_max; ++k) {
        Rational ek = repetition_exponent(table, k);
        const QIdentityRow& qrow = identity.rows.at(k - 2);
        json j;
        j["k"] = k;
        j["q_k"] = table.q(static_cast<long>(k)).get_str();
        j["E_k"] = ek.str();
        j["E_k_decimal"] = ek.to_double();
        j["identity"] = qrow.identity_value;
        j["identity_ok"] = qrow.identity_ok;
        std::string justin_cell = "-";
        if (k <= justin_max) {
            std::size_t period = static_cast<std::size_t>(
                mpz_class(table.q(static_cast<long>(k) - 2) + table.q(static_cast<long>(k) - 1))
                    .get_si());
            std::size_t expected = static_cast<std::size_t>(
                mpz_class(2 * (table.q(static_cast<long>(k) - 2) +
                               table.q(static_cast<long>(k) - 1)) +
                          table.q(static_cast<long>(k) - 1) - 2)
                    .get_si());
            std::size_t got = longest_factor_with_period(prefix, period);
            bool ok = got == expected;
            j["justin_check"] = {{"period", period}, {"expected", expected}, {"got", got},
                                 {"ok", ok}};
            all_ok = all_ok && ok;
            justin_cell = std::to_string(got) + "/" + std::to_string(expected);
        } else {
            j["justin_check"] = nullptr;
        }
        all_ok = all_ok && qrow.identity_ok && qrow.growth_inequality_ok;
        jrows.push_back(j);
        tsv.push_back({std::to_string(k), table.q(static_cast<long>(k)).get_str(), ek.str(),
                       std::to_string(ek.to_double()), std::to_string(qrow.identity_value),
                       justin_cell});
    }
    report["rows"] = jrows;
    double e_last = repetition_exponent(table, n_max).to_double();
    report["limit_abs_error"] = std::fabs(e_last - (2.0 + std::sqrt(2.0) / 2.0));
    report["all_ok"] = all_ok;
    emit(output, report, {"k", "q_k", "E_k", "E_k_decimal", "identity", "justin"}, tsv);
    return all_ok ? 0 : 1;
}

int cmd_rote_check(const Output& output, const std::string& recipe, const std::string& word,
                   const std::string& input, std::size_t length, std::size_t n_max) {
    Word w;
    std::string source;
    if (!word.empty() || !input.empty()) {
        w = input_words(word, input).at(0);
        source = "input";
    } else {
        w = generate(parse_recipe(recipe), length);
        source = recipe;
    }
    RoteReport rote = rote_check(w, n_max);
    json report;
    report["schema"] = 1;
    report["command"] = "rote-check";
    report["word_source"] = source;
    report["length"] = w.size();
    report["strict"] = rote.strict;
    json jrows = json::array();
    std::vector<std::vector<std::string>> tsv;
    for (const RoteRow& row : rote.rows) {
        jrows.push_back({{"n", row.n},
                         {"complexity", row.complexity},
                         {"expected", 2 * row.n},
                         {"complexity_ok", row.complexity_ok},
                         {"complement_closed", row.complement_closed}});
        tsv.push_back({std::to_string(row.n), std::to_string(row.complexity),
                       std::to_string(2 * row.n), row.complexity_ok ? "true" : "false",
                       row.complement_closed ? "true" : "false"});
    }
    report["rows"] = jrows;
    report["all_ok"] = rote.all_ok;
    emit(output, report, {"n", "complexity", "expected", "complexity_ok", "complement_closed"},
         tsv);
    return rote.all_ok ? 0 : 1;
}

int cmd_delta_check(const Output& output, std::size_t n_max, int samples) {
    const Morphism& f = morphisms::f();
    const Morphism& g = morphisms::g();
    const Morphism& h = morphisms::h();
    const Morphism& xi = morphisms::xi();
    const Morphism& eta = morphisms::eta();
    const Morphism& lam = morphisms::lambda();

    json report;
    report["schema"] = 1;
    report["command"] = "delta-check";
    json conjugacy = json::array();
    std::vector<std::vector<std::string>> tsv;
    bool all_ok = true;
    Word hn = Word::parse("0", 3);
    Word xin = Word::parse("0", 2);
    for (std::size_t n = 0; n <= n_max; ++n) {
        bool fh_ok = delta(f(hn).append(0)) == xin;
        bool fgh_ok = delta(f(g(hn)).append(0)) == eta(xi(xin));
        all_ok = all_ok && fh_ok && fgh_ok;
        conjugacy.push_back({{"n", n}, {"fh_identity", fh_ok}, {"fgh_identity", fgh_ok}});
        tsv.push_back({std::to_string(n), fh_ok ? "true" : "false", fgh_ok ? "true" : "false"});
        hn = h(hn);
        xin = xi(xin);
    }
    report["conjugacy"] = conjugacy;

    auto letterwise_equal = [](const Morphism& a, const Morphism& b) {
        for (int s = 0; s < a.source_alphabet(); ++s) {
            if (a.image(static_cast<Symbol>(s)) != b.image(static_cast<Symbol>(s))) return false;
        }
        return true;
    };
    bool id1 = letterwise_equal(compose(lam, h), compose(xi, lam));
    bool id2 = letterwise_equal(compose(eta, compose(xi, lam)), morphisms::mu());
    bool id3 = letterwise_equal(compose(morphisms::gtilde(), h), g);
    report["morphism_identities"] = {{"lambda_h_eq_xi_lambda", id1},
                                     {"mu_eq_eta_xi_lambda", id2},
                                     {"g_eq_gtilde_h", id3}};
    all_ok = all_ok && id1 && id2 && id3;

    SplitMix64 rng(0x5eed0013u);
    std::size_t repetitions = 0, violations = 0;
    for (int it = 0; it < samples; ++it) {
        std::size_t len = 3 + rng.below(28);
        std::vector<Symbol> symbols(len);
        for (auto& s : symbols) s = static_cast<Symbol>(rng.below(2));
        DeltaTransferReport r = delta_repetition_transfer(Word(symbols, 2));
        repetitions += r.repetitions_checked;
        violations += r.violations.size();
    }
    report["transfer"] =
        {{"samples", samples}, {"repetitions", repetitions}, {"violations", violations}};
    all_ok = all_ok && violations == 0;
    report["all_ok"] = all_ok;
    emit(output, report, {"n", "fh_identity", "fgh_identity"}, tsv);
    return all_ok ? 0 : 1;
}

int cmd_full_verify(const Output& output) {
    auto results = verify::run_all(&std::cerr);
    json report;
    report["schema"] = 1;
    report["command"] = "full-verify";
    json criteria = json::array();
    std::vector<std::vector<std::string>> tsv;
    int passed = 0;
    for (const auto& r : results) {
        criteria.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        tsv.push_back({std::to_string(r.id), r.name, r.pass ? "PASS" : "FAIL", r.detail});
        if (r.pass) ++passed;
    }
    report["criteria"] = criteria;
    report["passed"] = passed;
    report["total"] = results.size();
    report["all_pass"] = verify::all_passed(results);
    emit(output, report, {"id", "name", "status", "detail"}, tsv);
    return verify::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"richwords: verification toolkit for palindrome-rich binary and ternary words"};
    app.require_subcommand(1);
    app.fallthrough();

    Output output;
    int jobs = 0;
    app.add_option("--format", output.format, "Report format")
        ->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--output", output.path, "Write the report to a file instead of stdout");
    app.add_option("--jobs", jobs, "Worker threads (default: RICHWORD_JOBS, then all cores)");

    auto* gen = app.add_subcommand("generate", "Emit a prefix of a generated infinite word");
    std::string gen_recipe = "FH", gen_morphism;
    int gen_seed = 0;
    std::size_t gen_length = 100;
    gen->add_option("--recipe", gen_recipe, "FH = f(h^w(0)), FGH = f(g(h^w(0)))");
    gen->add_option("--morphism", gen_morphism,
                    "Custom fixed point, literal 'name: 0->image,1->image,...'");
    gen->add_option("--seed", gen_seed, "Seed letter for --morphism")->check(CLI::Range(0, 2));
    gen->add_option("--length", gen_length, "Prefix length");

    auto* rich = app.add_subcommand("rich-check", "Palindromic richness report");
    std::string rich_word, rich_input;
    rich->add_option("--word", rich_word, "Word as ASCII digits (up to 4096 symbols)");
    rich->add_option("--input", rich_input, "Word file, one word per line");

    auto* expc = app.add_subcommand("exponent", "Maximal factor exponent with witness");
    std::string exp_word, exp_input, exp_threshold;
    expc->add_option("--word", exp_word, "Word as ASCII digits");
    expc->add_option("--input", exp_input, "Word file, one word per line");
    expc->add_option("--threshold", exp_threshold, "Also report alpha-freeness, e.g. 14/5");

    auto* table = app.add_subcommand("table1", "Certify the 13-row longest-good-extension table");
    std::string table_threshold = "14/5";
    std::size_t table_cap = 256;
    table->add_option("--threshold", table_threshold, "Exact fraction, e.g. 14/5 or 3");
    table->add_option("--depth-cap", table_cap, "Report a capped search past this total length");

    auto* runb = app.add_subcommand("run-bound",
                                    "Longest u over {1,2} with a cube-free image, for f, g, h");

    auto* trees =
        app.add_subcommand("lemma-trees", "Enumerate the 0-block trees and classify every leaf");

    auto* claims =
        app.add_subcommand("f-claims", "Verify the cube/identity claims behind the forbidden set");

    auto* structure = app.add_subcommand("structure-check", "De-substitution structure check");
    std::string st_recipe = "FGH", st_word, st_input;
    std::size_t st_length = 5000, st_nmax = 4;
    structure->add_option("--recipe", st_recipe, "FH or FGH");
    structure->add_option("--word", st_word, "Explicit word instead of a recipe");
    structure->add_option("--input", st_input, "Word file");
    structure->add_option("--length", st_length, "Generated prefix length");
    structure->add_option("--n-max", st_nmax, "Depth of the de-substitution chain");

    auto* sturmian =
        app.add_subcommand("sturmian-report", "Convergents, exponent ladder, identities");
    std::size_t su_nmax = 40, su_justin_max = 6, su_justin_len = 20000;
    sturmian->add_option("--n-max", su_nmax, "Ladder depth");
    sturmian->add_option("--justin-max", su_justin_max, "Check factor lengths up to this k");
    sturmian->add_option("--justin-length", su_justin_len, "Characteristic-word prefix length");

    auto* rote = app.add_subcommand("rote-check", "Factor complexity 2n and complement closure");
    std::string ro_recipe = "FGH", ro_word, ro_input;
    std::size_t ro_length = 100000, ro_nmax = 50;
    rote->add_option("--recipe", ro_recipe, "FH or FGH");
    rote->add_option("--word", ro_word, "Explicit word instead of a recipe");
    rote->add_option("--input", ro_input, "Word file");
    rote->add_option("--length", ro_length, "Generated prefix length");
    rote->add_option("--n-max", ro_nmax, "Check factor lengths 1..n-max");

    auto* dc =
        app.add_subcommand("delta-check", "First-difference identities and transfer property");
    std::size_t dc_nmax = 12;
    int dc_samples = 10000;
    dc->add_option("--n-max", dc_nmax, "Conjugacy identities for n = 0..n-max");
    dc->add_option("--samples", dc_samples, "Randomized transfer-property sample count");

    auto* full =
        app.add_subcommand("full-verify", "Run every verification suite (progress on stderr)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    set_jobs(effective_jobs(jobs));

    try {
        if (gen->parsed()) {
            return cmd_generate(output, gen_recipe, gen_morphism, gen_seed, gen_length);
        }
        if (rich->parsed()) return cmd_rich_check(output, rich_word, rich_input);
        if (expc->parsed()) return cmd_exponent(output, exp_word, exp_input, exp_threshold);
        if (table->parsed()) return cmd_table1(output, table_threshold, table_cap);
        if (runb->parsed()) return cmd_run_bound(output);
        if (trees->parsed()) return cmd_lemma_trees(output);
        if (claims->parsed()) return cmd_f_claims(output);
        if (structure->parsed()) {
            return cmd_structure_check(output, st_recipe, st_word, st_input, st_length, st_nmax);
        }
        if (sturmian->parsed()) {
            return cmd_sturmian_report(output, su_nmax, su_justin_max, su_justin_len);
        }
        if (rote->parsed()) {
            return cmd_rote_check(output, ro_recipe, ro_word, ro_input, ro_length, ro_nmax);
        }
        if (dc->parsed()) return cmd_delta_check(output, dc_nmax, dc_samples);
        if (full->parsed()) return cmd_full_verify(output);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotGoodError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
