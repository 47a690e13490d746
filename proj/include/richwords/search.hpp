#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "richwords/morphism.hpp"
#include "richwords/rational.hpp"
#include "richwords/word.hpp"

namespace richwords {

// Configuration for the certified extension searches.  A word is "good" for
// the search when its image under image_morphism is rich and threshold-free
// and the word itself avoids every banned factor.
struct SearchConfig {
    Rational threshold = Rational(14, 5);
    std::vector<Word> banned_factors;  // over the (ternary) search alphabet
    std::size_t depth_cap = 256;       // total length |vs| at which a live branch stops
    const Morphism* image_morphism = nullptr;  // defaults to f
};

struct ExtensionResult {
    enum class Kind { LongestGood, ImmediateFail, CapExceeded };
    Kind kind = Kind::ImmediateFail;
    std::size_t length = 0;  // LongestGood: |vs|; CapExceeded: the cap
    // Lexicographically smallest extension of maximal length (LongestGood
    // only; deterministic under any parallel schedule).
    std::optional<Word> witness;

    std::string str() const;  // "49", "*", ">=200"
};

// Exhaustive DFS over right-extensions vs of v, pruning any node whose image
// stops being rich/threshold-free or which contains a banned factor.
// Certifies the maximal length at which a good image exists; ImmediateFail
// when v itself is not good; CapExceeded when some branch is still alive at
// depth_cap.  OpenMP-parallel over subtrees with a deterministic merge.
ExtensionResult longest_good_extension(const Word& v, const SearchConfig& cfg);

// The certified extension table: the 13 seed factors that cannot occur in
// any ternary word with a good f-image, each with its known longest good
// extension length ("*" = the seed's own image is already not good).
struct ExtensionTableRow {
    Word seed;
    ExtensionResult expected;  // meaningful at the default threshold 14/5
    ExtensionResult got;
    bool match = false;
};

const std::vector<std::pair<Word, ExtensionResult>>& extension_table_expected();

// Runs longest_good_extension for all 13 seeds (rows in parallel) and
// compares against the stored expected column.
std::vector<ExtensionTableRow> verify_extension_table(const SearchConfig& cfg);

// Maximum length of u over {1,2} such that phi(u) is cube-free, by
// exhaustive DFS.  Each registered morphism gives 6.
std::size_t binary_run_bound(const Morphism& phi);

// The three 0-block enumeration trees.  Each enumerates candidate blocks
// (words starting with 0, no interior 0) under a constraint set and
// classifies every leaf.
enum class BlockTreeKind {
    GImageBlocks,        // accepted: {011, 0121, 012121}; constraints: extension
                         // table factors + cube-freeness + richness, with
                         // predecessor suffix 11 or 21
    NestedHImageBlocks,  // accepted: {01, 02, 022}; constraints: factor set
                         // {00, 11, 12, 21} + cube-freeness
    HImageBlocks,        // raw accepted: {01, 0121, 02, 022}; constraints: the
                         // factor set F + richness + cube-freeness; a separate
                         // four-check argument then eliminates 0121
};

struct LeafVerdict {
    enum class Kind { Accepted, Cube, NonRich, ForbiddenTable, ForbiddenF };
    Kind kind = Kind::Accepted;
    Word witness;  // accepted block, cubic factor, non-rich suffix, or forbidden factor
};

struct LeafReport {
    Word path;  // the candidate prefix at which the branch ended
    LeafVerdict verdict;
    // Present when the rejection needed the predecessor contexts and they
    // fail for different reasons: verdict is for context "11", alt for "21".
    std::optional<LeafVerdict> alt;
};

std::vector<LeafReport> enumerate_block_tree(BlockTreeKind kind);

std::vector<Word> accepted_blocks(const std::vector<LeafReport>& leaves);

// The forbidden-factor set F = {1221, 00, 10101, 212, 11}.
const std::vector<Word>& forbidden_set_f();

struct NamedCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

// The four factor checks that eliminate the 0121 block from the raw
// HImageBlocks acceptance: 2102 and 210102 are non-rich, 10101 is in F, and
// (0121)^3 is a cube.
std::vector<NamedCheck> h_block_0121_elimination();

struct FClaimsReport {
    std::vector<NamedCheck> checks;
    bool all_ok = false;
};

// Mechanical verification of the cube/identity claims behind the forbidden
// set F: h(1221) has a cube; f(h(00x)), g(h(00x)), h^2(00x) and the 10101x /
// 0110 analogues have cubes; h(212) == 02202022; and the v0v0v1 / v1v1v2 /
// v0v0v2 template identities on pseudorandom ternary v (fixed seed, so
// reports stay byte-identical).
FClaimsReport verify_morphism_claims(std::uint64_t seed = 0x5eed0001u, int samples = 200);

struct NotGoodError : std::runtime_error {
    explicit NotGoodError(std::string what) : std::runtime_error(std::move(what)) {}
};

struct StructureCheckRow {
    std::size_t n = 0;
    bool fh_ok = false;   // parses as f(h^n(residual))
    bool fgh_ok = false;  // parses as f(g(h^n(residual)))
    std::size_t residual_length = 0;  // from the successful branch
};

// For n = 1..n_max, attempts the de-substitution chains f^-1 (then g^-1 for
// the FGH branch) then h^-1 n times, allowing a bounded dropped prefix per
// stage.  Throws NotGoodError when w is not rich and 14/5-free.
std::vector<StructureCheckRow> check_structure_theorem(const Word& w, std::size_t n_max);

}  // namespace richwords
