#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "richwords/word.hpp"

namespace richwords {

// Palindromic tree built one symbol at a time: one node per distinct
// nonempty palindromic factor of the processed word.  push() reports whether
// the longest palindromic suffix of the extended word is new, i.e. whether a
// node was created -- that is exactly the criterion for the prefix to stay
// rich.  Every push journals enough state to undo it, so backtracking
// searches roll the tree back in O(1) per symbol.
//
// Instances are single-threaded; distinct instances run in parallel freely.
class Eertree {
public:
    explicit Eertree(int alphabet_size);

    // Extends the processed word by s.  Returns true iff a new palindrome
    // node was created (the new longest palindromic suffix is unioccurrent).
    bool push(Symbol s);

    // Undo the most recent push.
    void pop();

    // Undo pushes until the processed word has the given length.
    void rollback(std::size_t length);

    std::size_t length() const noexcept { return word_.size(); }
    std::size_t palindrome_count() const noexcept { return nodes_.size() - 2; }
    int longest_suffix_palindrome_length() const { return nodes_[active_].len; }

private:
    struct Node {
        int len;
        std::int32_t suffix_link;
        std::array<std::int32_t, kMaxAlphabet> next;  // 0 = absent (roots are never targets)
    };
    struct UndoRecord {
        std::int32_t previous_active;
        std::int32_t created_from;  // node whose transition was added, or -1
        Symbol created_symbol;
    };

    // Walks suffix links from `node` to the palindrome extendable by s.
    std::int32_t find_extension(std::int32_t node, Symbol s) const;

    std::vector<Node> nodes_;
    std::vector<Symbol> word_;
    std::vector<UndoRecord> journal_;
    std::int32_t active_ = 1;  // node of the longest palindromic suffix
    int alphabet_size_;
};

struct RichnessReport {
    std::size_t word_length = 0;
    std::size_t distinct_palindromes = 0;
    std::size_t defect = 0;
    // 1-based length of the first prefix whose longest palindromic suffix is
    // not unioccurrent; absent iff defect == 0.
    std::optional<std::size_t> first_defect_position;
};

// True iff w contains |w| distinct nonempty palindromic factors.
bool is_rich(const Word& w);

RichnessReport richness_report(const Word& w);

}  // namespace richwords
