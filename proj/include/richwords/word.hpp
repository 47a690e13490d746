#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace richwords {

using Symbol = std::uint8_t;

inline constexpr int kMaxAlphabet = 3;

// Finite word over an indexed alphabet {0,1} or {0,1,2}.  Immutable value
// type; the ASCII digit string ("0110", "0121012") is the interchange format
// everywhere, including word files and the CLI.
class Word {
public:
    Word() = default;
    Word(std::vector<Symbol> symbols, int alphabet_size);

    // Parses an ASCII digit string.  With alphabet_size == 0 the alphabet is
    // inferred: binary unless a '2' occurs.
    static Word parse(std::string_view digits, int alphabet_size = 0);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    int alphabet_size() const noexcept { return alphabet_size_; }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }

    std::string str() const;

    Word reversed() const;
    Word complemented() const;  // binary words only
    Word subword(std::size_t pos, std::size_t len) const;
    Word prefix(std::size_t len) const { return subword(0, len); }
    Word suffix(std::size_t len) const { return subword(size() - len, len); }

    Word append(Symbol s) const;
    Word concat(const Word& other) const;
    Word repeat(std::size_t times) const;

    bool contains(const Word& factor) const;
    bool starts_with(const Word& p) const;
    bool ends_with(const Word& s) const;

    // Equality and ordering compare the symbol sequences only; the alphabet
    // size is context, not identity.
    friend bool operator==(const Word& a, const Word& b) { return a.symbols_ == b.symbols_; }
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        return a.symbols_ <=> b.symbols_;
    }

private:
    std::vector<Symbol> symbols_;
    int alphabet_size_ = 2;
};

Word reverse(const Word& w);
Word complement(const Word& w);

// All distinct length-n factors of w; {""} for n == 0, empty for n > |w|.
std::set<Word> distinct_factors(const Word& w, std::size_t n);

// Word files: one word per line, ASCII digits, LF-terminated, no whitespace
// inside a word.
std::vector<Word> read_word_lines(std::istream& in);
void write_word_lines(std::ostream& out, std::span<const Word> words);

std::ostream& operator<<(std::ostream& out, const Word& w);

}  // namespace richwords
