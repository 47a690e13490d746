#include "richwords/word.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace richwords {

namespace {

void check_alphabet_size(int alphabet_size) {
    if (alphabet_size < 2 || alphabet_size > kMaxAlphabet) {
        throw std::invalid_argument("word: alphabet size must be 2 or 3");
    }
}

}  // namespace

Word::Word(std::vector<Symbol> symbols, int alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
    check_alphabet_size(alphabet_size_);
    for (Symbol s : symbols_) {
        if (s >= alphabet_size_) {
            throw std::invalid_argument("word: symbol out of range for alphabet");
        }
    }
}

Word Word::parse(std::string_view digits, int alphabet_size) {
    std::vector<Symbol> symbols;
    symbols.reserve(digits.size());
    Symbol max_seen = 0;
    for (char c : digits) {
        if (c < '0' || c > '2') {
            throw std::invalid_argument("word: expected only digits 0..2, got '" +
                                        std::string(1, c) + "'");
        }
        Symbol s = static_cast<Symbol>(c - '0');
        max_seen = std::max(max_seen, s);
        symbols.push_back(s);
    }
    if (alphabet_size == 0) {
        alphabet_size = max_seen >= 2 ? 3 : 2;
    }
    return Word(std::move(symbols), alphabet_size);
}

std::string Word::str() const {
    std::string out;
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) {
        out.push_back(static_cast<char>('0' + s));
    }
    return out;
}

Word Word::reversed() const {
    std::vector<Symbol> rev(symbols_.rbegin(), symbols_.rend());
    return Word(std::move(rev), alphabet_size_);
}

Word Word::complemented() const {
    if (alphabet_size_ != 2) {
        throw std::invalid_argument("complement: defined for binary words only");
    }
    std::vector<Symbol> out;
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) {
        out.push_back(static_cast<Symbol>(1 - s));
    }
    return Word(std::move(out), 2);
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    if (pos > size() || len > size() - pos) {
        throw std::out_of_range("word: subword out of range");
    }
    std::vector<Symbol> out(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                            symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len));
    return Word(std::move(out), alphabet_size_);
}

Word Word::append(Symbol s) const {
    std::vector<Symbol> out = symbols_;
    out.push_back(s);
    return Word(std::move(out), alphabet_size_);
}

Word Word::concat(const Word& other) const {
    std::vector<Symbol> out = symbols_;
    out.insert(out.end(), other.symbols_.begin(), other.symbols_.end());
    return Word(std::move(out), std::max(alphabet_size_, other.alphabet_size_));
}

Word Word::repeat(std::size_t times) const {
    std::vector<Symbol> out;
    out.reserve(symbols_.size() * times);
    for (std::size_t i = 0; i < times; ++i) {
        out.insert(out.end(), symbols_.begin(), symbols_.end());
    }
    return Word(std::move(out), alphabet_size_);
}

bool Word::contains(const Word& factor) const {
    if (factor.empty()) return true;
    return std::search(symbols_.begin(), symbols_.end(), factor.symbols_.begin(),
                       factor.symbols_.end()) != symbols_.end();
}

bool Word::starts_with(const Word& p) const {
    return p.size() <= size() && std::equal(p.symbols_.begin(), p.symbols_.end(), symbols_.begin());
}

bool Word::ends_with(const Word& s) const {
    return s.size() <= size() &&
           std::equal(s.symbols_.rbegin(), s.symbols_.rend(), symbols_.rbegin());
}

Word reverse(const Word& w) { return w.reversed(); }

Word complement(const Word& w) { return w.complemented(); }

std::set<Word> distinct_factors(const Word& w, std::size_t n) {
    std::set<Word> out;
    if (n > w.size()) return out;
    if (n == 0) {
        out.insert(Word({}, w.alphabet_size()));
        return out;
    }
    for (std::size_t i = 0; i + n <= w.size(); ++i) {
        out.insert(w.subword(i, n));
    }
    return out;
}

std::vector<Word> read_word_lines(std::istream& in) {
    std::vector<Word> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        words.push_back(Word::parse(line));
    }
    return words;
}

void write_word_lines(std::ostream& out, std::span<const Word> words) {
    for (const Word& w : words) {
        out << w.str() << '\n';
    }
}

std::ostream& operator<<(std::ostream& out, const Word& w) { return out << w.str(); }

}  // namespace richwords
