#include "richwords/reference.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace richwords::reference {

namespace {

bool substring_is_palindrome(std::span<const Symbol> s, std::size_t i, std::size_t len) {
    for (std::size_t a = 0, b = len - 1; a < b; ++a, --b) {
        if (s[i + a] != s[i + b]) return false;
    }
    return true;
}

std::size_t period_by_scan(std::span<const Symbol> s, std::size_t i, std::size_t len) {
    for (std::size_t p = 1; p < len; ++p) {
        bool ok = true;
        for (std::size_t k = i; k + p < i + len; ++k) {
            if (s[k] != s[k + p]) {
                ok = false;
                break;
            }
        }
        if (ok) return p;
    }
    return len;
}

}  // namespace

std::size_t count_distinct_palindromes(const Word& w) {
    auto s = w.symbols();
    const std::size_t n = s.size();
    // Encode substrings as 2 bits per symbol plus the length; words here are
    // short (the sweeps cap at length 14), so this fits in 64 bits.
    std::vector<std::uint64_t> seen;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t len = 1; i + len <= n; ++len) {
            if (!substring_is_palindrome(s, i, len)) continue;
            std::uint64_t code = len;
            for (std::size_t k = 0; k < len; ++k) {
                code = (code << 2) | s[i + k];
            }
            seen.push_back(code);
        }
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    return seen.size();
}

bool is_rich(const Word& w) { return count_distinct_palindromes(w) == w.size(); }

std::pair<Rational, RepetitionWitness> max_exponent_factor(const Word& w) {
    auto s = w.symbols();
    const std::size_t n = s.size();
    RepetitionWitness best;
    bool have = false;
    for (std::size_t start = 0; start < n; ++start) {
        for (std::size_t len = 1; start + len <= n; ++len) {
            std::size_t p = period_by_scan(s, start, len);
            Rational e(static_cast<long>(len), static_cast<long>(p));
            bool better = false;
            if (!have) {
                better = true;
            } else if (e != best.exponent) {
                better = e > best.exponent;
            } else if (start != best.start) {
                better = start < best.start;
            } else {
                better = p < best.period;
            }
            if (better) {
                best = RepetitionWitness{start, p, len, e};
                have = true;
            }
        }
    }
    return {best.exponent, best};
}

bool is_alpha_free(const Word& w, const Rational& alpha) {
    auto s = w.symbols();
    const std::size_t n = s.size();
    for (std::size_t start = 0; start < n; ++start) {
        for (std::size_t len = 1; start + len <= n; ++len) {
            std::size_t p = period_by_scan(s, start, len);
            if (Rational(static_cast<long>(len), static_cast<long>(p)) >= alpha) return false;
        }
    }
    return true;
}

std::size_t longest_factor_with_period(const Word& w, std::size_t p) {
    auto s = w.symbols();
    const std::size_t n = s.size();
    std::size_t best = 0;
    for (std::size_t start = 0; start < n; ++start) {
        for (std::size_t len = p; start + len <= n; ++len) {
            bool ok = true;
            for (std::size_t k = start; k + p < start + len; ++k) {
                if (s[k] != s[k + p]) {
                    ok = false;
                    break;
                }
            }
            if (ok) best = std::max(best, len);
        }
    }
    return best;
}

std::size_t factor_complexity(const Word& w, std::size_t n) {
    return distinct_factors(w, n).size();
}

}  // namespace richwords::reference
