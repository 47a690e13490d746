#pragma once

#include <cstddef>
#include <utility>

#include "richwords/rational.hpp"
#include "richwords/repetition.hpp"
#include "richwords/word.hpp"

// Serial reference implementations: small, obviously-correct versions of the
// hot kernels.  The test suites check the production code against these on
// exhaustive small inputs, and tools/bench.cpp compares their speed.  Nothing
// here shares code with the production path.
namespace richwords::reference {

// Distinct nonempty palindromic substrings, by enumerating all substrings and
// testing each one (O(n^3)).
std::size_t count_distinct_palindromes(const Word& w);

bool is_rich(const Word& w);

// Max factor exponent over all (start, length) pairs, periods found by direct
// scan; same tie rule as the production kernel.
std::pair<Rational, RepetitionWitness> max_exponent_factor(const Word& w);

bool is_alpha_free(const Word& w, const Rational& alpha);

std::size_t longest_factor_with_period(const Word& w, std::size_t p);

// |distinct_factors(w, n)| via an ordered set of copies.
std::size_t factor_complexity(const Word& w, std::size_t n);

}  // namespace richwords::reference
