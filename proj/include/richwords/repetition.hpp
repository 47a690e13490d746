#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "richwords/rational.hpp"
#include "richwords/word.hpp"

namespace richwords {

// A factor w[start, start+length) whose smallest period is `period`;
// exponent == length/period.
struct RepetitionWitness {
    std::size_t start = 0;
    std::size_t period = 1;
    std::size_t length = 1;
    Rational exponent = Rational(1);
};

// Least p >= 1 with w[i] == w[i+p] for all valid i.  Rejects the empty word.
std::size_t smallest_period(const Word& w);

// |w| / smallest_period(w), exact.
Rational exponent(const Word& w);

// Maximum of exponent(x) over all nonempty factors x of w, with one
// maximizing witness; ties broken by smallest start, then smallest period.
// OpenMP-parallel over candidate periods.
std::pair<Rational, RepetitionWitness> max_exponent_factor(const Word& w);

// True iff every nonempty factor of w has exponent strictly below alpha
// ("alpha-free" forbids exponent >= alpha).  Requires alpha > 1.
bool is_alpha_free(const Word& w, const Rational& alpha);

// Incremental form: true iff no factor ending at the last position of w has
// exponent >= alpha.  When every shorter prefix already passed this check,
// equals is_alpha_free(w, alpha).
bool suffix_extension_safe(const Word& w, const Rational& alpha);

// Rich and 14/5-free.
bool is_good(const Word& w);
const Rational& good_threshold();  // 14/5

// Factor of exponent >= 3?
bool contains_cube(const Word& w);
// Leftmost (then smallest-period) cube z^3 occurring in w, if any.
std::optional<Word> find_cube(const Word& w);

// Exponents of left- and right-maximal periodic runs with exponent at least
// min_exponent, deduplicated and sorted ascending.
std::vector<Rational> attained_exponents(const Word& w, const Rational& min_exponent);

}  // namespace richwords
