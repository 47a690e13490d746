#pragma once

#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "richwords/word.hpp"

namespace richwords {

// Letter-to-word substitution, extended to words by concatenation.
// Immutable and freely shareable.
class Morphism {
public:
    Morphism(std::string name, std::vector<Word> images, int source_alphabet, int target_alphabet);

    const std::string& name() const noexcept { return name_; }
    int source_alphabet() const noexcept { return source_alphabet_; }
    int target_alphabet() const noexcept { return target_alphabet_; }
    const Word& image(Symbol s) const;

    Word apply(const Word& w) const;
    Word operator()(const Word& w) const { return apply(w); }

    bool images_distinct() const;

    // Every image starts with 0 and contains no other 0; such an image set is
    // a uniquely decodable block code, which is what de-substitution parses.
    bool is_zero_block_code() const;

private:
    std::string name_;
    std::vector<Word> images_;
    int source_alphabet_;
    int target_alphabet_;
};

// (outer . inner)(a) = outer(inner(a)); alphabets must chain.
Morphism compose(const Morphism& outer, const Morphism& inner);

// CLI/config literal: "name: 0->image,1->image,2->image" (images as ASCII
// digit strings; one arrow clause per source letter).
Morphism parse_morphism_literal(std::string_view text);

// The registered morphisms.
namespace morphisms {
const Morphism& f();       // 0->0,    1->01,   2->011      (ternary -> binary)
const Morphism& g();       // 0->011,  1->0121, 2->012121
const Morphism& h();       // 0->01,   1->02,   2->022
const Morphism& gtilde();  // 0->01,   1->1,    2->21        (g = gtilde . h)
const Morphism& lambda();  // 0->0,    1->11,   2->101       (ternary -> binary)
const Morphism& mu();      // 0->01111, 1->01110111, 2->0111011110111
const Morphism& xi();      // 0->011,  1->01                 (binary -> binary)
const Morphism& eta();     // 0->011,  1->1
const Morphism& xibar();   // 0->01,   1->001
const Morphism& etabar();  // 0->0,    1->001
const Morphism& identity(int alphabet_size);
const std::map<std::string, const Morphism*>& registry();
}  // namespace morphisms

// First L symbols of the fixed point m^omega(seed).  Requires m(seed) to
// start with seed and have length >= 2.
Word fixed_point_prefix(const Morphism& m, Symbol seed, std::size_t length);

// Lazily grown prefix of an infinite word; produced prefixes are nested.
// Growth is single-writer (internally locked); returned words are snapshots.
class MorphicStream {
public:
    using Grower = std::function<Word(std::size_t min_length)>;

    MorphicStream(std::string name, Grower grow);
    static MorphicStream fixed_point(const Morphism& m, Symbol seed);
    // outer(m^omega(seed)), e.g. f(h^omega(0)).
    static MorphicStream image_of_fixed_point(const Morphism& outer, const Morphism& m, Symbol seed);

    const std::string& name() const noexcept { return name_; }
    Word prefix(std::size_t length);

private:
    std::string name_;
    Grower grow_;
    Word cache_;
    std::mutex mutex_;
};

// The two generated words the verification suites revolve around.
enum class Recipe { FH, FGH };  // f(h^omega(0)) and f(g(h^omega(0)))

Word generate(Recipe recipe, std::size_t length);

// First differences mod 2: |w|-1 symbols, entry i = (w_i + w_{i+1}) mod 2.
// Binary input, length >= 1.
Word delta(const Word& w);

struct Desubstitution {
    Word preimage;
    std::size_t dropped_prefix = 0;
    std::size_t dropped_suffix = 0;
};

struct UnparsableBlockError : std::runtime_error {
    UnparsableBlockError(std::size_t position, Word block);
    std::size_t position;
    Word block;
};

// Inverse of apply() for zero-block-code morphisms (f, g, h): drops anything
// before the first 0 and a trailing partial block, parses the rest uniquely
// into images.  A complete block outside the image set throws
// UnparsableBlockError.  The trailing block is consumed greedily: taken when
// it is an exact image, dropped when it is a proper prefix of one.
Desubstitution desubstitute(const Word& w, const Morphism& m);

struct IncidenceAnalysis {
    // matrix[i][j] = occurrences of symbol i in the image of letter j.
    std::array<std::array<long, 2>, 2> matrix{};
    double dominant_eigenvalue = 0.0;
    std::array<double, 2> frequencies{};  // nonnegative, sums to 1
};

// Incidence matrix of a binary-to-binary morphism with closed-form 2x2
// eigensolve; throws on degenerate (nilpotent / sign-indefinite) matrices.
IncidenceAnalysis incidence_analysis(const Morphism& m);

// M_m * v, renormalized to sum 1: pushes letter frequencies through m.
std::array<double, 2> propagate_frequencies(const Morphism& m, const std::array<double, 2>& v);

}  // namespace richwords
