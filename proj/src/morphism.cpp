#include "richwords/morphism.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace richwords {

Morphism::Morphism(std::string name, std::vector<Word> images, int source_alphabet,
                   int target_alphabet)
    : name_(std::move(name)),
      images_(std::move(images)),
      source_alphabet_(source_alphabet),
      target_alphabet_(target_alphabet) {
    if (source_alphabet_ < 1 || source_alphabet_ > kMaxAlphabet || target_alphabet_ < 1 ||
        target_alphabet_ > kMaxAlphabet) {
        throw std::invalid_argument("morphism: unsupported alphabet size");
    }
    if (images_.size() != static_cast<std::size_t>(source_alphabet_)) {
        throw std::invalid_argument("morphism: need one image per source letter");
    }
    for (const Word& image : images_) {
        for (Symbol s : image.symbols()) {
            if (s >= target_alphabet_) {
                throw std::invalid_argument("morphism '" + name_ +
                                            "': image symbol outside target alphabet");
            }
        }
    }
}

const Word& Morphism::image(Symbol s) const {
    if (s >= source_alphabet_) throw std::out_of_range("morphism: symbol out of range");
    return images_[s];
}

Word Morphism::apply(const Word& w) const {
    std::vector<Symbol> out;
    std::size_t total = 0;
    for (Symbol s : w.symbols()) total += image(s).size();
    out.reserve(total);
    for (Symbol s : w.symbols()) {
        auto img = image(s).symbols();
        out.insert(out.end(), img.begin(), img.end());
    }
    return Word(std::move(out), target_alphabet_);
}

bool Morphism::images_distinct() const {
    std::set<Word> seen(images_.begin(), images_.end());
    return seen.size() == images_.size();
}

bool Morphism::is_zero_block_code() const {
    for (const Word& image : images_) {
        if (image.empty() || image[0] != 0) return false;
        for (std::size_t i = 1; i < image.size(); ++i) {
            if (image[i] == 0) return false;
        }
    }
    return images_distinct();
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
    if (inner.target_alphabet() != outer.source_alphabet()) {
        throw std::invalid_argument("compose: alphabet mismatch between " + outer.name() +
                                    " and " + inner.name());
    }
    std::vector<Word> images;
    for (int a = 0; a < inner.source_alphabet(); ++a) {
        images.push_back(outer.apply(inner.image(static_cast<Symbol>(a))));
    }
    return Morphism(outer.name() + "." + inner.name(), std::move(images), inner.source_alphabet(),
                    outer.target_alphabet());
}

Morphism parse_morphism_literal(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("morphism literal: expected 'name: 0->image,...'");
    }
    std::string name(text.substr(0, colon));
    while (!name.empty() && name.back() == ' ') name.pop_back();
    if (name.empty()) throw std::invalid_argument("morphism literal: empty name");

    std::vector<Word> images(kMaxAlphabet);
    std::vector<bool> have(kMaxAlphabet, false);
    std::string rest(text.substr(colon + 1));
    std::stringstream ss(rest);
    std::string clause;
    int source_alphabet = 0;
    int target_alphabet = 2;
    while (std::getline(ss, clause, ',')) {
        clause.erase(std::remove(clause.begin(), clause.end(), ' '), clause.end());
        auto arrow = clause.find("->");
        if (arrow == std::string::npos || arrow != 1) {
            throw std::invalid_argument("morphism literal: bad clause '" + clause + "'");
        }
        char letter = clause[0];
        if (letter < '0' || letter >= '0' + kMaxAlphabet) {
            throw std::invalid_argument("morphism literal: bad source letter");
        }
        int idx = letter - '0';
        if (have[idx]) throw std::invalid_argument("morphism literal: duplicate source letter");
        Word image = Word::parse(clause.substr(arrow + 2));
        target_alphabet = std::max(target_alphabet, image.alphabet_size());
        images[idx] = image;
        have[idx] = true;
        source_alphabet = std::max(source_alphabet, idx + 1);
    }
    if (source_alphabet < 2) throw std::invalid_argument("morphism literal: need letters 0 and 1");
    for (int i = 0; i < source_alphabet; ++i) {
        if (!have[i]) throw std::invalid_argument("morphism literal: missing source letter");
    }
    images.resize(source_alphabet);
    std::vector<Word> fixed;
    for (Word& w : images) {
        fixed.push_back(Word::parse(w.str(), target_alphabet));
    }
    return Morphism(name, std::move(fixed), source_alphabet, target_alphabet);
}

namespace morphisms {

namespace {

Morphism make(const char* name, std::initializer_list<const char*> images, int source, int target) {
    std::vector<Word> ws;
    for (const char* im : images) ws.push_back(Word::parse(im, target));
    return Morphism(name, std::move(ws), source, target);
}

}  // namespace

const Morphism& f() {
    static const Morphism m = make("f", {"0", "01", "011"}, 3, 2);
    return m;
}
const Morphism& g() {
    static const Morphism m = make("g", {"011", "0121", "012121"}, 3, 3);
    return m;
}
const Morphism& h() {
    static const Morphism m = make("h", {"01", "02", "022"}, 3, 3);
    return m;
}
const Morphism& gtilde() {
    static const Morphism m = make("gtilde", {"01", "1", "21"}, 3, 3);
    return m;
}
const Morphism& lambda() {
    static const Morphism m = make("lambda", {"0", "11", "101"}, 3, 2);
    return m;
}
const Morphism& mu() {
    static const Morphism m = make("mu", {"01111", "01110111", "0111011110111"}, 3, 2);
    return m;
}
const Morphism& xi() {
    static const Morphism m = make("xi", {"011", "01"}, 2, 2);
    return m;
}
const Morphism& eta() {
    static const Morphism m = make("eta", {"011", "1"}, 2, 2);
    return m;
}
const Morphism& xibar() {
    static const Morphism m = make("xibar", {"01", "001"}, 2, 2);
    return m;
}
const Morphism& etabar() {
    static const Morphism m = make("etabar", {"0", "001"}, 2, 2);
    return m;
}
const Morphism& identity(int alphabet_size) {
    static const Morphism id2 = make("id2", {"0", "1"}, 2, 2);
    static const Morphism id3 = make("id3", {"0", "1", "2"}, 3, 3);
    if (alphabet_size == 2) return id2;
    if (alphabet_size == 3) return id3;
    throw std::invalid_argument("identity: unsupported alphabet size");
}

const std::map<std::string, const Morphism*>& registry() {
    static const std::map<std::string, const Morphism*> reg = {
        {"f", &f()},         {"g", &g()},      {"h", &h()},       {"gtilde", &gtilde()},
        {"lambda", &lambda()}, {"mu", &mu()},  {"xi", &xi()},     {"eta", &eta()},
        {"xibar", &xibar()}, {"etabar", &etabar()}, {"id2", &identity(2)}, {"id3", &identity(3)},
    };
    return reg;
}

}  // namespace morphisms

Word fixed_point_prefix(const Morphism& m, Symbol seed, std::size_t length) {
    if (m.source_alphabet() != m.target_alphabet()) {
        throw std::invalid_argument("fixed_point_prefix: endomorphism required");
    }
    const Word& seed_image = m.image(seed);
    if (seed_image.size() < 2 || seed_image[0] != seed) {
        throw std::invalid_argument("fixed_point_prefix: seed not prolongable under " + m.name());
    }
    Word w({seed}, m.source_alphabet());
    while (w.size() < length) {
        Word next = m.apply(w);
        if (next.size() <= w.size() || !next.starts_with(w)) {
            throw std::invalid_argument("fixed_point_prefix: morphism does not extend its seed");
        }
        w = std::move(next);
    }
    return w.prefix(length);
}

MorphicStream::MorphicStream(std::string name, Grower grow)
    : name_(std::move(name)), grow_(std::move(grow)) {}

MorphicStream MorphicStream::fixed_point(const Morphism& m, Symbol seed) {
    Morphism copy = m;
    return MorphicStream(m.name() + "^w(" + std::string(1, static_cast<char>('0' + seed)) + ")",
                         [copy, seed](std::size_t len) { return fixed_point_prefix(copy, seed, len); });
}

MorphicStream MorphicStream::image_of_fixed_point(const Morphism& outer, const Morphism& m,
                                                  Symbol seed) {
    Morphism outer_copy = outer;
    Morphism inner_copy = m;
    auto grow = [outer_copy, inner_copy, seed](std::size_t len) {
        // Every outer image is nonempty, so a source prefix of length len is
        // always long enough; grow geometrically just in case.
        std::size_t source_len = len / 2 + 4;
        while (true) {
            Word image = outer_copy.apply(fixed_point_prefix(inner_copy, seed, source_len));
            if (image.size() >= len) return image.prefix(len);
            source_len *= 2;
        }
    };
    return MorphicStream(outer.name() + "(" + m.name() + "^w)", std::move(grow));
}

Word MorphicStream::prefix(std::size_t length) {
    std::scoped_lock lock(mutex_);
    if (cache_.size() < length) {
        cache_ = grow_(length);
    }
    return cache_.prefix(length);
}

Word generate(Recipe recipe, std::size_t length) {
    static MorphicStream fh = MorphicStream::image_of_fixed_point(morphisms::f(), morphisms::h(), 0);
    static MorphicStream fgh = MorphicStream::image_of_fixed_point(
        compose(morphisms::f(), morphisms::g()), morphisms::h(), 0);
    return (recipe == Recipe::FH ? fh : fgh).prefix(length);
}

Word delta(const Word& w) {
    if (w.empty()) throw std::invalid_argument("delta: empty word");
    if (w.alphabet_size() != 2) throw std::invalid_argument("delta: binary words only");
    std::vector<Symbol> out;
    out.reserve(w.size() - 1);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        out.push_back(static_cast<Symbol>((w[i] + w[i + 1]) % 2));
    }
    return Word(std::move(out), 2);
}

UnparsableBlockError::UnparsableBlockError(std::size_t position_, Word block_)
    : std::runtime_error("desubstitute: block '" + block_.str() + "' at position " +
                         std::to_string(position_) + " is not an image"),
      position(position_),
      block(std::move(block_)) {}

Desubstitution desubstitute(const Word& w, const Morphism& m) {
    if (!m.is_zero_block_code()) {
        throw std::invalid_argument("desubstitute: " + m.name() + " is not a 0-block code");
    }
    auto s = w.symbols();
    const std::size_t n = s.size();
    std::size_t first_zero = 0;
    while (first_zero < n && s[first_zero] != 0) ++first_zero;

    Desubstitution result;
    result.dropped_prefix = first_zero;
    if (first_zero == n) {
        result.dropped_suffix = 0;  // no block boundary at all; everything is prefix
        result.preimage = Word({}, m.source_alphabet());
        return result;
    }

    auto block_matches = [&](std::size_t begin, std::size_t len, const Word& image) {
        if (image.size() != len) return false;
        for (std::size_t k = 0; k < len; ++k) {
            if (s[begin + k] != image[k]) return false;
        }
        return true;
    };
    auto block_is_proper_prefix = [&](std::size_t begin, std::size_t len, const Word& image) {
        if (len >= image.size()) return false;
        for (std::size_t k = 0; k < len; ++k) {
            if (s[begin + k] != image[k]) return false;
        }
        return true;
    };

    std::vector<Symbol> preimage;
    std::size_t pos = first_zero;
    while (pos < n) {
        std::size_t end = pos + 1;
        while (end < n && s[end] != 0) ++end;
        std::size_t len = end - pos;
        bool is_last = end == n;
        int matched = -1;
        for (int a = 0; a < m.source_alphabet(); ++a) {
            if (block_matches(pos, len, m.image(static_cast<Symbol>(a)))) {
                matched = a;
                break;
            }
        }
        if (matched >= 0) {
            preimage.push_back(static_cast<Symbol>(matched));
            pos = end;
            continue;
        }
        if (is_last) {
            bool prefix_of_some = false;
            for (int a = 0; a < m.source_alphabet(); ++a) {
                if (block_is_proper_prefix(pos, len, m.image(static_cast<Symbol>(a)))) {
                    prefix_of_some = true;
                    break;
                }
            }
            if (prefix_of_some) {
                result.dropped_suffix = len;
                break;
            }
        }
        throw UnparsableBlockError(pos, w.subword(pos, len));
    }
    result.preimage = Word(std::move(preimage), m.source_alphabet());
    return result;
}

IncidenceAnalysis incidence_analysis(const Morphism& m) {
    if (m.source_alphabet() != 2 || m.target_alphabet() != 2) {
        throw std::invalid_argument("incidence_analysis: binary-to-binary morphism required");
    }
    IncidenceAnalysis out;
    for (int j = 0; j < 2; ++j) {
        for (Symbol s : m.image(static_cast<Symbol>(j)).symbols()) {
            ++out.matrix[s][j];
        }
    }
    const double a = static_cast<double>(out.matrix[0][0]);
    const double b = static_cast<double>(out.matrix[0][1]);
    const double c = static_cast<double>(out.matrix[1][0]);
    const double d = static_cast<double>(out.matrix[1][1]);
    const double disc = (a - d) * (a - d) + 4.0 * b * c;
    const double eigen = (a + d + std::sqrt(disc)) / 2.0;
    if (eigen <= 0.0) {
        throw std::invalid_argument("incidence_analysis: degenerate matrix for " + m.name());
    }
    out.dominant_eigenvalue = eigen;

    double v0, v1;
    if (b > 0.0) {
        v0 = b;
        v1 = eigen - a;
    } else if (c > 0.0) {
        v0 = eigen - d;
        v1 = c;
    } else if (a == d) {
        v0 = 0.5;  // scalar matrix: every direction is an eigenvector
        v1 = 0.5;
    } else {
        v0 = a > d ? 1.0 : 0.0;
        v1 = a > d ? 0.0 : 1.0;
    }
    const double sum = v0 + v1;
    if (!(sum > 0.0) || v0 < -1e-12 || v1 < -1e-12) {
        throw std::invalid_argument("incidence_analysis: no nonnegative dominant eigenvector");
    }
    out.frequencies = {v0 / sum, v1 / sum};
    return out;
}

std::array<double, 2> propagate_frequencies(const Morphism& m, const std::array<double, 2>& v) {
    IncidenceAnalysis inc = incidence_analysis(m);
    double w0 = static_cast<double>(inc.matrix[0][0]) * v[0] +
                static_cast<double>(inc.matrix[0][1]) * v[1];
    double w1 = static_cast<double>(inc.matrix[1][0]) * v[0] +
                static_cast<double>(inc.matrix[1][1]) * v[1];
    const double sum = w0 + w1;
    if (!(sum > 0.0)) throw std::invalid_argument("propagate_frequencies: degenerate image");
    return {w0 / sum, w1 / sum};
}

}  // namespace richwords
