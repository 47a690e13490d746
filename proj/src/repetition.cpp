#include "richwords/repetition.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdint>
#include <stdexcept>

#include "richwords/eertree.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace richwords {

namespace {

void require_nonempty(const Word& w, const char* op) {
    if (w.empty()) throw std::invalid_argument(std::string(op) + ": empty word");
}

struct SmallFraction {
    std::int64_t num;
    std::int64_t den;
};

SmallFraction to_small_fraction(const Rational& alpha) {
    mpz_class num = alpha.num();
    mpz_class den = alpha.den();
    if (!num.fits_slong_p() || !den.fits_slong_p()) {
        throw std::invalid_argument("threshold numerator/denominator out of range");
    }
    return {num.get_si(), den.get_si()};
}

// Candidate factor w[start, start+length) with period `period`.  Ordering:
// larger exponent first, then smaller start, then smaller period.
struct Candidate {
    std::size_t start = 0;
    std::size_t period = 0;
    std::size_t length = 0;

    bool valid() const { return period != 0; }

    bool better_than(const Candidate& o) const {
        if (!o.valid()) return true;
        if (!valid()) return false;
        auto lhs = static_cast<std::int64_t>(length) * static_cast<std::int64_t>(o.period);
        auto rhs = static_cast<std::int64_t>(o.length) * static_cast<std::int64_t>(period);
        if (lhs != rhs) return lhs > rhs;
        if (start != o.start) return start < o.start;
        return period < o.period;
    }
};

// Longest streak of positions k >= i with w[k] == w[k+p], precomputed right
// to left for one period p.
void fill_streaks(std::span<const Symbol> w, std::size_t p, std::vector<std::int32_t>& streak) {
    const std::size_t n = w.size();
    streak.assign(n, 0);
    if (p >= n) return;
    for (std::size_t k = n - p; k-- > 0;) {
        streak[k] = (w[k] == w[k + p]) ? streak[k + 1] + 1 : 0;
    }
}

// Best candidate for a fixed period, scanning only left-maximal runs.
Candidate best_for_period(std::span<const Symbol> w, std::size_t p,
                          std::vector<std::int32_t>& streak) {
    const std::size_t n = w.size();
    Candidate best;
    fill_streaks(w, p, streak);
    for (std::size_t i = 0; i + p <= n; ++i) {
        if (i > 0 && i + p - 1 < n && w[i - 1] == w[i - 1 + p]) continue;  // extendable left
        std::size_t len = std::min(p + static_cast<std::size_t>(i + p <= n ? streak[i] : 0), n - i);
        Candidate c{i, p, len};
        if (c.better_than(best)) best = c;
    }
    return best;
}

}  // namespace

std::size_t smallest_period(const Word& w) {
    require_nonempty(w, "smallest_period");
    auto s = w.symbols();
    const std::size_t n = s.size();
    for (std::size_t p = 1; p < n; ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < n; ++i) {
            if (s[i] != s[i + p]) {
                ok = false;
                break;
            }
        }
        if (ok) return p;
    }
    return n;
}

Rational exponent(const Word& w) {
    require_nonempty(w, "exponent");
    return Rational(static_cast<long>(w.size()), static_cast<long>(smallest_period(w)));
}

std::pair<Rational, RepetitionWitness> max_exponent_factor(const Word& w) {
    require_nonempty(w, "max_exponent_factor");
    auto s = w.symbols();
    const std::size_t n = s.size();

    Candidate best;
#ifdef _OPENMP
#pragma omp parallel
    {
        Candidate local;
        std::vector<std::int32_t> streak;
#pragma omp for schedule(dynamic, 16) nowait
        for (std::int64_t p = 1; p <= static_cast<std::int64_t>(n); ++p) {
            Candidate c = best_for_period(s, static_cast<std::size_t>(p), streak);
            if (c.better_than(local)) local = c;
        }
#pragma omp critical(richwords_max_exponent)
        {
            if (local.better_than(best)) best = local;
        }
    }
#else
    std::vector<std::int32_t> streak;
    for (std::size_t p = 1; p <= n; ++p) {
        Candidate c = best_for_period(s, p, streak);
        if (c.better_than(best)) best = c;
    }
#endif

    RepetitionWitness witness;
    witness.start = best.start;
    witness.period = best.period;
    witness.length = best.length;
    witness.exponent =
        Rational(static_cast<long>(best.length), static_cast<long>(best.period));
    assert(smallest_period(w.subword(witness.start, witness.length)) == witness.period);
    return {witness.exponent, witness};
}

bool is_alpha_free(const Word& w, const Rational& alpha) {
    if (alpha <= Rational(1)) throw std::invalid_argument("is_alpha_free: alpha must exceed 1");
    if (w.empty()) return true;
    auto [num, den] = to_small_fraction(alpha);
    auto s = w.symbols();
    const auto n = static_cast<std::int64_t>(s.size());
    // A factor of exponent >= alpha with period p needs length ceil(alpha*p),
    // so only periods with num*p <= den*n can offend.
    const std::int64_t p_max = std::min<std::int64_t>(n, (den * n) / num);

    std::atomic<bool> found{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (std::int64_t p = 1; p <= p_max; ++p) {
        if (found.load(std::memory_order_relaxed)) continue;
        std::int64_t run = 0;
        for (std::int64_t k = 0; k + p < n; ++k) {
            run = (s[static_cast<std::size_t>(k)] == s[static_cast<std::size_t>(k + p)]) ? run + 1 : 0;
            // Suffix ending at k+p with period p has length run + p.
            if (run * den >= (num - den) * p) {
                found.store(true, std::memory_order_relaxed);
                break;
            }
        }
    }
    return !found.load();
}

bool suffix_extension_safe(const Word& w, const Rational& alpha) {
    require_nonempty(w, "suffix_extension_safe");
    auto [num, den] = to_small_fraction(alpha);
    auto s = w.symbols();
    const auto n = static_cast<std::int64_t>(s.size());
    for (std::int64_t p = 1; p <= n; ++p) {
        // Shortest offending length for period p.
        std::int64_t need = (num * p + den - 1) / den;
        if (need > n) break;
        bool periodic = true;
        for (std::int64_t k = n - need; k + p < n; ++k) {
            if (s[static_cast<std::size_t>(k)] != s[static_cast<std::size_t>(k + p)]) {
                periodic = false;
                break;
            }
        }
        if (periodic) return false;
    }
    return true;
}

const Rational& good_threshold() {
    static const Rational threshold(14, 5);
    return threshold;
}

bool is_good(const Word& w) { return is_rich(w) && is_alpha_free(w, good_threshold()); }

bool contains_cube(const Word& w) {
    if (w.empty()) return false;
    return !is_alpha_free(w, Rational(3));
}

std::optional<Word> find_cube(const Word& w) {
    auto s = w.symbols();
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t p = 1; i + 3 * p <= n; ++p) {
            bool cube = true;
            for (std::size_t k = i; k + p < i + 3 * p; ++k) {
                if (s[k] != s[k + p]) {
                    cube = false;
                    break;
                }
            }
            if (cube) return w.subword(i, 3 * p);
        }
    }
    return std::nullopt;
}

std::vector<Rational> attained_exponents(const Word& w, const Rational& min_exponent) {
    if (w.empty()) return {};
    auto s = w.symbols();
    const std::size_t n = s.size();
    auto [num, den] = to_small_fraction(min_exponent);

    std::vector<std::pair<std::int64_t, std::int64_t>> raw;  // (length, period)
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<std::pair<std::int64_t, std::int64_t>> local;
        std::vector<std::int32_t> streak;
#pragma omp for schedule(dynamic, 16) nowait
        for (std::int64_t p = 1; p <= static_cast<std::int64_t>(n); ++p) {
            fill_streaks(s, static_cast<std::size_t>(p), streak);
            for (std::size_t i = 0; i + p <= n; ++i) {
                if (i > 0 && w.symbols()[i - 1] == w.symbols()[i - 1 + p]) continue;
                std::int64_t len = std::min<std::int64_t>(
                    p + (i + p <= n ? streak[i] : 0), static_cast<std::int64_t>(n - i));
                if (len * den >= num * p) local.emplace_back(len, p);
            }
        }
#pragma omp critical(richwords_attained)
        raw.insert(raw.end(), local.begin(), local.end());
    }
#else
    std::vector<std::int32_t> streak;
    for (std::size_t p = 1; p <= n; ++p) {
        fill_streaks(s, p, streak);
        for (std::size_t i = 0; i + p <= n; ++i) {
            if (i > 0 && s[i - 1] == s[i - 1 + p]) continue;
            std::int64_t len =
                std::min<std::int64_t>(static_cast<std::int64_t>(p) + (i + p <= n ? streak[i] : 0),
                                       static_cast<std::int64_t>(n - i));
            if (len * den >= num * static_cast<std::int64_t>(p)) {
                raw.emplace_back(len, static_cast<std::int64_t>(p));
            }
        }
    }
#endif

    std::vector<Rational> out;
    out.reserve(raw.size());
    for (auto [len, p] : raw) out.push_back(Rational(len, p));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace richwords
