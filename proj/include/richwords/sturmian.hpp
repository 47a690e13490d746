#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "richwords/rational.hpp"
#include "richwords/word.hpp"

namespace richwords {

// Continued fraction [d0; d1, d2, ...] with d0 = 0 and d_i >= 1, stored as an
// initial segment plus an eventually periodic tail.
class ContinuedFraction {
public:
    ContinuedFraction(std::vector<int> initial_digits, std::vector<int> periodic_tail);

    // [0; 4, 2, 2, 2, ...]: the slope (3 - sqrt(2))/7 of the complemented
    // difference word of the FGH word; its standard words classify that
    // word's repetitions.
    static const ContinuedFraction& fgh_slope();

    // [0; 1, 1, 1, ...]: golden-ratio slope, Fibonacci convergents.
    static const ContinuedFraction& golden();

    int digit(std::size_t i) const;
    std::string str() const;  // "[0;4,(2)]"

private:
    std::vector<int> initial_;
    std::vector<int> periodic_;
};

// Convergents p_n/q_n for n = -2..n_max, exact:
//   p_{-2}=0, p_{-1}=1, p_n = d_n p_{n-1} + p_{n-2}
//   q_{-2}=1, q_{-1}=0, q_n = d_n q_{n-1} + q_{n-2}
class ConvergentTable {
public:
    ConvergentTable(const ContinuedFraction& cf, std::size_t n_max);

    long n_max() const noexcept { return n_max_; }
    const mpz_class& p(long n) const;
    const mpz_class& q(long n) const;
    const ContinuedFraction& fraction() const noexcept { return cf_; }

    // q_{n-1}/q_n == [0; d_n, d_{n-1}, ..., d_1], exactly.
    bool reversed_tail_identity_holds(long n) const;

private:
    ContinuedFraction cf_;
    long n_max_;
    std::vector<mpz_class> ps_, qs_;  // index n + 2
};

ConvergentTable convergents(const ContinuedFraction& cf, std::size_t n_max);

// s_0 = 0, s_1 = 0^{d1-1} 1, s_n = s_{n-1}^{d_n} s_{n-2}; |s_n| = q_n.
Word standard_word(const ContinuedFraction& cf, std::size_t n);

// s_{n,t} = s_{n-1}^t s_{n-2} for n >= 2 and 1 <= t < d_n.
Word semi_standard_word(const ContinuedFraction& cf, std::size_t n, int t);

// First L symbols of the characteristic word c_alpha = lim s_n.
Word characteristic_prefix(const ContinuedFraction& cf, std::size_t length);

// Exponent ladder 2 + (q_{k-1} - 1)/(q_{k-2} + q_{k-1}) for k >= 2, exact.
// These are the exponents attained by the repetitions of the FGH word; the
// ladder increases to 2 + sqrt(2)/2.
Rational repetition_exponent(const ConvergentTable& table, std::size_t k);

struct QIdentityRow {
    long k = 0;
    long identity_value = 0;  // q_{k-1}^2 - q_k q_{k-2}, expected 7*(-1)^k
    bool identity_ok = false;
    bool growth_inequality_ok = false;  // 2 q_{k-1} > q_{k-1}^2 - q_k q_{k-2}
};

struct QIdentityReport {
    std::vector<QIdentityRow> rows;
    bool all_ok = false;
};

// Checks q_{k-1}^2 - q_k q_{k-2} == 7*(-1)^k for 2 <= k <= k_max, plus the
// inequality that makes the exponent ladder strictly increasing.
QIdentityReport verify_q_identity(const ConvergentTable& table, std::size_t k_max);

// Maximum length of a factor of w (of length >= p) having p as a period.
std::size_t longest_factor_with_period(const Word& w, std::size_t p);

struct DeltaTransferReport {
    std::size_t repetitions_checked = 0;
    // Repetition starts whose difference-word image is broken or whose
    // period block has an odd number of 1s; empty on success.
    std::vector<std::size_t> violations;
    bool ok() const { return violations.empty(); }
};

// For every repetition (period block repeated e >= 2 times plus a nonempty
// tail) in binary x, checks that delta(x) contains the transferred
// repetition and that its period block has an even number of 1s.  A tail of
// length 1 transfers to an empty tail.
DeltaTransferReport delta_repetition_transfer(const Word& x);

struct RoteRow {
    std::size_t n = 0;
    std::size_t complexity = 0;
    bool complexity_ok = false;
    bool complement_closed = false;
};

struct RoteReport {
    bool strict = false;  // |w| >= 50 * n_max: assert C(n) == 2n, else only <=
    std::vector<RoteRow> rows;
    bool all_ok = false;
};

// Complementary-symmetric-Rote checks on a binary word: factor complexity
// C(n) == 2n and complement-closure of the factor set, for n = 1..n_max.
// OpenMP-parallel over n.
RoteReport rote_check(const Word& w, std::size_t n_max);

struct RootClassificationEntry {
    Word root;
    std::size_t length = 0;
    enum class Kind { Standard, SemiStandard, Unclassified } kind = Kind::Unclassified;
    long k = -1;  // index of the matching s_k / s_{k,1}
};

struct RootClassificationReport {
    std::vector<RootClassificationEntry> roots;  // primitive square roots of w
    bool all_classified = false;
    bool parity_ok = false;          // zeros odd in s_k, even in s_{k,1}
    bool exponent_bound_ok = false;  // max factor exponent < 3 + sqrt(2)
    Rational max_exponent = Rational(1);
};

// Classifies every primitive square root occurring in a prefix of c_alpha as
// a conjugate of a standard or semi-standard word, and checks the 0-count
// parity dichotomy and the exponent bound.  Requires w to be a prefix of
// c_alpha for cf.
RootClassificationReport repetition_root_classification(const Word& w, const ContinuedFraction& cf);

}  // namespace richwords
