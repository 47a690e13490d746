#include "richwords/sturmian.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "richwords/morphism.hpp"
#include "richwords/repetition.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace richwords {

ContinuedFraction::ContinuedFraction(std::vector<int> initial_digits, std::vector<int> periodic_tail)
    : initial_(std::move(initial_digits)), periodic_(std::move(periodic_tail)) {
    if (initial_.empty() || initial_[0] != 0) {
        throw std::invalid_argument("continued fraction: d0 must be 0");
    }
    for (std::size_t i = 1; i < initial_.size(); ++i) {
        if (initial_[i] < 1) throw std::invalid_argument("continued fraction: digits must be >= 1");
    }
    for (int d : periodic_) {
        if (d < 1) throw std::invalid_argument("continued fraction: digits must be >= 1");
    }
    if (initial_.size() == 1 && periodic_.empty()) {
        throw std::invalid_argument("continued fraction: need at least one digit after d0");
    }
}

const ContinuedFraction& ContinuedFraction::fgh_slope() {
    static const ContinuedFraction cf({0, 4}, {2});
    return cf;
}

const ContinuedFraction& ContinuedFraction::golden() {
    static const ContinuedFraction cf({0}, {1});
    return cf;
}

int ContinuedFraction::digit(std::size_t i) const {
    if (i < initial_.size()) return initial_[i];
    if (periodic_.empty()) {
        throw std::out_of_range("continued fraction: digit beyond finite expansion");
    }
    return periodic_[(i - initial_.size()) % periodic_.size()];
}

std::string ContinuedFraction::str() const {
    std::string out = "[0";
    for (std::size_t i = 1; i < initial_.size(); ++i) {
        out += (i == 1 ? ";" : ",");
        out += std::to_string(initial_[i]);
    }
    if (!periodic_.empty()) {
        out += initial_.size() > 1 ? "," : ";";
        out += "(";
        for (std::size_t i = 0; i < periodic_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(periodic_[i]);
        }
        out += ")";
    }
    out += "]";
    return out;
}

ConvergentTable::ConvergentTable(const ContinuedFraction& cf, std::size_t n_max)
    : cf_(cf), n_max_(static_cast<long>(n_max)) {
    ps_ = {0, 1};  // p_{-2}, p_{-1}
    qs_ = {1, 0};  // q_{-2}, q_{-1}
    for (long n = 0; n <= n_max_; ++n) {
        mpz_class d = cf_.digit(static_cast<std::size_t>(n));
        ps_.push_back(d * ps_[n + 1] + ps_[n]);
        qs_.push_back(d * qs_[n + 1] + qs_[n]);
    }
}

const mpz_class& ConvergentTable::p(long n) const {
    if (n < -2 || n > n_max_) throw std::out_of_range("convergents: index out of range");
    return ps_[static_cast<std::size_t>(n + 2)];
}

const mpz_class& ConvergentTable::q(long n) const {
    if (n < -2 || n > n_max_) throw std::out_of_range("convergents: index out of range");
    return qs_[static_cast<std::size_t>(n + 2)];
}

bool ConvergentTable::reversed_tail_identity_holds(long n) const {
    if (n < 1 || n > n_max_) throw std::out_of_range("convergents: index out of range");
    // Evaluate [0; d_n, d_{n-1}, ..., d_1] exactly.
    mpq_class value = 0;
    for (long i = 1; i <= n; ++i) {
        value = 1 / (mpq_class(cf_.digit(static_cast<std::size_t>(i))) + value);
    }
    value.canonicalize();
    mpq_class expected(q(n - 1), q(n));
    expected.canonicalize();
    return value == expected;
}

ConvergentTable convergents(const ContinuedFraction& cf, std::size_t n_max) {
    return ConvergentTable(cf, n_max);
}

Word standard_word(const ContinuedFraction& cf, std::size_t n) {
    if (n == 0) return Word::parse("0", 2);
    int d1 = cf.digit(1);
    Word s1(std::vector<Symbol>(static_cast<std::size_t>(d1 - 1), 0), 2);
    s1 = s1.append(1);
    if (n == 1) return s1;
    Word prev = Word::parse("0", 2);  // s_0
    Word cur = s1;
    for (std::size_t k = 2; k <= n; ++k) {
        Word next = cur.repeat(static_cast<std::size_t>(cf.digit(k))).concat(prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Word semi_standard_word(const ContinuedFraction& cf, std::size_t n, int t) {
    if (n < 2) throw std::out_of_range("semi-standard words need n >= 2");
    if (t < 1 || t >= cf.digit(n)) {
        throw std::out_of_range("semi-standard words need 1 <= t < d_n");
    }
    return standard_word(cf, n - 1).repeat(static_cast<std::size_t>(t))
        .concat(standard_word(cf, n - 2));
}

Word characteristic_prefix(const ContinuedFraction& cf, std::size_t length) {
    if (length == 0) return Word({}, 2);
    // s_n is a prefix of s_{n+1} for n >= 1, so grow until long enough.
    Word prev = standard_word(cf, 0);
    Word cur = standard_word(cf, 1);
    std::size_t k = 2;
    while (cur.size() < length) {
        Word next = cur.repeat(static_cast<std::size_t>(cf.digit(k))).concat(prev);
        prev = std::move(cur);
        cur = std::move(next);
        ++k;
    }
    return cur.prefix(length);
}

Rational repetition_exponent(const ConvergentTable& table, std::size_t k) {
    if (k < 2 || static_cast<long>(k) - 1 > table.n_max()) {
        throw std::out_of_range("repetition_exponent: table does not cover k-1");
    }
    long n = static_cast<long>(k);
    mpz_class num = table.q(n - 1) - 1;
    mpz_class den = table.q(n - 2) + table.q(n - 1);
    return Rational(2) + Rational(num, den);
}

QIdentityReport verify_q_identity(const ConvergentTable& table, std::size_t k_max) {
    QIdentityReport report;
    report.all_ok = true;
    for (long k = 2; k <= static_cast<long>(k_max); ++k) {
        QIdentityRow row;
        row.k = k;
        mpz_class value = table.q(k - 1) * table.q(k - 1) - table.q(k) * table.q(k - 2);
        mpz_class expected = (k % 2 == 0) ? 7 : -7;
        row.identity_ok = value == expected;
        row.identity_value = static_cast<long>(value.get_si());
        row.growth_inequality_ok = 2 * table.q(k - 1) > value;
        report.all_ok = report.all_ok && row.identity_ok && row.growth_inequality_ok;
        report.rows.push_back(row);
    }
    return report;
}

std::size_t longest_factor_with_period(const Word& w, std::size_t p) {
    if (p < 1 || p > w.size()) {
        throw std::invalid_argument("longest_factor_with_period: need 1 <= p <= |w|");
    }
    auto s = w.symbols();
    const std::size_t n = s.size();
    std::size_t best = 0;
    std::size_t run = 0;
    for (std::size_t k = 0; k + p < n; ++k) {
        run = (s[k] == s[k + p]) ? run + 1 : 0;
        best = std::max(best, run);
    }
    return best + p;  // a bare length-p factor is periodic vacuously
}

DeltaTransferReport delta_repetition_transfer(const Word& x) {
    if (x.size() < 3) throw std::invalid_argument("delta_repetition_transfer: need |x| >= 3");
    DeltaTransferReport report;
    Word y = delta(x);
    auto xs = x.symbols();
    auto ys = y.symbols();
    const std::size_t n = xs.size();
    for (std::size_t p = 1; p <= (n - 1) / 2; ++p) {
        for (std::size_t i = 0; i + 2 * p < n; ++i) {
            // Longest stretch from i with period p.
            std::size_t len = p;
            while (i + len < n && xs[i + len] == xs[i + len - p]) ++len;
            // A repetition with e >= 2 full periods and a nonempty tail needs
            // length >= 2p + 1; the check for the longest stretch covers every
            // shorter (e, t) decomposition.
            if (len < 2 * p + 1) continue;
            ++report.repetitions_checked;
            bool ok = true;
            // The difference word must carry the repetition, one symbol short.
            for (std::size_t k = i; k + p < i + len - 1; ++k) {
                if (ys[k] != ys[k + p]) {
                    ok = false;
                    break;
                }
            }
            // Period block of the transferred repetition has an even 1-count.
            int ones = 0;
            for (std::size_t k = i; k < i + p; ++k) ones += ys[k];
            if (ones % 2 != 0) ok = false;
            if (!ok) report.violations.push_back(i);
        }
    }
    return report;
}

RoteReport rote_check(const Word& w, std::size_t n_max) {
    if (w.alphabet_size() != 2) throw std::invalid_argument("rote_check: binary words only");
    if (n_max == 0 || n_max > 62) throw std::invalid_argument("rote_check: need 1 <= n_max <= 62");
    RoteReport report;
    report.strict = w.size() >= 50 * n_max;
    report.rows.resize(n_max);
    auto s = w.symbols();
    const std::size_t len = s.size();

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t ni = 1; ni <= static_cast<std::int64_t>(n_max); ++ni) {
        const auto n = static_cast<std::size_t>(ni);
        RoteRow row;
        row.n = n;
        if (n > len) {
            row.complexity = 0;
            row.complexity_ok = false;
            row.complement_closed = true;
        } else {
            const std::uint64_t mask = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
            std::unordered_set<std::uint64_t> factors;
            factors.reserve(4 * n);
            std::uint64_t code = 0;
            for (std::size_t i = 0; i < len; ++i) {
                code = ((code << 1) | s[i]) & mask;
                if (i + 1 >= n) factors.insert(code);
            }
            row.complexity = factors.size();
            row.complexity_ok = report.strict ? row.complexity == 2 * n : row.complexity <= 2 * n;
            row.complement_closed = true;
            for (std::uint64_t f : factors) {
                if (!factors.count(~f & mask)) {
                    row.complement_closed = false;
                    break;
                }
            }
        }
        report.rows[n - 1] = row;
    }
    report.all_ok = true;
    for (const RoteRow& row : report.rows) {
        report.all_ok = report.all_ok && row.complexity_ok && row.complement_closed;
    }
    return report;
}

RootClassificationReport repetition_root_classification(const Word& w, const ContinuedFraction& cf) {
    if (characteristic_prefix(cf, w.size()) != w) {
        throw std::invalid_argument(
            "repetition_root_classification: word is not a characteristic-word prefix");
    }
    RootClassificationReport report;
    auto s = w.symbols();
    const std::size_t n = s.size();

    // Collect the distinct roots of all square factors: a square of period p
    // starts at i iff positions i..i+p-1 all match their p-shifted partner.
    std::set<Word> roots;
    for (std::size_t p = 1; 2 * p <= n; ++p) {
        std::size_t run = 0;
        for (std::size_t k = 0; k + p < n; ++k) {
            run = (s[k] == s[k + p]) ? run + 1 : 0;
            if (run >= p) roots.insert(w.subword(k + 1 - p, p));
        }
    }
    std::set<Word> primitive;
    for (const Word& z : roots) {
        std::size_t sp = smallest_period(z);
        if (sp == z.size() || z.size() % sp != 0) primitive.insert(z);
    }

    // Length -> (kind, k) lookup from the convergents.
    ConvergentTable table(cf, 40);
    std::map<std::size_t, std::pair<RootClassificationEntry::Kind, long>> by_length;
    for (long k = 0; k <= 40; ++k) {
        if (table.q(k) > static_cast<long>(n)) break;
        by_length[static_cast<std::size_t>(table.q(k).get_si())] = {
            RootClassificationEntry::Kind::Standard, k};
    }
    for (long k = 2; k <= 40; ++k) {
        mpz_class len = table.q(k - 2) + table.q(k - 1);
        if (len > static_cast<long>(n)) break;
        by_length[static_cast<std::size_t>(len.get_si())] = {
            RootClassificationEntry::Kind::SemiStandard, k};
    }

    report.all_classified = true;
    for (const Word& z : primitive) {
        RootClassificationEntry entry;
        entry.root = z;
        entry.length = z.size();
        auto it = by_length.find(z.size());
        if (it != by_length.end()) {
            Word target = it->second.first == RootClassificationEntry::Kind::Standard
                              ? standard_word(cf, static_cast<std::size_t>(it->second.second))
                              : semi_standard_word(cf, static_cast<std::size_t>(it->second.second), 1);
            // Conjugacy by doubling: z is a rotation of target iff it occurs
            // in target.target.
            if (target.concat(target).contains(z)) {
                entry.kind = it->second.first;
                entry.k = it->second.second;
            }
        }
        if (entry.kind == RootClassificationEntry::Kind::Unclassified) report.all_classified = false;
        report.roots.push_back(entry);
    }

    // 0-count parity dichotomy: odd in s_k, even in s_{k,1}.
    report.parity_ok = true;
    for (std::size_t k = 0; k <= 12; ++k) {
        Word sk = standard_word(cf, k);
        std::size_t zeros = 0;
        for (Symbol c : sk.symbols()) zeros += c == 0;
        if (zeros % 2 != 1) report.parity_ok = false;
    }
    for (std::size_t k = 2; k <= 12; ++k) {
        Word skt = semi_standard_word(cf, k, 1);
        std::size_t zeros = 0;
        for (Symbol c : skt.symbols()) zeros += c == 0;
        if (zeros % 2 != 0) report.parity_ok = false;
    }

    auto [max_exp, witness] = max_exponent_factor(w);
    report.max_exponent = max_exp;
    report.exponent_bound_ok = compare_to_sqrt2_combination(max_exp, Rational(3), Rational(1)) < 0;
    return report;
}

}  // namespace richwords
