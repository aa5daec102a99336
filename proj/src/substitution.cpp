#include "itmlab/substitution.hpp"

#include <algorithm>
#include <cmath>

namespace itmlab {

std::string apply_substitution(long long k, std::string_view w, std::size_t length_cap) {
    if (k < 1) throw error("apply_substitution: k must be >= 1");
    // |chi_k(1)| = 1, |chi_k(2)| = k+1, |chi_k(3)| = k
    std::size_t len = 0;
    for (char c : w) {
        switch (c) {
            case '1': len += 1; break;
            case '2': len += static_cast<std::size_t>(k) + 1; break;
            case '3': len += static_cast<std::size_t>(k); break;
            default: throw error("apply_substitution: alphabet is {1,2,3}");
        }
        if (len > length_cap) throw error("apply_substitution: image longer than the cap");
    }
    std::string out;
    out.reserve(len);
    for (char c : w) {
        if (c == '1') {
            out.push_back('2');
        } else {
            out.push_back('3');
            out.append(static_cast<std::size_t>(c == '2' ? k : k - 1), '1');
        }
    }
    return out;
}

CountMatrix substitution_matrix(long long k) {
    if (k < 1) throw error("substitution_matrix: k must be >= 1");
    const mpz_class kz(static_cast<long>(k));
    return CountMatrix{{{0, kz, kz - 1}, {1, 0, 0}, {0, 1, 1}}};
}

CountMatrix matrix_mul(const CountMatrix& a, const CountMatrix& b) {
    CountMatrix r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            mpz_class s = 0;
            for (int t = 0; t < 3; ++t)
                s += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] *
                     b[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
            r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(s);
        }
    return r;
}

AbelianProduct abelian_product(const KSequence& ks) {
    if (ks.symbols.empty()) throw error("abelian_product: empty prefix");
    CountMatrix m = substitution_matrix(ks.symbols[0]);
    for (std::size_t i = 1; i < ks.symbols.size(); ++i)
        m = matrix_mul(m, substitution_matrix(ks.symbols[i]));
    AbelianProduct out;
    out.counts = {m[0][2], m[1][2], m[2][2]};
    out.matrix = std::move(m);
    return out;
}

std::array<mpq_class, 3> letter_frequencies(const KSequence& ks) {
    const AbelianProduct p = abelian_product(ks);
    const mpz_class total = p.counts[0] + p.counts[1] + p.counts[2];
    if (total == 0) throw error("letter_frequencies: zero total count");
    std::array<mpq_class, 3> out = {mpq_class(p.counts[0], total), mpq_class(p.counts[1], total),
                                    mpq_class(p.counts[2], total)};
    for (auto& q : out) q.canonicalize();
    return out;
}

ChainPrefix chain_prefix(const KSequence& ks, std::size_t min_len) {
    if (min_len == 0) throw error("chain_prefix: min_len must be >= 1");
    if (ks.symbols.empty()) throw chain_exhausted(0, min_len);
    // find the least depth whose image length reaches min_len, by running
    // the count matrices (cheap) before materializing anything
    CountMatrix m = substitution_matrix(ks.symbols[0]);
    std::size_t use = 0;
    mpz_class len = m[0][2] + m[1][2] + m[2][2];
    const mpz_class want(static_cast<unsigned long>(min_len));
    while (len < want) {
        if (use + 1 >= ks.symbols.size()) {
            const std::size_t achieved =
                len.fits_ulong_p() ? static_cast<std::size_t>(len.get_ui()) : min_len;
            throw chain_exhausted(achieved, min_len);
        }
        ++use;
        m = matrix_mul(m, substitution_matrix(ks.symbols[use]));
        len = m[0][2] + m[1][2] + m[2][2];
    }
    std::string w = "3";
    for (std::size_t i = use + 1; i-- > 0;) w = apply_substitution(ks.symbols[i], w);
    return ChainPrefix{std::move(w), use + 1};
}

std::array<mpz_class, 4> characteristic_cubic(const CountMatrix& m) {
    // det(M - xI) = -x^3 + tr x^2 - (sum of principal 2x2 minors) x + det
    const mpz_class tr = m[0][0] + m[1][1] + m[2][2];
    const mpz_class minors = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) +
                             (m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
                             (m[0][0] * m[1][1] - m[0][1] * m[1][0]);
    const mpz_class det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                          m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                          m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return {det, -minors, tr, mpz_class(-1)};
}

namespace {

// standard suffix automaton over a 3-letter alphabet
class SuffixAutomaton {
public:
    explicit SuffixAutomaton(std::string_view w) {
        states_.reserve(2 * w.size() + 2);
        states_.push_back({0, -1, {-1, -1, -1}});
        int last = 0;
        for (char c : w) last = extend(last, c - '1');
    }

    // number of distinct factors of each length 1..n_max
    std::vector<std::size_t> factor_counts(std::size_t n_max) const {
        std::vector<long long> diff(n_max + 2, 0);
        for (std::size_t i = 1; i < states_.size(); ++i) {
            const long long lo = states_[static_cast<std::size_t>(states_[i].link)].len + 1;
            const long long hi = states_[i].len;
            if (lo > static_cast<long long>(n_max)) continue;
            diff[static_cast<std::size_t>(lo)] += 1;
            const long long top = std::min<long long>(hi, static_cast<long long>(n_max));
            diff[static_cast<std::size_t>(top) + 1] -= 1;
        }
        std::vector<std::size_t> out(n_max);
        long long run = 0;
        for (std::size_t n = 1; n <= n_max; ++n) {
            run += diff[n];
            out[n - 1] = static_cast<std::size_t>(run);
        }
        return out;
    }

private:
    struct State {
        long long len;
        int link;
        std::array<int, 3> next;
    };

    int extend(int last, int c) {
        const int cur = static_cast<int>(states_.size());
        states_.push_back({states_[static_cast<std::size_t>(last)].len + 1, -1, {-1, -1, -1}});
        int p = last;
        while (p != -1 && states_[static_cast<std::size_t>(p)].next[static_cast<std::size_t>(c)] == -1) {
            states_[static_cast<std::size_t>(p)].next[static_cast<std::size_t>(c)] = cur;
            p = states_[static_cast<std::size_t>(p)].link;
        }
        if (p == -1) {
            states_[static_cast<std::size_t>(cur)].link = 0;
        } else {
            const int q = states_[static_cast<std::size_t>(p)].next[static_cast<std::size_t>(c)];
            if (states_[static_cast<std::size_t>(p)].len + 1 == states_[static_cast<std::size_t>(q)].len) {
                states_[static_cast<std::size_t>(cur)].link = q;
            } else {
                const int clone = static_cast<int>(states_.size());
                states_.push_back(states_[static_cast<std::size_t>(q)]);
                states_[static_cast<std::size_t>(clone)].len =
                    states_[static_cast<std::size_t>(p)].len + 1;
                while (p != -1 &&
                       states_[static_cast<std::size_t>(p)].next[static_cast<std::size_t>(c)] == q) {
                    states_[static_cast<std::size_t>(p)].next[static_cast<std::size_t>(c)] = clone;
                    p = states_[static_cast<std::size_t>(p)].link;
                }
                states_[static_cast<std::size_t>(q)].link = clone;
                states_[static_cast<std::size_t>(cur)].link = clone;
            }
        }
        return cur;
    }

    std::vector<State> states_;
};

}  // namespace

std::vector<std::size_t> subword_complexity(std::string_view w, std::size_t n_max) {
    if (n_max == 0) throw error("subword_complexity: n_max must be >= 1");
    if (w.size() < 4 * n_max)
        throw error("subword_complexity: need |w| >= 4*n_max (counts are prefix lower bounds)");
    for (char c : w)
        if (c < '1' || c > '3') throw error("subword_complexity: alphabet is {1,2,3}");
    return SuffixAutomaton(w).factor_counts(n_max);
}

AdicCheck adic_prefix_check(const KSequence& ks, long long k_threshold,
                            std::size_t run_threshold) {
    AdicCheck out;
    const std::size_t n = ks.symbols.size();
    const auto isq = static_cast<std::size_t>(std::max(4.0, std::sqrt(static_cast<double>(n))));
    out.k_threshold = k_threshold > 0 ? k_threshold : static_cast<long long>(isq);
    out.run_threshold = run_threshold > 0 ? run_threshold : isq;
    std::size_t run = 0;
    for (long long k : ks.symbols) {
        out.max_k = std::max(out.max_k, k);
        if (k == 1) {
            ++run;
            out.max_run_of_ones = std::max(out.max_run_of_ones, run);
        } else {
            run = 0;
        }
    }
    out.bounded_prefix = out.max_k <= out.k_threshold && out.max_run_of_ones <= out.run_threshold;
    return out;
}

}  // namespace itmlab
