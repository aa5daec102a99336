#ifndef ITMLAB_SUBSTITUTION_HPP
#define ITMLAB_SUBSTITUTION_HPP

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "itmlab/errors.hpp"
#include "itmlab/ksequence.hpp"

namespace itmlab {

// The substitution family on the alphabet {1,2,3}:
//   1 -> 2,   2 -> 3 1^k,   3 -> 3 1^(k-1)
// Words are plain strings over '1' '2' '3'.  Every image of 3 starts with 3,
// which is what makes chained prefixes stable.
std::string apply_substitution(long long k, std::string_view w,
                               std::size_t length_cap = (std::size_t{1} << 26));

class chain_exhausted : public error {
public:
    chain_exhausted(std::size_t achieved, std::size_t requested)
        : error("chain_prefix: prefix too short (achieved length " + std::to_string(achieved) +
                " < requested " + std::to_string(requested) + ")"),
          achieved_length(achieved) {}
    std::size_t achieved_length;
};

struct ChainPrefix {
    std::string word;
    std::size_t symbols_used;  // composition depth actually applied
};

// The composed image of "3" under the first symbols of ks, using the fewest
// symbols whose image reaches min_len.  Throws chain_exhausted when even the
// whole prefix falls short.
ChainPrefix chain_prefix(const KSequence& ks, std::size_t min_len);

// Letter-count matrix of one substitution: column a counts the letters of
// the image of a, so M_k = [[0,k,k-1],[1,0,0],[0,1,1]].
using CountMatrix = std::array<std::array<mpz_class, 3>, 3>;
using CountVector = std::array<mpz_class, 3>;

CountMatrix substitution_matrix(long long k);
CountMatrix matrix_mul(const CountMatrix& a, const CountMatrix& b);

struct AbelianProduct {
    CountMatrix matrix;  // M_{k_0} * ... * M_{k_n}
    CountVector counts;  // matrix * e_3 = letter counts of the chained image of 3
};

AbelianProduct abelian_product(const KSequence& ks);

// counts / total as exact rationals summing to 1
std::array<mpq_class, 3> letter_frequencies(const KSequence& ks);

// char(M)(x) written as c3 x^3 + c2 x^2 + c1 x + c0 (c3 = -1 for our 3x3s)
std::array<mpz_class, 4> characteristic_cubic(const CountMatrix& m);

// p(n) for n = 1..n_max: the number of distinct length-n factors of w.
// Suffix-automaton based, O(|w|).  Requires |w| >= 4 n_max: a prefix only
// gives lower bounds on the complexity of the infinite word, so we demand a
// margin and still report the counts as lower bounds.
std::vector<std::size_t> subword_complexity(std::string_view w, std::size_t n_max);

struct AdicCheck {
    long long max_k = 0;
    std::size_t max_run_of_ones = 0;
    bool bounded_prefix = false;  // heuristic: the asymptotic criterion is undecidable here
    long long k_threshold = 0;
    std::size_t run_threshold = 0;
};

AdicCheck adic_prefix_check(const KSequence& ks, long long k_threshold = 0,
                            std::size_t run_threshold = 0);

}  // namespace itmlab

#endif
