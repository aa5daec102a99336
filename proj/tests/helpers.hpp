#ifndef ITMLAB_TESTS_HELPERS_HPP
#define ITMLAB_TESTS_HELPERS_HPP

#include <array>
#include <cmath>
#include <string>

#include "itmlab/rng.hpp"
#include "itmlab/scalar.hpp"

namespace itmlab::testing {

// Independent oracle for the roots of x^3 - x^2 - k x + 1: closed-form
// trigonometric solution of the depressed cubic, pure double arithmetic.
// Deliberately shares no code with RootBracket/pk_roots.
inline std::array<double, 3> cubic_roots_oracle(double k) {
    const double p = -k - 1.0 / 3.0;
    const double q = 25.0 / 27.0 - k / 3.0;
    const double m = 2.0 * std::sqrt(-p / 3.0);
    double c = 3.0 * q / (p * m);
    c = std::max(-1.0, std::min(1.0, c));
    const double theta = std::acos(c);
    std::array<double, 3> t;
    for (int j = 0; j < 3; ++j)
        t[static_cast<size_t>(j)] =
            m * std::cos((theta - 2.0 * M_PI * j) / 3.0) + 1.0 / 3.0;
    std::sort(t.begin(), t.end());
    return t;  // ascending: lower, middle, upper
}

inline mpq_class random_rational(SplitMix64& rng, unsigned long max_den) {
    const unsigned long den = 1 + rng.below(max_den);
    const unsigned long num = rng.below(den + 1);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

// uniform dyadic rational in (lo, hi), 40 random bits
inline mpq_class random_in(SplitMix64& rng, const mpq_class& lo, const mpq_class& hi) {
    mpq_class t(static_cast<unsigned long>(rng.next() >> 24), 1099511627776UL);  // 2^40
    t.canonicalize();
    mpq_class out = lo + (hi - lo) * t;
    out.canonicalize();
    return out;
}

}  // namespace itmlab::testing

#endif
