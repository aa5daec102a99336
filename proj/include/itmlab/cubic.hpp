#ifndef ITMLAB_CUBIC_HPP
#define ITMLAB_CUBIC_HPP

#include <gmpxx.h>

#include "itmlab/scalar.hpp"

namespace itmlab {

// The cubic x^3 - x^2 - k x + 1.  Its three real roots (for k >= 2)
// control everything in this project: the middle root r_k in (1/(k+1), 1/k]
// is the fixed-point parameter of the Gauss map, the top root
// rbar_k in (1, k+1) is the growth rate of the substitution words.
struct CubicPk {
    long long k;

    mpq_class eval(const mpq_class& x) const {
        return x * x * x - x * x - mpq_of(k) * x + 1;
    }
    Scalar eval(const Scalar& x) const {
        return x * x * x - x * x - Scalar(mpq_of(k)) * x + Scalar(1);
    }
};

Scalar poly_eval(const CubicPk& p, const Scalar& x);

// Isolating bracket (lo, hi) for one simple root: eval(lo) * eval(hi) < 0,
// refined by bisection, each halving preserving the sign change.  The k = 1
// double root is stored as an exact point.
class RootBracket {
public:
    RootBracket(CubicPk p, mpq_class lo, mpq_class hi);
    static RootBracket exact_point(CubicPk p, mpq_class value);

    const CubicPk& cubic() const { return p_; }
    bool is_exact_point() const { return exact_; }
    const mpq_class& lo() const { return lo_; }
    const mpq_class& hi() const { return hi_; }
    int sign_at_lo() const { return sign_lo_; }
    mpq_class width() const { return hi_ - lo_; }

    void refine_once();
    void refine_below(const mpq_class& tol);  // width <= tol

    double mid_double() const { return 0.5 * (lo_.get_d() + hi_.get_d()); }
    FloatInterval to_interval(mpfr_prec_t prec) const {
        return FloatInterval::from_rational_bounds(lo_, hi_, prec);
    }

private:
    explicit RootBracket(CubicPk p) : p_(p) {}

    CubicPk p_;
    mpq_class lo_, hi_;
    int sign_lo_ = 0;
    bool exact_ = false;
};

struct PkRoots {
    RootBracket lower;   // in (-k-1, 0)
    RootBracket middle;  // r_k in (1/(k+1), 1/k]
    RootBracket upper;   // rbar_k in (1, k+1)
};

// Certified brackets of width <= tol for the three roots; k = 1 returns the
// exact points (-1, 1, 1) since x^3 - x^2 - x + 1 = (x-1)^2 (x+1).
PkRoots pk_roots(long long k, const mpq_class& tol);

// r_k as an exact element of Q(r_k); k >= 2
Scalar middle_root(long long k);

}  // namespace itmlab

#endif
