#ifndef ITMLAB_DIMENSION_HPP
#define ITMLAB_DIMENSION_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "itmlab/bigfloat.hpp"
#include "itmlab/ksequence.hpp"
#include "itmlab/scalar.hpp"

namespace itmlab {

// The interval-count recursion behind the box-dimension bound: l tracks how
// many intervals of each of the three per-depth lengths cover the attractor,
//   l' = [[0,1,1],[1,0,0],[k-1,0,1]] l,
// while log_pi accumulates -log(alpha_i), a certified enclosure.
struct CoverState {
    std::array<mpz_class, 3> l;
    FloatInterval log_pi;  // -log(pi_depth) >= 0
    std::size_t depth = 0;

    mpz_class sum() const { return l[0] + l[1] + l[2]; }
};

CoverState cover_seed(mpfr_prec_t prec = 128);

// One depth step; k_next must be the cell of alpha (alpha in (1/(k+1), 1/k]).
CoverState cover_step(const CoverState& s, long long k_next, const Scalar& alpha);

struct DimensionRow {
    std::size_t depth;
    mpz_class sum_l;
    double log_pi;
    double quotient_lo, quotient_hi;  // certified enclosure of log(sum)/(-log pi)

    double quotient() const { return 0.5 * (quotient_lo + quotient_hi); }
};

struct DimensionReport {
    std::vector<DimensionRow> rows;  // depths 1..n
    double limsup_estimate = 0.0;    // max quotient over the last third of depths
    double final_bound = 0.0;        // quotient at the deepest row
    double final_bound_hi = 0.0;     // its certified upper end
    std::string method;
};

// Per-depth bounds log(l_1+l_2+l_3) / (-log pi) along the given symbols and
// matching alphas (parallel vectors).  The limsup of the quotients bounds
// the upper box dimension of the attractor closure.
DimensionReport box_dim_upper_bound(const std::vector<long long>& ks,
                                    const std::vector<Scalar>& alphas, mpfr_prec_t prec = 128);

// convenience: constant symbol k at its fixed-point parameter r_k
DimensionReport box_dim_constant_k(long long k, std::size_t depth, mpfr_prec_t prec = 128);

// -log(rbar_k)/log(r_k), the dimension of the self-similar fixed-point
// attractor, as a certified enclosure of width <= tol.  k >= 2.
Scalar fixed_point_dimension(long long k, double tol = 1e-9, mpfr_prec_t prec = 128);

struct Hd0Result {
    bool holds = false;   // certified: upper end of the left side < 1
    double lhs = 0.0;     // midpoint estimate of the left side
    double slack = 0.0;   // 1 - lhs
    double term1 = 0.0, term2 = 0.0;
};

// The dimension-zero cover inequality at depth i:
//   N floor(1/alpha + 1) (pi beta)^(1/i) + N floor(alpha/beta) (pi alpha beta_next)^(1/i) < 1
Hd0Result hd0_inequality_check(const mpz_class& n_covers, const Scalar& pi, const Scalar& alpha,
                               const Scalar& beta, const Scalar& beta_next, unsigned depth_i,
                               mpfr_prec_t prec = 128);

struct Hd0Preset {
    Scalar alpha, beta, beta_next;
};

// The construction recipe: alpha = 1/k - eps, beta = k eps + eps', which
// forces beta_next = eps'/alpha.  Requires 0 < eps' << eps << k^-2.
Hd0Preset hd0_recipe(long long k, const Scalar& eps, const Scalar& eps_prime);

}  // namespace itmlab

#endif
