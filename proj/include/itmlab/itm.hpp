#ifndef ITMLAB_ITM_HPP
#define ITMLAB_ITM_HPP

#include <optional>
#include <string>
#include <vector>

#include "itmlab/interval_set.hpp"
#include "itmlab/scalar.hpp"

namespace itmlab {

enum class ItmRegion { InteriorU, BoundaryRotation, BoundaryBetaZero, Invalid };

// The interval translation map on [0,1):
//       x + alpha      on B1 = [0, 1-alpha)
//       x + beta       on B2 = [1-alpha, 1-beta)
//       x + beta - 1   on B3 = [1-beta, 1)
// with T(1) taken as beta (branch 3), the left limit at 1.
// Parameters live in U = {0 <= beta <= alpha <= 1}; alpha = 1 or alpha = beta
// gives a circle rotation, beta = 0 a two-branch non-invertible map.
struct ItmParams {
    Scalar alpha, beta;
    Scalar cut1, cut2;  // 1-alpha, 1-beta
    ItmRegion region = ItmRegion::Invalid;

    static ItmParams make(Scalar alpha, Scalar beta);
};

struct ItmStep {
    Scalar y;
    int branch;  // 1..3
};

ItmStep itm_apply(const ItmParams& p, const Scalar& x);
// nullopt when a float-mode branch decision is within the 2^(8-p) margin of
// a discontinuity (we refuse to fabricate symbols)
std::optional<ItmStep> itm_try_apply(const ItmParams& p, const Scalar& x);

struct Orbit {
    std::vector<Scalar> points;                          // x_0 .. x_m, m <= n
    std::vector<int> branches;                           // branch applied at each step
    std::optional<std::pair<std::size_t, std::size_t>> cycle;  // (preperiod, period)
    std::optional<std::size_t> indeterminate_at;
};

// n forward steps from x0; in exact mode an eventual revisit is detected by
// value and reported as (preperiod, period).
Orbit orbit(const ItmParams& p, const Scalar& x0, std::size_t n);

struct Itinerary {
    std::string word;  // over '1' '2' '3'; word[0] == '3' (the point 1)
    std::optional<std::size_t> indeterminate_at;
};

// Itinerary of the point 1: s_0 = 3, s_i = branch of T^{i-1}(T(1)).
Itinerary itinerary(const ItmParams& p, std::size_t n);

// exact image T(S), split at the discontinuities, translated, re-merged
IntervalSet attractor_step(const ItmParams& p, const IntervalSet& s);

struct AttractorRow {
    std::size_t n;
    std::size_t components;
    Scalar measure;
};

struct AttractorReport {
    std::vector<AttractorRow> rows;  // rows[i] describes Omega_i
    std::optional<std::size_t> stabilized_at;
    bool hit_component_cap = false;
    IntervalSet final_set;
};

// Iterates Omega_0 = [0,1), Omega_{n+1} = T(Omega_n) until stabilization,
// n_max steps, or the component cap (infinite-type attractors grow their
// component count without bound).
AttractorReport attractor_iterate(const ItmParams& p, std::size_t n_max,
                                  std::size_t component_cap = 1000000);

}  // namespace itmlab

#endif
