#ifndef ITMLAB_ERGODICITY_HPP
#define ITMLAB_ERGODICITY_HPP

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "itmlab/ksequence.hpp"
#include "itmlab/scalar.hpp"

namespace itmlab {

// Letter-frequency coordinates xi = x+y, eta = y+z on the simplex
// x+y+z = 1, x,y,z >= 0, i.e. the triangle
//   S~ = { xi <= 1, eta <= 1, xi + eta >= 1 }.
struct SimplexPoint {
    Scalar xi, eta;
};

bool in_simplex(const SimplexPoint& p);

// The projectivized substitution count matrix acting on S~:
//   (xi, eta) -> (1 - eta/(k eta + xi), 1/(k eta + xi)).
// Its image of S~ is the tile with corners (1,1), ((k-1)/k, 1/k),
// (k/(k+1), 1/(k+1)); the tiles for k = 1, 2, ... fan out from (1,1) and
// tile S~.
SimplexPoint simplex_map(long long k, const SimplexPoint& p);

// the single inverse on tile k: (xi, eta) -> (1 + k(xi-1), 1 - xi)/eta
SimplexPoint simplex_map_inverse(long long k, const SimplexPoint& q);

// closed range [kmin, kmax] of tiles containing p (width <= 1; a point
// interior to a tile yields kmin == kmax)
std::pair<long long, long long> tile_range(const SimplexPoint& p);

struct ConeTriangle {
    std::array<SimplexPoint, 3> corners;
    std::size_t depth = 0;

    Scalar diameter_sq() const;
    double diameter() const;
    Scalar area2() const;  // twice the enclosed area (absolute)
    Scalar xi_extent() const;
    Scalar eta_extent() const;
    bool contains(const SimplexPoint& p) const;  // closed
};

// Image of S~ under the composition of the simplex maps for ks, outermost
// symbol first (the depth-n set whose nested limit carries the possible
// letter-frequency vectors).  Computed with one homogeneous integer matrix
// product, since the maps are projective.
ConeTriangle cone_triangle(const KSequence& ks);

// diameters of the nested triangles at depths 1..depth
std::vector<double> cone_diameters(const KSequence& ks, std::size_t depth);

// Hilbert projective (semi-)metric on the nonnegative quadrant:
// log of the ratio of the extreme component ratios; +infinity across the
// boundary, 0 exactly on rays.
double hilbert_metric(const Scalar& v0, const Scalar& v1, const Scalar& w0, const Scalar& w1);
// exp(metric) as an exact Scalar when the inputs are exact; nullopt = infinite
std::optional<Scalar> hilbert_ratio(const Scalar& v0, const Scalar& v1, const Scalar& w0,
                                    const Scalar& w1);

// Birkhoff contraction factor tanh(D/4) of the cone matrix
// [[k, xi], [k-1, k'+xi]]: (sqrt(k(k'+xi)) - sqrt((k-1)xi)) / (sum);
// equals 1 (no contraction) when k = 1 or xi = 0.
double contraction_factor(long long k, long long k_prime, double xi);
// the projective diameter D = log(k(k'+xi)/((k-1)xi)) of the image cone
double cone_projective_diameter(long long k, long long k_prime, double xi);

struct SeriesReport {
    std::vector<double> partials;    // S_1..S_N or P_1..P_N
    bool truncated_lookahead = false;  // an L-run was clipped at the prefix end
};

// Per-index symbol access: nullopt past the end of a finite source.
using SymbolAt = std::function<std::optional<long long>(std::size_t)>;

SymbolAt symbols_of(const KSequence& ks);
SymbolAt symbols_of(const KGenerator& gen);

// partial sums of ((k_e - 1)/k_e) sqrt(1/(k_o L)) over successive index
// pairs; parity 0 pairs (k_{2i}, k_{2i-1}), parity 1 shifts both down by one
SeriesReport ue_sum_series(const SymbolAt& at, std::size_t n_terms, int parity);
// partial products of k_e / (k_o + 1/L)
SeriesReport ue_product_series(const SymbolAt& at, std::size_t n_terms, int parity);

struct NueGrowth {
    std::optional<double> lambda;  // largest certified tail ratio > 1
    bool prefix_limited = false;   // a >1 ratio existed but with negligible tail growth
};

// Largest lambda > 1 with k_i >= lambda k_{i-1} on a tail of the prefix.
// Demands observable growth (tail_len * ln(lambda) >= 2) before reporting.
NueGrowth nue_growth_test(const KSequence& ks);

struct UEReport {
    enum class Verdict {
        UECertified,
        NUECertified,
        NumericalUELike,
        NumericalNUELike,
        Unknown
    };
    enum class UECondition { SumDiverges, ProductVanishes };

    Verdict verdict = Verdict::Unknown;
    std::optional<UECondition> condition;
    std::optional<int> condition_parity;  // 0 even, 1 odd
    SeriesReport sum_even, sum_odd, prod_even, prod_odd;
    std::optional<double> nue_lambda;
    bool nue_prefix_limited = false;
    std::vector<double> z_diameters;
    std::string source_description;
    bool kappa_valid = true;
    std::string note;

    bool certified() const {
        return verdict == Verdict::UECertified || verdict == Verdict::NUECertified;
    }
};

// Full decision: closed-form tail certificates from the generator shape,
// numeric series for both parities, triangle diameters up to depth.  A bare
// prefix (no tail claim) can only produce Numerical verdicts.
UEReport decide_unique_ergodicity(const KGenerator& gen, std::size_t depth);
UEReport decide_unique_ergodicity(const KSequence& ks, std::size_t depth);

}  // namespace itmlab

#endif
