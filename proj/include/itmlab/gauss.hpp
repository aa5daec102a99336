#ifndef ITMLAB_GAUSS_HPP
#define ITMLAB_GAUSS_HPP

#include <array>
#include <optional>
#include <utility>

#include "itmlab/itm.hpp"
#include "itmlab/ksequence.hpp"
#include "itmlab/scalar.hpp"

namespace itmlab {

enum class GaussLocation { InteriorU, InL, OnBoundary, Outside };

// A point of parameter space located relative to
//   U = {0 <= beta <= alpha <= 1},  L = {0 <= alpha <= beta+1 <= 1},
// with the Markov cell index k (alpha in (1/(k+1), 1/k]) when the point is
// interior to U.  L is taken minus U, so the beta = 0 segment counts as
// boundary of U.
struct GaussPoint {
    Scalar alpha, beta;
    GaussLocation location = GaussLocation::Outside;
    long long cell = 0;  // valid iff location == InteriorU

    static GaussPoint make(Scalar alpha, Scalar beta);
};

struct GaussStepResult {
    long long k;
    GaussPoint next;
};

// One induction step: (alpha, beta) -> (beta/alpha, (beta-1)/alpha + k),
// k = floor(1/alpha).  Requires an interior point.
GaussStepResult gauss_step(const GaussPoint& p);

// Preimage in cell k of a point of closure(R), R = U union L:
// (alpha, beta) = (1, alpha') / (k + alpha' - beta').
GaussPoint inverse_branch(long long k, const Scalar& alpha1, const Scalar& beta1);

enum class ExitKind { HitL, HitBoundary };

struct Classification {
    enum class Verdict { FiniteType, InfiniteCertified, Inconclusive };
    enum class InfiniteReason { PeriodicCode, ExplicitKSequence };

    Verdict verdict = Verdict::Inconclusive;
    std::size_t steps = 0;  // FiniteType: induction steps before the orbit left U interior
    ExitKind exit = ExitKind::HitBoundary;
    InfiniteReason reason = InfiniteReason::PeriodicCode;
    std::size_t period = 0;
    std::size_t budget = 0;
    KSequence k_prefix;
    std::optional<std::size_t> indeterminate_at;  // float mode only

    bool finite() const { return verdict == Verdict::FiniteType; }
};

// Iterates gauss_step from (alpha, beta).  Exact revisits certify an
// infinite-type periodic code; running out of budget proves nothing
// (Inconclusive).  Boundary parameters are finite type immediately: the map
// is a circle rotation (alpha = 1 or alpha = beta) or two-branch (beta = 0).
Classification classify(const ItmParams& p, std::size_t budget);

// A user-declared full k-sequence names an infinite-type parameter directly;
// the verdict records the declaration rather than an orbit computation.
// Rejected when the declared tail violates admissibility (a parity class of
// eventual 1s) or when the generator is a finite list (no tail claim).
Classification classify_declared(const KGenerator& gen, std::size_t prefix_len);

// Quadrilateral in U containing every parameter whose k-prefix starts with
// ks: the image of closure(R) under the composed inverse branches.  The
// inverse branches are projective, so corner images determine it.
struct ParamBox {
    std::array<std::pair<Scalar, Scalar>, 4> corners;  // convex order

    bool contains(const Scalar& a, const Scalar& b) const;  // closed
    bool contains_box(const ParamBox& inner) const;
    Scalar diameter_sq() const;
    double diameter() const;
};

ParamBox param_box(const KSequence& ks);

// Eigenvalues of the derivative of the induction map and of its square:
//   lambda_pm = (1/alpha) ((alpha-beta)/(2 alpha) +- sqrt(((alpha-beta)/(2 alpha))^2 + 1/alpha))
//   Lambda_pm = (S +- sqrt(S^2 - 4 beta)) / (2 beta^2),  S = 1 + alpha(1-k) + beta k
// returned as certified enclosures.
struct ExpansionEigenvalues {
    Scalar lambda_plus, lambda_minus;
    Scalar big_lambda_plus, big_lambda_minus;
    long long k;
};

ExpansionEigenvalues expansion_eigenvalues(const Scalar& alpha, const Scalar& beta,
                                           mpfr_prec_t prec = 128);

struct SelfSimilarityReport {
    bool ok = false;
    std::size_t points_checked = 0;
    std::size_t max_return_time = 0;
    double max_deviation = 0.0;
};

// At a G-periodic parameter the first-return map to [1 - prod alpha_i, 1),
// rescaled affinely to [0,1), must reproduce T itself.  Verified pointwise
// on n_points samples (exactly, when the parameters are exact).
SelfSimilarityReport self_similarity_check(const ItmParams& p, std::size_t period,
                                           std::size_t n_points, const Scalar& tol,
                                           std::size_t return_cap = 1000000);

}  // namespace itmlab

#endif
