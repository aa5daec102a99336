#include "itmlab/gauss.hpp"

#include <cmath>
#include <unordered_map>
#include <vector>

#include "itmlab/errors.hpp"

namespace itmlab {

GaussPoint GaussPoint::make(Scalar alpha, Scalar beta) {
    GaussPoint p;
    const Scalar zero(0), one(1);
    const bool in_u = beta >= zero && beta <= alpha && alpha <= one;
    if (in_u) {
        if (beta > zero && beta < alpha && alpha < one) {
            p.location = GaussLocation::InteriorU;
            const mpz_class k = (one / alpha).floor();
            if (!k.fits_slong_p()) throw error("GaussPoint: cell index exceeds long");
            p.cell = k.get_si();
        } else {
            p.location = GaussLocation::OnBoundary;
        }
    } else if (zero <= alpha && alpha <= beta + one && beta + one <= one) {
        p.location = GaussLocation::InL;
    } else {
        p.location = GaussLocation::Outside;
    }
    p.alpha = std::move(alpha);
    p.beta = std::move(beta);
    return p;
}

GaussStepResult gauss_step(const GaussPoint& p) {
    if (p.location != GaussLocation::InteriorU)
        throw error("gauss_step: point not in the interior of U");
    const long long k = p.cell;
    Scalar alpha1 = p.beta / p.alpha;
    Scalar beta1 = (p.beta - Scalar(1)) / p.alpha + Scalar(mpq_of(k));
    return {k, GaussPoint::make(std::move(alpha1), std::move(beta1))};
}

GaussPoint inverse_branch(long long k, const Scalar& alpha1, const Scalar& beta1) {
    if (k < 1) throw error("inverse_branch: k must be >= 1");
    const Scalar den = Scalar(mpq_of(k)) + alpha1 - beta1;
    if (den.sign() == 0) throw error("inverse_branch: k + alpha' - beta' is zero");
    return GaussPoint::make(Scalar(1) / den, alpha1 / den);
}

Classification classify(const ItmParams& p, std::size_t budget) {
    if (budget < 1) throw error("classify: budget must be >= 1");
    if (p.region == ItmRegion::Invalid) throw error("classify: parameters outside U");
    Classification c;
    c.k_prefix.source = KSequence::Source::FromParams;
    c.budget = budget;
    if (p.region != ItmRegion::InteriorU) {
        // alpha = 1 or alpha = beta: circle rotation; beta = 0: two-branch map
        c.verdict = Classification::Verdict::FiniteType;
        c.steps = 0;
        c.exit = ExitKind::HitBoundary;
        return c;
    }

    GaussPoint g;
    try {
        g = GaussPoint::make(p.alpha, p.beta);
    } catch (const indeterminate_error&) {
        c.verdict = Classification::Verdict::Inconclusive;
        c.indeterminate_at = 0;
        return c;
    }
    const bool exact = p.alpha.is_exact() && p.beta.is_exact();
    std::unordered_map<std::size_t, std::vector<std::pair<std::size_t, GaussPoint>>> seen;
    if (exact) seen[hash_combine(g.alpha.hash(), g.beta.hash())].emplace_back(0, g);

    for (std::size_t step = 0; step < budget; ++step) {
        GaussStepResult r{};
        try {
            r = gauss_step(g);
        } catch (const indeterminate_error&) {
            c.verdict = Classification::Verdict::Inconclusive;
            c.budget = step;
            c.indeterminate_at = step;
            return c;
        }
        c.k_prefix.symbols.push_back(r.k);
        g = std::move(r.next);
        if (g.location != GaussLocation::InteriorU) {
            c.verdict = Classification::Verdict::FiniteType;
            c.steps = step + 1;
            c.exit = g.location == GaussLocation::InL ? ExitKind::HitL : ExitKind::HitBoundary;
            return c;
        }
        if (exact) {
            auto& bucket = seen[hash_combine(g.alpha.hash(), g.beta.hash())];
            for (const auto& [idx, q] : bucket) {
                if (q.alpha.identical(g.alpha) && q.beta.identical(g.beta)) {
                    c.verdict = Classification::Verdict::InfiniteCertified;
                    c.reason = Classification::InfiniteReason::PeriodicCode;
                    c.period = step + 1 - idx;
                    return c;
                }
            }
            bucket.emplace_back(step + 1, g);
        }
    }
    c.verdict = Classification::Verdict::Inconclusive;
    return c;
}

Classification classify_declared(const KGenerator& gen, std::size_t prefix_len) {
    if (gen.finite()) throw error("classify_declared: a finite list carries no tail claim");
    if (!gen.kappa_valid())
        throw error("classify_declared: declared tail has a parity class of eventual 1s");
    Classification c;
    c.verdict = Classification::Verdict::InfiniteCertified;
    c.reason = Classification::InfiniteReason::ExplicitKSequence;
    c.period = 0;
    c.k_prefix = gen.prefix(prefix_len);
    return c;
}

namespace {

// cross product (b - a) x (c - a)
Scalar orient(const std::pair<Scalar, Scalar>& a, const std::pair<Scalar, Scalar>& b,
              const std::pair<Scalar, Scalar>& c) {
    return (b.first - a.first) * (c.second - a.second) -
           (b.second - a.second) * (c.first - a.first);
}

}  // namespace

ParamBox param_box(const KSequence& ks) {
    if (ks.symbols.empty()) throw error("param_box: empty prefix");
    // corners of closure(R), in convex order
    ParamBox box{{{{Scalar(0), Scalar(0)},
                   {Scalar(1), Scalar(1)},
                   {Scalar(1), Scalar(0)},
                   {Scalar(0), Scalar(-1)}}}};
    for (std::size_t i = ks.symbols.size(); i-- > 0;) {
        for (auto& corner : box.corners) {
            GaussPoint pre = inverse_branch(ks.symbols[i], corner.first, corner.second);
            corner = {std::move(pre.alpha), std::move(pre.beta)};
        }
    }
    return box;
}

bool ParamBox::contains(const Scalar& a, const Scalar& b) const {
    const std::pair<Scalar, Scalar> p{a, b};
    int want = 0;
    for (int i = 0; i < 4; ++i) {
        const int s = orient(corners[static_cast<std::size_t>(i)],
                             corners[static_cast<std::size_t>((i + 1) % 4)], p)
                          .sign();
        if (s == 0) continue;
        if (want == 0)
            want = s;
        else if (s != want)
            return false;
    }
    return true;
}

bool ParamBox::contains_box(const ParamBox& inner) const {
    for (const auto& c : inner.corners)
        if (!contains(c.first, c.second)) return false;
    return true;
}

Scalar ParamBox::diameter_sq() const {
    Scalar best(0);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const Scalar dx = corners[static_cast<std::size_t>(i)].first -
                              corners[static_cast<std::size_t>(j)].first;
            const Scalar dy = corners[static_cast<std::size_t>(i)].second -
                              corners[static_cast<std::size_t>(j)].second;
            Scalar d = dx * dx + dy * dy;
            if (d > best) best = std::move(d);
        }
    return best;
}

double ParamBox::diameter() const { return std::sqrt(diameter_sq().to_double()); }

ExpansionEigenvalues expansion_eigenvalues(const Scalar& alpha, const Scalar& beta,
                                           mpfr_prec_t prec) {
    if (beta.sign() == 0) throw error("expansion_eigenvalues: beta = 0");
    const Scalar one(1), two(2);
    const mpz_class kz = ((one - alpha) / alpha).floor() + 1;
    if (!kz.fits_slong_p()) throw error("expansion_eigenvalues: k exceeds long");
    const long long k = kz.get_si();

    const Scalar t = (alpha - beta) / (two * alpha);
    const Scalar disc1 = (t * t + one / alpha).sqrt_enclosure(prec);
    const Scalar inv_alpha = one / alpha;

    const Scalar kk(mpq_of(k));
    const Scalar s = one + alpha * (one - kk) + beta * kk;
    const Scalar disc2 = (s * s - Scalar(4) * beta).sqrt_enclosure(prec);
    const Scalar den = two * beta * beta;

    return ExpansionEigenvalues{inv_alpha * (t + disc1), inv_alpha * (t - disc1),
                                (s + disc2) / den, (s - disc2) / den, k};
}

SelfSimilarityReport self_similarity_check(const ItmParams& p, std::size_t period,
                                           std::size_t n_points, const Scalar& tol,
                                           std::size_t return_cap) {
    if (period < 1) throw error("self_similarity_check: period must be >= 1");
    {
        Classification c = classify(p, period + 1);
        if (c.verdict != Classification::Verdict::InfiniteCertified || c.period != period)
            throw error("self_similarity_check: parameters are not a certified periodic point "
                        "of the stated period");
    }
    // pi = prod of the alpha_i along one period
    Scalar pi = p.alpha;
    {
        GaussPoint g = GaussPoint::make(p.alpha, p.beta);
        for (std::size_t i = 1; i < period; ++i) {
            g = gauss_step(g).next;
            pi = pi * g.alpha;
        }
    }
    const Scalar one(1);
    const Scalar left = one - pi;

    SelfSimilarityReport rep;
    rep.ok = true;
    const bool exact = p.alpha.is_exact() && p.beta.is_exact();
    for (std::size_t j = 1; j <= n_points; ++j) {
        const Scalar frac = Scalar::ratio(static_cast<long>(j), static_cast<long>(n_points + 1));
        const Scalar x = left + pi * frac;
        // first return of x to [1 - pi, 1)
        Scalar y = itm_apply(p, x).y;
        std::size_t t = 1;
        while (y < left) {
            if (++t > return_cap) throw error("self_similarity_check: return time exceeded cap");
            y = itm_apply(p, y).y;
        }
        rep.max_return_time = std::max(rep.max_return_time, t);
        const Scalar rescaled_image = (y - left) / pi;
        const Scalar expected = itm_apply(p, frac).y;
        const Scalar dev = rescaled_image - expected;
        if (exact) {
            if (dev.sign() != 0) rep.ok = false;
        } else {
            const Scalar mag = dev.sign() >= 0 ? dev : -dev;
            if (!(mag <= tol)) rep.ok = false;
        }
        rep.max_deviation = std::max(rep.max_deviation, std::abs(dev.to_double()));
        ++rep.points_checked;
    }
    return rep;
}

}  // namespace itmlab
