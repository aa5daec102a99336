#include "itmlab/itm.hpp"

#include <unordered_map>

#include "itmlab/errors.hpp"

namespace itmlab {

namespace {

// Three-way sign of (x - cut).  Exact kinds decide totally; in float mode a
// branch decision additionally demands 2^(8-p) of certified separation from
// the discontinuity, so even a dyadic-exact hit reports indeterminate.
std::optional<int> margin_cmp(const Scalar& x, const Scalar& cut) {
    if (x.kind() != ScalarKind::Float && cut.kind() != ScalarKind::Float) {
        auto c = x.compare_to(cut);
        return c;  // exact: always decided
    }
    const Scalar d = x - cut;
    const FloatInterval& iv = d.interval();
    const int s = iv.certified_sign_with_margin(8 - static_cast<long>(iv.prec()));
    if (s == 0) return std::nullopt;
    return s;
}

}  // namespace

ItmParams ItmParams::make(Scalar alpha, Scalar beta) {
    ItmParams p;
    p.cut1 = Scalar(1) - alpha;
    p.cut2 = Scalar(1) - beta;
    const Scalar zero(0), one(1);
    const bool in_u = beta >= zero && beta <= alpha && alpha <= one;
    if (!in_u) {
        p.region = ItmRegion::Invalid;
    } else if (alpha == one || alpha == beta) {
        p.region = ItmRegion::BoundaryRotation;
    } else if (beta == zero) {
        p.region = ItmRegion::BoundaryBetaZero;
    } else {
        p.region = ItmRegion::InteriorU;
    }
    p.alpha = std::move(alpha);
    p.beta = std::move(beta);
    return p;
}

std::optional<ItmStep> itm_try_apply(const ItmParams& p, const Scalar& x) {
    if (p.region == ItmRegion::Invalid) throw error("itm_apply: invalid parameters");
    const Scalar zero(0), one(1);
    const auto cz = x.compare_to(zero);
    const auto co = x.compare_to(one);
    if ((cz && *cz < 0) || (co && *co > 0)) throw error("itm_apply: x outside [0,1]");
    if (!cz || !co) return std::nullopt;  // float enclosure straddles an endpoint
    if (*co == 0) return ItmStep{p.beta, 3};

    const auto c1 = margin_cmp(x, p.cut1);
    if (!c1) return std::nullopt;
    if (*c1 < 0) return ItmStep{x + p.alpha, 1};
    const auto c2 = margin_cmp(x, p.cut2);
    if (!c2) return std::nullopt;
    if (*c2 < 0) return ItmStep{x + p.beta, 2};
    return ItmStep{x + p.beta - one, 3};
}

ItmStep itm_apply(const ItmParams& p, const Scalar& x) {
    auto s = itm_try_apply(p, x);
    if (!s) throw indeterminate_error("itm_apply: branch within float margin of a discontinuity");
    return *s;
}

Orbit orbit(const ItmParams& p, const Scalar& x0, std::size_t n) {
    Orbit o;
    o.points.reserve(n + 1);
    o.points.push_back(x0);
    std::unordered_map<std::size_t, std::vector<std::size_t>> seen;
    const bool exact = x0.is_exact() && p.alpha.is_exact() && p.beta.is_exact();
    if (exact) seen[x0.hash()].push_back(0);
    for (std::size_t i = 0; i < n; ++i) {
        auto s = itm_try_apply(p, o.points.back());
        if (!s) {
            o.indeterminate_at = i;
            return o;
        }
        o.branches.push_back(s->branch);
        o.points.push_back(std::move(s->y));
        if (exact && !o.cycle) {
            const Scalar& y = o.points.back();
            auto& bucket = seen[y.hash()];
            for (std::size_t idx : bucket) {
                if (o.points[idx].identical(y)) {
                    o.cycle = std::make_pair(idx, i + 1 - idx);
                    break;
                }
            }
            bucket.push_back(i + 1);
        }
    }
    return o;
}

Itinerary itinerary(const ItmParams& p, std::size_t n) {
    if (n == 0) throw error("itinerary: n must be >= 1");
    Itinerary it;
    it.word.reserve(n);
    it.word.push_back('3');  // the point 1 sits in the closure of B3
    Scalar x = p.beta;       // T(1)
    for (std::size_t i = 1; i < n; ++i) {
        auto s = itm_try_apply(p, x);
        if (!s) {
            it.indeterminate_at = i;
            return it;
        }
        it.word.push_back(static_cast<char>('0' + s->branch));
        x = std::move(s->y);
    }
    return it;
}

IntervalSet attractor_step(const ItmParams& p, const IntervalSet& s) {
    if (p.region == ItmRegion::Invalid) throw error("attractor_step: invalid parameters");
    const Scalar one(1);
    std::vector<IntervalSet::Piece> out;
    out.reserve(3 * s.components());
    auto clip = [&](const Scalar& lo, const Scalar& hi, const Scalar& a, const Scalar& b,
                    const Scalar& shift) {
        Scalar l = lo < a ? a : lo;
        Scalar h = hi < b ? hi : b;
        if (l < h) out.emplace_back(l + shift, h + shift);
    };
    const Scalar zero(0);
    const Scalar shift3 = p.beta - one;
    for (const auto& [lo, hi] : s.intervals()) {
        clip(lo, hi, zero, p.cut1, p.alpha);
        clip(lo, hi, p.cut1, p.cut2, p.beta);
        clip(lo, hi, p.cut2, one, shift3);
    }
    return IntervalSet::from_pieces(std::move(out));
}

AttractorReport attractor_iterate(const ItmParams& p, std::size_t n_max,
                                  std::size_t component_cap) {
    AttractorReport rep;
    IntervalSet cur = IntervalSet::unit();
    rep.rows.push_back({0, cur.components(), cur.total_measure()});
    for (std::size_t n = 0; n < n_max; ++n) {
        IntervalSet next = attractor_step(p, cur);
        rep.rows.push_back({n + 1, next.components(), next.total_measure()});
        if (next.equals(cur)) {
            rep.stabilized_at = n;
            cur = std::move(next);
            break;
        }
        cur = std::move(next);
        if (cur.components() > component_cap) {
            rep.hit_component_cap = true;
            break;
        }
    }
    rep.final_set = std::move(cur);
    return rep;
}

}  // namespace itmlab
