#include "itmlab/ergodicity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "itmlab/errors.hpp"

namespace itmlab {

bool in_simplex(const SimplexPoint& p) {
    const Scalar one(1);
    return p.xi <= one && p.eta <= one && p.xi + p.eta >= one;
}

SimplexPoint simplex_map(long long k, const SimplexPoint& p) {
    if (k < 1) throw error("simplex_map: k must be >= 1");
    const Scalar den = Scalar(mpq_of(k)) * p.eta + p.xi;
    if (den.sign() <= 0) throw error("simplex_map: k*eta + xi must be positive");
    const Scalar one(1);
    return {one - p.eta / den, one / den};
}

SimplexPoint simplex_map_inverse(long long k, const SimplexPoint& q) {
    if (k < 1) throw error("simplex_map_inverse: k must be >= 1");
    if (q.eta.sign() <= 0) throw error("simplex_map_inverse: eta must be positive");
    const Scalar one(1);
    return {(one + Scalar(mpq_of(k)) * (q.xi - one)) / q.eta, (one - q.xi) / q.eta};
}

std::pair<long long, long long> tile_range(const SimplexPoint& p) {
    if (!in_simplex(p)) throw error("tile_range: point outside the simplex triangle");
    const Scalar one(1);
    const Scalar d = one - p.xi;
    if (d.sign() == 0) {
        // right edge: only the common corner (1,1) belongs to (all) tiles
        if (p.eta == one) return {1, std::numeric_limits<long long>::max()};
        throw error("tile_range: points with xi = 1, eta < 1 lie in no tile");
    }
    // closed-tile membership: (1-eta)/(1-xi) <= k <= (2-xi-eta)/(1-xi)
    const Scalar lo = (one - p.eta) / d;
    const Scalar hi = (Scalar(2) - p.xi - p.eta) / d;
    mpz_class kmin = (-lo).floor();  // ceil(lo) = -floor(-lo)
    mpz_neg(kmin.get_mpz_t(), kmin.get_mpz_t());
    const mpz_class kmax = hi.floor();
    long long a = kmin.fits_slong_p() ? kmin.get_si() : std::numeric_limits<long long>::max();
    long long b = kmax.fits_slong_p() ? kmax.get_si() : std::numeric_limits<long long>::max();
    if (a < 1) a = 1;
    if (b < a) throw error("tile_range: empty range (unexpected)");
    return {a, b};
}

Scalar ConeTriangle::diameter_sq() const {
    Scalar best(0);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const Scalar dx = corners[static_cast<std::size_t>(i)].xi -
                              corners[static_cast<std::size_t>(j)].xi;
            const Scalar dy = corners[static_cast<std::size_t>(i)].eta -
                              corners[static_cast<std::size_t>(j)].eta;
            Scalar d = dx * dx + dy * dy;
            if (d > best) best = std::move(d);
        }
    return best;
}

double ConeTriangle::diameter() const { return std::sqrt(diameter_sq().to_double()); }

Scalar ConeTriangle::area2() const {
    const Scalar v = (corners[1].xi - corners[0].xi) * (corners[2].eta - corners[0].eta) -
                     (corners[1].eta - corners[0].eta) * (corners[2].xi - corners[0].xi);
    return v.sign() < 0 ? -v : v;
}

namespace {

Scalar extent(const Scalar& a, const Scalar& b, const Scalar& c) {
    const Scalar mx = a > b ? (a > c ? a : c) : (b > c ? b : c);
    const Scalar mn = a < b ? (a < c ? a : c) : (b < c ? b : c);
    return mx - mn;
}

}  // namespace

Scalar ConeTriangle::xi_extent() const {
    return extent(corners[0].xi, corners[1].xi, corners[2].xi);
}

Scalar ConeTriangle::eta_extent() const {
    return extent(corners[0].eta, corners[1].eta, corners[2].eta);
}

bool ConeTriangle::contains(const SimplexPoint& p) const {
    auto cross = [](const SimplexPoint& a, const SimplexPoint& b, const SimplexPoint& c) {
        return (b.xi - a.xi) * (c.eta - a.eta) - (b.eta - a.eta) * (c.xi - a.xi);
    };
    int want = 0;
    for (int i = 0; i < 3; ++i) {
        const int s = cross(corners[static_cast<std::size_t>(i)],
                            corners[static_cast<std::size_t>((i + 1) % 3)], p)
                          .sign();
        if (s == 0) continue;
        if (want == 0)
            want = s;
        else if (s != want)
            return false;
    }
    return true;
}

namespace {

// homogeneous form of simplex_map: (xi : eta : 1) -> (xi + (k-1) eta : 1 : xi + k eta)
using Hom = std::array<std::array<mpz_class, 3>, 3>;

Hom hom_of(long long k) {
    const mpz_class kz(static_cast<long>(k));
    return Hom{{{1, kz - 1, 0}, {0, 0, 1}, {1, kz, 0}}};
}

Hom hom_mul(const Hom& a, const Hom& b) {
    Hom r;
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

SimplexPoint hom_apply(const Hom& m, long xi, long eta) {
    std::array<mpz_class, 3> v;
    for (int i = 0; i < 3; ++i)
        v[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)][0] * xi +
                                         m[static_cast<std::size_t>(i)][1] * eta +
                                         m[static_cast<std::size_t>(i)][2];
    if (sgn(v[2]) <= 0) throw error("cone_triangle: nonpositive homogeneous denominator");
    return {Scalar(mpq_class(v[0], v[2])), Scalar(mpq_class(v[1], v[2]))};
}

ConeTriangle triangle_of(const Hom& m, std::size_t depth) {
    ConeTriangle t;
    t.depth = depth;
    t.corners = {hom_apply(m, 1, 1), hom_apply(m, 1, 0), hom_apply(m, 0, 1)};
    return t;
}

}  // namespace

ConeTriangle cone_triangle(const KSequence& ks) {
    if (ks.symbols.empty()) throw error("cone_triangle: empty prefix");
    Hom m = hom_of(ks.symbols[0]);
    for (std::size_t i = 1; i < ks.symbols.size(); ++i) m = hom_mul(m, hom_of(ks.symbols[i]));
    return triangle_of(m, ks.symbols.size());
}

std::vector<double> cone_diameters(const KSequence& ks, std::size_t depth) {
    if (depth > ks.symbols.size()) throw error("cone_diameters: depth exceeds prefix length");
    if (depth == 0) throw error("cone_diameters: depth must be >= 1");
    std::vector<double> out;
    out.reserve(depth);
    Hom m = hom_of(ks.symbols[0]);
    out.push_back(triangle_of(m, 1).diameter());
    for (std::size_t i = 1; i < depth; ++i) {
        m = hom_mul(m, hom_of(ks.symbols[i]));
        out.push_back(triangle_of(m, i + 1).diameter());
    }
    return out;
}

// largest/smallest componentwise ratio w_i/v_i; nullopt encodes +infinity
std::optional<Scalar> hilbert_ratio(const Scalar& v0, const Scalar& v1, const Scalar& w0,
                                    const Scalar& w1) {
    const int sv0 = v0.sign(), sv1 = v1.sign(), sw0 = w0.sign(), sw1 = w1.sign();
    if (sv0 < 0 || sv1 < 0 || sw0 < 0 || sw1 < 0)
        throw error("hilbert_metric: vectors must be componentwise nonnegative");
    if ((sv0 == 0 && sv1 == 0) || (sw0 == 0 && sw1 == 0))
        throw error("hilbert_metric: zero vector");
    if ((sv0 == 0) != (sw0 == 0) || (sv1 == 0) != (sw1 == 0)) return std::nullopt;  // boundary
    if (sv0 == 0 || sv1 == 0) return Scalar(1);  // same boundary ray
    const Scalar r0 = w0 / v0;
    const Scalar r1 = w1 / v1;
    return r0 > r1 ? r0 / r1 : r1 / r0;
}

double hilbert_metric(const Scalar& v0, const Scalar& v1, const Scalar& w0, const Scalar& w1) {
    const auto ratio = hilbert_ratio(v0, v1, w0, w1);
    if (!ratio) return std::numeric_limits<double>::infinity();
    return std::log(ratio->to_double());
}

double cone_projective_diameter(long long k, long long k_prime, double xi) {
    const double num = static_cast<double>(k) * (static_cast<double>(k_prime) + xi);
    const double den = static_cast<double>(k - 1) * xi;
    if (den <= 0) return std::numeric_limits<double>::infinity();
    return std::log(num / den);
}

double contraction_factor(long long k, long long k_prime, double xi) {
    if (k < 1 || k_prime < 1) throw error("contraction_factor: k, k' must be >= 1");
    if (xi < 0 || xi > 1) throw error("contraction_factor: xi must be in [0,1]");
    const double a = std::sqrt(static_cast<double>(k) * (static_cast<double>(k_prime) + xi));
    const double b = std::sqrt(static_cast<double>(k - 1) * xi);
    return (a - b) / (a + b);
}

SymbolAt symbols_of(const KSequence& ks) {
    return [symbols = ks.symbols](std::size_t i) -> std::optional<long long> {
        if (i >= symbols.size()) return std::nullopt;
        return symbols[i];
    };
}

SymbolAt symbols_of(const KGenerator& gen) {
    return [gen](std::size_t i) -> std::optional<long long> {
        if (gen.finite() && i >= gen.list_size()) return std::nullopt;
        return gen.at(i);
    };
}

namespace {

constexpr std::size_t kLookaheadCap = 1u << 20;

// L_m = min{r >= 1 : k_{m+r} != 1}; nullopt when the source ends first
std::optional<long long> lookahead_l(const SymbolAt& at, std::size_t m) {
    for (std::size_t r = 1; r <= kLookaheadCap; ++r) {
        const auto k = at(m + r);
        if (!k) return std::nullopt;
        if (*k != 1) return static_cast<long long>(r);
    }
    return std::nullopt;
}

}  // namespace

SeriesReport ue_sum_series(const SymbolAt& at, std::size_t n_terms, int parity) {
    SeriesReport rep;
    double s = 0.0;
    for (std::size_t i = 1; i <= n_terms; ++i) {
        const std::size_t ie = 2 * i - static_cast<std::size_t>(parity);
        const std::size_t io = ie - 1;
        const auto ke = at(ie), ko = at(io);
        if (!ke || !ko) {
            rep.truncated_lookahead = true;
            break;
        }
        auto l = lookahead_l(at, ie);
        if (!l) {
            rep.truncated_lookahead = true;
            l = 1;  // clipped: assume the run ends immediately after the prefix
        }
        const double term = (static_cast<double>(*ke) - 1.0) / static_cast<double>(*ke) *
                            std::sqrt(1.0 / (static_cast<double>(*ko) * static_cast<double>(*l)));
        s += term;
        rep.partials.push_back(s);
    }
    return rep;
}

SeriesReport ue_product_series(const SymbolAt& at, std::size_t n_terms, int parity) {
    SeriesReport rep;
    double p = 1.0;
    for (std::size_t i = 1; i <= n_terms; ++i) {
        const std::size_t ie = 2 * i - static_cast<std::size_t>(parity);
        const std::size_t io = ie - 1;
        const auto ke = at(ie), ko = at(io);
        if (!ke || !ko) {
            rep.truncated_lookahead = true;
            break;
        }
        auto l = lookahead_l(at, ie);
        if (!l) {
            rep.truncated_lookahead = true;
            l = 1;
        }
        p *= static_cast<double>(*ke) /
             (static_cast<double>(*ko) + 1.0 / static_cast<double>(*l));
        rep.partials.push_back(p);
    }
    return rep;
}

NueGrowth nue_growth_test(const KSequence& ks) {
    NueGrowth out;
    const std::size_t n = ks.symbols.size();
    if (n < 4) throw error("nue_growth_test: prefix length must be >= 4");
    std::vector<double> ratio(n - 1);
    for (std::size_t i = 1; i < n; ++i)
        ratio[i - 1] = static_cast<double>(ks.symbols[i]) /
                       static_cast<double>(ks.symbols[i - 1]);
    // allow the condition to start anywhere in the first half; the observed
    // tail must still show real growth before we claim a lambda
    const std::size_t start = (n - 1) / 2;
    double lam = ratio[start];
    for (std::size_t i = start; i < ratio.size(); ++i) lam = std::min(lam, ratio[i]);
    const double tail_len = static_cast<double>(ratio.size() - start);
    if (lam > 1.0) {
        if (tail_len * std::log(lam) >= 2.0)
            out.lambda = lam;
        else
            out.prefix_limited = true;
    }
    return out;
}

namespace {

struct Cert {
    UEReport::UECondition cond;
    int parity;
};

std::optional<Cert> ue_certificate(const KGenerator& g) {
    using K = KGenerator::Kind;
    using C = UEReport::UECondition;
    switch (g.kind()) {
        case K::Constant:
            // factors c/(c+1) < 1 forever
            if (g.param(0) >= 2) return Cert{C::ProductVanishes, 0};
            return std::nullopt;
        case K::Arithmetic: {
            const long long a = g.param(0), b = g.param(1);
            if (a == 0) return b >= 2 ? std::optional<Cert>(Cert{C::ProductVanishes, 0})
                                      : std::nullopt;
            // terms ~ const / sqrt(i): a p-series with exponent 1/2
            return Cert{C::SumDiverges, 0};
        }
        case K::Geometric: {
            const long long a = g.param(0), r = g.param(1);
            if (r == 1) return a >= 2 ? std::optional<Cert>(Cert{C::ProductVanishes, 0})
                                      : std::nullopt;
            return std::nullopt;  // growing tail: handled by the growth certificate
        }
        case K::PairedGeometric: {
            const long long ae = g.param(0), re = g.param(1), ao = g.param(2), ro = g.param(3);
            // even-parity factors (ae re^i)/(ao ro^i + 1/L)
            if (re < ro || (re == ro && ae < ao)) return Cert{C::ProductVanishes, 0};
            // odd-parity factors (ao ro^i)/(ae re^(i-1) + 1/L)
            if (ro < re || (ro == re && ao * ro < ae)) return Cert{C::ProductVanishes, 1};
            // constant side with growing partner: sum terms stay bounded below
            if (ro == 1 && ao >= 2 && (re >= 2 || ae >= 2)) return Cert{C::SumDiverges, 0};
            if (re == 1 && ae >= 2 && (ro >= 2 || ao >= 2)) return Cert{C::SumDiverges, 1};
            return std::nullopt;
        }
        case K::List: return std::nullopt;  // no tail claim, numerics only
        case K::Padded:
            return Cert{C::ProductVanishes, 0};  // all-2 tail: factors 2/3
    }
    return std::nullopt;
}

std::optional<double> nue_certificate(const KGenerator& g) {
    using K = KGenerator::Kind;
    switch (g.kind()) {
        case K::Geometric:
            if (g.param(1) >= 2) return static_cast<double>(g.param(1));
            return std::nullopt;
        case K::PairedGeometric: {
            const long long ae = g.param(0), re = g.param(1), ao = g.param(2), ro = g.param(3);
            if (re != ro) return std::nullopt;
            const double r1 = static_cast<double>(ae) / static_cast<double>(ao);
            const double r2 = static_cast<double>(ao) * static_cast<double>(ro) /
                              static_cast<double>(ae);
            const double lam = std::min(r1, r2);
            if (lam > 1.0) return lam;
            return std::nullopt;
        }
        default: return std::nullopt;
    }
}

UEReport decide_common(const SymbolAt& at, const KSequence& prefix, std::size_t depth,
                       std::string description, bool kappa_valid,
                       const std::optional<Cert>& ue, const std::optional<double>& nue) {
    UEReport rep;
    rep.source_description = std::move(description);
    rep.kappa_valid = kappa_valid;
    const std::size_t n_terms = depth / 2;
    rep.sum_even = ue_sum_series(at, n_terms, 0);
    rep.sum_odd = ue_sum_series(at, n_terms, 1);
    rep.prod_even = ue_product_series(at, n_terms, 0);
    rep.prod_odd = ue_product_series(at, n_terms, 1);
    rep.z_diameters = cone_diameters(prefix, std::min(depth, prefix.size()));
    if (prefix.size() >= 4) {
        const NueGrowth g = nue_growth_test(prefix);
        if (!nue) rep.nue_prefix_limited = g.prefix_limited;
    }

    if (ue && nue) {
        rep.verdict = UEReport::Verdict::Unknown;
        rep.note = "contradictory certificates (both unique-ergodicity and growth); data kept";
        rep.nue_lambda = nue;
        return rep;
    }
    if (nue) {
        rep.verdict = UEReport::Verdict::NUECertified;
        rep.nue_lambda = nue;
        return rep;
    }
    if (ue) {
        rep.verdict = UEReport::Verdict::UECertified;
        rep.condition = ue->cond;
        rep.condition_parity = ue->parity;
        return rep;
    }

    // numerics only
    const double final_diam = rep.z_diameters.empty() ? 1.0 : rep.z_diameters.back();
    if (final_diam < 1e-6) {
        rep.verdict = UEReport::Verdict::NumericalUELike;
        return rep;
    }
    const std::size_t m = rep.z_diameters.size();
    if (m >= 5) {
        const std::size_t from = m - std::max<std::size_t>(1, m / 5);
        double mn = rep.z_diameters[from], mx = rep.z_diameters[from];
        for (std::size_t i = from; i < m; ++i) {
            mn = std::min(mn, rep.z_diameters[i]);
            mx = std::max(mx, rep.z_diameters[i]);
        }
        if (mn > 1e-3 && mx / mn - 1.0 < 0.01) {
            rep.verdict = UEReport::Verdict::NumericalNUELike;
            return rep;
        }
    }
    rep.verdict = UEReport::Verdict::Unknown;
    return rep;
}

}  // namespace

UEReport decide_unique_ergodicity(const KGenerator& gen, std::size_t depth) {
    if (depth < 4) throw error("decide_unique_ergodicity: depth must be >= 4");
    KSequence prefix = gen.finite() ? gen.prefix(std::min(depth, gen.list_size()))
                                    : gen.prefix(depth);
    return decide_common(symbols_of(gen), prefix, depth, gen.describe(), gen.kappa_valid(),
                         ue_certificate(gen), nue_certificate(gen));
}

UEReport decide_unique_ergodicity(const KSequence& ks, std::size_t depth) {
    if (depth < 4) throw error("decide_unique_ergodicity: depth must be >= 4");
    KSequence prefix = ks.truncated(depth);
    UEReport rep = decide_common(symbols_of(ks), prefix, depth, "prefix only",
                                 ks.kappa_valid_prefix, std::nullopt, std::nullopt);
    if (prefix.size() >= 4) {
        const NueGrowth g = nue_growth_test(prefix);
        rep.nue_lambda = g.lambda;  // informational: a bare prefix certifies nothing
        rep.nue_prefix_limited = g.prefix_limited;
        if (rep.nue_lambda && rep.verdict == UEReport::Verdict::Unknown)
            rep.verdict = UEReport::Verdict::NumericalNUELike;
    }
    return rep;
}

}  // namespace itmlab
