#include "itmlab/dimension.hpp"

#include <algorithm>

#include "itmlab/cubic.hpp"
#include "itmlab/errors.hpp"

namespace itmlab {

CoverState cover_seed(mpfr_prec_t prec) {
    return CoverState{{{mpz_class(1), mpz_class(0), mpz_class(0)}},
                      FloatInterval::from_long(0, prec), 0};
}

CoverState cover_step(const CoverState& s, long long k_next, const Scalar& alpha) {
    if (k_next < 1) throw error("cover_step: k must be >= 1");
    // cell consistency: 1/(k+1) < alpha <= 1/k
    const Scalar lo = Scalar::ratio(1, static_cast<long>(k_next + 1));
    const Scalar hi = Scalar::ratio(1, static_cast<long>(k_next));
    if (!(alpha > lo && alpha <= hi)) throw error("cover_step: alpha is not in cell k");

    return CoverState{{{s.l[1] + s.l[2], s.l[0], mpz_of(k_next - 1) * s.l[0] + s.l[2]}},
                      s.log_pi.sub(alpha.to_interval(s.log_pi.prec()).log()), s.depth + 1};
}

namespace {

DimensionReport run_cover(const std::vector<long long>& ks, const std::vector<Scalar>& alphas,
                          mpfr_prec_t prec, std::string method) {
    if (ks.size() != alphas.size()) throw error("box_dim_upper_bound: ks/alphas length mismatch");
    if (ks.empty()) throw error("box_dim_upper_bound: empty input");
    DimensionReport rep;
    rep.method = std::move(method);
    CoverState st = cover_seed(prec);
    for (std::size_t i = 0; i < ks.size(); ++i) {
        st = cover_step(st, ks[i], alphas[i]);
        const FloatInterval num =
            FloatInterval::from_rational(mpq_class(st.sum()), prec).log();
        const FloatInterval q = num.div(st.log_pi);
        rep.rows.push_back({st.depth, st.sum(), st.log_pi.mid_double(), q.lo_double(),
                            q.hi_double()});
    }
    const std::size_t n = rep.rows.size();
    const std::size_t from = n - n / 3 - 1;
    double best = 0.0;
    for (std::size_t i = from; i < n; ++i) best = std::max(best, rep.rows[i].quotient());
    rep.limsup_estimate = best;
    rep.final_bound = rep.rows.back().quotient();
    rep.final_bound_hi = rep.rows.back().quotient_hi;
    return rep;
}

}  // namespace

DimensionReport box_dim_upper_bound(const std::vector<long long>& ks,
                                    const std::vector<Scalar>& alphas, mpfr_prec_t prec) {
    return run_cover(ks, alphas, prec, "per-parameter cover recursion");
}

DimensionReport box_dim_constant_k(long long k, std::size_t depth, mpfr_prec_t prec) {
    if (k < 2) throw error("box_dim_constant_k: k must be >= 2");
    if (depth < 1) throw error("box_dim_constant_k: depth must be >= 1");
    PkRoots roots = pk_roots(k, mpq_class(1, 1) >> static_cast<unsigned>(prec + 16));
    const Scalar alpha = Scalar::floating(roots.middle.to_interval(prec));
    return run_cover(std::vector<long long>(depth, k), std::vector<Scalar>(depth, alpha), prec,
                     "constant-k cover recursion at the fixed point");
}

Scalar fixed_point_dimension(long long k, double tol, mpfr_prec_t prec) {
    if (k < 2) throw error("fixed_point_dimension: k must be >= 2 (k = 1 roots are degenerate)");
    if (tol <= 0) throw error("fixed_point_dimension: tol must be positive");
    mpq_class bracket_tol(1, 1);
    bracket_tol >>= 64;
    for (int rounds = 0; rounds < 32; ++rounds) {
        PkRoots roots = pk_roots(k, bracket_tol);
        const FloatInterval log_top = roots.upper.to_interval(prec).log();
        const FloatInterval neg_log_mid = roots.middle.to_interval(prec).log().neg();
        const FloatInterval dim = log_top.div(neg_log_mid);
        if (dim.width_double() <= tol) return Scalar::floating(dim);
        bracket_tol >>= 64;
    }
    throw error("fixed_point_dimension: failed to reach tolerance");
}

Hd0Result hd0_inequality_check(const mpz_class& n_covers, const Scalar& pi, const Scalar& alpha,
                               const Scalar& beta, const Scalar& beta_next, unsigned depth_i,
                               mpfr_prec_t prec) {
    if (depth_i == 0) throw error("hd0_inequality_check: depth must be >= 1");
    if (!(pi.sign() > 0 && alpha.sign() > 0 && beta.sign() > 0 && beta_next.sign() > 0))
        throw error("hd0_inequality_check: all quantities must be positive");
    if (!(beta < alpha)) throw error("hd0_inequality_check: needs beta < alpha");

    const Scalar one(1);
    const mpz_class f1 = (one / alpha + one).floor();
    const mpz_class f2 = (alpha / beta).floor();
    const FloatInterval n_iv = FloatInterval::from_rational(mpq_class(n_covers), prec);
    const FloatInterval inv_i =
        FloatInterval::from_rational(mpq_class(1, static_cast<unsigned long>(depth_i)), prec);

    // root terms via exp(log(.)/i) so that deep-i tiny products stay stable
    const FloatInterval root1 =
        (pi * beta).to_interval(prec).log().mul(inv_i).exp();
    const FloatInterval root2 =
        (pi * alpha * beta_next).to_interval(prec).log().mul(inv_i).exp();

    const FloatInterval t1 =
        n_iv.mul(FloatInterval::from_rational(mpq_class(f1), prec)).mul(root1);
    const FloatInterval t2 =
        n_iv.mul(FloatInterval::from_rational(mpq_class(f2), prec)).mul(root2);
    const FloatInterval lhs = t1.add(t2);

    Hd0Result r;
    r.term1 = t1.mid_double();
    r.term2 = t2.mid_double();
    r.lhs = lhs.mid_double();
    r.slack = 1.0 - r.lhs;
    r.holds = mpfr_cmp_ui(lhs.hi().get(), 1) < 0;
    return r;
}

Hd0Preset hd0_recipe(long long k, const Scalar& eps, const Scalar& eps_prime) {
    if (k < 1) throw error("hd0_recipe: k must be >= 1");
    if (!(eps.sign() > 0 && eps_prime.sign() > 0)) throw error("hd0_recipe: eps, eps' > 0");
    Hd0Preset p;
    p.alpha = Scalar::ratio(1, static_cast<long>(k)) - eps;
    p.beta = Scalar(long(k)) * eps + eps_prime;
    if (!(p.beta < p.alpha)) throw error("hd0_recipe: eps too large for k");
    p.beta_next = eps_prime / p.alpha;
    return p;
}

}  // namespace itmlab
