#include "itmlab/cubic.hpp"

#include "itmlab/errors.hpp"

namespace itmlab {

Scalar poly_eval(const CubicPk& p, const Scalar& x) { return p.eval(x); }

RootBracket::RootBracket(CubicPk p, mpq_class lo, mpq_class hi)
    : p_(p), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ >= hi_) throw error("RootBracket: empty bracket");
    sign_lo_ = sgn(p_.eval(lo_));
    const int sign_hi = sgn(p_.eval(hi_));
    if (sign_lo_ == 0 || sign_hi == 0 || sign_lo_ == sign_hi)
        throw error("RootBracket: endpoints do not bracket a sign change");
}

RootBracket RootBracket::exact_point(CubicPk p, mpq_class value) {
    RootBracket b{p};
    b.lo_ = value;
    b.hi_ = std::move(value);
    b.exact_ = true;
    return b;
}

void RootBracket::refine_once() {
    if (exact_) return;
    mpq_class mid = (lo_ + hi_) / 2;
    const int s = sgn(p_.eval(mid));
    if (s == 0) {
        // rational root hit exactly; collapse
        lo_ = mid;
        hi_ = mid;
        exact_ = true;
        return;
    }
    if (s == sign_lo_)
        lo_ = std::move(mid);
    else
        hi_ = std::move(mid);
}

void RootBracket::refine_below(const mpq_class& tol) {
    if (tol <= 0) throw error("RootBracket: tol must be positive");
    while (!exact_ && width() > tol) refine_once();
}

PkRoots pk_roots(long long k, const mpq_class& tol) {
    if (k <= 0) throw error("pk_roots: k must be >= 1");
    if (tol <= 0) throw error("pk_roots: tol must be positive");
    const CubicPk p{k};
    if (k == 1) {
        // (x-1)^2 (x+1): the double root breaks sign-change isolation
        return PkRoots{RootBracket::exact_point(p, mpq_class(-1)),
                       RootBracket::exact_point(p, mpq_class(1)),
                       RootBracket::exact_point(p, mpq_class(1))};
    }
    RootBracket lower(p, mpq_of(-k - 1), mpq_class(0));
    RootBracket middle(p, mpq_class(1, static_cast<long>(k + 1)), mpq_class(1, static_cast<long>(k)));
    RootBracket upper(p, mpq_class(1), mpq_of(k + 1));
    lower.refine_below(tol);
    middle.refine_below(tol);
    upper.refine_below(tol);
    return PkRoots{std::move(lower), std::move(middle), std::move(upper)};
}

Scalar middle_root(long long k) { return Scalar::field_root(NumberField::middle_root_field(k)); }

}  // namespace itmlab
