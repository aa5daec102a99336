#ifndef ITMLAB_NUMBER_FIELD_HPP
#define ITMLAB_NUMBER_FIELD_HPP

#include <gmpxx.h>

#include <array>
#include <memory>
#include <mutex>
#include <utility>

namespace itmlab {

// Exact arithmetic in Q[x]/(x^3 - x^2 - k x + 1), embedded in R at the middle
// root r_k of that cubic, the one in (1/(k+1), 1/k).  Elements are stored as
// c0 + c1 r + c2 r^2 with rational coefficients.  Signs are decided exactly:
// the value is bounded with rational interval arithmetic over a certified
// isolating bracket of r_k, and the bracket is bisected until the bound is
// one-signed.  A nonzero element of a cubic field cannot be a root of a
// quadratic with rational coefficients, so the loop terminates.
//
// The cubic is irreducible over Q for k >= 2 (its only possible rational
// roots, +-1, fail), which is what makes "coefficients all zero" the only
// way an element can equal zero.  k = 1 is rejected.
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    using Coeffs = std::array<mpq_class, 3>;

    static std::shared_ptr<const NumberField> middle_root_field(long long k);

    long long k() const { return k_; }

    Coeffs add(const Coeffs& a, const Coeffs& b) const;
    Coeffs sub(const Coeffs& a, const Coeffs& b) const;
    Coeffs neg(const Coeffs& a) const;
    Coeffs mul(const Coeffs& a, const Coeffs& b) const;
    Coeffs inverse(const Coeffs& a) const;  // throws on zero

    int sign(const Coeffs& a) const;

    // Certified rational bounds on the value of a (refines the root bracket
    // until the bound is narrower than 2^-min_bits relative to max(|v|,1)).
    std::pair<mpq_class, mpq_class> bounds(const Coeffs& a, unsigned min_bits) const;

    // Current isolating bracket of r_k, at least min_halvings bisections deep.
    std::pair<mpq_class, mpq_class> root_bracket(unsigned min_halvings) const;

    double approx(const Coeffs& a) const;

private:
    explicit NumberField(long long k);

    // interval evaluation of a over the current bracket; caller holds mu_
    std::pair<mpq_class, mpq_class> eval_bounds_locked(const Coeffs& a) const;
    void refine_once_locked() const;

    long long k_;
    mutable mpq_class lo_, hi_;  // bracket: P_k(lo_) > 0 > P_k(hi_)
    mutable unsigned halvings_ = 0;
    mutable std::mutex mu_;
};

}  // namespace itmlab

#endif
