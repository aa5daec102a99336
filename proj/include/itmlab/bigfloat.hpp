#ifndef ITMLAB_BIGFLOAT_HPP
#define ITMLAB_BIGFLOAT_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>

#include "itmlab/errors.hpp"

namespace itmlab {

// Thin RAII wrapper around one mpfr_t.  All arithmetic lives in
// FloatInterval; BigFloat only owns storage and conversions.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    mpz_class floor_mpz() const;
    std::string str(size_t digits = 20) const;

private:
    mpfr_t v_;
};

// Closed interval [lo, hi] of mpfr values with outward rounding at a fixed
// working precision.  This is the Float(p) representation of Scalar: the
// midpoint carries <= 2^(1-p) relative rounding error per operation and the
// enclosure certifies every comparison that it decides.
class FloatInterval {
public:
    explicit FloatInterval(mpfr_prec_t prec);

    static FloatInterval from_long(long v, mpfr_prec_t prec);
    static FloatInterval from_rational(const mpq_class& q, mpfr_prec_t prec);
    static FloatInterval from_double(double v, mpfr_prec_t prec);
    static FloatInterval from_string(const std::string& s, mpfr_prec_t prec);
    static FloatInterval from_endpoints(BigFloat lo, BigFloat hi);
    // enclosure of [lo_num/den, hi_num/den]
    static FloatInterval from_rational_bounds(const mpq_class& lo, const mpq_class& hi,
                                              mpfr_prec_t prec);

    const BigFloat& lo() const { return lo_; }
    const BigFloat& hi() const { return hi_; }
    mpfr_prec_t prec() const { return prec_; }

    FloatInterval add(const FloatInterval& o) const;
    FloatInterval sub(const FloatInterval& o) const;
    FloatInterval mul(const FloatInterval& o) const;
    FloatInterval div(const FloatInterval& o) const;  // throws if o encloses 0
    FloatInterval neg() const;
    FloatInterval sqrt() const;  // clamps a slightly negative lo to 0; throws if hi < 0
    FloatInterval log() const;   // requires lo > 0
    FloatInterval exp() const;

    bool is_point() const { return mpfr_equal_p(lo_.get(), hi_.get()); }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

    // Certified three-way comparison; nullopt when the enclosures overlap
    // without being the same point.
    std::optional<int> compare(const FloatInterval& o) const;

    // Sign of (this) with a 2^margin_exp2 separation requirement:
    // +1 if lo > 2^margin_exp2, -1 if hi < -2^margin_exp2, 0 otherwise.
    int certified_sign_with_margin(long margin_exp2) const;

    std::optional<mpz_class> try_floor() const;

    double mid_double() const;
    double width_double() const;
    double lo_double() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
    double hi_double() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }

private:
    mpfr_prec_t prec_;
    BigFloat lo_, hi_;
};

}  // namespace itmlab

#endif
