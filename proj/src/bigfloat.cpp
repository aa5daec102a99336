#include "itmlab/bigfloat.hpp"

#include <algorithm>
#include <array>

namespace itmlab {

BigFloat::BigFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, o.prec());
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

mpz_class BigFloat::floor_mpz() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
    return z;
}

std::string BigFloat::str(size_t digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

FloatInterval::FloatInterval(mpfr_prec_t prec) : prec_(prec), lo_(prec), hi_(prec) {}

FloatInterval FloatInterval::from_long(long v, mpfr_prec_t prec) {
    FloatInterval r(prec);
    mpfr_set_si(r.lo_.get(), v, MPFR_RNDD);
    mpfr_set_si(r.hi_.get(), v, MPFR_RNDU);
    return r;
}

FloatInterval FloatInterval::from_rational(const mpq_class& q, mpfr_prec_t prec) {
    FloatInterval r(prec);
    mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
    return r;
}

FloatInterval FloatInterval::from_double(double v, mpfr_prec_t prec) {
    FloatInterval r(prec);
    mpfr_set_d(r.lo_.get(), v, MPFR_RNDD);
    mpfr_set_d(r.hi_.get(), v, MPFR_RNDU);
    return r;
}

FloatInterval FloatInterval::from_string(const std::string& s, mpfr_prec_t prec) {
    FloatInterval r(prec);
    if (mpfr_set_str(r.lo_.get(), s.c_str(), 10, MPFR_RNDD) != 0)
        throw error("unparseable float literal: " + s);
    mpfr_set_str(r.hi_.get(), s.c_str(), 10, MPFR_RNDU);
    return r;
}

FloatInterval FloatInterval::from_endpoints(BigFloat lo, BigFloat hi) {
    if (mpfr_cmp(lo.get(), hi.get()) > 0) throw error("FloatInterval: lo > hi");
    FloatInterval r(std::max(lo.prec(), hi.prec()));
    r.lo_ = std::move(lo);
    r.hi_ = std::move(hi);
    return r;
}

FloatInterval FloatInterval::from_rational_bounds(const mpq_class& lo, const mpq_class& hi,
                                                  mpfr_prec_t prec) {
    FloatInterval r(prec);
    mpfr_set_q(r.lo_.get(), lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.get(), hi.get_mpq_t(), MPFR_RNDU);
    return r;
}

FloatInterval FloatInterval::add(const FloatInterval& o) const {
    FloatInterval r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
    return r;
}

FloatInterval FloatInterval::sub(const FloatInterval& o) const {
    FloatInterval r(std::max(prec_, o.prec_));
    mpfr_sub(r.lo_.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
    mpfr_sub(r.hi_.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
    return r;
}

FloatInterval FloatInterval::mul(const FloatInterval& o) const {
    const mpfr_prec_t p = std::max(prec_, o.prec_);
    FloatInterval r(p);
    BigFloat t(p);
    const std::array<std::pair<const BigFloat*, const BigFloat*>, 4> cand = {
        {{&lo_, &o.lo_}, {&lo_, &o.hi_}, {&hi_, &o.lo_}, {&hi_, &o.hi_}}};
    bool first = true;
    for (const auto& [a, b] : cand) {
        mpfr_mul(t.get(), a->get(), b->get(), MPFR_RNDD);
        if (first || mpfr_cmp(t.get(), r.lo_.get()) < 0) r.lo_ = t;
        mpfr_mul(t.get(), a->get(), b->get(), MPFR_RNDU);
        if (first || mpfr_cmp(t.get(), r.hi_.get()) > 0) r.hi_ = t;
        first = false;
    }
    return r;
}

FloatInterval FloatInterval::div(const FloatInterval& o) const {
    if (o.contains_zero())
        throw indeterminate_error("interval division: divisor enclosure contains zero");
    const mpfr_prec_t p = std::max(prec_, o.prec_);
    FloatInterval r(p);
    BigFloat t(p);
    const std::array<std::pair<const BigFloat*, const BigFloat*>, 4> cand = {
        {{&lo_, &o.lo_}, {&lo_, &o.hi_}, {&hi_, &o.lo_}, {&hi_, &o.hi_}}};
    bool first = true;
    for (const auto& [a, b] : cand) {
        mpfr_div(t.get(), a->get(), b->get(), MPFR_RNDD);
        if (first || mpfr_cmp(t.get(), r.lo_.get()) < 0) r.lo_ = t;
        mpfr_div(t.get(), a->get(), b->get(), MPFR_RNDU);
        if (first || mpfr_cmp(t.get(), r.hi_.get()) > 0) r.hi_ = t;
        first = false;
    }
    return r;
}

FloatInterval FloatInterval::neg() const {
    FloatInterval r(prec_);
    mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
    mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
    return r;
}

FloatInterval FloatInterval::sqrt() const {
    if (hi_.sign() < 0) throw error("interval sqrt of a certainly negative value");
    FloatInterval r(prec_);
    if (lo_.sign() <= 0)
        mpfr_set_zero(r.lo_.get(), 1);
    else
        mpfr_sqrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_sqrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

FloatInterval FloatInterval::log() const {
    if (lo_.sign() <= 0) throw error("interval log needs a certainly positive argument");
    FloatInterval r(prec_);
    mpfr_log(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_log(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

FloatInterval FloatInterval::exp() const {
    FloatInterval r(prec_);
    mpfr_exp(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_exp(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

std::optional<int> FloatInterval::compare(const FloatInterval& o) const {
    if (mpfr_cmp(hi_.get(), o.lo_.get()) < 0) return -1;
    if (mpfr_cmp(lo_.get(), o.hi_.get()) > 0) return 1;
    if (is_point() && o.is_point() && mpfr_equal_p(lo_.get(), o.lo_.get())) return 0;
    return std::nullopt;
}

int FloatInterval::certified_sign_with_margin(long margin_exp2) const {
    mpfr_t m;
    mpfr_init2(m, 8);
    mpfr_set_ui_2exp(m, 1, margin_exp2, MPFR_RNDU);
    int result = 0;
    if (mpfr_cmp(lo_.get(), m) > 0) result = 1;
    else {
        mpfr_neg(m, m, MPFR_RNDD);
        if (mpfr_cmp(hi_.get(), m) < 0) result = -1;
    }
    mpfr_clear(m);
    return result;
}

std::optional<mpz_class> FloatInterval::try_floor() const {
    mpz_class a = lo_.floor_mpz();
    mpz_class b = hi_.floor_mpz();
    if (a == b) return a;
    // hi may be an exact integer reached from below: floor of [2.7, 3] is
    // still undecided (the true value could be 3 or just below it), so only
    // the equal case is certified.
    return std::nullopt;
}

double FloatInterval::mid_double() const {
    return 0.5 * (mpfr_get_d(lo_.get(), MPFR_RNDN) + mpfr_get_d(hi_.get(), MPFR_RNDN));
}

double FloatInterval::width_double() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_.get(), lo_.get(), MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

}  // namespace itmlab
