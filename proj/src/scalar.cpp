#include "itmlab/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "itmlab/errors.hpp"

namespace itmlab {

namespace {

FloatInterval alg_to_interval(const std::shared_ptr<const NumberField>& f,
                              const NumberField::Coeffs& c, mpfr_prec_t prec) {
    auto [lo, hi] = f->bounds(c, static_cast<unsigned>(prec) + 4);
    return FloatInterval::from_rational_bounds(lo, hi, prec);
}

}  // namespace

Scalar Scalar::ratio(long num, long den) {
    if (den == 0) throw error("Scalar::ratio: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::algebraic(std::shared_ptr<const NumberField> field, NumberField::Coeffs c) {
    if (!field) throw error("Scalar::algebraic: null field");
    if (c[1] == 0 && c[2] == 0) return Scalar(std::move(c[0]));
    return Scalar(Alg{std::move(field), std::move(c)});
}

Scalar Scalar::field_root(std::shared_ptr<const NumberField> field) {
    return algebraic(std::move(field), {mpq_class(0), mpq_class(1), mpq_class(0)});
}

void Scalar::canonicalize() {
    if (auto* q = std::get_if<mpq_class>(&v_)) q->canonicalize();
}

ScalarKind Scalar::kind() const {
    switch (v_.index()) {
        case 0: return ScalarKind::Rational;
        case 1: return ScalarKind::Algebraic;
        default: return ScalarKind::Float;
    }
}

const mpq_class& Scalar::rational() const {
    if (const auto* q = std::get_if<mpq_class>(&v_)) return *q;
    throw error("Scalar: not a rational");
}

const FloatInterval& Scalar::interval() const {
    if (const auto* iv = std::get_if<FloatInterval>(&v_)) return *iv;
    throw error("Scalar: not a float interval");
}

const NumberField::Coeffs& Scalar::coeffs() const {
    if (const auto* a = std::get_if<Alg>(&v_)) return a->c;
    throw error("Scalar: not algebraic");
}

std::shared_ptr<const NumberField> Scalar::field() const {
    if (const auto* a = std::get_if<Alg>(&v_)) return a->field;
    return nullptr;
}

FloatInterval Scalar::to_interval(mpfr_prec_t prec) const {
    switch (kind()) {
        case ScalarKind::Rational: return FloatInterval::from_rational(rational(), prec);
        case ScalarKind::Algebraic: {
            const auto* a = std::get_if<Alg>(&v_);
            return alg_to_interval(a->field, a->c, prec);
        }
        default: return interval();
    }
}

namespace {

// lift a rational into a field's coefficient basis
NumberField::Coeffs lift(const mpq_class& q) { return {q, mpq_class(0), mpq_class(0)}; }

}  // namespace

#define ITMLAB_SCALAR_BINOP(OP, RATOP, FIELDCALL, IVCALL)                                        \
    Scalar operator OP(const Scalar& a, const Scalar& b) {                                      \
        const ScalarKind ka = a.kind(), kb = b.kind();                                          \
        if (ka == ScalarKind::Float || kb == ScalarKind::Float) {                               \
            const mpfr_prec_t p =                                                               \
                std::max(ka == ScalarKind::Float ? a.interval().prec() : mpfr_prec_t(2),        \
                         kb == ScalarKind::Float ? b.interval().prec() : mpfr_prec_t(2));       \
            return Scalar::floating(a.to_interval(p).IVCALL(b.to_interval(p)));                 \
        }                                                                                       \
        if (ka == ScalarKind::Algebraic || kb == ScalarKind::Algebraic) {                       \
            auto f = ka == ScalarKind::Algebraic ? a.field() : b.field();                       \
            if (ka == ScalarKind::Algebraic && kb == ScalarKind::Algebraic &&                   \
                a.field()->k() != b.field()->k())                                               \
                throw error("Scalar: mixing elements of different number fields");              \
            auto ca = ka == ScalarKind::Algebraic ? a.coeffs() : lift(a.rational());            \
            auto cb = kb == ScalarKind::Algebraic ? b.coeffs() : lift(b.rational());            \
            return Scalar::algebraic(f, FIELDCALL);                                             \
        }                                                                                       \
        return Scalar(mpq_class(a.rational() RATOP b.rational()));                              \
    }

ITMLAB_SCALAR_BINOP(+, +, f->add(ca, cb), add)
ITMLAB_SCALAR_BINOP(-, -, f->sub(ca, cb), sub)
ITMLAB_SCALAR_BINOP(*, *, f->mul(ca, cb), mul)
#undef ITMLAB_SCALAR_BINOP

Scalar operator/(const Scalar& a, const Scalar& b) {
    const ScalarKind ka = a.kind(), kb = b.kind();
    if (ka == ScalarKind::Float || kb == ScalarKind::Float) {
        const mpfr_prec_t p =
            std::max(ka == ScalarKind::Float ? a.interval().prec() : mpfr_prec_t(2),
                     kb == ScalarKind::Float ? b.interval().prec() : mpfr_prec_t(2));
        return Scalar::floating(a.to_interval(p).div(b.to_interval(p)));
    }
    if (kb == ScalarKind::Rational && b.rational() == 0) throw error("Scalar: division by zero");
    if (ka == ScalarKind::Algebraic || kb == ScalarKind::Algebraic) {
        auto f = ka == ScalarKind::Algebraic ? a.field() : b.field();
        if (ka == ScalarKind::Algebraic && kb == ScalarKind::Algebraic &&
            a.field()->k() != b.field()->k())
            throw error("Scalar: mixing elements of different number fields");
        auto ca = ka == ScalarKind::Algebraic ? a.coeffs() : lift(a.rational());
        auto cb = kb == ScalarKind::Algebraic ? b.coeffs() : lift(b.rational());
        return Scalar::algebraic(f, f->mul(ca, f->inverse(cb)));
    }
    return Scalar(mpq_class(a.rational() / b.rational()));
}

Scalar Scalar::operator-() const {
    switch (kind()) {
        case ScalarKind::Rational: return Scalar(mpq_class(-rational()));
        case ScalarKind::Algebraic: {
            const auto* a = std::get_if<Alg>(&v_);
            return Scalar::algebraic(a->field, a->field->neg(a->c));
        }
        default: return Scalar::floating(interval().neg());
    }
}

std::optional<int> Scalar::compare_to(const Scalar& o) const {
    const ScalarKind ka = kind(), kb = o.kind();
    if (ka == ScalarKind::Float || kb == ScalarKind::Float) {
        const mpfr_prec_t p =
            std::max(ka == ScalarKind::Float ? interval().prec() : mpfr_prec_t(2),
                     kb == ScalarKind::Float ? o.interval().prec() : mpfr_prec_t(2));
        return to_interval(p).compare(o.to_interval(p));
    }
    if (ka == ScalarKind::Rational && kb == ScalarKind::Rational)
        return cmp(rational(), o.rational());
    return (*this - o).sign();
}

int Scalar::demand(std::optional<int> c) {
    if (!c) throw indeterminate_error("Scalar comparison not certified at this precision");
    return *c;
}

int Scalar::sign() const {
    auto s = try_sign();
    if (!s) throw indeterminate_error("Scalar sign not certified at this precision");
    return *s;
}

std::optional<int> Scalar::try_sign() const {
    switch (kind()) {
        case ScalarKind::Rational: return sgn(rational());
        case ScalarKind::Algebraic: {
            const auto* a = std::get_if<Alg>(&v_);
            return a->field->sign(a->c);
        }
        default: {
            const FloatInterval& iv = interval();
            if (iv.lo().sign() > 0) return 1;
            if (iv.hi().sign() < 0) return -1;
            if (iv.is_point() && iv.lo().sign() == 0) return 0;
            return std::nullopt;
        }
    }
}

mpz_class Scalar::floor() const {
    auto f = try_floor();
    if (!f) throw indeterminate_error("Scalar floor not certified at this precision");
    return *f;
}

std::optional<mpz_class> Scalar::try_floor() const {
    switch (kind()) {
        case ScalarKind::Rational: {
            mpz_class z;
            mpz_fdiv_q(z.get_mpz_t(), rational().get_num_mpz_t(), rational().get_den_mpz_t());
            return z;
        }
        case ScalarKind::Algebraic: {
            // irrational (nonzero r-part), so the bounds eventually separate
            // from every integer
            const auto* a = std::get_if<Alg>(&v_);
            for (unsigned bits = 16;; bits *= 2) {
                auto [lo, hi] = a->field->bounds(a->c, bits);
                mpz_class flo, fhi;
                mpz_fdiv_q(flo.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
                mpz_fdiv_q(fhi.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
                if (flo == fhi) return flo;
                if (bits > 4096) throw error("Scalar::floor: algebraic refinement runaway");
            }
        }
        default: return interval().try_floor();
    }
}

Scalar Scalar::sqrt_enclosure(mpfr_prec_t prec) const {
    if (kind() == ScalarKind::Rational) {
        const mpq_class& q = rational();
        if (sgn(q) >= 0 && mpz_perfect_square_p(q.get_num_mpz_t()) &&
            mpz_perfect_square_p(q.get_den_mpz_t())) {
            mpq_class r;
            mpz_sqrt(r.get_num_mpz_t(), q.get_num_mpz_t());
            mpz_sqrt(r.get_den_mpz_t(), q.get_den_mpz_t());
            return Scalar(r);
        }
    }
    return Scalar::floating(to_interval(prec).sqrt());
}

double Scalar::to_double() const {
    switch (kind()) {
        case ScalarKind::Rational: return rational().get_d();
        case ScalarKind::Algebraic: {
            const auto* a = std::get_if<Alg>(&v_);
            return a->field->approx(a->c);
        }
        default: return interval().mid_double();
    }
}

std::string Scalar::str() const {
    switch (kind()) {
        case ScalarKind::Rational: return rational().get_str();
        case ScalarKind::Algebraic: {
            const auto* a = std::get_if<Alg>(&v_);
            return a->c[0].get_str() + " + " + a->c[1].get_str() + "*r + " + a->c[2].get_str() +
                   "*r^2, r = root_" + std::to_string(a->field->k());
        }
        default: return "[" + interval().lo().str() + ", " + interval().hi().str() + "]";
    }
}

bool Scalar::identical(const Scalar& o) const {
    if (kind() != o.kind()) return false;
    switch (kind()) {
        case ScalarKind::Rational: return rational() == o.rational();
        case ScalarKind::Algebraic: {
            const auto* a = std::get_if<Alg>(&v_);
            const auto* b = std::get_if<Alg>(&o.v_);
            return a->field->k() == b->field->k() && a->c[0] == b->c[0] && a->c[1] == b->c[1] &&
                   a->c[2] == b->c[2];
        }
        default: throw error("Scalar: float values are not hashable/identifiable");
    }
}

std::size_t hash_mpz(const mpz_class& z) {
    const std::size_t r = mpz_fdiv_ui(z.get_mpz_t(), 0x7fffffffffffffe7ULL);
    return sgn(z) < 0 ? ~r : r;
}

std::size_t hash_mpq(const mpq_class& q) {
    return hash_combine(hash_mpz(mpz_class(q.get_num())), hash_mpz(mpz_class(q.get_den())));
}

std::size_t hash_combine(std::size_t a, std::size_t b) {
    return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

std::size_t Scalar::hash() const {
    switch (kind()) {
        case ScalarKind::Rational: return hash_mpq(rational());
        case ScalarKind::Algebraic: {
            const auto* a = std::get_if<Alg>(&v_);
            std::size_t h = static_cast<std::size_t>(a->field->k());
            for (const auto& c : a->c) h = hash_combine(h, hash_mpq(c));
            return h;
        }
        default: throw error("Scalar: float values are not hashable");
    }
}

mpq_class parse_rational(const std::string& s) {
    std::string t;
    t.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw error("parse_rational: empty string");

    const auto slash = t.find('/');
    if (slash != std::string::npos) {
        mpq_class q;
        if (q.set_str(t, 10) != 0) throw error("parse_rational: bad fraction: " + s);
        if (q.get_den() == 0) throw error("parse_rational: zero denominator: " + s);
        q.canonicalize();
        return q;
    }

    // decimal with optional exponent: [-]digits[.digits][eE[-]digits]
    long exp10 = 0;
    std::string digits;
    size_t i = 0;
    if (t[i] == '+' || t[i] == '-') digits.push_back(t[i++]);
    bool seen_dot = false, seen_digit = false;
    for (; i < t.size(); ++i) {
        const char c = t[i];
        if (c == '.') {
            if (seen_dot) throw error("parse_rational: bad number: " + s);
            seen_dot = true;
        } else if (c == 'e' || c == 'E') {
            exp10 += std::stol(t.substr(i + 1));
            break;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot) --exp10;
        } else {
            throw error("parse_rational: bad character in number: " + s);
        }
    }
    if (!seen_digit) throw error("parse_rational: no digits: " + s);
    mpz_class num(digits, 10);
    mpq_class q(num);
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exp10)));
    if (exp10 >= 0)
        q *= mpq_class(p10);
    else
        q /= mpq_class(p10);
    q.canonicalize();
    return q;
}

}  // namespace itmlab
