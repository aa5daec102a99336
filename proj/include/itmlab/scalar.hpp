#ifndef ITMLAB_SCALAR_HPP
#define ITMLAB_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "itmlab/bigfloat.hpp"
#include "itmlab/number_field.hpp"

namespace itmlab {

enum class ScalarKind { Rational, Algebraic, Float };

// gmpxx has no long long constructors; long is 64-bit on every platform we
// build for, so these casts are lossless.
inline mpz_class mpz_of(long long v) { return mpz_class(static_cast<long>(v)); }
inline mpq_class mpq_of(long long v) { return mpq_class(static_cast<long>(v)); }

// One number, in one of three representations:
//   Rational  — exact mpq, always in lowest terms;
//   Algebraic — exact element of Q(r_k), r_k the middle root of
//               x^3 - x^2 - k x + 1;
//   Float     — certified enclosure [lo, hi] at p bits.
// Rational and Algebraic are the "Exact mode": all operations and
// comparisons are error-free and total.  Float-mode comparisons that the
// enclosure cannot decide raise indeterminate_error (or return nullopt from
// the try_ variants) instead of guessing.
//
// Mixing rules: Rational op Algebraic lifts the rational into the field;
// two Algebraic values must share a field; Float absorbs everything else.
// Algebraic values whose r and r^2 coefficients vanish demote to Rational,
// so structurally equal numbers hash equal across an orbit.
class Scalar {
public:
    Scalar() : v_(mpq_class(0)) {}
    Scalar(long v) : v_(mpq_class(v)) {}
    Scalar(const mpq_class& q) : v_(q) { canonicalize(); }
    Scalar(mpq_class&& q) : v_(std::move(q)) { canonicalize(); }

    static Scalar ratio(long num, long den);
    static Scalar algebraic(std::shared_ptr<const NumberField> field, NumberField::Coeffs c);
    // r_k itself as an element of its field
    static Scalar field_root(std::shared_ptr<const NumberField> field);
    static Scalar floating(FloatInterval iv) { return Scalar(std::move(iv)); }

    ScalarKind kind() const;
    bool is_exact() const { return kind() != ScalarKind::Float; }

    const mpq_class& rational() const;
    const FloatInterval& interval() const;
    const NumberField::Coeffs& coeffs() const;
    std::shared_ptr<const NumberField> field() const;

    // Certified enclosure of the value at the given precision (any kind).
    FloatInterval to_interval(mpfr_prec_t prec) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar operator-() const;

    // three-way comparison; nullopt = float-mode indeterminate
    std::optional<int> compare_to(const Scalar& o) const;
    bool operator<(const Scalar& o) const { return demand(compare_to(o)) < 0; }
    bool operator<=(const Scalar& o) const { return demand(compare_to(o)) <= 0; }
    bool operator>(const Scalar& o) const { return demand(compare_to(o)) > 0; }
    bool operator>=(const Scalar& o) const { return demand(compare_to(o)) >= 0; }
    bool operator==(const Scalar& o) const { return demand(compare_to(o)) == 0; }
    bool operator!=(const Scalar& o) const { return demand(compare_to(o)) != 0; }

    int sign() const;
    std::optional<int> try_sign() const;

    mpz_class floor() const;
    std::optional<mpz_class> try_floor() const;

    Scalar sqrt_enclosure(mpfr_prec_t prec) const;

    double to_double() const;
    std::string str() const;

    // structural equality / hashing for exact values (orbit revisit maps);
    // Float values are not hashable
    bool identical(const Scalar& o) const;
    std::size_t hash() const;

private:
    explicit Scalar(FloatInterval iv) : v_(std::move(iv)) {}
    struct Alg {
        std::shared_ptr<const NumberField> field;
        NumberField::Coeffs c;
    };
    explicit Scalar(Alg a) : v_(std::move(a)) {}

    void canonicalize();
    static int demand(std::optional<int> c);

    std::variant<mpq_class, Alg, FloatInterval> v_;
};

// "2/5", "0.5", "-1.25e-3", "7" all parse as exact rationals.
mpq_class parse_rational(const std::string& s);

std::size_t hash_mpz(const mpz_class& z);
std::size_t hash_mpq(const mpq_class& q);
std::size_t hash_combine(std::size_t a, std::size_t b);

}  // namespace itmlab

#endif
