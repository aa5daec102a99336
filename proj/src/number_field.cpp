#include "itmlab/number_field.hpp"

#include <map>
#include <vector>

#include "itmlab/errors.hpp"

namespace itmlab {

namespace {

mpq_class eval_pk(long long k, const mpq_class& x) {
    return x * x * x - x * x - mpq_class(static_cast<long>(k)) * x + 1;
}

// c * [a,b] for a <= b
void scale_interval(const mpq_class& c, const mpq_class& a, const mpq_class& b, mpq_class& lo,
                    mpq_class& hi) {
    if (c >= 0) {
        lo = c * a;
        hi = c * b;
    } else {
        lo = c * b;
        hi = c * a;
    }
}

std::map<long long, std::weak_ptr<NumberField>>& registry() {
    static std::map<long long, std::weak_ptr<NumberField>> reg;
    return reg;
}

std::mutex& registry_mutex() {
    static std::mutex mu;
    return mu;
}

}  // namespace

NumberField::NumberField(long long k) : k_(k) {
    lo_ = mpq_class(1, static_cast<long>(k + 1));
    hi_ = mpq_class(1, static_cast<long>(k));
    // sign pattern of the middle-root bracket: + at lo, - at hi
    if (!(eval_pk(k_, lo_) > 0 && eval_pk(k_, hi_) < 0))
        throw error("NumberField: bracket sign pattern failed (k < 2?)");
}

std::shared_ptr<const NumberField> NumberField::middle_root_field(long long k) {
    if (k < 2) throw error("NumberField requires k >= 2 (k = 1 is the degenerate double root)");
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto& slot = registry()[k];
    if (auto f = slot.lock()) return f;
    std::shared_ptr<NumberField> f(new NumberField(k));
    slot = f;
    return f;
}

NumberField::Coeffs NumberField::add(const Coeffs& a, const Coeffs& b) const {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

NumberField::Coeffs NumberField::sub(const Coeffs& a, const Coeffs& b) const {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

NumberField::Coeffs NumberField::neg(const Coeffs& a) const { return {-a[0], -a[1], -a[2]}; }

NumberField::Coeffs NumberField::mul(const Coeffs& a, const Coeffs& b) const {
    // degree-4 product, then reduce with r^3 = r^2 + k r - 1 and
    // r^4 = (k+1) r^2 + (k-1) r - 1
    const mpq_class e0 = a[0] * b[0];
    const mpq_class e1 = a[0] * b[1] + a[1] * b[0];
    const mpq_class e2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0];
    const mpq_class e3 = a[1] * b[2] + a[2] * b[1];
    const mpq_class e4 = a[2] * b[2];
    const mpq_class k(static_cast<long>(k_));
    return {e0 - e3 - e4, e1 + k * e3 + (k - 1) * e4, e2 + e3 + (k + 1) * e4};
}

NumberField::Coeffs NumberField::inverse(const Coeffs& a) const {
    if (a[0] == 0 && a[1] == 0 && a[2] == 0) throw error("NumberField: inverse of zero");
    // extended Euclid in Q[x] for gcd(a, P_k) = 1; P_k irreducible so the
    // gcd is a nonzero constant
    using Poly = std::vector<mpq_class>;
    auto deg = [](const Poly& p) {
        int d = static_cast<int>(p.size()) - 1;
        while (d >= 0 && p[static_cast<size_t>(d)] == 0) --d;
        return d;
    };
    Poly r0 = {1, mpq_class(static_cast<long>(-k_)), -1, 1};  // P_k, ascending coefficients
    Poly r1 = {a[0], a[1], a[2]};
    Poly s0 = {0}, s1 = {1};  // Bezout coefficients for the second argument
    while (deg(r1) > 0) {
        const int d0 = deg(r0), d1 = deg(r1);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(s0, s1);
            continue;
        }
        // r0 -= (lead0/lead1) x^(d0-d1) * r1, same for s
        const mpq_class f = r0[static_cast<size_t>(d0)] / r1[static_cast<size_t>(d1)];
        const int shift = d0 - d1;
        auto submul = [&](Poly& dst, const Poly& src) {
            const size_t need = static_cast<size_t>(deg(src) + shift + 1);
            if (dst.size() < need) dst.resize(need, mpq_class(0));
            for (int i = 0; i <= deg(src); ++i)
                dst[static_cast<size_t>(i + shift)] -= f * src[static_cast<size_t>(i)];
        };
        submul(r0, r1);
        submul(s0, s1);
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    if (deg(r1) != 0) throw error("NumberField: element not invertible (zero mod P_k)");
    const mpq_class c = r1[0];
    Coeffs out = {0, 0, 0};
    for (size_t i = 0; i < s1.size() && i < 6; ++i) {
        if (s1[i] == 0) continue;
        // fold x^i into the basis (i <= 2 after reduction below)
        if (i < 3) {
            out[i] += s1[i] / c;
        } else {
            // s1 can pick up degree 3..4 terms before final reduction
            Coeffs pow = (i == 3)
                             ? Coeffs{-1, mpq_class(static_cast<long>(k_)), 1}
                             : Coeffs{-1, mpq_class(static_cast<long>(k_ - 1)),
                                      mpq_class(static_cast<long>(k_ + 1))};
            for (int j = 0; j < 3; ++j) out[static_cast<size_t>(j)] += (s1[i] / c) * pow[static_cast<size_t>(j)];
        }
    }
    return out;
}

std::pair<mpq_class, mpq_class> NumberField::eval_bounds_locked(const Coeffs& a) const {
    const mpq_class sq_lo = lo_ * lo_, sq_hi = hi_ * hi_;  // 0 < lo < hi
    mpq_class l1, h1, l2, h2;
    scale_interval(a[1], lo_, hi_, l1, h1);
    scale_interval(a[2], sq_lo, sq_hi, l2, h2);
    return {a[0] + l1 + l2, a[0] + h1 + h2};
}

void NumberField::refine_once_locked() const {
    const mpq_class mid = (lo_ + hi_) / 2;
    if (eval_pk(k_, mid) > 0)
        lo_ = mid;
    else
        hi_ = mid;
    ++halvings_;
}

int NumberField::sign(const Coeffs& a) const {
    if (a[0] == 0 && a[1] == 0 && a[2] == 0) return 0;
    if (a[1] == 0 && a[2] == 0) return sgn(a[0]);
    std::lock_guard<std::mutex> lock(mu_);
    for (;;) {
        auto [vlo, vhi] = eval_bounds_locked(a);
        if (vlo > 0) return 1;
        if (vhi < 0) return -1;
        refine_once_locked();
    }
}

std::pair<mpq_class, mpq_class> NumberField::bounds(const Coeffs& a, unsigned min_bits) const {
    std::lock_guard<std::mutex> lock(mu_);
    mpq_class tol;
    for (;;) {
        auto [vlo, vhi] = eval_bounds_locked(a);
        mpq_class mag = std::max(abs(vlo), abs(vhi));
        if (mag < 1) mag = 1;
        tol = mag >> min_bits;
        if (vhi - vlo <= tol) return {vlo, vhi};
        refine_once_locked();
    }
}

std::pair<mpq_class, mpq_class> NumberField::root_bracket(unsigned min_halvings) const {
    std::lock_guard<std::mutex> lock(mu_);
    while (halvings_ < min_halvings) refine_once_locked();
    return {lo_, hi_};
}

double NumberField::approx(const Coeffs& a) const {
    auto [vlo, vhi] = bounds(a, 60);
    return 0.5 * (vlo.get_d() + vhi.get_d());
}

}  // namespace itmlab
