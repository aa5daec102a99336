#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "itmlab/cubic.hpp"
#include "itmlab/dimension.hpp"
#include "itmlab/errors.hpp"
#include "itmlab/itm.hpp"
#include "itmlab/substitution.hpp"

using namespace itmlab;
using namespace itmlab::testing;

namespace {

Scalar bracket_alpha(long long k) {
    mpq_class tol(1, 1);
    tol >>= 160;
    return Scalar::floating(pk_roots(k, tol).middle.to_interval(128));
}

}  // namespace

TEST_CASE("cover_step matrix action on hand-checked states") {
    const Scalar alpha = bracket_alpha(3);
    CoverState s = cover_seed();
    CHECK(s.l == std::array<mpz_class, 3>{1, 0, 0});
    s = cover_step(s, 3, alpha);
    CHECK(s.l == std::array<mpz_class, 3>{0, 1, 2});
    s = cover_step(s, 3, alpha);
    CHECK(s.l == std::array<mpz_class, 3>{3, 0, 2});
    s = cover_step(s, 3, alpha);
    CHECK(s.l == std::array<mpz_class, 3>{2, 3, 8});
    CHECK(s.depth == 3);
    // -log pi = 3 * (-log r_3)
    CHECK(s.log_pi.mid_double() == doctest::Approx(-3.0 * std::log(0.3111078)).epsilon(1e-5));

    CHECK_THROWS_AS(cover_step(s, 2, alpha), error);  // alpha not in cell 2
}

TEST_CASE("characteristic polynomial of the cover matrix is -P_k") {
    for (long long k = 1; k <= 100; ++k) {
        const CountMatrix m = {{{0, 1, 1}, {1, 0, 0}, {mpz_of(k - 1), 0, 1}}};
        const auto c = characteristic_cubic(m);
        CHECK(c[3] == -1);
        CHECK(c[2] == 1);
        CHECK(c[1] == static_cast<long>(k));
        CHECK(c[0] == -1);
    }
}

TEST_CASE("cover sums grow at the top-root rate") {
    const Scalar alpha = bracket_alpha(3);
    CoverState s = cover_seed();
    mpz_class prev = 1;
    double ratio = 0;
    for (int depth = 1; depth <= 61; ++depth) {
        s = cover_step(s, 3, alpha);
        if (depth >= 60) {
            ratio = mpq_class(s.sum(), prev).get_d();
            if (depth == 61) break;
        }
        prev = s.sum();
    }
    const double rbar3 = cubic_roots_oracle(3.0)[2];
    CHECK(std::abs(ratio - rbar3) < 1e-6);
}

TEST_CASE("fixed-point dimensions against the closed-form oracle") {
    const auto o3 = cubic_roots_oracle(3.0);
    const double want3 = -std::log(o3[2]) / std::log(o3[1]);
    const Scalar d3 = fixed_point_dimension(3, 1e-10);
    CHECK(d3.to_double() == doctest::Approx(want3).epsilon(1e-9));
    CHECK(d3.to_double() == doctest::Approx(0.6635).epsilon(5e-4));

    const auto o2 = cubic_roots_oracle(2.0);
    const double want2 = -std::log(o2[2]) / std::log(o2[1]);
    CHECK(fixed_point_dimension(2, 1e-10).to_double() == doctest::Approx(want2).epsilon(1e-9));
    CHECK(want2 == doctest::Approx(0.72737).epsilon(1e-4));

    // the large-k limit is 1/2
    const Scalar dbig = fixed_point_dimension(1000000, 1e-9);
    CHECK(dbig.to_double() > 0.5);
    CHECK(dbig.to_double() < 0.501);

    CHECK_THROWS_AS(fixed_point_dimension(1), error);
}

TEST_CASE("constant-k cover report converges to the fixed-point dimension") {
    const DimensionReport rep = box_dim_constant_k(3, 200);
    REQUIRE(rep.rows.size() == 200);
    const double fp = fixed_point_dimension(3, 1e-10).to_double();
    CHECK(std::abs(rep.final_bound - fp) < 1e-3);
    CHECK(rep.limsup_estimate >= rep.final_bound);
    for (const auto& row : rep.rows) {
        CHECK(row.quotient() <= 1.0);
        CHECK(row.quotient() >= 0.0);
    }
    // monotone from above after the transient
    for (std::size_t i = 100; i < rep.rows.size(); ++i)
        CHECK(rep.rows[i].quotient() <= rep.rows[i - 1].quotient() + 1e-12);
}

TEST_CASE("every constant-k bound stays below the universal constant") {
    const mpq_class tol(1, mpz_class("10000000000000000"));
    const double rho = std::log(pk_roots(2, tol).upper.mid_double()) / std::log(2.0);
    for (long long k : {2LL, 3LL, 5LL, 9LL, 12LL}) {
        const DimensionReport rep = box_dim_constant_k(k, 150);
        CHECK(rep.final_bound <= rho + 5e-5);
    }
    // very large k: dimension just above 1/2
    const DimensionReport big = box_dim_constant_k(10000, 200);
    CHECK(big.final_bound >= 0.5);
    CHECK(big.final_bound <= 0.52);
}

TEST_CASE("mixed prefixes run through the per-parameter interface") {
    // alphas must sit in the right cells; use the fixed-point brackets
    const Scalar a3 = bracket_alpha(3), a2 = bracket_alpha(2);
    const std::vector<long long> ks = {3, 2, 3, 2, 3, 2, 3, 2};
    const std::vector<Scalar> alphas = {a3, a2, a3, a2, a3, a2, a3, a2};
    const DimensionReport rep = box_dim_upper_bound(ks, alphas);
    CHECK(rep.rows.size() == 8);
    for (const auto& row : rep.rows) CHECK(row.quotient() <= 1.0);
}

TEST_CASE("attractor measure tracks the cover length scale at matched depths") {
    // at the cell-3 fixed point, compare measure(Omega_{n(i)}) with the total
    // cover length pi_i (l1 (1-a) + l2 (a-b) + l3 a); n(i) = sum l_i is the
    // return time of the point 1 at induction depth i.  Both decay like
    // (r rbar)^i; the measured ratio sits around 2 and stays bounded.
    const Scalar r = middle_root(3);
    const ItmParams p = ItmParams::make(r, r * r);
    std::array<mpz_class, 3> l = {1, 0, 0};
    IntervalSet cur = IntervalSet::unit();
    std::size_t n_done = 0;
    Scalar pi(1);
    for (int i = 1; i <= 5; ++i) {
        l = {l[1] + l[2], l[0], 2 * l[0] + l[2]};
        const mpz_class total_l = l[0] + l[1] + l[2];
        const std::size_t n_i = static_cast<std::size_t>(total_l.get_ui());
        while (n_done < n_i) {
            cur = attractor_step(p, cur);
            ++n_done;
        }
        pi = pi * r;
        const Scalar bound = pi * (Scalar(mpq_class(l[0])) * (Scalar(1) - r) +
                                   Scalar(mpq_class(l[1])) * (r - r * r) +
                                   Scalar(mpq_class(l[2])) * r);
        const double ratio = cur.total_measure().to_double() / bound.to_double();
        CHECK(ratio > 1.5);
        CHECK(ratio < 3.0);
    }
}

TEST_CASE("dimension-zero inequality: checker and recipe") {
    // no smallness: fails outright
    {
        const Hd0Result r = hd0_inequality_check(
            mpz_class(10), Scalar::ratio(1, 10), Scalar::ratio(1, 3), Scalar::ratio(3, 10),
            Scalar::ratio(1, 10), 3);
        CHECK(!r.holds);
        CHECK(r.lhs > 1.0);
    }
    // the construction recipe: alpha = 1/k - eps, beta = k eps + eps'.
    // eps' must be *extremely* small against floor(alpha/beta) ~ 1/(k^2 eps):
    // the term N floor(alpha/beta) (pi eps')^(1/i) only drops below 1 once
    // eps' << (k^2 eps / N)^i.  At eps = 1e-12, i = 5, N = 100 that needs
    // eps' around 1e-65; 1e-24 is far too large.
    {
        const Hd0Preset p =
            hd0_recipe(3, Scalar(parse_rational("1e-12")), Scalar(parse_rational("1e-24")));
        const Hd0Result r =
            hd0_inequality_check(mpz_class(100), Scalar::ratio(1, 1000), p.alpha, p.beta,
                                 p.beta_next, 5);
        CHECK(!r.holds);
        CHECK(r.term2 > 1.0);
    }
    {
        const Hd0Preset p =
            hd0_recipe(3, Scalar(parse_rational("1e-12")), Scalar(parse_rational("1e-70")));
        const Hd0Result r =
            hd0_inequality_check(mpz_class(100), Scalar::ratio(1, 1000), p.alpha, p.beta,
                                 p.beta_next, 5);
        CHECK(r.holds);
        CHECK(r.slack > 0.0);
        CHECK(r.slack < 1.0);
    }
    // beta_next = eps'/alpha comes straight out of the induction formula
    {
        const Scalar eps = Scalar(parse_rational("1e-9")), epsp = Scalar(parse_rational("1e-30"));
        const Hd0Preset p = hd0_recipe(4, eps, epsp);
        const Scalar beta_next = (p.beta - Scalar(1)) / p.alpha + Scalar(4);
        CHECK((beta_next - p.beta_next).sign() == 0);
    }
}

TEST_CASE("shrinking eps' never flips the inequality back to false") {
    const Scalar eps = Scalar(parse_rational("1e-12"));
    bool seen_true = false;
    for (int e = 24; e <= 100; e += 4) {
        const Hd0Preset p = hd0_recipe(3, eps, Scalar(parse_rational("1e-" + std::to_string(e))));
        const Hd0Result r = hd0_inequality_check(mpz_class(100), Scalar::ratio(1, 1000), p.alpha,
                                                 p.beta, p.beta_next, 5);
        if (seen_true) CHECK(r.holds);
        if (r.holds) seen_true = true;
    }
    CHECK(seen_true);
}
