#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "itmlab/cubic.hpp"
#include "itmlab/errors.hpp"
#include "itmlab/gauss.hpp"
#include "itmlab/itm.hpp"

using namespace itmlab;
using namespace itmlab::testing;

namespace {

ItmParams params(long an, long ad, long bn, long bd) {
    return ItmParams::make(Scalar::ratio(an, ad), Scalar::ratio(bn, bd));
}

ItmParams fixed_point_params(long long k) {
    const Scalar r = middle_root(k);
    return ItmParams::make(r, r * r);
}

}  // namespace

TEST_CASE("itm_apply branch examples") {
    const ItmParams p = params(1, 2, 1, 4);
    auto s = itm_apply(p, Scalar::ratio(1, 10));
    CHECK(s.branch == 1);
    CHECK(s.y == Scalar::ratio(3, 5));
    s = itm_apply(p, Scalar::ratio(4, 5));
    CHECK(s.branch == 3);
    CHECK(s.y == Scalar::ratio(1, 20));
    // the point 1 maps to beta by the left-limit convention
    s = itm_apply(p, Scalar(1));
    CHECK(s.branch == 3);
    CHECK(s.y == Scalar::ratio(1, 4));
    CHECK_THROWS_AS(itm_apply(p, Scalar(2)), error);
    CHECK_THROWS_AS(itm_apply(p, Scalar(-1)), error);
}

TEST_CASE("region classification of parameters") {
    CHECK(params(1, 2, 1, 4).region == ItmRegion::InteriorU);
    CHECK(params(1, 2, 1, 2).region == ItmRegion::BoundaryRotation);
    CHECK(params(1, 1, 1, 3).region == ItmRegion::BoundaryRotation);
    CHECK(params(1, 2, 0, 1).region == ItmRegion::BoundaryBetaZero);
    CHECK(params(1, 4, 1, 2).region == ItmRegion::Invalid);  // beta > alpha
}

TEST_CASE("orbit examples and revisit detection") {
    // rotation by 1/2: 0, 1/2, 0, 1/2, 0 with period 2
    Orbit o = orbit(params(1, 2, 1, 2), Scalar(0), 4);
    REQUIRE(o.points.size() == 5);
    CHECK(o.points[1] == Scalar::ratio(1, 2));
    CHECK(o.points[2] == Scalar(0));
    REQUIRE(o.cycle.has_value());
    CHECK(o.cycle->first == 0);
    CHECK(o.cycle->second == 2);

    // three exact applications from the point 1
    o = orbit(params(1, 2, 1, 4), Scalar(1), 3);
    REQUIRE(o.points.size() == 4);
    CHECK(o.points[1] == Scalar::ratio(1, 4));
    CHECK(o.points[2] == Scalar::ratio(3, 4));
    CHECK(o.points[3] == Scalar(0));

    // alpha = 1 is a circle rotation by beta
    o = orbit(params(1, 1, 1, 3), Scalar::ratio(1, 4), 3);
    CHECK(o.points[1] == Scalar::ratio(7, 12));
    CHECK(o.points[2] == Scalar::ratio(11, 12));
    CHECK(o.points[3] == Scalar::ratio(1, 4));
    REQUIRE(o.cycle.has_value());
    CHECK(o.cycle->second == 3);
}

TEST_CASE("every orbit of a finite-type rational map shares one period") {
    const ItmParams p = params(2, 5, 1, 5);
    const Orbit first = orbit(p, Scalar(0), 200);
    REQUIRE(first.cycle.has_value());
    const std::size_t q = first.cycle->second;
    CHECK(q == 3);
    SplitMix64 rng(101);
    for (int i = 0; i < 100; ++i) {
        const Orbit o = orbit(p, Scalar(random_rational(rng, 997)), 400);
        REQUIRE(o.cycle.has_value());
        CHECK(o.cycle->second == q);
    }
}

TEST_CASE("itinerary starts at 3 and matches hand computation") {
    CHECK(itinerary(params(1, 2, 1, 4), 1).word == "3");
    CHECK(itinerary(params(1, 2, 1, 2), 4).word == "3313");
    CHECK(itinerary(fixed_point_params(3), 5).word == "31122");
}

TEST_CASE("itinerary prefixes are stable") {
    const ItmParams p = fixed_point_params(2);
    const std::string w40 = itinerary(p, 40).word;
    for (std::size_t n : {1u, 5u, 17u, 39u})
        CHECK(itinerary(p, n).word == w40.substr(0, n));
}

TEST_CASE("float-mode itinerary flags branch hits instead of guessing") {
    const mpfr_prec_t prec = 64;
    const Scalar a = Scalar::floating(FloatInterval::from_rational(mpq_class(1, 2), prec));
    const Scalar b = Scalar::floating(FloatInterval::from_rational(mpq_class(1, 4), prec));
    const ItmParams p = ItmParams::make(a, b);
    // x = 1 - alpha sits exactly on the discontinuity
    CHECK(!itm_try_apply(p, Scalar(1) - a).has_value());
    // the orbit of 1 for (1/2, 1/4): 1 -> 1/4 -> 3/4 = 1 - beta, a cut point
    const Itinerary it = itinerary(p, 10);
    REQUIRE(it.indeterminate_at.has_value());
    CHECK(*it.indeterminate_at == 2);
    CHECK(it.word == "31");
}

TEST_CASE("attractor_step examples") {
    const ItmParams p = params(1, 2, 1, 4);
    IntervalSet s = attractor_step(p, IntervalSet::unit());
    REQUIRE(s.components() == 2);
    CHECK(s.intervals()[0].first == Scalar(0));
    CHECK(s.intervals()[0].second == Scalar::ratio(1, 4));
    CHECK(s.intervals()[1].first == Scalar::ratio(1, 2));
    CHECK(s.intervals()[1].second == Scalar(1));
    CHECK(s.total_measure() == Scalar::ratio(3, 4));

    // rotations are onto
    const IntervalSet full = attractor_step(params(2, 3, 2, 3), IntervalSet::unit());
    CHECK(full.equals(IntervalSet::unit()));

    // single-branch translation
    const IntervalSet one = attractor_step(p, IntervalSet::single(Scalar(0), Scalar::ratio(1, 4)));
    REQUIRE(one.components() == 1);
    CHECK(one.intervals()[0].first == Scalar::ratio(1, 2));
    CHECK(one.intervals()[0].second == Scalar::ratio(3, 4));
}

TEST_CASE("first image measure: beta + 1 - max(alpha, 1 - alpha + beta)... plus beta") {
    // T([0,1)) = [0, beta) u [min(alpha, 1-alpha+beta), 1), so the measure is
    // beta + 1 - min(alpha, 1-alpha+beta); this equals beta + 1 - alpha
    // exactly when beta >= 2 alpha - 1 (always for alpha <= 1/2)
    SplitMix64 rng(31);
    int plain = 0;
    for (int i = 0; i < 120; ++i) {
        const mpq_class a = random_in(rng, mpq_class(1, 50), mpq_class(49, 50));
        const mpq_class b = random_in(rng, a / 100, a * mpq_class(99, 100));
        const ItmParams p = ItmParams::make(Scalar(a), Scalar(b));
        if (p.region != ItmRegion::InteriorU) continue;
        const IntervalSet s = attractor_step(p, IntervalSet::unit());
        const Scalar left =
            (Scalar(a) < Scalar(1) - Scalar(a) + Scalar(b)) ? Scalar(a)
                                                            : Scalar(1) - Scalar(a) + Scalar(b);
        CHECK(s.total_measure() == Scalar(b) + Scalar(1) - left);
        if (b >= 2 * a - 1) {
            CHECK(s.total_measure() == Scalar(b) + Scalar(1) - Scalar(a));
            ++plain;
        }
    }
    CHECK(plain > 20);
}

TEST_CASE("attractor iteration: rotations stabilize immediately") {
    const AttractorReport r = attractor_iterate(params(1, 2, 1, 2), 5);
    REQUIRE(r.stabilized_at.has_value());
    CHECK(*r.stabilized_at == 0);
    CHECK(r.rows[0].measure == Scalar(1));
}

TEST_CASE("attractor iteration: finite type stabilizes, measures nonincreasing") {
    const AttractorReport r = attractor_iterate(params(1, 2, 1, 4), 20);
    REQUIRE(r.stabilized_at.has_value());
    CHECK(*r.stabilized_at == 1);
    CHECK(r.rows[1].measure == Scalar::ratio(3, 4));
    for (std::size_t i = 1; i < r.rows.size(); ++i)
        CHECK(r.rows[i].measure <= r.rows[i - 1].measure);
    // the stabilized set is a bijection under T: its image is itself
    CHECK(attractor_step(params(1, 2, 1, 4), r.final_set).equals(r.final_set));
}

TEST_CASE("attractor iteration at the k = 3 fixed point never stabilizes") {
    const ItmParams p = fixed_point_params(3);
    const AttractorReport r = attractor_iterate(p, 8);
    CHECK(!r.stabilized_at.has_value());
    for (std::size_t i = 1; i < r.rows.size(); ++i)
        CHECK(r.rows[i].measure < r.rows[i - 1].measure);
    CHECK(r.rows.back().components > 4);
}

TEST_CASE("forward images are nested once inside the first image") {
    SplitMix64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const mpq_class a = random_in(rng, mpq_class(1, 20), mpq_class(19, 20));
        const mpq_class b = random_in(rng, a / 50, a * mpq_class(49, 50));
        const ItmParams p = ItmParams::make(Scalar(a), Scalar(b));
        if (p.region != ItmRegion::InteriorU) continue;
        IntervalSet cur = IntervalSet::unit();
        for (int n = 0; n < 12; ++n) {
            IntervalSet next = attractor_step(p, cur);
            CHECK(next.subset_of(cur));
            cur = std::move(next);
        }
    }
}

TEST_CASE("component cap aborts with a partial report") {
    const AttractorReport r = attractor_iterate(fixed_point_params(3), 200, 12);
    CHECK(r.hit_component_cap);
    CHECK(!r.stabilized_at.has_value());
    CHECK(r.rows.size() < 200);
}

TEST_CASE("interval set algebra") {
    IntervalSet s = IntervalSet::from_pieces({{Scalar::ratio(1, 2), Scalar::ratio(3, 4)},
                                              {Scalar(0), Scalar::ratio(1, 4)},
                                              {Scalar::ratio(1, 4), Scalar::ratio(1, 2)}});
    CHECK(s.components() == 1);  // abutting pieces merge
    CHECK(s.total_measure() == Scalar::ratio(3, 4));
    CHECK(s.contains_point(Scalar(0)));
    CHECK(!s.contains_point(Scalar::ratio(3, 4)));  // half-open
    const IntervalSet cut = s.intersect(Scalar::ratio(1, 8), Scalar::ratio(1, 3));
    CHECK(cut.total_measure() == Scalar::ratio(1, 3) - Scalar::ratio(1, 8));
    CHECK(cut.subset_of(s));
    CHECK(!s.subset_of(cut));
}
