#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "topodyn/basis.hpp"
#include "topodyn/rational.hpp"
#include "topodyn/region.hpp"

using namespace topodyn;

namespace {
Interval iv_open(long a, long b, long d) { return Interval::open(rat(a, d), rat(b, d)); }
}  // namespace

TEST_CASE("rational parsing and arithmetic") {
    CHECK(parse_rational("3/4") == rat(3, 4));
    CHECK(parse_rational("-1/2") == rat(-1, 2));
    CHECK(parse_rational("7") == rat(7));
    CHECK_THROWS_AS(parse_rational("3/0"), BadRational);
    CHECK_THROWS_AS(parse_rational("a/2"), BadRational);
    CHECK_THROWS_AS(parse_rational(""), BadRational);
    CHECK(to_string(rat(6, 8)) == "3/4");
    CHECK(floor_rat(rat(-1, 2)) == -1);
    CHECK(floor_rat(rat(5, 2)) == 2);
    CHECK(ceil_rat(rat(5, 2)) == 3);
    CHECK(mod1(rat(7, 3)) == rat(1, 3));
    CHECK(mod1(rat(-1, 3)) == rat(2, 3));
}

TEST_CASE("normalize merges overlapping intervals") {
    Space sp = Space::unit_interval();
    Region r = normalize_region(sp, std::vector<Interval>{iv_open(0, 1, 2), iv_open(1, 3, 4)});
    Region expect = normalize_region(sp, std::vector<Interval>{iv_open(0, 3, 4)});
    CHECK(r == expect);
    CHECK(r.parts.size() == 1);
}

TEST_CASE("normalize drops degenerate open intervals") {
    Space sp = Space::unit_interval();
    Region r = normalize_region(sp, std::vector<Interval>{Interval::open(rat(1, 2), rat(1, 2))});
    CHECK(r.is_empty());
}

TEST_CASE("cylinder containment absorption") {
    Space sp = Space::shift(2, false);
    Region r = normalize_region(
        sp, std::vector<Cylinder>{Cylinder{0, Word("01")}, Cylinder{0, Word("0")}});
    REQUIRE(r.cylinders.size() == 1);
    CHECK(r.cylinders[0].word == Word("0"));
}

TEST_CASE("normalize is idempotent and order-insensitive") {
    Space sp = Space::unit_interval();
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Interval> raw;
        int n = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < n; ++i) {
            long a = static_cast<long>(rng() % 33), b = static_cast<long>(rng() % 33);
            Interval iv{rat(std::min(a, b), 32), rat(std::max(a, b), 32), rng() % 2 == 0,
                        rng() % 2 == 0};
            raw.push_back(iv);
        }
        Region r1 = normalize_region(sp, raw);
        std::shuffle(raw.begin(), raw.end(), rng);
        Region r2 = normalize_region(sp, raw);
        CHECK(r1 == r2);
        // Re-normalizing the canonical parts is the identity.
        CHECK(normalize_region(sp, r1.parts) == r1);
        // Canonical parts are pairwise non-mergeable.
        for (size_t i = 0; i + 1 < r1.parts.size(); ++i)
            CHECK_FALSE(mergeable(r1.parts[i], r1.parts[i + 1]));
    }
}

TEST_CASE("region_contains on interval regions") {
    Space sp = Space::unit_interval();
    Region r = normalize_region(sp, std::vector<Interval>{iv_open(0, 1, 2)});
    CHECK(region_contains(r, Point::scalar(sp, rat(1, 4))) == Tri::Yes);
    CHECK(region_contains(r, Point::scalar(sp, rat(1, 2))) == Tri::No);
    Space other = Space::circle();
    CHECK_THROWS_AS(region_contains(r, Point::scalar(other, rat(1, 4))), SpaceMismatch);
}

TEST_CASE("approximate circle point straddling a boundary is Undetermined") {
    Space sp = Space::circle();
    Region r = normalize_region(sp, std::vector<Interval>{Interval::open(rat(49, 100), rat(51, 100))});
    CHECK(region_contains(r, Point::circle_approx(rat(1, 2), rat(1, 100))) == Tri::Undetermined);
    CHECK(region_contains(r, Point::circle_approx(rat(1, 2), rat(1, 1000))) == Tri::Yes);
    CHECK(region_contains(r, Point::circle_approx(rat(9, 10), rat(1, 100))) == Tri::No);
}

TEST_CASE("region_contains agrees with brute-force membership") {
    Space sp = Space::unit_interval();
    Region r = normalize_region(sp, std::vector<Interval>{
                                        Interval::left_closed(rat(0), rat(1, 8)),
                                        iv_open(2, 3, 8),
                                        Interval::closed(rat(5, 8), rat(7, 8)),
                                    });
    auto brute = [&](const Rational& x) {
        return (rat(0) <= x && x < rat(1, 8)) || (rat(2, 8) < x && x < rat(3, 8)) ||
               (rat(5, 8) <= x && x <= rat(7, 8));
    };
    std::mt19937 rng(11);
    for (int i = 0; i < 1000; ++i) {
        long den = 1 + static_cast<long>(rng() % 512);
        long num = static_cast<long>(rng() % (den + 1));
        Rational x = rat(num, den);
        CHECK((region_contains(r, Point::scalar(sp, x)) == Tri::Yes) == brute(x));
    }
}

TEST_CASE("region set algebra") {
    Space sp = Space::unit_interval();
    Region a = normalize_region(sp, std::vector<Interval>{iv_open(0, 1, 2)});
    Region b = normalize_region(sp, std::vector<Interval>{iv_open(1, 3, 4)});
    CHECK(regions_intersect(a, b));
    Region c = region_intersect(a, b);
    CHECK(c == normalize_region(sp, std::vector<Interval>{iv_open(1, 2, 4)}));
    CHECK(region_is_whole(region_union(
        normalize_region(sp, std::vector<Interval>{Interval::closed(rat(0), rat(1, 2))}),
        normalize_region(sp, std::vector<Interval>{Interval::closed(rat(1, 2), rat(1))}))));
    Region comp = complement_closure(a);
    CHECK(comp == normalize_region(sp, std::vector<Interval>{
                                           Interval::point(rat(0)),
                                           Interval::closed(rat(1, 2), rat(1)),
                                       }));
}

TEST_CASE("complement closure on the circle wraps at the seam") {
    Space sp = Space::circle();
    Region a = normalize_region(sp, std::vector<Interval>{Interval::closed(rat(0), rat(1, 2))});
    Region comp = complement_closure(a);
    CHECK(comp == normalize_region(sp, std::vector<Interval>{
                                           Interval::point(rat(0)),
                                           Interval::left_closed(rat(1, 2), rat(1)),
                                       }));
}

TEST_CASE("unit interval basis at eps=1/4") {
    Space sp = Space::unit_interval();
    auto bs = basis(sp, rat(1, 4));
    REQUIRE(!bs.empty());
    CHECK(bs.front().parts.front().lo == rat(0));
    CHECK(bs.front().parts.front().lo_closed);
    CHECK(bs.back().parts.front().hi == rat(1));
    CHECK(bs.back().parts.front().hi_closed);
    for (const Region& r : bs) {
        const Interval& iv = r.parts.front();
        CHECK(iv.hi - iv.lo <= rat(1, 4));  // diameter bound
    }
    // Coverage: every grid point lies in at least one basis region.
    for (long k = 0; k <= 256; ++k) {
        Point p = Point::scalar(sp, rat(k, 256));
        bool hit = false;
        for (const Region& r : bs) hit = hit || region_contains(r, p) == Tri::Yes;
        CHECK(hit);
    }
}

TEST_CASE("full one-sided 2-shift basis uses cylinders of forced length") {
    Space sp = Space::shift(2, false);
    auto bs = basis(sp, rat(1, 8));
    REQUIRE(bs.size() == 8);  // 2^3 cylinders of length 3
    for (const Region& r : bs) {
        REQUIRE(r.cylinders.size() == 1);
        CHECK(r.cylinders[0].offset == 0);
        CHECK(r.cylinders[0].word.size() == 3);
    }
    // Two-sided basis is centered.
    auto bs2 = basis(Space::shift(2, true), rat(1, 4));
    for (const Region& r : bs2) {
        CHECK(r.cylinders[0].offset == -2);
        CHECK(r.cylinders[0].word.size() == 4);
    }
}

TEST_CASE("finite space basis: singletons plus tail neighborhoods of 0") {
    std::vector<Rational> values{rat(0)};
    for (int n = 1; n <= 16; ++n) values.push_back(rat(1, n));
    Space sp = Space::finite(values);
    auto bs = basis(sp, rat(1, 4));
    bool has_tail = false, has_singleton_1 = false;
    for (const Region& r : bs) {
        if (r.elems.size() == 1 &&
            sp.finite_values[static_cast<size_t>(r.elems[0])] == rat(1))
            has_singleton_1 = true;
        bool contains_zero = false;
        for (int e : r.elems)
            if (sp.finite_values[static_cast<size_t>(e)] == rat(0)) contains_zero = true;
        if (contains_zero && r.elems.size() > 1) has_tail = true;
    }
    CHECK(has_tail);
    CHECK(has_singleton_1);
    // Coverage of every point.
    for (size_t i = 0; i < values.size(); ++i) {
        bool hit = false;
        for (const Region& r : bs)
            hit = hit || region_contains(r, Point::finite(sp, static_cast<int>(i))) == Tri::Yes;
        CHECK(hit);
    }
}

TEST_CASE("ray basis covers 0 and infinity") {
    Space sp = Space::ray();
    auto bs = basis(sp, rat(1, 8));
    bool covers_zero = false, covers_inf = false;
    for (const Region& r : bs) {
        if (region_contains(r, Point::scalar(sp, rat(0))) == Tri::Yes) covers_zero = true;
        if (region_contains(r, Point::ray_infinity()) == Tri::Yes) covers_inf = true;
    }
    CHECK(covers_zero);
    CHECK(covers_inf);
}

TEST_CASE("mixed variants are rejected") {
    CHECK_THROWS_AS(normalize_region(Space::shift(2, false), std::vector<Interval>{}),
                    MixedVariant);
    CHECK_THROWS_AS(normalize_region(Space::unit_interval(), std::vector<Cylinder>{}),
                    MixedVariant);
}
