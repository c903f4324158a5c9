#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "topodyn/basis.hpp"
#include "topodyn/pl_map.hpp"

using namespace topodyn;

namespace {
Region iv_region(const Space& sp, Interval iv) {
    return normalize_region(sp, std::vector<Interval>{iv});
}
}  // namespace

TEST_CASE("tent builtin shape") {
    PLMap tent = builtin_maps::tent();
    CHECK(tent.breaks == std::vector<Rational>{rat(0), rat(1, 2), rat(1)});
    CHECK(tent.values == std::vector<Rational>{rat(0), rat(1), rat(0)});
    CHECK(tent.eval(rat(2, 3)) == rat(2, 3));
    CHECK(pl_surjective(tent));
}

TEST_CASE("tent image of (2/5,3/5)") {
    PLMap tent = builtin_maps::tent();
    Space sp = tent.domain_space();
    Region u = iv_region(sp, Interval::open(rat(2, 5), rat(3, 5)));

    Region i1 = pl_image(tent, u);
    CHECK(i1 == iv_region(sp, Interval::right_closed(rat(4, 5), rat(1))));

    // Exact iteration oracle: image becomes all of [0,1] first at n = 4.
    CHECK(pl_image_n(tent, u, 3) ==
          iv_region(sp, Interval::left_closed(rat(0), rat(4, 5))));
    CHECK(region_is_whole(pl_image_n(tent, u, 4)));
    for (long n = 1; n <= 3; ++n) CHECK_FALSE(region_is_whole(pl_image_n(tent, u, n)));

    CHECK(pl_image(tent, empty_region(sp)).is_empty());
}

TEST_CASE("point iteration lands in exact images") {
    // Independent oracle: sampled points iterated directly by evaluation.
    PLMap tent = builtin_maps::tent();
    Space sp = tent.domain_space();
    Region u = iv_region(sp, Interval::open(rat(2, 5), rat(3, 5)));
    std::mt19937 rng(23);
    for (int i = 0; i < 200; ++i) {
        long den = 5 * (2 + static_cast<long>(rng() % 2000));
        long lo = 2 * den / 5, hi = 3 * den / 5;
        Rational x = rat(lo + 1 + static_cast<long>(rng() % std::max(1l, hi - lo - 1)), den);
        if (!(x > rat(2, 5) && x < rat(3, 5))) continue;
        long n = 1 + static_cast<long>(rng() % 6);
        Rational y = x;
        for (long k = 0; k < n; ++k) y = tent.eval(y);
        CHECK(region_contains(pl_image_n(tent, u, n), Point::scalar(sp, y)) == Tri::Yes);
    }
}

TEST_CASE("tent preimage of (1/2,1)") {
    PLMap tent = builtin_maps::tent();
    Space sp = tent.domain_space();
    Region v = iv_region(sp, Interval::open(rat(1, 2), rat(1)));
    Region pre = pl_preimage(tent, v);
    Region expect = normalize_region(sp, std::vector<Interval>{
                                             Interval::open(rat(1, 4), rat(1, 2)),
                                             Interval::open(rat(1, 2), rat(3, 4)),
                                         });
    CHECK(pre == expect);
}

TEST_CASE("doubling preimage of (0,1/2)") {
    PLMap dbl = builtin_maps::doubling();
    Space sp = dbl.domain_space();
    Region v = iv_region(sp, Interval::open(rat(0), rat(1, 2)));
    Region pre = pl_preimage(dbl, v);
    Region expect = normalize_region(sp, std::vector<Interval>{
                                             Interval::open(rat(0), rat(1, 4)),
                                             Interval::open(rat(1, 2), rat(3, 4)),
                                         });
    CHECK(pre == expect);
}

TEST_CASE("constant map preimage of a region missing the value") {
    PLMap c({rat(0), rat(1)}, {rat(1, 3), rat(1, 3)}, false);
    Space sp = c.domain_space();
    CHECK(pl_preimage(c, iv_region(sp, Interval::open(rat(1, 2), rat(1)))).is_empty());
    CHECK(region_is_whole(
        pl_preimage(c, iv_region(sp, Interval::open(rat(1, 4), rat(1, 2))))));
}

TEST_CASE("preimage duality on a rational grid") {
    for (const PLMap& f : {builtin_maps::tent(), builtin_maps::swap_halves()}) {
        Space sp = f.domain_space();
        Region r = normalize_region(sp, std::vector<Interval>{
                                            Interval::open(rat(1, 8), rat(3, 8)),
                                            Interval::closed(rat(2, 3), rat(5, 6)),
                                        });
        Region pre = pl_preimage(f, r);
        for (long k = 0; k <= 240; ++k) {
            Rational x = rat(k, 240);
            bool in_pre = region_contains(pre, Point::scalar(sp, x)) == Tri::Yes;
            bool maps_in = region_contains(r, Point::scalar(sp, f.eval(x))) == Tri::Yes;
            CHECK(in_pre == maps_in);
        }
    }
    // Circle case.
    PLMap dbl = builtin_maps::doubling();
    Space sp = dbl.domain_space();
    Region r = normalize_region(sp, std::vector<Interval>{Interval::open(rat(1, 3), rat(2, 3))});
    Region pre = pl_preimage(dbl, r);
    for (long k = 0; k < 240; ++k) {
        Rational x = rat(k, 240);
        bool in_pre = region_contains(pre, Point::scalar(sp, x)) == Tri::Yes;
        bool maps_in = region_contains(r, Point::scalar(sp, dbl.eval(x))) == Tri::Yes;
        CHECK(in_pre == maps_in);
    }
}

TEST_CASE("tent is locally eventually onto on every basis region") {
    PLMap tent = builtin_maps::tent();
    Space sp = tent.domain_space();
    for (long d : {4l, 8l, 16l}) {
        for (const Region& u : basis(sp, rat(1, d))) {
            bool found = false;
            Region cur = u;
            for (long n = 1; n <= 16 && !found; ++n) {
                cur = pl_image(tent, cur);
                found = region_is_whole(cur);
            }
            CHECK(found);
        }
    }
}

TEST_CASE("swap map alternates the two halves") {
    PLMap sw = builtin_maps::swap_halves();
    Space sp = sw.domain_space();
    Region u = iv_region(sp, Interval::open(rat(0), rat(1, 2)));
    CHECK(pl_image(sw, u) == iv_region(sp, Interval::right_closed(rat(1, 2), rat(1))));

    Region lower = iv_region(sp, Interval::closed(rat(0), rat(1, 2)));
    Region upper = iv_region(sp, Interval::closed(rat(1, 2), rat(1)));
    CHECK(pl_image(sw, lower) == upper);
    CHECK(pl_image(sw, upper) == lower);

    Region cur = u;
    for (long n = 1; n <= 64; ++n) {
        cur = pl_image(sw, cur);
        const Region& half = (n % 2 == 1) ? upper : lower;
        for (const Interval& part : cur.parts) CHECK(part.subset_of(half.parts.front()));
    }
}

TEST_CASE("swap square restricted to the lower half is conjugate to tent") {
    PLMap sw = builtin_maps::swap_halves();
    PLMap sq = pl_compose(sw, sw);
    PLMap phi({rat(0), rat(1)}, {rat(1, 2), rat(0)}, false);  // x -> 1/2 - x/2
    CHECK(pl_compose(sq, phi) == pl_compose(phi, builtin_maps::tent()));
}

TEST_CASE("composition matches pointwise evaluation") {
    PLMap f = builtin_maps::swap_halves();
    PLMap g = builtin_maps::tent();
    PLMap h = pl_compose(g, f);
    for (long k = 0; k <= 97; ++k) {
        Rational x = rat(k, 97);
        CHECK(h.eval(x) == g.eval(f.eval(x)));
    }
    PLMap dbl = builtin_maps::doubling();
    PLMap d2 = pl_compose(dbl, dbl);
    for (long k = 0; k < 101; ++k) {
        Rational x = rat(k, 101);
        CHECK(d2.eval(x) == dbl.eval(dbl.eval(x)));
    }
}

TEST_CASE("rotation by 1/3 has period three") {
    PLMap r3 = builtin_maps::rotation(rat(1, 3));
    Rational x(0);
    std::vector<Rational> orbit;
    for (int i = 0; i < 6; ++i) {
        x = r3.eval(x);
        orbit.push_back(x);
    }
    CHECK(orbit[0] == rat(1, 3));
    CHECK(orbit[1] == rat(2, 3));
    CHECK(orbit[2] == rat(0));
    CHECK(orbit[5] == rat(0));
}

TEST_CASE("exact fixed points") {
    CHECK(pl_fixed_points(builtin_maps::tent()) == std::vector<Rational>{rat(0), rat(2, 3)});
    CHECK(pl_fixed_points(builtin_maps::doubling()) == std::vector<Rational>{rat(0)});
    CHECK(pl_fixed_points(builtin_maps::swap_halves()) == std::vector<Rational>{rat(1, 2)});
    CHECK(pl_fixed_points(builtin_maps::rotation(rat(1, 3))).empty());
}

TEST_CASE("doubling image wraps exactly") {
    PLMap dbl = builtin_maps::doubling();
    Space sp = dbl.domain_space();
    Region u = iv_region(sp, Interval::open(rat(3, 8), rat(5, 8)));
    Region img = pl_image(dbl, u);
    Region expect = normalize_region(sp, std::vector<Interval>{
                                             Interval::open(rat(3, 4), rat(1)),
                                             Interval{rat(0), rat(1, 4), true, false},
                                         });
    CHECK(img == expect);
    CHECK(region_is_whole(pl_image_n(dbl, u, 3)));
}
