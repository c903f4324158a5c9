// Finite bases of nonempty open regions at a given resolution: the
// computable stand-in for "every nonempty open set".
//
// Deterministic by construction: intervals sorted by left endpoint,
// cylinders lexicographic.
#pragma once

#include <vector>

#include "topodyn/errors.hpp"
#include "topodyn/region.hpp"

namespace topodyn {

// Smallest L >= 1 with alphabet^L >= 1/eps, so length-L cylinders have
// diameter <= eps in d(x,y) = inf{2^-k : agreement for |n| < k}.
inline int cylinder_length_for(int alphabet, const Rational& eps) {
    if (eps <= 0) throw InvalidParameter("eps must be positive");
    int L = 1;
    Rational diam = Rational(1, alphabet);
    while (diam > eps) {
        ++L;
        diam /= alphabet;
        if (L > 64) throw CapExceeded("cylinder length for eps");
    }
    return L;
}

// Basis of the bare space. For shift spaces this is the full-shift basis;
// subshift systems filter it through their language (see system layer).
inline std::vector<Region> basis(const Space& sp, const Rational& eps) {
    if (eps <= 0) throw InvalidParameter("eps must be positive");
    std::vector<Region> out;
    switch (sp.kind) {
        case SpaceKind::UnitInterval: {
            Rational step = eps / 2;
            long m = static_cast<long>(ceil_rat(Rational(2) / eps));
            for (long k = -1; k < m; ++k) {
                Interval iv = Interval::open(step * k, step * k + eps);
                if (iv.lo < 0) iv = Interval::left_closed(Rational(0), iv.hi);
                if (!iv.hi_inf && iv.hi > 1) iv = Interval{iv.lo, Rational(1), iv.lo_closed, true};
                Region r = normalize_region(sp, std::vector<Interval>{iv});
                if (!r.is_empty() && (out.empty() || !(out.back() == r))) out.push_back(r);
            }
            break;
        }
        case SpaceKind::Circle: {
            Rational step = eps / 2;
            long m = static_cast<long>(ceil_rat(Rational(2) / eps));
            for (long k = 0; k < m; ++k) {
                Rational a = step * k, b = step * k + eps;
                std::vector<Interval> parts;
                if (b <= 1) {
                    parts.push_back(Interval::open(a, b));
                } else {
                    parts.push_back(Interval::open(a, Rational(1)));
                    parts.push_back(Interval{Rational(0), b - 1, true, false});
                }
                out.push_back(normalize_region(sp, parts));
            }
            break;
        }
        case SpaceKind::Ray: {
            // Pull the unit-interval basis back through u = x/(1+x);
            // metric diameter is exactly the u-length.
            auto pull = [](const Rational& u) { return u / (1 - u); };
            for (const Region& ur : basis(Space::unit_interval(), eps)) {
                const Interval& uiv = ur.parts.front();
                Interval iv;
                if (uiv.hi == 1) {
                    iv = Interval::tail(pull(uiv.lo), uiv.lo_closed, uiv.hi_closed);
                } else {
                    iv = Interval{pull(uiv.lo), pull(uiv.hi), uiv.lo_closed, uiv.hi_closed};
                }
                out.push_back(normalize_region(sp, std::vector<Interval>{iv}));
            }
            break;
        }
        case SpaceKind::Shift: {
            int L = cylinder_length_for(sp.alphabet, eps);
            long offset = sp.two_sided ? -L : 0;
            int len = sp.two_sided ? 2 * L : L;
            std::vector<int> w(static_cast<size_t>(len), 0);
            while (true) {
                out.push_back(
                    normalize_region(sp, std::vector<Cylinder>{Cylinder{offset, Word(w)}}));
                int i = len - 1;
                while (i >= 0 && w[static_cast<size_t>(i)] == sp.alphabet - 1)
                    w[static_cast<size_t>(i--)] = 0;
                if (i < 0) break;
                ++w[static_cast<size_t>(i)];
            }
            break;
        }
        case SpaceKind::Finite: {
            // Metric balls of radius eps/2 about each point; duplicates merged.
            Rational rad = eps / 2;
            std::vector<Region> balls;
            for (const Rational& v : sp.finite_values) {
                std::vector<int> in;
                for (size_t i = 0; i < sp.finite_values.size(); ++i)
                    if (abs_rat(sp.finite_values[i] - v) < rad) in.push_back(static_cast<int>(i));
                balls.push_back(normalize_region(sp, in));
            }
            std::sort(balls.begin(), balls.end());
            balls.erase(std::unique(balls.begin(), balls.end()), balls.end());
            out = std::move(balls);
            break;
        }
    }
    return out;
}

// One canonical interior point per basis region (shift spaces are handled
// by the system layer, which knows the language).
inline std::vector<Point> net_points(const Space& sp, const Rational& eps) {
    std::vector<Point> out;
    switch (sp.kind) {
        case SpaceKind::Shift:
            throw UnsupportedSpace("net points of a shift space need a system");
        case SpaceKind::Finite:
            for (size_t i = 0; i < sp.finite_values.size(); ++i)
                out.push_back(Point::finite(sp, static_cast<int>(i)));
            break;
        default:
            for (const Region& r : basis(sp, eps)) {
                const Interval& iv = r.parts.front();
                if (iv.hi_inf) {
                    out.push_back(iv.hi_closed ? Point::ray_infinity()
                                               : Point::scalar(sp, iv.lo + 1));
                } else {
                    out.push_back(Point::scalar(sp, (iv.lo + iv.hi) / 2));
                }
            }
            break;
    }
    return out;
}

}  // namespace topodyn
