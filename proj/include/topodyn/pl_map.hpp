// Exact piecewise-linear self-maps of [0,1] and the circle.
//
// A map is breakpoints 0 = b0 < ... < bk = 1 with values v0..vk and linear
// interpolation. Circle maps (mod_one) keep a continuous lift: values may
// leave [0,1] and vk - v0 is the integer degree. All arithmetic is exact;
// images of open sets get closed endpoints exactly at fold points because
// parts are intersected with closed piece domains.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "topodyn/errors.hpp"
#include "topodyn/region.hpp"

namespace topodyn {

struct PLMap {
    std::vector<Rational> breaks;
    std::vector<Rational> values;
    bool mod_one = false;

    PLMap() = default;
    PLMap(std::vector<Rational> b, std::vector<Rational> v, bool mod)
        : breaks(std::move(b)), values(std::move(v)), mod_one(mod) {
        validate();
    }

    void validate() const {
        if (breaks.size() < 2 || breaks.size() != values.size())
            throw InvalidParameter("PL map needs matching breakpoints and values");
        if (breaks.front() != 0 || breaks.back() != 1)
            throw InvalidParameter("PL breakpoints must start at 0 and end at 1");
        for (size_t i = 0; i + 1 < breaks.size(); ++i)
            if (!(breaks[i] < breaks[i + 1]))
                throw InvalidParameter("PL breakpoints must strictly increase");
        if (mod_one) {
            Rational deg = values.back() - values.front();
            if (denominator(deg) != 1)
                throw InvalidParameter("circle PL map needs integer degree");
        } else {
            for (const Rational& v : values)
                if (v < 0 || v > 1) throw InvalidParameter("PL values must lie in [0,1]");
        }
    }

    Space domain_space() const { return mod_one ? Space::circle() : Space::unit_interval(); }
    size_t piece_count() const { return breaks.size() - 1; }

    Rational slope(size_t i) const {
        return (values[i + 1] - values[i]) / (breaks[i + 1] - breaks[i]);
    }

    // Value of the continuous lift (no mod reduction).
    Rational eval_raw(const Rational& x) const {
        size_t i = piece_index(x);
        return values[i] + slope(i) * (x - breaks[i]);
    }

    Rational eval(const Rational& x) const {
        Rational y = eval_raw(mod_one ? mod1(x) : x);
        return mod_one ? mod1(y) : y;
    }

    size_t piece_index(const Rational& x) const {
        if (x < 0 || x > 1) throw InvalidParameter("PL evaluation outside [0,1]");
        size_t lo = 0, hi = piece_count() - 1;
        while (lo < hi) {
            size_t mid = (lo + hi + 1) / 2;
            if (breaks[mid] <= x)
                lo = mid;
            else
                hi = mid - 1;
        }
        return lo;
    }

    // Canonical form: collinear interior breakpoints removed; circle lifts
    // shifted so v0 lies in [0,1).
    PLMap canonical() const {
        PLMap out;
        out.mod_one = mod_one;
        out.breaks.push_back(breaks.front());
        out.values.push_back(values.front());
        for (size_t i = 1; i + 1 < breaks.size(); ++i) {
            Rational sl = (values[i] - out.values.back()) / (breaks[i] - out.breaks.back());
            Rational sr = (values[i + 1] - values[i]) / (breaks[i + 1] - breaks[i]);
            if (sl == sr) continue;
            out.breaks.push_back(breaks[i]);
            out.values.push_back(values[i]);
        }
        out.breaks.push_back(breaks.back());
        out.values.push_back(values.back());
        if (mod_one) {
            Rational shift = Rational(floor_rat(out.values.front()));
            for (Rational& v : out.values) v -= shift;
        }
        return out;
    }

    bool operator==(const PLMap& o) const {
        PLMap a = canonical(), b = o.canonical();
        return a.mod_one == b.mod_one && a.breaks == b.breaks && a.values == b.values;
    }

    std::string str() const {
        std::string s = mod_one ? "circle-pl{" : "pl{";
        for (size_t i = 0; i < breaks.size(); ++i) {
            if (i) s += " ";
            s += to_string(breaks[i]) + ":" + to_string(values[i]);
        }
        return s + "}";
    }
};

namespace detail {

// Reduce a raw image interval into circle parts within [0,1).
inline void mod_reduce_into(const Interval& raw, std::vector<Interval>& out) {
    if (raw.hi - raw.lo >= 1) {
        out.push_back(Interval::left_closed(Rational(0), Rational(1)));
        return;
    }
    Rational m(floor_rat(raw.lo));
    Rational a = raw.lo - m, b = raw.hi - m;
    if (b < 1) {
        out.push_back(Interval{a, b, raw.lo_closed, raw.hi_closed});
    } else if (b == 1) {
        if (a < 1) out.push_back(Interval{a, Rational(1), raw.lo_closed, false});
        if (raw.hi_closed) out.push_back(Interval::point(Rational(0)));
    } else {
        out.push_back(Interval{a, Rational(1), raw.lo_closed, false});
        out.push_back(Interval{Rational(0), b - 1, true, raw.hi_closed});
    }
}

}  // namespace detail

inline constexpr size_t kDefaultPieceCap = 1u << 16;

// Exact one-step image f(r).
inline Region pl_image(const PLMap& f, const Region& r, size_t piece_cap = kDefaultPieceCap) {
    require_same_space(f.domain_space(), r.space, "pl_image");
    std::vector<Interval> out;
    for (const Interval& part : r.parts) {
        for (size_t i = 0; i < f.piece_count(); ++i) {
            Interval dom = Interval::closed(f.breaks[i], f.breaks[i + 1]);
            Interval j = intersect(part, dom);
            if (j.empty()) continue;
            Rational s = f.slope(i);
            Rational p = f.values[i] + s * (j.lo - f.breaks[i]);
            Rational q = f.values[i] + s * (j.hi - f.breaks[i]);
            Interval img;
            if (s > 0)
                img = Interval{p, q, j.lo_closed, j.hi_closed};
            else if (s < 0)
                img = Interval{q, p, j.hi_closed, j.lo_closed};
            else
                img = Interval::point(p);
            if (f.mod_one)
                detail::mod_reduce_into(img, out);
            else
                out.push_back(img);
            if (out.size() > piece_cap) throw BudgetExceeded("pl_image piece cap");
        }
    }
    return normalize_region(r.space, out);
}

// Exact n-step image f^n(r).
inline Region pl_image_n(const PLMap& f, const Region& r, long n,
                         size_t piece_cap = kDefaultPieceCap) {
    if (n < 0) throw InvalidParameter("negative iterate");
    Region cur = r;
    for (long i = 0; i < n; ++i) {
        cur = pl_image(f, cur, piece_cap);
        if (cur.parts.size() > piece_cap) throw BudgetExceeded("pl_image piece cap");
    }
    return cur;
}

// Exact preimage f^{-1}(r).
inline Region pl_preimage(const PLMap& f, const Region& r,
                          size_t piece_cap = kDefaultPieceCap) {
    require_same_space(f.domain_space(), r.space, "pl_preimage");
    std::vector<Interval> out;
    for (size_t i = 0; i < f.piece_count(); ++i) {
        Interval dom = Interval::closed(f.breaks[i], f.breaks[i + 1]);
        Rational s = f.slope(i);
        Rational lo_v = std::min(f.values[i], f.values[i + 1]);
        Rational hi_v = std::max(f.values[i], f.values[i + 1]);
        long m_lo = 0, m_hi = 0;
        if (f.mod_one) {
            m_lo = static_cast<long>(floor_rat(lo_v)) - 1;
            m_hi = static_cast<long>(ceil_rat(hi_v)) + 1;
        }
        for (const Interval& part : r.parts) {
            for (long m = m_lo; m <= m_hi; ++m) {
                Interval target{part.lo + m, part.hi + m, part.lo_closed, part.hi_closed};
                if (s == 0) {
                    if (target.contains(f.values[i])) out.push_back(dom);
                    continue;
                }
                Rational a = (target.lo - f.values[i]) / s + f.breaks[i];
                Rational b = (target.hi - f.values[i]) / s + f.breaks[i];
                Interval pre = s > 0 ? Interval{a, b, target.lo_closed, target.hi_closed}
                                     : Interval{b, a, target.hi_closed, target.lo_closed};
                pre = intersect(pre, dom);
                if (!pre.empty()) out.push_back(pre);
                if (out.size() > piece_cap) throw BudgetExceeded("pl_preimage piece cap");
            }
        }
    }
    return normalize_region(r.space, out);
}

// g after f, as an exact PL map. When f wraps and g is interval-valued,
// g must identify 0 and 1 (it factors through the circle).
inline PLMap pl_compose(const PLMap& g, const PLMap& f) {
    bool f_wraps = f.mod_one;
    for (const Rational& v : f.values)
        if (v < 0 || v > 1) f_wraps = true;
    if (f_wraps && !g.mod_one && g.values.front() != g.values.back())
        throw InvalidParameter("composing a wrapping map into a non-circle map");

    std::vector<Rational> xs = f.breaks;
    for (size_t i = 0; i < f.piece_count(); ++i) {
        Rational s = f.slope(i);
        if (s == 0) continue;
        Rational lo_v = std::min(f.values[i], f.values[i + 1]);
        Rational hi_v = std::max(f.values[i], f.values[i + 1]);
        long m_lo = static_cast<long>(floor_rat(lo_v)) - 1;
        long m_hi = static_cast<long>(ceil_rat(hi_v)) + 1;
        for (long m = m_lo; m <= m_hi; ++m) {
            for (const Rational& c : g.breaks) {
                Rational y = c + m;
                if (y < lo_v || y > hi_v) continue;
                Rational x = f.breaks[i] + (y - f.values[i]) / s;
                if (x >= f.breaks[i] && x <= f.breaks[i + 1]) xs.push_back(x);
            }
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<Rational> vals;
    vals.push_back(g.eval_raw(mod1(f.eval_raw(xs[0]))));
    for (size_t j = 0; j + 1 < xs.size(); ++j) {
        Rational mid = (xs[j] + xs[j + 1]) / 2;
        Rational y = mod1(f.eval_raw(mid));
        Rational sl = g.slope(g.piece_index(y)) * f.slope(f.piece_index(mid));
        vals.push_back(vals.back() + sl * (xs[j + 1] - xs[j]));
    }
    PLMap h;
    h.breaks = std::move(xs);
    h.values = std::move(vals);
    h.mod_one = g.mod_one;
    h = h.canonical();
    h.validate();
    return h;
}

// Exact fixed points: solutions of f(x) = x (mod 1 for circle maps).
inline std::vector<Rational> pl_fixed_points(const PLMap& f) {
    std::vector<Rational> out;
    for (size_t i = 0; i < f.piece_count(); ++i) {
        Rational s = f.slope(i);
        long m_lo = 0, m_hi = 0;
        if (f.mod_one) {
            Rational lo_v = std::min(f.values[i], f.values[i + 1]);
            Rational hi_v = std::max(f.values[i], f.values[i + 1]);
            m_lo = static_cast<long>(floor_rat(lo_v)) - 1;
            m_hi = static_cast<long>(ceil_rat(hi_v)) + 1;
        }
        for (long m = m_lo; m <= m_hi; ++m) {
            if (s == 1) {
                // f(x) = x + (v_i - b_i + m); fixed iff the offset vanishes.
                if (f.values[i] - f.breaks[i] == Rational(m)) out.push_back(f.breaks[i]);
                continue;
            }
            Rational x = (f.values[i] - s * f.breaks[i] - m) / (Rational(1) - s);
            if (x >= f.breaks[i] && x <= f.breaks[i + 1]) {
                Rational lhs = f.values[i] + s * (x - f.breaks[i]);
                if (lhs - x == Rational(m)) out.push_back(f.mod_one ? mod1(x) : x);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Exact image of the whole space; equals the space iff the map is onto.
inline bool pl_surjective(const PLMap& f) {
    Region whole = whole_space_region(f.domain_space());
    return region_is_whole(pl_image(f, whole));
}

namespace builtin_maps {

inline PLMap tent() {
    return PLMap({rat(0), rat(1, 2), rat(1)}, {rat(0), rat(1), rat(0)}, false);
}
inline PLMap doubling() { return PLMap({rat(0), rat(1)}, {rat(0), rat(2)}, true); }
inline PLMap rotation(const Rational& angle) {
    Rational a = mod1(angle);
    return PLMap({rat(0), rat(1)}, {a, a + 1}, true);
}
// Continuous interval map swapping [0,1/2] and [1/2,1]; its square restricted
// to [0,1/2] is conjugate to the tent map via x -> 1/2 - x/2.
inline PLMap swap_halves() {
    return PLMap({rat(0), rat(1, 4), rat(1, 2), rat(1)},
                 {rat(1, 2), rat(1), rat(1, 2), rat(0)}, false);
}
inline PLMap identity() { return PLMap({rat(0), rat(1)}, {rat(0), rat(1)}, false); }
// Semiconjugacy from the doubling circle map onto the tent map.
inline PLMap doubling_to_tent_factor() { return tent(); }

}  // namespace builtin_maps

}  // namespace topodyn
