// Finite exact descriptions of open/closed subsets of a phase space:
// interval unions, cylinder unions, finite index sets.
//
// Regions are kept canonical: interval parts sorted, disjoint and
// non-mergeable; cylinders sorted with contained cylinders absorbed;
// finite sets sorted and duplicate-free.
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "topodyn/errors.hpp"
#include "topodyn/interval.hpp"
#include "topodyn/point.hpp"
#include "topodyn/space.hpp"

namespace topodyn {

enum class Tri { No, Yes, Undetermined };

struct Region {
    Space space;
    std::vector<Interval> parts;      // UnitInterval / Circle / Ray
    std::vector<Cylinder> cylinders;  // Shift
    std::vector<int> elems;           // Finite

    bool is_empty() const { return parts.empty() && cylinders.empty() && elems.empty(); }

    bool operator==(const Region& o) const {
        return space == o.space && parts == o.parts && cylinders == o.cylinders &&
               elems == o.elems;
    }
    bool operator!=(const Region& o) const { return !(*this == o); }
    bool operator<(const Region& o) const {
        if (parts != o.parts)
            return std::lexicographical_compare(parts.begin(), parts.end(), o.parts.begin(),
                                                o.parts.end());
        if (cylinders != o.cylinders)
            return std::lexicographical_compare(cylinders.begin(), cylinders.end(),
                                                o.cylinders.begin(), o.cylinders.end());
        return elems < o.elems;
    }

    std::string str() const {
        if (space.kind == SpaceKind::Shift) {
            std::string s;
            for (const auto& c : cylinders) {
                if (!s.empty()) s += "u";
                s += "[" + c.word.str() + "@" + std::to_string(c.offset) + "]";
            }
            return s.empty() ? "{}" : s;
        }
        if (space.kind == SpaceKind::Finite) {
            std::string s = "{";
            for (size_t i = 0; i < elems.size(); ++i) {
                if (i) s += ",";
                s += to_string(space.finite_values[static_cast<size_t>(elems[i])]);
            }
            return s + "}";
        }
        std::string s;
        for (const auto& iv : parts) {
            if (!s.empty()) s += "u";
            s += iv.str();
        }
        return s.empty() ? "{}" : s;
    }
};

namespace detail {

inline void clip_to_space(const Space& sp, Interval& iv) {
    if (sp.kind == SpaceKind::UnitInterval || sp.kind == SpaceKind::Circle) {
        Interval dom = sp.kind == SpaceKind::UnitInterval
                           ? Interval::closed(Rational(0), Rational(1))
                           : Interval::left_closed(Rational(0), Rational(1));
        iv = intersect(iv, dom);
    } else if (sp.kind == SpaceKind::Ray) {
        if (iv.lo < 0) {
            iv.lo = 0;
            iv.lo_closed = true;
        }
    }
}

}  // namespace detail

// Canonical form: sorted, pairwise disjoint, mergeable parts merged,
// empties dropped. Input intervals are clipped to the space domain.
inline Region normalize_region(Space sp, std::vector<Interval> raw) {
    if (sp.kind == SpaceKind::Shift || sp.kind == SpaceKind::Finite)
        throw MixedVariant("interval parts for a non-interval space");
    Region r;
    r.space = std::move(sp);
    for (auto& iv : raw) {
        detail::clip_to_space(r.space, iv);
        if (!iv.empty()) r.parts.push_back(iv);
    }
    std::sort(r.parts.begin(), r.parts.end());
    std::vector<Interval> merged;
    for (const auto& iv : r.parts) {
        if (!merged.empty() && mergeable(merged.back(), iv)) {
            Interval& cur = merged.back();
            if (iv.hi_inf) {
                if (cur.hi_inf)
                    cur.hi_closed = cur.hi_closed || iv.hi_closed;
                else {
                    cur.hi_inf = true;
                    cur.hi_closed = iv.hi_closed;
                }
            } else if (!cur.hi_inf) {
                if (iv.hi > cur.hi) {
                    cur.hi = iv.hi;
                    cur.hi_closed = iv.hi_closed;
                } else if (iv.hi == cur.hi) {
                    cur.hi_closed = cur.hi_closed || iv.hi_closed;
                }
            }
        } else {
            merged.push_back(iv);
        }
    }
    r.parts = std::move(merged);
    return r;
}

inline Region normalize_region(Space sp, std::vector<Cylinder> raw) {
    if (sp.kind != SpaceKind::Shift) throw MixedVariant("cylinders for a non-shift space");
    for (const auto& c : raw) {
        if (c.word.empty()) throw InvalidParameter("empty cylinder word");
        if (!sp.two_sided && c.offset < 0)
            throw InvalidParameter("negative offset in one-sided cylinder");
        for (int s : c.word.symbols)
            if (s < 0 || s >= sp.alphabet) throw InvalidParameter("symbol out of alphabet");
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    Region r;
    r.space = std::move(sp);
    for (size_t i = 0; i < raw.size(); ++i) {
        bool absorbed = false;
        for (size_t j = 0; j < raw.size() && !absorbed; ++j)
            if (i != j && raw[i].subset_of(raw[j])) absorbed = true;
        if (!absorbed) r.cylinders.push_back(raw[i]);
    }
    return r;
}

inline Region normalize_region(Space sp, std::vector<int> raw) {
    if (sp.kind != SpaceKind::Finite) throw MixedVariant("indices for a non-finite space");
    for (int i : raw)
        if (i < 0 || static_cast<size_t>(i) >= sp.finite_values.size())
            throw InvalidParameter("finite index out of range");
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    Region r;
    r.space = std::move(sp);
    r.elems = std::move(raw);
    return r;
}

inline Region empty_region(Space sp) {
    Region r;
    r.space = std::move(sp);
    return r;
}

inline Region whole_space_region(const Space& sp) {
    switch (sp.kind) {
        case SpaceKind::UnitInterval:
            return normalize_region(
                sp, std::vector<Interval>{Interval::closed(Rational(0), Rational(1))});
        case SpaceKind::Circle:
            return normalize_region(
                sp, std::vector<Interval>{Interval::left_closed(Rational(0), Rational(1))});
        case SpaceKind::Ray:
            return normalize_region(sp,
                                    std::vector<Interval>{Interval::tail(Rational(0), true, true)});
        case SpaceKind::Finite: {
            std::vector<int> all(sp.finite_values.size());
            for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
            return normalize_region(sp, all);
        }
        case SpaceKind::Shift:
            throw UnsupportedSpace("whole shift space has no finite cylinder description");
    }
    throw Error("unreachable");
}

inline Region region_union(const Region& a, const Region& b) {
    require_same_space(a.space, b.space, "region_union");
    switch (a.space.kind) {
        case SpaceKind::Shift: {
            auto cs = a.cylinders;
            cs.insert(cs.end(), b.cylinders.begin(), b.cylinders.end());
            return normalize_region(a.space, cs);
        }
        case SpaceKind::Finite: {
            auto es = a.elems;
            es.insert(es.end(), b.elems.begin(), b.elems.end());
            return normalize_region(a.space, es);
        }
        default: {
            auto ps = a.parts;
            ps.insert(ps.end(), b.parts.begin(), b.parts.end());
            return normalize_region(a.space, ps);
        }
    }
}

// Intersection for interval-like and finite spaces. Cylinder-union
// intersection is pattern feasibility and lives with the subshift code.
inline Region region_intersect(const Region& a, const Region& b) {
    require_same_space(a.space, b.space, "region_intersect");
    if (a.space.kind == SpaceKind::Shift)
        throw UnsupportedSpace("cylinder intersection requires language context");
    if (a.space.kind == SpaceKind::Finite) {
        std::vector<int> out;
        std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(),
                              std::back_inserter(out));
        return normalize_region(a.space, out);
    }
    std::vector<Interval> out;
    for (const auto& x : a.parts)
        for (const auto& y : b.parts) {
            Interval z = intersect(x, y);
            if (!z.empty()) out.push_back(z);
        }
    return normalize_region(a.space, out);
}

inline bool regions_intersect(const Region& a, const Region& b) {
    return !region_intersect(a, b).is_empty();
}

// Exact whole-space test for spaces with a finite exact description.
inline bool region_is_whole(const Region& r) {
    if (r.space.kind == SpaceKind::Shift)
        throw UnsupportedSpace("whole-space test for cylinders requires language context");
    return r == whole_space_region(r.space);
}

// Closure of the complement within the space. Interval, circle and finite
// spaces only (the ray would need a bare {inf} part, which nothing uses).
inline Region complement_closure(const Region& r) {
    const Space& sp = r.space;
    if (sp.kind == SpaceKind::Shift || sp.kind == SpaceKind::Ray)
        throw UnsupportedSpace("complement_closure");
    if (sp.kind == SpaceKind::Finite) {
        std::vector<int> out;
        for (size_t i = 0; i < sp.finite_values.size(); ++i)
            if (!std::binary_search(r.elems.begin(), r.elems.end(), static_cast<int>(i)))
                out.push_back(static_cast<int>(i));
        return normalize_region(sp, out);
    }
    const bool circle = sp.kind == SpaceKind::Circle;
    std::vector<Interval> out;
    Rational cursor(0);
    bool cursor_covered = false;  // whether the point `cursor` lies in r
    for (const auto& iv : r.parts) {
        if (iv.lo > cursor) {
            out.push_back(Interval::closed(cursor, iv.lo));
        } else if (iv.lo == cursor && !cursor_covered && !iv.lo_closed) {
            out.push_back(Interval::point(cursor));
        }
        cursor = iv.hi;
        cursor_covered = iv.hi_closed;
    }
    Rational top(1);
    if (cursor < top) {
        // Closure of a circle gap reaching the seam also contains 0 = 1.
        out.push_back(circle ? Interval::left_closed(cursor, top) : Interval::closed(cursor, top));
        if (circle) out.push_back(Interval::point(Rational(0)));
    } else if (!circle && cursor == top && !cursor_covered) {
        out.push_back(Interval::point(top));
    }
    return normalize_region(sp, out);
}

namespace detail {
// Error ball of an approximate scalar point, as arcs/segments of the space.
inline Region error_ball(const Space& sp, const Rational& v, const Rational& e) {
    std::vector<Interval> ball;
    Rational a = v - e, b = v + e;
    if (sp.kind == SpaceKind::Circle) {
        if (2 * e >= 1) return whole_space_region(sp);
        if (a < 0) {
            ball.push_back(Interval{a + 1, Rational(1), true, false});
            ball.push_back(Interval::closed(Rational(0), b));
        } else if (b >= 1) {
            ball.push_back(Interval{a, Rational(1), true, false});
            ball.push_back(Interval::closed(Rational(0), b - 1));
        } else {
            ball.push_back(Interval::closed(a, b));
        }
    } else {
        ball.push_back(Interval::closed(a, b));
    }
    return normalize_region(sp, ball);
}
}  // namespace detail

// Membership with margin. Exact points answer Yes/No; approximate points
// answer Undetermined when the error ball straddles a boundary.
inline Tri region_contains(const Region& r, const Point& p) {
    require_same_space(r.space, p.space, "region_contains");
    switch (r.space.kind) {
        case SpaceKind::Finite:
            return std::binary_search(r.elems.begin(), r.elems.end(), p.index) ? Tri::Yes
                                                                               : Tri::No;
        case SpaceKind::Shift: {
            if (!p.sym) throw InvalidParameter("shift point without description");
            for (const auto& c : r.cylinders) {
                bool ok = true;
                for (size_t i = 0; i < c.word.size() && ok; ++i)
                    ok = p.sym->symbol_at(c.offset + static_cast<long>(i)) == c.word[i];
                if (ok) return Tri::Yes;
            }
            return Tri::No;
        }
        case SpaceKind::Ray: {
            if (p.is_infinity) {
                for (const auto& iv : r.parts)
                    if (iv.contains_inf()) return Tri::Yes;
                return Tri::No;
            }
            for (const auto& iv : r.parts)
                if (iv.contains(p.value)) return Tri::Yes;
            return Tri::No;
        }
        case SpaceKind::UnitInterval:
        case SpaceKind::Circle: {
            if (p.error == 0) {
                for (const auto& iv : r.parts)
                    if (iv.contains(p.value)) return Tri::Yes;
                return Tri::No;
            }
            Region ball = detail::error_ball(r.space, p.value, p.error);
            // Canonical parts are separated by real gaps, so a ball inside r
            // must sit inside a single part.
            bool all_in = true;
            for (const auto& biv : ball.parts) {
                bool covered = false;
                for (const auto& iv : r.parts)
                    if (biv.subset_of(iv)) covered = true;
                if (!covered) all_in = false;
            }
            if (all_in) return Tri::Yes;
            if (!regions_intersect(ball, r)) return Tri::No;
            return Tri::Undetermined;
        }
    }
    throw Error("unreachable");
}

}  // namespace topodyn
