// Rational intervals with exact open/closed endpoint tracking.
//
// The upper endpoint may be the compactification point "inf" (ray space);
// hi_closed then says whether inf itself belongs to the interval.
#pragma once

#include <string>

#include "topodyn/rational.hpp"

namespace topodyn {

struct Interval {
    Rational lo, hi;
    bool lo_closed = false;
    bool hi_closed = false;
    bool hi_inf = false;  // upper endpoint is inf; `hi` is ignored

    static Interval open(Rational a, Rational b) { return {std::move(a), std::move(b), false, false}; }
    static Interval closed(Rational a, Rational b) { return {std::move(a), std::move(b), true, true}; }
    static Interval left_closed(Rational a, Rational b) { return {std::move(a), std::move(b), true, false}; }
    static Interval right_closed(Rational a, Rational b) { return {std::move(a), std::move(b), false, true}; }
    static Interval point(Rational a) { return {a, a, true, true}; }
    static Interval tail(Rational a, bool a_closed, bool with_inf) {
        Interval iv{std::move(a), Rational(0), a_closed, with_inf};
        iv.hi_inf = true;
        return iv;
    }

    bool empty() const {
        if (hi_inf) return false;
        if (lo > hi) return true;
        if (lo == hi) return !(lo_closed && hi_closed);
        return false;
    }

    bool contains(const Rational& x) const {
        if (x < lo || (x == lo && !lo_closed)) return false;
        if (hi_inf) return true;
        if (x > hi || (x == hi && !hi_closed)) return false;
        return true;
    }
    bool contains_inf() const { return hi_inf && hi_closed; }

    bool subset_of(const Interval& o) const {
        if (empty()) return true;
        if (o.empty()) return false;
        if (lo < o.lo || (lo == o.lo && lo_closed && !o.lo_closed)) return false;
        if (hi_inf) {
            if (!o.hi_inf) return false;
            if (hi_closed && !o.hi_closed) return false;
            return true;
        }
        if (o.hi_inf) return true;
        if (hi > o.hi || (hi == o.hi && hi_closed && !o.hi_closed)) return false;
        return true;
    }

    friend Interval intersect(const Interval& a, const Interval& b) {
        Interval r;
        if (a.lo > b.lo) {
            r.lo = a.lo;
            r.lo_closed = a.lo_closed;
        } else if (b.lo > a.lo) {
            r.lo = b.lo;
            r.lo_closed = b.lo_closed;
        } else {
            r.lo = a.lo;
            r.lo_closed = a.lo_closed && b.lo_closed;
        }
        if (a.hi_inf && b.hi_inf) {
            r.hi_inf = true;
            r.hi_closed = a.hi_closed && b.hi_closed;
        } else if (a.hi_inf) {
            r.hi = b.hi;
            r.hi_closed = b.hi_closed;
        } else if (b.hi_inf) {
            r.hi = a.hi;
            r.hi_closed = a.hi_closed;
        } else if (a.hi < b.hi) {
            r.hi = a.hi;
            r.hi_closed = a.hi_closed;
        } else if (b.hi < a.hi) {
            r.hi = b.hi;
            r.hi_closed = b.hi_closed;
        } else {
            r.hi = a.hi;
            r.hi_closed = a.hi_closed && b.hi_closed;
        }
        return r;
    }

    friend bool intersects(const Interval& a, const Interval& b) {
        return !intersect(a, b).empty();
    }

    // True if the union of a consecutive pair (a before or equal b by lo) is
    // still one interval: they overlap or touch at a shared endpoint.
    friend bool mergeable(const Interval& a, const Interval& b) {
        if (a.empty() || b.empty()) return true;
        if (a.hi_inf) return true;  // a reaches the top, b.lo >= a.lo
        if (b.lo < a.hi) return true;
        if (b.lo == a.hi && (b.lo_closed || a.hi_closed)) return true;
        return false;
    }

    bool operator==(const Interval& o) const {
        if (hi_inf != o.hi_inf) return false;
        if (lo != o.lo || lo_closed != o.lo_closed || hi_closed != o.hi_closed) return false;
        if (!hi_inf && hi != o.hi) return false;
        return true;
    }
    bool operator<(const Interval& o) const {
        if (lo != o.lo) return lo < o.lo;
        if (lo_closed != o.lo_closed) return lo_closed;  // closed endpoint first
        if (hi_inf != o.hi_inf) return o.hi_inf;
        if (!hi_inf && hi != o.hi) return hi < o.hi;
        return hi_closed < o.hi_closed;
    }

    std::string str() const {
        std::string s = lo_closed ? "[" : "(";
        s += to_string(lo) + ",";
        s += hi_inf ? "inf" : to_string(hi);
        s += hi_closed ? "]" : ")";
        return s;
    }
};

}  // namespace topodyn
