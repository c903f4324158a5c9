// Observed hitting-time sets over a finite horizon, and their
// classification into Furstenberg-family certificates.
//
// All certificate classes are horizon-relative. A set may additionally
// carry an exact eventually-periodic tail (from image-cycle detection);
// a tail turns window observations into proofs for all time.
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "topodyn/interval.hpp"
#include "topodyn/rational.hpp"

namespace topodyn {

enum class TimeKind { DiscreteN, ContinuousR, Words };

// For t >= start: t is a hit iff (t - start) mod period lies in residues.
struct EventualTail {
    long start = 0;
    long period = 1;
    std::vector<long> residues;  // sorted, subset of [0, period)

    bool hit(long t) const {
        long r = (t - start) % period;
        return std::binary_search(residues.begin(), residues.end(), r);
    }
    bool full() const { return static_cast<long>(residues.size()) == period; }
    bool empty_forever() const { return residues.empty(); }
};

struct TimeWindowSet {
    TimeKind kind = TimeKind::DiscreteN;
    long horizon = 0;             // discrete hits examined in (0, horizon]
    Rational horizon_t;           // continuous horizon (ignored if unbounded)
    bool horizon_unbounded = false;
    std::vector<long> hits;       // discrete / word (element ids by layer; see hitting)
    std::vector<Interval> hit_intervals;  // continuous
    bool exact = false;           // hits are provably complete on the window
    std::optional<EventualTail> tail;     // discrete only; implies exact structure forever
    long ambiguous = 0;           // memberships excluded due to error-ball straddles

    bool is_empty() const { return hits.empty() && hit_intervals.empty(); }
    bool contains(long t) const { return std::binary_search(hits.begin(), hits.end(), t); }

    // Provably empty for all time, not just within the horizon.
    bool empty_forever() const {
        if (!is_empty()) return false;
        if (kind == TimeKind::ContinuousR) return exact && horizon_unbounded;
        return exact && tail && tail->empty_forever();
    }

    std::string str() const {
        std::string s = "{";
        if (kind == TimeKind::ContinuousR) {
            for (size_t i = 0; i < hit_intervals.size(); ++i) {
                if (i) s += ",";
                s += hit_intervals[i].str();
            }
        } else {
            // Compress runs.
            size_t i = 0;
            bool first = true;
            while (i < hits.size()) {
                size_t j = i;
                while (j + 1 < hits.size() && hits[j + 1] == hits[j] + 1) ++j;
                if (!first) s += ",";
                first = false;
                s += std::to_string(hits[i]);
                if (j > i) s += "-" + std::to_string(hits[j]);
                i = j + 1;
            }
        }
        s += "}";
        if (tail) s += "+tail";
        if (!exact) s += "?";
        return s;
    }
};

enum class FamilyClass { Empty, Finite, Syndetic, Thick, Cofinite, Unclassified };

inline const char* family_class_name(FamilyClass c) {
    switch (c) {
        case FamilyClass::Empty: return "empty";
        case FamilyClass::Finite: return "finite";
        case FamilyClass::Syndetic: return "syndetic";
        case FamilyClass::Thick: return "thick";
        case FamilyClass::Cofinite: return "cofinite";
        case FamilyClass::Unclassified: return "unclassified";
    }
    return "?";
}

struct FamilyCertificate {
    FamilyClass cls = FamilyClass::Unclassified;
    long gap = 0;        // syndetic witness: max observed gap
    long run = 0;        // thick witness: max observed run
    long threshold = 0;  // cofinite witness: all of [threshold, horizon] hit
    long count = 0;
    bool exact = false;
    std::string note;

    std::string str() const {
        std::string s = family_class_name(cls);
        switch (cls) {
            case FamilyClass::Syndetic: s += "(gap=" + std::to_string(gap) + ")"; break;
            case FamilyClass::Thick: s += "(run=" + std::to_string(run) + ")"; break;
            case FamilyClass::Cofinite: s += "(threshold=" + std::to_string(threshold) + ")"; break;
            case FamilyClass::Finite: s += "(count=" + std::to_string(count) + ")"; break;
            default: break;
        }
        if (!note.empty()) s += "[" + note + "]";
        return s;
    }
};

namespace detail {

struct DiscreteStats {
    long max_gap = 0;      // over (0, horizon], boundary gaps included
    long half_max_gap = 0; // same statistic over (0, ceil(horizon/2)]
    long max_run = 0;
    long cof_threshold = -1;  // smallest N with [N, horizon] all hits, or -1
};

inline DiscreteStats discrete_stats(const std::vector<long>& hits, long H) {
    DiscreteStats st;
    if (hits.empty()) {
        st.max_gap = st.half_max_gap = H;
        return st;
    }
    long half = (H + 1) / 2;
    long prev = 0, run = 0, prev_val = -2;
    for (long h : hits) {
        long gap = h - prev;
        st.max_gap = std::max(st.max_gap, gap);
        if (h <= half) st.half_max_gap = std::max(st.half_max_gap, gap);
        run = (h == prev_val + 1) ? run + 1 : 1;
        st.max_run = std::max(st.max_run, run);
        prev_val = h;
        prev = h;
    }
    st.max_gap = std::max(st.max_gap, H - hits.back());
    long last_before_half = 0;
    for (long h : hits)
        if (h <= half) last_before_half = h;
    st.half_max_gap = std::max(st.half_max_gap, half - last_before_half);
    if (hits.back() == H) {
        long N = H;
        for (size_t i = hits.size(); i-- > 1;) {
            if (hits[i - 1] == hits[i] - 1)
                N = hits[i - 1];
            else
                break;
        }
        st.cof_threshold = N;
    }
    return st;
}

}  // namespace detail

// Strongest horizon-scale class, precedence cofinite > thick > syndetic.
// Non-exact observations are capped at horizon strength by construction;
// an exact eventually-periodic tail upgrades or blocks cofiniteness.
inline FamilyCertificate classify(const TimeWindowSet& tws) {
    FamilyCertificate cert;
    cert.exact = tws.exact;
    if (tws.kind == TimeKind::ContinuousR) {
        if (tws.hit_intervals.empty()) {
            cert.cls = FamilyClass::Empty;
            return cert;
        }
        const Interval& last = tws.hit_intervals.back();
        if (last.hi_inf || (tws.horizon_unbounded == false && !last.hi_inf &&
                            last.hi >= tws.horizon_t && 2 * last.lo <= tws.horizon_t)) {
            cert.cls = FamilyClass::Cofinite;
            cert.threshold = static_cast<long>(ceil_rat(last.lo));
            return cert;
        }
        cert.cls = FamilyClass::Finite;
        cert.count = static_cast<long>(tws.hit_intervals.size());
        return cert;
    }

    long H = tws.horizon;
    if (tws.hits.empty()) {
        cert.cls = FamilyClass::Empty;
        if (tws.empty_forever()) cert.note = "forever";
        return cert;
    }
    auto st = detail::discrete_stats(tws.hits, H);
    if (tws.tail && tws.exact && !tws.tail->full()) {
        // Gaps recur forever; cofiniteness is excluded exactly.
        cert.note = "never-cofinite";
    } else if (st.cof_threshold >= 0 &&
               (2 * st.cof_threshold <= H || (tws.tail && tws.exact && tws.tail->full()))) {
        cert.cls = FamilyClass::Cofinite;
        cert.threshold = st.cof_threshold;
        cert.run = st.max_run;
        return cert;
    }
    if (4 * st.max_run >= H) {
        cert.cls = FamilyClass::Thick;
        cert.run = st.max_run;
        return cert;
    }
    if (4 * st.max_gap <= H && st.max_gap == st.half_max_gap) {
        cert.cls = FamilyClass::Syndetic;
        cert.gap = st.max_gap;
        return cert;
    }
    if (2 * tws.hits.back() <= H) {
        cert.cls = FamilyClass::Finite;
        cert.count = static_cast<long>(tws.hits.size());
        return cert;
    }
    cert.cls = FamilyClass::Unclassified;
    return cert;
}

}  // namespace topodyn
