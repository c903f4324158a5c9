// Points of the supported phase spaces, finitely described.
#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "topodyn/errors.hpp"
#include "topodyn/rational.hpp"
#include "topodyn/space.hpp"

namespace topodyn {

// A finitely presented point of a shift space. `shift` records applied
// powers of sigma, so orbits of described points stay described.
struct SymbolicDesc {
    enum class Gen {
        UltimatelyPeriodic,  // pre then period forever; two-sided adds left_period to the left
        Morse,               // two-sided Morse-Thue point (mirror extension of the fixed point)
        MorseOneSided,       // the substitution fixed point itself
        WordCatalog,         // one-sided concatenation of all words by length then lex
    };
    Gen gen = Gen::UltimatelyPeriodic;
    int alphabet = 2;
    bool two_sided = false;
    Word pre, period, left_period;
    long shift = 0;

    static SymbolicDesc ultimately_periodic(int alphabet, Word pre, Word period) {
        SymbolicDesc d;
        d.gen = Gen::UltimatelyPeriodic;
        d.alphabet = alphabet;
        d.pre = std::move(pre);
        d.period = std::move(period);
        if (d.period.empty()) throw InvalidParameter("empty period");
        return d;
    }
    static SymbolicDesc constant(int alphabet, int symbol, bool two_sided) {
        SymbolicDesc d = ultimately_periodic(alphabet, Word{}, Word(std::vector<int>{symbol}));
        d.two_sided = two_sided;
        d.left_period = d.period;
        return d;
    }
    static SymbolicDesc morse_two_sided() {
        SymbolicDesc d;
        d.gen = Gen::Morse;
        d.two_sided = true;
        return d;
    }
    static SymbolicDesc morse_one_sided() {
        SymbolicDesc d;
        d.gen = Gen::MorseOneSided;
        return d;
    }
    static SymbolicDesc word_catalog(int alphabet) {
        SymbolicDesc d;
        d.gen = Gen::WordCatalog;
        d.alphabet = alphabet;
        return d;
    }

    // Thue-Morse value at n >= 0: parity of set bits of n.
    static int morse_symbol(unsigned long long n) {
        int p = 0;
        while (n) {
            p ^= static_cast<int>(n & 1ULL);
            n >>= 1;
        }
        return p;
    }

    int symbol_at(long n) const {
        n += shift;
        switch (gen) {
            case Gen::UltimatelyPeriodic: {
                if (n >= 0) {
                    auto un = static_cast<size_t>(n);
                    if (un < pre.size()) return pre[un];
                    return period[(un - pre.size()) % period.size()];
                }
                if (!two_sided || left_period.empty())
                    throw UnsupportedSpace("negative coordinate of one-sided point");
                long m = -n;  // 1,2,...: left_period read right-to-left
                size_t L = left_period.size();
                return left_period[(L - 1 - static_cast<size_t>((m - 1) % L)) % L];
            }
            case Gen::Morse: {
                if (n >= 0) return morse_symbol(static_cast<unsigned long long>(n));
                return morse_symbol(static_cast<unsigned long long>(-n - 1));
            }
            case Gen::MorseOneSided: {
                if (n < 0) throw UnsupportedSpace("negative coordinate of one-sided point");
                return morse_symbol(static_cast<unsigned long long>(n));
            }
            case Gen::WordCatalog: {
                if (n < 0) throw UnsupportedSpace("negative coordinate of one-sided point");
                // Words of length L start after sum_{l<L} l*k^l symbols.
                long long pos = n;
                long long len = 1;
                long long count = alphabet;  // k^len
                while (pos >= len * count) {
                    pos -= len * count;
                    ++len;
                    count *= alphabet;
                }
                long long widx = pos / len, off = pos % len;
                // symbol `off` of the widx-th word of this length (lex order)
                long long div = 1;
                for (long long i = 0; i < len - 1 - off; ++i) div *= alphabet;
                return static_cast<int>((widx / div) % alphabet);
            }
        }
        throw Error("unreachable");
    }

    Word window(long from, long to) const {  // [from, to)
        std::vector<int> out;
        out.reserve(static_cast<size_t>(to - from));
        for (long i = from; i < to; ++i) out.push_back(symbol_at(i));
        return Word(std::move(out));
    }

    SymbolicDesc shifted(long by) const {
        SymbolicDesc d = *this;
        d.shift += by;
        return d;
    }

    // True if `w` occurs somewhere in the (full, unshifted) point. Decidable
    // for ultimately periodic descriptions; for the others callers should use
    // language machinery instead.
    std::optional<bool> occurs(const Word& w) const {
        if (gen != Gen::UltimatelyPeriodic) return std::nullopt;
        long lo = 0;
        if (two_sided && !left_period.empty())
            lo = -static_cast<long>(left_period.size() + w.size());
        long hi = static_cast<long>(pre.size() + 2 * period.size() + w.size());
        for (long s = lo - shift; s + static_cast<long>(w.size()) <= hi - shift; ++s) {
            if (!two_sided && s + shift < 0) continue;
            bool ok = true;
            for (size_t i = 0; i < w.size() && ok; ++i)
                ok = symbol_at(s + static_cast<long>(i)) == w[i];
            if (ok) return true;
        }
        return false;
    }

    bool operator==(const SymbolicDesc& o) const {
        return gen == o.gen && alphabet == o.alphabet && two_sided == o.two_sided &&
               pre == o.pre && period == o.period && left_period == o.left_period &&
               shift == o.shift;
    }
};

struct Point {
    Space space;
    Rational value;            // UnitInterval / Circle / Ray
    Rational error;            // certified radius; 0 means exact
    bool is_infinity = false;  // Ray
    int index = -1;            // Finite
    std::optional<SymbolicDesc> sym;

    static Point scalar(Space sp, Rational v) {
        Point p;
        p.space = std::move(sp);
        p.value = p.space.kind == SpaceKind::Circle ? mod1(v) : std::move(v);
        return p;
    }
    static Point circle_approx(Rational v, Rational err) {
        Point p;
        p.space = Space::circle();
        p.value = mod1(v);
        p.error = std::move(err);
        return p;
    }
    static Point ray_infinity() {
        Point p;
        p.space = Space::ray();
        p.is_infinity = true;
        return p;
    }
    static Point finite(Space sp, int index) {
        Point p;
        p.space = std::move(sp);
        p.index = index;
        return p;
    }
    static Point symbolic(Space sp, SymbolicDesc d) {
        Point p;
        p.space = std::move(sp);
        p.sym = std::move(d);
        return p;
    }

    bool exact() const { return error == 0; }

    bool operator==(const Point& o) const {
        return space == o.space && value == o.value && error == o.error &&
               is_infinity == o.is_infinity && index == o.index && sym == o.sym;
    }

    std::string str() const {
        switch (space.kind) {
            case SpaceKind::UnitInterval:
            case SpaceKind::Circle: {
                std::string s = to_string(value);
                if (error != 0) s += "~" + to_string(error);
                return s;
            }
            case SpaceKind::Ray:
                return is_infinity ? "inf" : to_string(value);
            case SpaceKind::Finite:
                return "#" + std::to_string(index) + "=" +
                       to_string(space.finite_values[static_cast<size_t>(index)]);
            case SpaceKind::Shift: {
                if (!sym) return "?";
                long w = 8;
                return (sym->two_sided ? sym->window(-w, w) : sym->window(0, w)).str() + "...";
            }
        }
        return "?";
    }
};

}  // namespace topodyn
