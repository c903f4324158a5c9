// Phase-space descriptors and symbolic words.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "topodyn/errors.hpp"
#include "topodyn/rational.hpp"

namespace topodyn {

enum class SpaceKind {
    UnitInterval,  // [0,1]
    Circle,        // R/Z, fundamental domain [0,1)
    Ray,           // [0,inf] u {inf}, one-point compactification of [0,inf)
    Shift,         // Lambda^N or Lambda^Z
    Finite,        // finite metric subset of R
};

struct Space {
    SpaceKind kind = SpaceKind::UnitInterval;
    int alphabet = 0;        // Shift
    bool two_sided = false;  // Shift
    std::vector<Rational> finite_values;  // Finite; sorted ascending

    static Space unit_interval() { return {SpaceKind::UnitInterval}; }
    static Space circle() { return {SpaceKind::Circle}; }
    static Space ray() { return {SpaceKind::Ray}; }
    static Space shift(int alphabet, bool two_sided) {
        Space s{SpaceKind::Shift};
        s.alphabet = alphabet;
        s.two_sided = two_sided;
        return s;
    }
    static Space finite(std::vector<Rational> values) {
        Space s{SpaceKind::Finite};
        std::sort(values.begin(), values.end());
        s.finite_values = std::move(values);
        return s;
    }

    bool operator==(const Space& o) const {
        return kind == o.kind && alphabet == o.alphabet && two_sided == o.two_sided &&
               finite_values == o.finite_values;
    }
    bool operator!=(const Space& o) const { return !(*this == o); }
};

inline void require_same_space(const Space& a, const Space& b, const char* where) {
    if (a != b) throw SpaceMismatch(where);
}

// A finite word over {0,..,alphabet-1}.
struct Word {
    std::vector<int> symbols;

    Word() = default;
    explicit Word(std::vector<int> s) : symbols(std::move(s)) {}
    // Digits-only literal, e.g. "0110"; alphabet sizes up to 10.
    explicit Word(const std::string& s) {
        symbols.reserve(s.size());
        for (char c : s) {
            if (c < '0' || c > '9') throw InvalidParameter("word literal: " + s);
            symbols.push_back(c - '0');
        }
    }

    size_t size() const { return symbols.size(); }
    bool empty() const { return symbols.empty(); }
    int operator[](size_t i) const { return symbols[i]; }

    Word suffix(size_t from) const {
        return Word(std::vector<int>(symbols.begin() + std::min(from, symbols.size()),
                                     symbols.end()));
    }
    Word operator+(const Word& o) const {
        std::vector<int> s = symbols;
        s.insert(s.end(), o.symbols.begin(), o.symbols.end());
        return Word(std::move(s));
    }
    bool operator==(const Word& o) const { return symbols == o.symbols; }
    bool operator!=(const Word& o) const { return !(*this == o); }
    bool operator<(const Word& o) const {
        if (symbols.size() != o.symbols.size()) return symbols.size() < o.symbols.size();
        return symbols < o.symbols;
    }

    std::string str() const {
        std::string out;
        out.reserve(symbols.size());
        for (int s : symbols) out += static_cast<char>('0' + s);
        return out;
    }
};

// The set of sequences showing `word` starting at coordinate `offset`.
struct Cylinder {
    long offset = 0;
    Word word;

    bool operator==(const Cylinder& o) const { return offset == o.offset && word == o.word; }
    bool operator<(const Cylinder& o) const {
        if (offset != o.offset) return offset < o.offset;
        return word < o.word;
    }
    // True if this cylinder is contained in `o` as a set (syntactic rule:
    // every constraint of o is also a constraint of this).
    bool subset_of(const Cylinder& o) const {
        if (o.offset < offset) return false;
        long end = offset + static_cast<long>(word.size());
        long oend = o.offset + static_cast<long>(o.word.size());
        if (oend > end) return false;
        for (size_t i = 0; i < o.word.size(); ++i)
            if (word[static_cast<size_t>(o.offset - offset) + i] != o.word[i]) return false;
        return true;
    }
};

}  // namespace topodyn
