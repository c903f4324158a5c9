// Three-valued verdicts with replayable evidence, and check budgets.
#pragma once

#include <string>

#include "topodyn/rational.hpp"

namespace topodyn {

struct CheckBudget {
    Rational eps = rat(1, 8);       // resolution
    long horizon = 64;              // discrete horizon
    Rational horizon_t = rat(32);   // continuous horizon
    int order = 2;                  // product order k
    int wordlen = 8;                // word-length budget for actions

    std::string str() const {
        return "eps=" + to_string(eps) + ",H=" + std::to_string(horizon) +
               ",Ht=" + to_string(horizon_t) + ",k=" + std::to_string(order) +
               ",L=" + std::to_string(wordlen);
    }
};

enum class Status { Holds, Fails, Undetermined };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Holds: return "Holds";
        case Status::Fails: return "Fails";
        case Status::Undetermined: return "Undetermined";
    }
    return "?";
}

// Holds carries a replayable certificate, Fails a concrete witness,
// Undetermined the exhausted budget; all serialized into `evidence`.
struct Verdict {
    Status status = Status::Undetermined;
    std::string evidence;
    CheckBudget budget;

    static Verdict holds(std::string ev, CheckBudget b = {}) {
        return {Status::Holds, std::move(ev), std::move(b)};
    }
    static Verdict fails(std::string ev, CheckBudget b = {}) {
        return {Status::Fails, std::move(ev), std::move(b)};
    }
    static Verdict undetermined(std::string ev, CheckBudget b = {}) {
        return {Status::Undetermined, std::move(ev), std::move(b)};
    }

    bool holds_() const { return status == Status::Holds; }
    bool fails_() const { return status == Status::Fails; }

    std::string str() const { return std::string(status_name(status)) + "(" + evidence + ")"; }
};

}  // namespace topodyn
