#pragma once

#include <map>
#include <optional>

#include "brackets/symbol.hpp"

namespace brackets {

// Parameter assignment plus the two knobs every numeric routine shares.
struct NumericContext {
    std::map<Symbol, double> assignment;
    double tolerance = 1e-10;
    long max_terms = 1000000;

    std::optional<double> lookup(const Symbol& s) const {
        auto it = assignment.find(s);
        if (it == assignment.end()) return std::nullopt;
        return it->second;
    }

    NumericContext& set(const Symbol& s, double v) {
        assignment[s] = v;
        return *this;
    }
};

} // namespace brackets
