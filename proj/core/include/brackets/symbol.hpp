#pragma once

#include <compare>
#include <string>

namespace brackets {

enum class SymbolKind { Index, Parameter, Variable };

// Compares "n2" < "n10": any trailing digit run is ordered numerically so
// engine-generated index names sort in creation order.
int natural_compare(const std::string& a, const std::string& b);

struct Symbol {
    std::string name;
    SymbolKind kind = SymbolKind::Parameter;

    static Symbol index(std::string n) { return {std::move(n), SymbolKind::Index}; }
    static Symbol parameter(std::string n) { return {std::move(n), SymbolKind::Parameter}; }
    static Symbol variable(std::string n) { return {std::move(n), SymbolKind::Variable}; }

    bool operator==(const Symbol& o) const { return name == o.name; }
    bool operator!=(const Symbol& o) const { return name != o.name; }
    bool operator<(const Symbol& o) const { return natural_compare(name, o.name) < 0; }
};

const char* to_string(SymbolKind k);

} // namespace brackets
