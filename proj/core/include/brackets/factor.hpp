#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "brackets/affine.hpp"

namespace brackets {

// One multiplicative building block of a closed form or series coefficient:
// Gamma(arg) in the numerator or denominator, or base^exponent with an
// affine base and affine exponent.
struct Factor {
    enum class Kind { GammaNum, GammaDen, Power };

    Kind kind = Kind::Power;
    AffineExpr arg;       // gamma argument
    AffineExpr base;      // power base
    AffineExpr exponent;  // power exponent

    static Factor gamma_num(AffineExpr a) { return {Kind::GammaNum, std::move(a), {}, {}}; }
    static Factor gamma_den(AffineExpr a) { return {Kind::GammaDen, std::move(a), {}, {}}; }
    static Factor power(AffineExpr b, AffineExpr e) {
        return {Kind::Power, {}, std::move(b), std::move(e)};
    }

    bool operator==(const Factor& o) const;
    int compare(const Factor& o) const;
    std::set<Symbol> symbols() const;
};

// Unordered multiset of factors with one leading exact-rational coefficient.
// canonicalize() gives a unique representative so structural comparison of
// two derivation routes is meaningful.
struct FactorProduct {
    Rational coeff = 1;
    std::vector<Factor> factors;

    FactorProduct() = default;
    /*implicit*/ FactorProduct(Rational c) : coeff(std::move(c)) {}

    bool is_zero() const { return coeff == 0; }

    FactorProduct& operator*=(const Factor& f);
    FactorProduct& operator*=(const FactorProduct& o);
    friend FactorProduct operator*(FactorProduct a, const FactorProduct& b) { return a *= b; }

    FactorProduct substitute(const std::map<Symbol, AffineExpr>& bindings) const;
    std::set<Symbol> symbols() const;
    bool contains(const Symbol& s) const;

    // Canonical form: constant powers folded into coeff, sign extraction on
    // integer-exponent bases, equal-base powers merged, Gamma(x)/Gamma(x)
    // cancelled, deterministic factor order.
    FactorProduct canonical() const;

    bool equivalent(const FactorProduct& o) const { return canonical_equal(*this, o); }
    static bool canonical_equal(const FactorProduct& a, const FactorProduct& b);

    std::string render() const;
};

// Pochhammer/duplication simplifier: merges gamma pairs whose arguments
// differ by an integer (emitting the finite affine products instead) and
// applies Gamma(2x) = 2^(2x-1) Gamma(x) Gamma(x+1/2) / Gamma(1/2) when the
// half-argument already appears elsewhere in the product. Value-preserving
// wherever both sides are pole-free.
FactorProduct gamma_normalize(const FactorProduct& product);

} // namespace brackets
