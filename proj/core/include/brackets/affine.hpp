#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "brackets/rational.hpp"
#include "brackets/symbol.hpp"

namespace brackets {

// Exact linear form  sum_i c_i * s_i + c0  over symbols. Zero coefficients
// are never stored, so structural equality is semantic equality.
class AffineExpr {
public:
    AffineExpr() = default;
    /*implicit*/ AffineExpr(Rational constant) : constant_(std::move(constant)) {}
    /*implicit*/ AffineExpr(long long constant) : constant_(constant) {}
    /*implicit*/ AffineExpr(const Symbol& s) { terms_[s] = 1; }

    static AffineExpr term(const Symbol& s, Rational coeff);

    const std::map<Symbol, Rational>& terms() const { return terms_; }
    const Rational& constant() const { return constant_; }

    bool is_constant() const { return terms_.empty(); }
    bool contains(const Symbol& s) const { return terms_.count(s) != 0; }
    Rational coeff(const Symbol& s) const;
    std::set<Symbol> symbols() const;
    bool is_zero() const { return terms_.empty() && constant_ == 0; }

    AffineExpr& operator+=(const AffineExpr& o);
    AffineExpr& operator-=(const AffineExpr& o);
    AffineExpr& operator*=(const Rational& k);

    friend AffineExpr operator+(AffineExpr a, const AffineExpr& b) { return a += b; }
    friend AffineExpr operator-(AffineExpr a, const AffineExpr& b) { return a -= b; }
    friend AffineExpr operator*(AffineExpr a, const Rational& k) { return a *= k; }
    friend AffineExpr operator*(const Rational& k, AffineExpr a) { return a *= k; }
    AffineExpr operator-() const;

    bool operator==(const AffineExpr& o) const {
        return constant_ == o.constant_ && terms_ == o.terms_;
    }
    bool operator!=(const AffineExpr& o) const { return !(*this == o); }
    // Total order used for canonical sorting of factors.
    int compare(const AffineExpr& o) const;
    bool operator<(const AffineExpr& o) const { return compare(o) < 0; }

    // Replaces each bound symbol by its binding; unbound symbols stay.
    // Throws CyclicSubstitution if a binding's value mentions a bound symbol.
    AffineExpr substitute(const std::map<Symbol, AffineExpr>& bindings) const;

    double evaluate(const std::function<std::optional<double>(const Symbol&)>& lookup) const;

    // Sign of the first stored coefficient (constant if no terms); 0 for the
    // zero form. Drives the canonical sign-extraction of power bases.
    int leading_sign() const;

    std::string render() const;

private:
    std::map<Symbol, Rational> terms_;
    Rational constant_ = 0;
    void prune(const Symbol& s);
};

AffineExpr substitute(const AffineExpr& expr, const std::map<Symbol, AffineExpr>& bindings);

} // namespace brackets
