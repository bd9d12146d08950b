#include "brackets/affine.hpp"

#include <cctype>
#include <sstream>

#include "brackets/errors.hpp"

namespace brackets {

int natural_compare(const std::string& a, const std::string& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit((unsigned char)a[i]) && std::isdigit((unsigned char)b[j])) {
            size_t i0 = i, j0 = j;
            while (i < a.size() && std::isdigit((unsigned char)a[i])) ++i;
            while (j < b.size() && std::isdigit((unsigned char)b[j])) ++j;
            std::string da = a.substr(i0, i - i0), db = b.substr(j0, j - j0);
            // strip leading zeros
            da.erase(0, da.find_first_not_of('0'));
            db.erase(0, db.find_first_not_of('0'));
            if (da.size() != db.size()) return da.size() < db.size() ? -1 : 1;
            if (da != db) return da < db ? -1 : 1;
        } else {
            if (a[i] != b[j]) return (unsigned char)a[i] < (unsigned char)b[j] ? -1 : 1;
            ++i; ++j;
        }
    }
    if (i < a.size()) return 1;
    if (j < b.size()) return -1;
    return 0;
}

const char* to_string(SymbolKind k) {
    switch (k) {
        case SymbolKind::Index: return "index";
        case SymbolKind::Parameter: return "parameter";
        case SymbolKind::Variable: return "variable";
    }
    return "?";
}

AffineExpr AffineExpr::term(const Symbol& s, Rational coeff) {
    AffineExpr e;
    if (coeff != 0) e.terms_[s] = std::move(coeff);
    return e;
}

Rational AffineExpr::coeff(const Symbol& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::set<Symbol> AffineExpr::symbols() const {
    std::set<Symbol> out;
    for (const auto& [s, c] : terms_) out.insert(s);
    return out;
}

void AffineExpr::prune(const Symbol& s) {
    auto it = terms_.find(s);
    if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

AffineExpr& AffineExpr::operator+=(const AffineExpr& o) {
    constant_ += o.constant_;
    for (const auto& [s, c] : o.terms_) {
        terms_[s] += c;
        prune(s);
    }
    return *this;
}

AffineExpr& AffineExpr::operator-=(const AffineExpr& o) {
    constant_ -= o.constant_;
    for (const auto& [s, c] : o.terms_) {
        terms_[s] -= c;
        prune(s);
    }
    return *this;
}

AffineExpr& AffineExpr::operator*=(const Rational& k) {
    if (k == 0) {
        terms_.clear();
        constant_ = 0;
        return *this;
    }
    constant_ *= k;
    for (auto& [s, c] : terms_) c *= k;
    return *this;
}

AffineExpr AffineExpr::operator-() const {
    AffineExpr e = *this;
    e *= Rational(-1);
    return e;
}

int AffineExpr::compare(const AffineExpr& o) const {
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    while (it != terms_.end() && jt != o.terms_.end()) {
        if (it->first != jt->first) return it->first < jt->first ? -1 : 1;
        if (it->second != jt->second) return it->second < jt->second ? -1 : 1;
        ++it; ++jt;
    }
    if (it != terms_.end()) return 1;
    if (jt != o.terms_.end()) return -1;
    if (constant_ != o.constant_) return constant_ < o.constant_ ? -1 : 1;
    return 0;
}

AffineExpr AffineExpr::substitute(const std::map<Symbol, AffineExpr>& bindings) const {
    for (const auto& [bound, value] : bindings) {
        for (const auto& [other, unused] : bindings) {
            if (value.contains(other))
                throw CyclicSubstitution("substitution binds '" + other.name +
                                         "' inside the value of '" + bound.name + "'");
        }
    }
    AffineExpr out;
    out.constant_ = constant_;
    for (const auto& [s, c] : terms_) {
        auto it = bindings.find(s);
        if (it == bindings.end()) {
            out.terms_[s] += c;
            out.prune(s);
        } else {
            out += c * it->second;
        }
    }
    return out;
}

AffineExpr substitute(const AffineExpr& expr, const std::map<Symbol, AffineExpr>& bindings) {
    return expr.substitute(bindings);
}

double AffineExpr::evaluate(const std::function<std::optional<double>(const Symbol&)>& lookup) const {
    double v = to_double(constant_);
    for (const auto& [s, c] : terms_) {
        auto sv = lookup(s);
        if (!sv)
            throw UnboundSymbol("no numeric value for symbol '" + s.name + "'");
        v += to_double(c) * *sv;
    }
    return v;
}

int AffineExpr::leading_sign() const {
    if (!terms_.empty()) {
        const Rational& c = terms_.begin()->second;
        return c > 0 ? 1 : (c < 0 ? -1 : 0);
    }
    return constant_ > 0 ? 1 : (constant_ < 0 ? -1 : 0);
}

std::string AffineExpr::render() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rational& c, const std::string& sym) {
        Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (sym.empty()) {
            os << render_rational(a);
        } else if (a == 1) {
            os << sym;
        } else if (is_integer(a)) {
            os << render_rational(a) << sym;
        } else {
            os << render_rational(a) << "*" << sym;
        }
    };
    for (const auto& [s, c] : terms_) emit(c, s.name);
    if (constant_ != 0) emit(constant_, "");
    return os.str();
}

} // namespace brackets
