#include "brackets/factor.hpp"

#include <algorithm>
#include <sstream>

#include "brackets/errors.hpp"

namespace brackets {

bool Factor::operator==(const Factor& o) const { return compare(o) == 0; }

int Factor::compare(const Factor& o) const {
    if (kind != o.kind) return (int)kind < (int)o.kind ? -1 : 1;
    if (kind == Kind::Power) {
        int c = base.compare(o.base);
        if (c != 0) return c;
        return exponent.compare(o.exponent);
    }
    return arg.compare(o.arg);
}

std::set<Symbol> Factor::symbols() const {
    std::set<Symbol> out;
    auto merge = [&](const AffineExpr& e) {
        for (const auto& s : e.symbols()) out.insert(s);
    };
    if (kind == Kind::Power) {
        merge(base);
        merge(exponent);
    } else {
        merge(arg);
    }
    return out;
}

FactorProduct& FactorProduct::operator*=(const Factor& f) {
    factors.push_back(f);
    return *this;
}

FactorProduct& FactorProduct::operator*=(const FactorProduct& o) {
    coeff *= o.coeff;
    factors.insert(factors.end(), o.factors.begin(), o.factors.end());
    return *this;
}

FactorProduct FactorProduct::substitute(const std::map<Symbol, AffineExpr>& bindings) const {
    FactorProduct out;
    out.coeff = coeff;
    out.factors.reserve(factors.size());
    for (const Factor& f : factors) {
        Factor g = f;
        if (f.kind == Factor::Kind::Power) {
            g.base = f.base.substitute(bindings);
            g.exponent = f.exponent.substitute(bindings);
        } else {
            g.arg = f.arg.substitute(bindings);
        }
        out.factors.push_back(std::move(g));
    }
    return out;
}

std::set<Symbol> FactorProduct::symbols() const {
    std::set<Symbol> out;
    for (const Factor& f : factors)
        for (const auto& s : f.symbols()) out.insert(s);
    return out;
}

bool FactorProduct::contains(const Symbol& s) const {
    for (const Factor& f : factors)
        if (f.symbols().count(s)) return true;
    return false;
}

FactorProduct FactorProduct::canonical() const {
    if (coeff == 0) return FactorProduct(Rational(0));

    Rational c = coeff;
    std::vector<Factor> gammas;
    // Power factors keyed by base, exponents accumulated.
    std::vector<std::pair<AffineExpr, AffineExpr>> powers;

    auto add_power = [&](AffineExpr base, AffineExpr exp) {
        if (exp.is_zero()) return;
        // 1^e == 1
        if (base.is_constant() && base.constant() == 1) return;
        for (auto& [b, e] : powers) {
            if (b == base) {
                e += exp;
                return;
            }
        }
        powers.emplace_back(std::move(base), std::move(exp));
    };

    for (const Factor& f : factors) {
        if (f.kind == Factor::Kind::Power)
            add_power(f.base, f.exponent);
        else
            gammas.push_back(f);
    }

    // Sign extraction and constant folding, then a merge pass for powers
    // that share an exponent (folds 2^m * a^m into (2a)^m deterministically).
    std::vector<Factor> pow_factors;
    std::vector<std::pair<AffineExpr, AffineExpr>> kept;
    for (auto& [base, exp] : powers) {
        if (exp.is_zero()) continue;
        if (base.is_constant()) {
            if (base.constant() == 0) {
                // 0^e: positive constant exponent -> whole product vanishes
                if (exp.is_constant() && exp.constant() > 0) return FactorProduct(Rational(0));
                kept.emplace_back(base, exp);
                continue;
            }
            if (exp.is_constant() && is_integer(exp.constant())) {
                c *= pow_rational(base.constant(), rational_num(exp.constant()).convert_to<long long>());
                continue;
            }
            kept.emplace_back(base, exp);
            continue;
        }
        if (exp.is_constant() && is_integer(exp.constant()) && base.leading_sign() < 0) {
            long long k = rational_num(exp.constant()).convert_to<long long>();
            if (k % 2 != 0) c = -c;
            kept.emplace_back(-base, exp);
            continue;
        }
        kept.emplace_back(base, exp);
    }

    // group by exponent: fold rational-constant bases into one non-constant
    // affine partner (preferring a base that mentions an index symbol).
    std::stable_sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
        int ce = a.second.compare(b.second);
        if (ce != 0) return ce < 0;
        return a.first.compare(b.first) < 0;
    });
    size_t i = 0;
    while (i < kept.size()) {
        size_t j = i;
        while (j < kept.size() && kept[j].second == kept[i].second) ++j;
        Rational const_base = 1;
        bool have_const = false;
        std::vector<size_t> affine_members;
        for (size_t k = i; k < j; ++k) {
            if (kept[k].first.is_constant()) {
                const_base *= kept[k].first.constant();
                have_const = true;
            } else {
                affine_members.push_back(k);
            }
        }
        if (have_const && !affine_members.empty()) {
            size_t target = affine_members.front();
            for (size_t k : affine_members) {
                bool has_index = false;
                for (const auto& [s, cf] : kept[k].first.terms())
                    if (s.kind == SymbolKind::Index) has_index = true;
                if (has_index) {
                    target = k;
                    break;
                }
            }
            for (size_t k = i; k < j; ++k) {
                if (k == target) {
                    kept[k].first *= const_base;
                } else if (kept[k].first.is_constant()) {
                    kept[k].first = AffineExpr(Rational(1));  // dropped below
                }
            }
        } else if (have_const && affine_members.empty() && j - i > 1) {
            // collapse multiple constant bases sharing an exponent
            for (size_t k = i; k < j; ++k) kept[k].first = AffineExpr(Rational(1));
            kept[i].first = AffineExpr(const_base);
        }
        i = j;
    }
    for (auto& [base, exp] : kept) {
        if (base.is_constant() && base.constant() == 1) continue;
        // sign extraction may newly apply after the merge
        if (exp.is_constant() && is_integer(exp.constant()) && base.leading_sign() < 0) {
            long long k = rational_num(exp.constant()).convert_to<long long>();
            if (k % 2 != 0) c = -c;
            base = -base;
        }
        if (base.is_constant() && exp.is_constant() && is_integer(exp.constant())) {
            c *= pow_rational(base.constant(), rational_num(exp.constant()).convert_to<long long>());
            continue;
        }
        pow_factors.push_back(Factor::power(base, exp));
    }

    // cancel Gamma(x)/Gamma(x)
    std::vector<Factor> nums, dens;
    for (const Factor& g : gammas)
        (g.kind == Factor::Kind::GammaNum ? nums : dens).push_back(g);
    std::vector<bool> den_used(dens.size(), false);
    std::vector<Factor> kept_gammas;
    for (const Factor& n : nums) {
        bool cancelled = false;
        for (size_t d = 0; d < dens.size(); ++d) {
            if (!den_used[d] && dens[d].arg == n.arg) {
                den_used[d] = true;
                cancelled = true;
                break;
            }
        }
        if (!cancelled) kept_gammas.push_back(n);
    }
    for (size_t d = 0; d < dens.size(); ++d)
        if (!den_used[d]) kept_gammas.push_back(dens[d]);

    FactorProduct out;
    out.coeff = c;
    out.factors = std::move(kept_gammas);
    out.factors.insert(out.factors.end(), pow_factors.begin(), pow_factors.end());
    std::sort(out.factors.begin(), out.factors.end(),
              [](const Factor& a, const Factor& b) { return a.compare(b) < 0; });
    return out;
}

bool FactorProduct::canonical_equal(const FactorProduct& a, const FactorProduct& b) {
    FactorProduct ca = a.canonical(), cb = b.canonical();
    if (ca.coeff != cb.coeff) return false;
    if (ca.factors.size() != cb.factors.size()) return false;
    for (size_t i = 0; i < ca.factors.size(); ++i)
        if (!(ca.factors[i] == cb.factors[i])) return false;
    return true;
}

std::string FactorProduct::render() const {
    std::ostringstream num, den;
    bool num_any = false, den_any = false;
    auto wrap = [](const AffineExpr& e) {
        std::string s = e.render();
        if (e.terms().size() + (e.constant() != 0 ? 1 : 0) > 1 || e.leading_sign() < 0)
            return "(" + s + ")";
        return s;
    };
    for (const Factor& f : factors) {
        if (f.kind == Factor::Kind::GammaNum) {
            num << (num_any ? "·" : "") << "Γ(" << f.arg.render() << ")";
            num_any = true;
        } else if (f.kind == Factor::Kind::GammaDen) {
            den << (den_any ? "·" : "") << "Γ(" << f.arg.render() << ")";
            den_any = true;
        } else {
            num << (num_any ? "·" : "") << wrap(f.base) << "^(" << f.exponent.render() << ")";
            num_any = true;
        }
    }
    std::ostringstream os;
    Rational cn = rational_num(coeff), cd = rational_den(coeff);
    bool coeff_num = cn != 1 || !num_any;
    if (coeff_num) {
        os << render_rational(Rational(cn));
        if (num_any) os << "·";
    }
    os << num.str();
    if (cd != 1 || den_any) {
        os << " / ";
        bool both = (cd != 1) && den_any;
        if (both) os << "(";
        if (cd != 1) {
            os << render_rational(Rational(cd));
            if (den_any) os << "·";
        }
        os << den.str();
        if (both) os << ")";
    }
    return os.str();
}

namespace {

// Gamma(x+k)/Gamma(x) with integer k -> affine power factors. One pass to
// a fixed point.
bool shift_merge_once(FactorProduct& p) {
    for (size_t i = 0; i < p.factors.size(); ++i) {
        if (p.factors[i].kind != Factor::Kind::GammaNum) continue;
        for (size_t j = 0; j < p.factors.size(); ++j) {
            if (p.factors[j].kind != Factor::Kind::GammaDen) continue;
            AffineExpr diff = p.factors[i].arg - p.factors[j].arg;
            if (!diff.is_constant() || !is_integer(diff.constant())) continue;
            long long k = rational_num(diff.constant()).convert_to<long long>();
            FactorProduct repl;
            repl.coeff = p.coeff;
            AffineExpr lo = k >= 0 ? p.factors[j].arg : p.factors[i].arg;
            for (long long t = 0; t < (k >= 0 ? k : -k); ++t)
                repl *= Factor::power(lo + AffineExpr(Rational(t)), AffineExpr(Rational(k >= 0 ? 1 : -1)));
            for (size_t m = 0; m < p.factors.size(); ++m)
                if (m != i && m != j) repl *= p.factors[m];
            p = repl.canonical();
            return true;
        }
    }
    return false;
}

// Duplication Gamma(2h+k) = shift * 2^(2h-1) Gamma(h) Gamma(h+1/2) / Gamma(1/2),
// fired only when the half-argument h already appears as another gamma.
bool duplication_once(FactorProduct& p) {
    for (size_t i = 0; i < p.factors.size(); ++i) {
        if (p.factors[i].kind != Factor::Kind::GammaNum) continue;
        const AffineExpr g = p.factors[i].arg;
        if (g.is_constant()) continue;
        for (size_t j = 0; j < p.factors.size(); ++j) {
            if (i == j || p.factors[j].kind == Factor::Kind::Power) continue;
            const AffineExpr h = p.factors[j].arg;
            AffineExpr diff = g - Rational(2) * h;
            if (!diff.is_constant() || !is_integer(diff.constant())) continue;
            long long k = rational_num(diff.constant()).convert_to<long long>();
            FactorProduct repl;
            repl.coeff = p.coeff;
            AffineExpr two_h = Rational(2) * h;
            for (long long t = 0; t < (k >= 0 ? k : -k); ++t) {
                AffineExpr base = (k >= 0 ? two_h : g) + AffineExpr(Rational(t));
                repl *= Factor::power(base, AffineExpr(Rational(k >= 0 ? 1 : -1)));
            }
            repl *= Factor::gamma_num(h);
            repl *= Factor::gamma_num(h + AffineExpr(Rational(1, 2)));
            repl *= Factor::gamma_den(AffineExpr(Rational(1, 2)));
            repl *= Factor::power(AffineExpr(Rational(2)), two_h - AffineExpr(Rational(1)));
            for (size_t m = 0; m < p.factors.size(); ++m)
                if (m != i) repl *= p.factors[m];
            p = repl.canonical();
            return true;
        }
    }
    return false;
}

} // namespace

FactorProduct gamma_normalize(const FactorProduct& product) {
    FactorProduct p = product.canonical();
    int guard = 0;
    bool progress = true;
    while (progress && guard++ < 64) {
        progress = false;
        while (shift_merge_once(p)) progress = true;
        if (duplication_once(p)) progress = true;
    }
    return p;
}

} // namespace brackets
