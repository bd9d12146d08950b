#include "brackets/gamma.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "brackets/errors.hpp"

namespace brackets {

double SignedLog::value() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(log_abs);
}

SignedLog& SignedLog::operator*=(const SignedLog& o) {
    if (sign == 0 || o.sign == 0) {
        sign = 0;
        log_abs = -std::numeric_limits<double>::infinity();
        return *this;
    }
    sign *= o.sign;
    log_abs += o.log_abs;
    return *this;
}

bool near_nonpositive_integer(double x, double window) {
    if (x > 0.5) return false;
    return std::fabs(x - std::nearbyint(x)) <= window;
}

double sinpi(double x) {
    double r = std::remainder(x, 2.0);  // r in [-1, 1]
    return std::sin(M_PI * r);
}

SignedLog log_gamma_signed(double x, double pole_window) {
    if (near_nonpositive_integer(x, pole_window)) {
        std::ostringstream os;
        os << "gamma pole at argument " << x;
        throw GammaPole(os.str());
    }
    if (x > 0) return {std::lgamma(x), 1};
    // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1-x))
    double s = sinpi(x);
    SignedLog out;
    out.log_abs = std::log(M_PI) - std::log(std::fabs(s)) - std::lgamma(1.0 - x);
    out.sign = s >= 0 ? 1 : -1;
    return out;
}

double gamma_value(double x, double pole_window) {
    SignedLog g = log_gamma_signed(x, pole_window);
    return g.value();
}

SignedLog eval_product_log(const FactorProduct& product, const NumericContext& ctx) {
    SignedLog acc{0.0, 1};
    if (product.coeff == 0) return {-std::numeric_limits<double>::infinity(), 0};
    double c = to_double(product.coeff);
    acc.log_abs = std::log(std::fabs(c));
    acc.sign = c >= 0 ? 1 : -1;

    auto lookup = [&](const Symbol& s) -> std::optional<double> {
        if (s.kind == SymbolKind::Variable)
            throw MalformedSpec("variable symbol '" + s.name + "' inside a numeric product");
        return ctx.lookup(s);
    };

    for (const Factor& f : product.factors) {
        if (f.kind == Factor::Kind::GammaNum) {
            acc *= log_gamma_signed(f.arg.evaluate(lookup));
        } else if (f.kind == Factor::Kind::GammaDen) {
            double a = f.arg.evaluate(lookup);
            if (near_nonpositive_integer(a)) {
                // 1/Gamma(-k) = 0
                return {-std::numeric_limits<double>::infinity(), 0};
            }
            SignedLog g = log_gamma_signed(a);
            acc *= SignedLog{-g.log_abs, g.sign};
        } else {
            double b = f.base.evaluate(lookup);
            double e = f.exponent.evaluate(lookup);
            bool integral = std::fabs(e - std::nearbyint(e)) < 1e-9;
            if (integral) {
                long long k = (long long)std::llround(e);
                if (b == 0.0) {
                    if (k > 0) return {-std::numeric_limits<double>::infinity(), 0};
                    if (k == 0) continue;
                    throw NegativeBase("0 raised to negative power " + std::to_string(k));
                }
                SignedLog t;
                t.log_abs = k * std::log(std::fabs(b));
                t.sign = (b < 0 && (k % 2 != 0)) ? -1 : 1;
                acc *= t;
            } else {
                if (b <= 0.0) {
                    std::ostringstream os;
                    os << "base " << b << " with non-integer exponent " << e;
                    throw NegativeBase(os.str());
                }
                acc *= SignedLog{e * std::log(b), 1};
            }
        }
    }
    return acc;
}

double eval_product(const FactorProduct& product, const NumericContext& ctx) {
    return eval_product_log(product, ctx).value();
}

} // namespace brackets
