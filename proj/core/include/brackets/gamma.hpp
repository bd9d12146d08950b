#pragma once

#include "brackets/factor.hpp"
#include "brackets/numeric_context.hpp"

namespace brackets {

// sign * exp(log_abs); sign 0 encodes an exact zero.
struct SignedLog {
    double log_abs = 0.0;
    int sign = 1;

    double value() const;
    SignedLog& operator*=(const SignedLog& o);
};

inline constexpr double kGammaPoleWindow = 1e-12;

bool near_nonpositive_integer(double x, double window = kGammaPoleWindow);

// sin(pi x) with argument reduction, accurate for large |x|.
double sinpi(double x);

// log|Gamma(x)| and its sign; reflection below zero. Throws GammaPole inside
// the pole window.
SignedLog log_gamma_signed(double x, double pole_window = kGammaPoleWindow);

// Gamma(x) as a double (overflow-prone for large x; prefer log form).
double gamma_value(double x, double pole_window = kGammaPoleWindow);

// Numeric value of a factor product under a context. Numerator gamma at a
// pole throws GammaPole; a denominator gamma at a pole makes the product an
// exact zero. Pow with non-integer exponent and base <= 0 throws NegativeBase.
SignedLog eval_product_log(const FactorProduct& product, const NumericContext& ctx);
double eval_product(const FactorProduct& product, const NumericContext& ctx);

} // namespace brackets
