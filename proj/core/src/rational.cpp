#include "brackets/rational.hpp"

#include <cctype>
#include <sstream>

namespace brackets {

Rational pow_rational(const Rational& base, long long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0 && exp < 0) throw DomainError("0 raised to a negative power");
    Rational b = exp > 0 ? base : Rational(1) / base;
    unsigned long long e = exp > 0 ? (unsigned long long)exp : (unsigned long long)(-exp);
    Rational acc(1);
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) s += c;
    if (s.empty()) throw SchemaError("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw SchemaError("zero denominator in '" + text + "'");
        return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
        bool neg = !head.empty() && head[0] == '-';
        if (neg || (!head.empty() && head[0] == '+')) head.erase(0, 1);
        if (head.empty()) head = "0";
        BigInt num(head);
        BigInt den(1);
        for (char c : tail) {
            if (!std::isdigit((unsigned char)c)) throw SchemaError("bad rational literal '" + text + "'");
            num = num * 10 + (c - '0');
            den *= 10;
        }
        Rational r(num, den);
        return neg ? Rational(-r) : r;
    }
    return Rational(BigInt(s));
}

std::string render_rational(const Rational& r) {
    std::ostringstream os;
    os << rational_num(r);
    if (!is_integer(r)) os << "/" << rational_den(r);
    return os.str();
}

} // namespace brackets
