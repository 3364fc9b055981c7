#include "bei/rational.hpp"

#include <stdexcept>

namespace bei {

BigInt factorial(unsigned n) {
    BigInt acc = 1;
    for (unsigned k = 2; k <= n; ++k) acc *= k;
    return acc;
}

BigInt ceil(const Rational& q) {
    BigInt num = numerator_of(q);
    BigInt den = denominator_of(q);
    BigInt quotient = num / den;  // truncates toward zero
    if (quotient * den != num && num > 0) quotient += 1;
    return quotient;
}

std::string to_string(const Rational& q) {
    BigInt den = denominator_of(q);
    if (den == 1) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + den.str();
}

namespace {

BigInt parse_integer(const std::string& text) {
    std::size_t i = (!text.empty() && text[0] == '-') ? 1 : 0;
    if (i == text.size()) throw std::invalid_argument("malformed integer '" + text + "'");
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("malformed integer '" + text + "'");
    }
    return BigInt(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(parse_integer(text.substr(0, slash)), den);
}

}  // namespace bei
