#include "softev/rational.hpp"

#include "softev/error.hpp"

#include <cctype>

namespace softev {

namespace {

bool all_digits(std::string_view text) {
    if (text.empty()) {
        return false;
    }
    for (char ch : text) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            return false;
        }
    }
    return true;
}

[[noreturn]] void malformed(std::string_view text) {
    throw ProbError(ErrorKind::InvalidValue, "malformed number '" + std::string(text) + "'");
}

Integer pow10(int exponent) {
    Integer result = 1;
    for (int i = 0; i < exponent; ++i) {
        result *= 10;
    }
    return result;
}

// Decimal digits only; the string constructor would read a leading 0 as octal.
Integer from_digits(std::string_view digits) {
    auto first = digits.find_first_not_of('0');
    return first == std::string_view::npos ? Integer(0) : Integer(std::string(digits.substr(first)));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    Rational result;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            malformed(text);
        }
        Integer d = from_digits(den);
        if (d == 0) {
            throw ProbError(ErrorKind::InvalidValue, "zero denominator in '" + std::string(text) + "'");
        }
        result = Rational(from_digits(num), d);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
            malformed(text);
        }
        Integer num = from_digits(std::string(whole) + std::string(frac));
        result = Rational(num, pow10(static_cast<int>(frac.size())));
    } else {
        if (!all_digits(text)) {
            malformed(text);
        }
        result = Rational(from_digits(text));
    }
    return negative ? Rational(-result) : result;
}

std::string to_fraction(const Rational& value) {
    const Integer& num = boost::multiprecision::numerator(value);
    const Integer& den = boost::multiprecision::denominator(value);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

Rational round_to(const Rational& value, int digits) {
    Integer scale = pow10(digits);
    Rational scaled = abs(value) * scale + Rational(1, 2);
    Integer floored = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
    Rational magnitude(floored, scale);
    return value < 0 ? Rational(-magnitude) : magnitude;
}

std::string to_decimal(const Rational& value, int digits) {
    Rational rounded = round_to(value, digits);
    Integer scaled = boost::multiprecision::numerator(abs(rounded) * pow10(digits));
    std::string text = scaled.str();
    if (digits > 0) {
        if (text.size() <= static_cast<std::size_t>(digits)) {
            text.insert(0, static_cast<std::size_t>(digits) + 1 - text.size(), '0');
        }
        text.insert(text.size() - static_cast<std::size_t>(digits), ".");
    }
    return rounded < 0 ? "-" + text : text;
}

}  // namespace softev
