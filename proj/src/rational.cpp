#include "ivhfs/rational.hpp"

#include "ivhfs/error.hpp"

#include <cctype>

namespace ivhfs {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::Inverted: return "Inverted";
    case ErrorKind::EmptyHfe: return "EmptyHfe";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::EmptyIntersection: return "EmptyIntersection";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::ValueError: return "ValueError";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::UsageError: return "UsageError";
    }
    return "Unknown";
}

Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool all_digits(std::string_view s) {
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

[[noreturn]] void bad_number(std::string_view text) {
    throw Error(ErrorKind::ParseError, "not an exact number: \"" + std::string(text) + "\"");
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (body.empty()) {
        bad_number(text);
    }

    Rational value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (num.empty() || den.empty() || !all_digits(num) || !all_digits(den)) {
            bad_number(text);
        }
        mpz_class d(std::string(den), 10);
        if (d == 0) {
            bad_number(text);
        }
        value = Rational(mpz_class(std::string(num), 10), d);
    } else {
        auto dot = body.find('.');
        auto whole = body.substr(0, dot);
        auto frac = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || !all_digits(whole) || !all_digits(frac)) {
            bad_number(text);
        }
        std::string digits = std::string(whole) + std::string(frac);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        value = Rational(mpz_class(digits, 10), den);
    }
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
    mpz_class den = value.get_den();
    unsigned twos = 0;
    unsigned fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
        den /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
        den /= 5;
        ++fives;
    }
    if (den != 1) {
        return value.get_str(10);
    }

    unsigned places = std::max(twos, fives);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
    mpz_class scaled = value.get_num() * (scale / value.get_den());

    std::string sign = scaled < 0 ? "-" : "";
    mpz_class magnitude = abs(scaled);
    std::string digits = magnitude.get_str(10);
    if (places == 0) {
        return sign + digits;
    }
    if (digits.size() <= places) {
        digits.insert(0, places - digits.size() + 1, '0');
    }
    digits.insert(digits.size() - places, 1, '.');
    return sign + digits;
}

} // namespace ivhfs
