#include "ivhfs/interval.hpp"

#include "ivhfs/error.hpp"

namespace ivhfs {

std::string_view to_string(OrderProfile profile) {
    return profile == OrderProfile::Componentwise ? "componentwise" : "rank";
}

OrderProfile parse_profile(std::string_view name) {
    if (name == "componentwise") {
        return OrderProfile::Componentwise;
    }
    if (name == "rank" || name == "rank-select") {
        return OrderProfile::RankSelect;
    }
    throw Error(ErrorKind::UsageError,
                "unknown profile \"" + std::string(name) + "\" (expected componentwise|rank)");
}

UnitInterval::UnitInterval(Rational lower, Rational upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_ < 0 || upper_ > 1 || lower_ > 1 || upper_ < 0) {
        throw Error(ErrorKind::OutOfRange, "interval [" + format_rational(lower_) + "," +
                                               format_rational(upper_) + "] leaves [0,1]");
    }
    if (lower_ > upper_) {
        throw Error(ErrorKind::Inverted, "interval [" + format_rational(lower_) + "," +
                                             format_rational(upper_) + "] has lower > upper");
    }
}

UnitInterval UnitInterval::zero() { return UnitInterval(0, 0); }
UnitInterval UnitInterval::one() { return UnitInterval(1, 1); }

UnitInterval make_interval(const Rational& lower, const Rational& upper) {
    return UnitInterval(lower, upper);
}

NonNegInterval::NonNegInterval(Rational lower, Rational upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_ < 0) {
        throw Error(ErrorKind::OutOfRange, "negative interval endpoint");
    }
    if (lower_ > upper_) {
        throw Error(ErrorKind::Inverted, "interval has lower > upper");
    }
}

Rational possibility_degree(const UnitInterval& a, const UnitInterval& b) {
    Rational widths = a.width() + b.width();
    if (widths == 0) {
        if (a.lower() > b.lower()) {
            return 1;
        }
        return a.lower() == b.lower() ? make_rational(1, 2) : Rational(0);
    }
    Rational ratio = (b.upper() - a.lower()) / widths;
    if (ratio < 0) {
        ratio = 0;
    }
    Rational degree = 1 - ratio;
    return degree < 0 ? Rational(0) : degree;
}

RankOrdering rank_compare(const UnitInterval& a, const UnitInterval& b) {
    // p(a >= b) sits above, at or below 1/2 exactly when the endpoint sum of a
    // does against that of b, which avoids the division.
    const int by_degree = cmp(a.lower() + a.upper(), b.lower() + b.upper());
    if (by_degree != 0) {
        return by_degree < 0 ? RankOrdering::Less : RankOrdering::Greater;
    }
    if (a.lower() != b.lower()) {
        return a.lower() < b.lower() ? RankOrdering::Less : RankOrdering::Greater;
    }
    if (a.upper() != b.upper()) {
        return a.upper() < b.upper() ? RankOrdering::Less : RankOrdering::Greater;
    }
    return RankOrdering::Equal;
}

UnitInterval interval_complement(const UnitInterval& a) {
    return UnitInterval(1 - a.upper(), 1 - a.lower());
}

UnitInterval interval_join(const UnitInterval& a, const UnitInterval& b, OrderProfile profile) {
    if (profile == OrderProfile::Componentwise) {
        return UnitInterval(std::max(a.lower(), b.lower()), std::max(a.upper(), b.upper()));
    }
    return rank_compare(a, b) == RankOrdering::Less ? b : a;
}

UnitInterval interval_meet(const UnitInterval& a, const UnitInterval& b, OrderProfile profile) {
    if (profile == OrderProfile::Componentwise) {
        return UnitInterval(std::min(a.lower(), b.lower()), std::min(a.upper(), b.upper()));
    }
    return rank_compare(a, b) == RankOrdering::Greater ? b : a;
}

bool interval_leq(const UnitInterval& a, const UnitInterval& b, OrderProfile profile) {
    if (profile == OrderProfile::Componentwise) {
        return a.lower() <= b.lower() && a.upper() <= b.upper();
    }
    return a.lower() + a.upper() <= b.lower() + b.upper();
}

NonNegInterval interval_sum(const NonNegInterval& a, const NonNegInterval& b) {
    return NonNegInterval(a.lower() + b.lower(), a.upper() + b.upper());
}

NonNegInterval interval_scale(const Rational& factor, const NonNegInterval& a) {
    if (factor < 0) {
        throw Error(ErrorKind::OutOfRange, "interval scale factor must be nonnegative");
    }
    if (factor == 0) {
        return NonNegInterval(0, 0);
    }
    return NonNegInterval(factor * a.lower(), factor * a.upper());
}

std::string to_string(const UnitInterval& a) {
    return "[" + format_rational(a.lower()) + "," + format_rational(a.upper()) + "]";
}

} // namespace ivhfs
