#ifndef IVHFS_INTERVAL_HPP
#define IVHFS_INTERVAL_HPP

#include "ivhfs/rational.hpp"

#include <string>
#include <string_view>

namespace ivhfs {

/// Chooses how two intervals are joined/met and how hesitant elements are
/// ordered. There is deliberately no default anywhere in the library.
enum class OrderProfile {
    Componentwise, ///< endpoint-wise max/min; order is endpoint dominance
    RankSelect,    ///< keep the whole higher/lower-ranked interval
};

std::string_view to_string(OrderProfile profile);
/// Accepts "componentwise", "rank" and "rank-select". Throws Error(UsageError).
OrderProfile parse_profile(std::string_view name);

enum class RankOrdering { Less, Equal, Greater };

/// Closed subinterval [lower, upper] of [0, 1] with exact endpoints.
class UnitInterval {
public:
    /// Throws Error(OutOfRange) or Error(Inverted).
    UnitInterval(Rational lower, Rational upper);

    static UnitInterval point(const Rational& value) { return UnitInterval(value, value); }
    static UnitInterval zero();
    static UnitInterval one();

    const Rational& lower() const noexcept { return lower_; }
    const Rational& upper() const noexcept { return upper_; }
    Rational width() const { return upper_ - lower_; }

    friend bool operator==(const UnitInterval& a, const UnitInterval& b) {
        return a.lower_ == b.lower_ && a.upper_ == b.upper_;
    }

private:
    Rational lower_;
    Rational upper_;
};

/// Validating factory, equivalent to the constructor.
UnitInterval make_interval(const Rational& lower, const Rational& upper);

/// Interval with nonnegative (possibly > 1) endpoints, used for sums before
/// they are scaled back into [0, 1].
class NonNegInterval {
public:
    NonNegInterval(Rational lower, Rational upper);
    explicit NonNegInterval(const UnitInterval& unit)
        : lower_(unit.lower()), upper_(unit.upper()) {}

    const Rational& lower() const noexcept { return lower_; }
    const Rational& upper() const noexcept { return upper_; }

    /// Throws Error(OutOfRange) when the interval leaves [0, 1].
    UnitInterval to_unit() const { return UnitInterval(lower_, upper_); }

    friend bool operator==(const NonNegInterval& a, const NonNegInterval& b) {
        return a.lower_ == b.lower_ && a.upper_ == b.upper_;
    }

private:
    Rational lower_;
    Rational upper_;
};

/// Degree of possibility that a >= b:
///   max{1 - max((b.upper - a.lower) / (w_a + w_b), 0), 0}.
/// When both intervals are points the result is 1, 1/2 or 0 by comparing
/// the point values.
Rational possibility_degree(const UnitInterval& a, const UnitInterval& b);

/// Total order: possibility degree against 1/2, ties broken by lower then
/// upper endpoint. Equal only for identical intervals.
RankOrdering rank_compare(const UnitInterval& a, const UnitInterval& b);

inline bool rank_less(const UnitInterval& a, const UnitInterval& b) {
    return rank_compare(a, b) == RankOrdering::Less;
}

UnitInterval interval_complement(const UnitInterval& a);

UnitInterval interval_join(const UnitInterval& a, const UnitInterval& b, OrderProfile profile);
UnitInterval interval_meet(const UnitInterval& a, const UnitInterval& b, OrderProfile profile);

/// Profile order on single intervals: endpoint dominance (componentwise) or
/// possibility_degree(b >= a) >= 1/2 (rank-select).
bool interval_leq(const UnitInterval& a, const UnitInterval& b, OrderProfile profile);

NonNegInterval interval_sum(const NonNegInterval& a, const NonNegInterval& b);
/// Throws Error(OutOfRange) for a negative factor.
NonNegInterval interval_scale(const Rational& factor, const NonNegInterval& a);

/// "[0.3,0.8]"
std::string to_string(const UnitInterval& a);

} // namespace ivhfs

#endif
