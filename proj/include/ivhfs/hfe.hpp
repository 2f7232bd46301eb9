#ifndef IVHFS_HFE_HPP
#define IVHFS_HFE_HPP

#include "ivhfs/interval.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ivhfs {

/// Interval-valued hesitant fuzzy element: a nonempty multiset of unit
/// intervals kept in ascending rank order. Repeated intervals are kept;
/// the length takes part in comparisons.
class Ivhfe {
public:
    /// Sorts into canonical order. Throws Error(EmptyHfe) when raw is empty.
    explicit Ivhfe(std::vector<UnitInterval> raw);
    Ivhfe(std::initializer_list<UnitInterval> raw);

    static Ivhfe zero() { return Ivhfe{UnitInterval::zero()}; }
    static Ivhfe one() { return Ivhfe{UnitInterval::one()}; }

    std::size_t size() const noexcept { return elements_.size(); }
    const UnitInterval& operator[](std::size_t k) const { return elements_[k]; }
    const UnitInterval& largest() const { return elements_.back(); }
    std::span<const UnitInterval> elements() const noexcept { return elements_; }

    /// True when every element is [0,0].
    bool is_null() const;

    /// Structural identity (same length, same intervals in order).
    friend bool operator==(const Ivhfe& a, const Ivhfe& b) { return a.elements_ == b.elements_; }

private:
    std::vector<UnitInterval> elements_;
};

Ivhfe canonicalize(std::vector<UnitInterval> raw);

/// Pads to length n by repeating the largest element.
/// Throws Error(TooShort) when n < e.size().
Ivhfe extend(const Ivhfe& e, std::size_t n);

Ivhfe hfe_complement(const Ivhfe& e);

/// Both operands are padded to the longer length and combined position by
/// position; the result is re-sorted into canonical order.
Ivhfe hfe_join(const Ivhfe& a, const Ivhfe& b, OrderProfile profile);
Ivhfe hfe_meet(const Ivhfe& a, const Ivhfe& b, OrderProfile profile);

/// Cartesian combination over all pairs, exact duplicates removed.
Ivhfe hfe_ring_sum(const Ivhfe& a, const Ivhfe& b);
Ivhfe hfe_ring_product(const Ivhfe& a, const Ivhfe& b);

/// Mean interval of the element.
UnitInterval score(const Ivhfe& e);

bool hfe_leq(const Ivhfe& a, const Ivhfe& b, OrderProfile profile);
bool hfe_eq(const Ivhfe& a, const Ivhfe& b, OrderProfile profile);

/// First position (0-based, after padding both to the longer length) at
/// which the two elements are not equal under the profile; size() when none.
std::size_t first_difference(const Ivhfe& a, const Ivhfe& b, OrderProfile profile);

/// "{[0.3,0.8],[0.7,0.9]}"
std::string to_string(const Ivhfe& e);

} // namespace ivhfs

#endif
