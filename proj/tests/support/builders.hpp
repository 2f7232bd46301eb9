#ifndef IVHFS_TESTS_BUILDERS_HPP
#define IVHFS_TESTS_BUILDERS_HPP

#include "ivhfs/hfe.hpp"
#include "ivhfs/rational.hpp"
#include "ivhfs/workspace.hpp"

#include <ostream>

#include <string_view>
#include <utility>
#include <vector>

namespace ivhfs {

// Readable gtest failure messages.
inline void PrintTo(const UnitInterval& a, std::ostream* os) { *os << to_string(a); }
inline void PrintTo(const Ivhfe& e, std::ostream* os) { *os << to_string(e); }
inline void PrintTo(const SoftSet& s, std::ostream* os) { *os << to_json(s).dump(); }

} // namespace ivhfs

namespace ivhfs::testing {

inline UnitInterval iv(std::string_view lower, std::string_view upper) {
    return UnitInterval(parse_rational(lower), parse_rational(upper));
}

inline Rational q(std::string_view text) { return parse_rational(text); }

/// hfe({{"0.3", "0.8"}, {"0.7", "0.9"}})
inline Ivhfe hfe(std::initializer_list<std::pair<std::string_view, std::string_view>> items) {
    std::vector<UnitInterval> raw;
    for (const auto& [l, u] : items) {
        raw.push_back(iv(l, u));
    }
    return Ivhfe(std::move(raw));
}

/// Endpoint grid k/steps, every interval with lower <= upper.
inline std::vector<UnitInterval> grid_intervals(int steps) {
    std::vector<UnitInterval> out;
    for (int l = 0; l <= steps; ++l) {
        for (int u = l; u <= steps; ++u) {
            out.emplace_back(make_rational(l, steps), make_rational(u, steps));
        }
    }
    return out;
}

} // namespace ivhfs::testing

#endif
