#include "ivhfs/hfe.hpp"

#include "ivhfs/error.hpp"

#include <algorithm>

namespace ivhfs {

namespace {

std::vector<UnitInterval> sorted(std::vector<UnitInterval> raw) {
    if (raw.empty()) {
        throw Error(ErrorKind::EmptyHfe, "hesitant element must hold at least one interval");
    }
    if (raw.size() > 16) {
        std::stable_sort(raw.begin(), raw.end(), rank_less);
        return raw;
    }
    // Hesitant elements are short; insertion sort is stable and skips the
    // temporary buffer stable_sort allocates.
    for (std::size_t i = 1; i < raw.size(); ++i) {
        for (std::size_t j = i; j > 0 && rank_less(raw[j], raw[j - 1]); --j) {
            std::swap(raw[j], raw[j - 1]);
        }
    }
    return raw;
}

// Element k of e extended with copies of its largest element.
const UnitInterval& padded_at(const Ivhfe& e, std::size_t k) {
    return k < e.size() ? e[k] : e.largest();
}

std::vector<UnitInterval> padded(const Ivhfe& e, std::size_t n) {
    std::vector<UnitInterval> out(e.elements().begin(), e.elements().end());
    out.resize(std::max(n, out.size()), e.largest());
    return out;
}

bool interval_eq(const UnitInterval& a, const UnitInterval& b, OrderProfile profile) {
    if (profile == OrderProfile::Componentwise) {
        return a == b;
    }
    return interval_leq(a, b, profile) && interval_leq(b, a, profile);
}

template <typename Combine>
Ivhfe kwise(const Ivhfe& a, const Ivhfe& b, Combine combine) {
    const std::size_t n = std::max(a.size(), b.size());
    std::vector<UnitInterval> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(combine(padded_at(a, k), padded_at(b, k)));
    }
    return Ivhfe(std::move(out));
}

template <typename Combine>
Ivhfe cartesian(const Ivhfe& a, const Ivhfe& b, Combine combine) {
    std::vector<UnitInterval> out;
    for (const auto& x : a.elements()) {
        for (const auto& y : b.elements()) {
            UnitInterval z = combine(x, y);
            if (std::find(out.begin(), out.end(), z) == out.end()) {
                out.push_back(std::move(z));
            }
        }
    }
    return Ivhfe(std::move(out));
}

} // namespace

Ivhfe::Ivhfe(std::vector<UnitInterval> raw) : elements_(sorted(std::move(raw))) {}

Ivhfe::Ivhfe(std::initializer_list<UnitInterval> raw)
    : elements_(sorted(std::vector<UnitInterval>(raw))) {}

bool Ivhfe::is_null() const {
    return std::all_of(elements_.begin(), elements_.end(),
                       [](const UnitInterval& x) { return x.upper() == 0; });
}

Ivhfe canonicalize(std::vector<UnitInterval> raw) { return Ivhfe(std::move(raw)); }

Ivhfe extend(const Ivhfe& e, std::size_t n) {
    if (n < e.size()) {
        throw Error(ErrorKind::TooShort, "cannot extend a hesitant element of length " +
                                             std::to_string(e.size()) + " to " +
                                             std::to_string(n));
    }
    return Ivhfe(padded(e, n));
}

Ivhfe hfe_complement(const Ivhfe& e) {
    std::vector<UnitInterval> out;
    out.reserve(e.size());
    for (const auto& x : e.elements()) {
        out.push_back(interval_complement(x));
    }
    return Ivhfe(std::move(out));
}

Ivhfe hfe_join(const Ivhfe& a, const Ivhfe& b, OrderProfile profile) {
    return kwise(a, b, [profile](const UnitInterval& x, const UnitInterval& y) {
        return interval_join(x, y, profile);
    });
}

Ivhfe hfe_meet(const Ivhfe& a, const Ivhfe& b, OrderProfile profile) {
    return kwise(a, b, [profile](const UnitInterval& x, const UnitInterval& y) {
        return interval_meet(x, y, profile);
    });
}

Ivhfe hfe_ring_sum(const Ivhfe& a, const Ivhfe& b) {
    return cartesian(a, b, [](const UnitInterval& x, const UnitInterval& y) {
        return UnitInterval(x.lower() + y.lower() - x.lower() * y.lower(),
                            x.upper() + y.upper() - x.upper() * y.upper());
    });
}

Ivhfe hfe_ring_product(const Ivhfe& a, const Ivhfe& b) {
    return cartesian(a, b, [](const UnitInterval& x, const UnitInterval& y) {
        return UnitInterval(x.lower() * y.lower(), x.upper() * y.upper());
    });
}

UnitInterval score(const Ivhfe& e) {
    NonNegInterval total(e[0]);
    for (std::size_t k = 1; k < e.size(); ++k) {
        total = interval_sum(total, NonNegInterval(e[k]));
    }
    return interval_scale(make_rational(1, static_cast<long>(e.size())), total).to_unit();
}

bool hfe_leq(const Ivhfe& a, const Ivhfe& b, OrderProfile profile) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (!interval_leq(padded_at(a, k), padded_at(b, k), profile)) {
            return false;
        }
    }
    return true;
}

bool hfe_eq(const Ivhfe& a, const Ivhfe& b, OrderProfile profile) {
    return hfe_leq(a, b, profile) && hfe_leq(b, a, profile);
}

std::size_t first_difference(const Ivhfe& a, const Ivhfe& b, OrderProfile profile) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (!interval_eq(padded_at(a, k), padded_at(b, k), profile)) {
            return k;
        }
    }
    return n;
}

std::string to_string(const Ivhfe& e) {
    std::string out = "{";
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (k > 0) {
            out += ",";
        }
        out += to_string(e[k]);
    }
    return out + "}";
}

} // namespace ivhfs
