#include "ivhfs/softset.hpp"

#include "ivhfs/error.hpp"

#include <algorithm>
#include <set>

namespace ivhfs {

namespace {

void check_names(const std::vector<std::string>& names, const char* what) {
    if (names.empty()) {
        throw Error(ErrorKind::SchemaError, std::string(what) + " must not be empty");
    }
    std::set<std::string_view> seen;
    for (const auto& name : names) {
        if (name.empty()) {
            throw Error(ErrorKind::SchemaError, std::string(what) + " contains an empty name");
        }
        if (!seen.insert(name).second) {
            throw Error(ErrorKind::SchemaError,
                        std::string(what) + " repeats the name \"" + name + "\"");
        }
    }
}

std::optional<std::size_t> find_name(const std::vector<std::string>& names,
                                     std::string_view name) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - names.begin());
}

SoftSet constant_set(const ContextPtr& context, const Ivhfe& value) {
    std::vector<std::optional<SoftRow>> rows(context->parameters().size(),
                                             SoftRow(context->universe().size(), value));
    return SoftSet(context, std::move(rows));
}

template <typename Combine>
SoftRow combine_rows(const SoftRow& a, const SoftRow& b, Combine combine) {
    SoftRow out;
    out.reserve(a.size());
    for (std::size_t h = 0; h < a.size(); ++h) {
        out.push_back(combine(a[h], b[h]));
    }
    return out;
}

} // namespace

Context::Context(std::vector<std::string> universe, std::vector<std::string> parameters)
    : universe_(std::move(universe)), parameters_(std::move(parameters)) {
    check_names(universe_, "universe");
    check_names(parameters_, "parameters");
}

std::optional<std::size_t> Context::object_index(std::string_view name) const {
    return find_name(universe_, name);
}

std::optional<std::size_t> Context::parameter_index(std::string_view name) const {
    return find_name(parameters_, name);
}

void require_same_context(const Context& a, const Context& b) {
    if (&a != &b && !(a == b)) {
        throw Error(ErrorKind::ContextMismatch, "soft sets are defined over different contexts");
    }
}

SoftSet::SoftSet(ContextPtr context, std::vector<std::optional<SoftRow>> rows)
    : context_(std::move(context)), rows_(std::move(rows)) {
    if (!context_) {
        throw Error(ErrorKind::SchemaError, "soft set without a context");
    }
    if (rows_.size() != context_->parameters().size()) {
        throw Error(ErrorKind::SchemaError, "soft set rows do not match the parameter count");
    }
    bool any = false;
    for (const auto& row : rows_) {
        if (!row) {
            continue;
        }
        any = true;
        if (row->size() != context_->universe().size()) {
            throw Error(ErrorKind::SchemaError, "soft set row does not cover the universe");
        }
    }
    if (!any) {
        throw Error(ErrorKind::SchemaError, "soft set support must not be empty");
    }
}

std::vector<std::size_t> SoftSet::support() const {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < rows_.size(); ++e) {
        if (rows_[e]) {
            out.push_back(e);
        }
    }
    return out;
}

bool SoftSet::is_normalized() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const auto& row) { return row.has_value(); });
}

const Ivhfe& SoftSet::cell(std::size_t parameter, std::size_t object) const {
    const auto& r = rows_.at(parameter);
    if (!r) {
        throw Error(ErrorKind::UnknownName, "parameter \"" + context_->parameters()[parameter] +
                                                "\" is outside the support");
    }
    return r->at(object);
}

SoftSet null_set(const ContextPtr& context) { return constant_set(context, Ivhfe::zero()); }

SoftSet absolute_set(const ContextPtr& context) { return constant_set(context, Ivhfe::one()); }

SoftSet normalize(const SoftSet& f) {
    if (f.is_normalized()) {
        return f;
    }
    const auto& ctx = f.context();
    std::vector<std::optional<SoftRow>> rows;
    rows.reserve(ctx.parameters().size());
    for (std::size_t e = 0; e < ctx.parameters().size(); ++e) {
        rows.push_back(f.row(e) ? *f.row(e) : SoftRow(ctx.universe().size(), Ivhfe::zero()));
    }
    return SoftSet(f.context_ptr(), std::move(rows));
}

SoftSet ss_complement(const SoftSet& f) {
    const SoftSet full = normalize(f);
    std::vector<std::optional<SoftRow>> rows;
    for (std::size_t e = 0; e < full.context().parameters().size(); ++e) {
        SoftRow row;
        for (const auto& cell : *full.row(e)) {
            row.push_back(hfe_complement(cell));
        }
        rows.emplace_back(std::move(row));
    }
    return SoftSet(full.context_ptr(), std::move(rows));
}

SoftSet ss_union(const SoftSet& f, const SoftSet& g, OrderProfile profile) {
    require_same_context(f.context(), g.context());
    std::vector<std::optional<SoftRow>> rows;
    for (std::size_t e = 0; e < f.context().parameters().size(); ++e) {
        const auto& a = f.row(e);
        const auto& b = g.row(e);
        if (a && b) {
            rows.emplace_back(combine_rows(*a, *b, [profile](const Ivhfe& x, const Ivhfe& y) {
                return hfe_join(x, y, profile);
            }));
        } else {
            rows.push_back(a ? a : b);
        }
    }
    return SoftSet(f.context_ptr(), std::move(rows));
}

SoftSet ss_intersection(const SoftSet& f, const SoftSet& g, OrderProfile profile) {
    require_same_context(f.context(), g.context());
    std::vector<std::optional<SoftRow>> rows;
    bool any = false;
    for (std::size_t e = 0; e < f.context().parameters().size(); ++e) {
        const auto& a = f.row(e);
        const auto& b = g.row(e);
        if (a && b) {
            any = true;
            rows.emplace_back(combine_rows(*a, *b, [profile](const Ivhfe& x, const Ivhfe& y) {
                return hfe_meet(x, y, profile);
            }));
        } else {
            rows.emplace_back(std::nullopt);
        }
    }
    if (!any) {
        throw Error(ErrorKind::EmptyIntersection,
                    "intersection requires overlapping supports (A ∩ B is empty)");
    }
    return SoftSet(f.context_ptr(), std::move(rows));
}

bool ss_subset(const SoftSet& f, const SoftSet& g, OrderProfile profile) {
    require_same_context(f.context(), g.context());
    for (std::size_t e = 0; e < f.context().parameters().size(); ++e) {
        const auto& a = f.row(e);
        if (!a) {
            continue;
        }
        const auto& b = g.row(e);
        if (!b) {
            return false;
        }
        for (std::size_t h = 0; h < a->size(); ++h) {
            if (!hfe_leq((*a)[h], (*b)[h], profile)) {
                return false;
            }
        }
    }
    return true;
}

bool ss_equal(const SoftSet& f, const SoftSet& g, OrderProfile profile) {
    return ss_subset(f, g, profile) && ss_subset(g, f, profile);
}

std::optional<CellDifference> first_difference(const SoftSet& f, const SoftSet& g,
                                               OrderProfile profile) {
    require_same_context(f.context(), g.context());
    for (std::size_t e = 0; e < f.context().parameters().size(); ++e) {
        const auto& a = f.row(e);
        const auto& b = g.row(e);
        if (a.has_value() != b.has_value()) {
            return CellDifference{e, 0, std::nullopt};
        }
        if (!a) {
            continue;
        }
        for (std::size_t h = 0; h < a->size(); ++h) {
            const std::size_t k = first_difference((*a)[h], (*b)[h], profile);
            if (k < std::max((*a)[h].size(), (*b)[h].size())) {
                return CellDifference{e, h, k};
            }
        }
    }
    return std::nullopt;
}

} // namespace ivhfs
