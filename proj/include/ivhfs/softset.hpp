#ifndef IVHFS_SOFTSET_HPP
#define IVHFS_SOFTSET_HPP

#include "ivhfs/hfe.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ivhfs {

/// The soft universe (U, E): ordered, distinct object and parameter names.
class Context {
public:
    /// Throws Error(SchemaError) on empty, blank or repeated names.
    Context(std::vector<std::string> universe, std::vector<std::string> parameters);

    const std::vector<std::string>& universe() const noexcept { return universe_; }
    const std::vector<std::string>& parameters() const noexcept { return parameters_; }

    std::optional<std::size_t> object_index(std::string_view name) const;
    std::optional<std::size_t> parameter_index(std::string_view name) const;

    friend bool operator==(const Context& a, const Context& b) {
        return a.universe_ == b.universe_ && a.parameters_ == b.parameters_;
    }

private:
    std::vector<std::string> universe_;
    std::vector<std::string> parameters_;
};

using ContextPtr = std::shared_ptr<const Context>;

/// Throws Error(ContextMismatch) unless both contexts describe the same (U, E).
void require_same_context(const Context& a, const Context& b);

/// A row holds one Ivhfe per universe object; a missing row means the
/// parameter lies outside the support.
using SoftRow = std::vector<Ivhfe>;

/// Interval-valued hesitant fuzzy soft set F_A over a shared context.
class SoftSet {
public:
    /// rows has one slot per context parameter. Throws Error(SchemaError)
    /// when a row has the wrong width or the support is empty.
    SoftSet(ContextPtr context, std::vector<std::optional<SoftRow>> rows);

    const Context& context() const noexcept { return *context_; }
    const ContextPtr& context_ptr() const noexcept { return context_; }

    bool in_support(std::size_t parameter) const { return rows_.at(parameter).has_value(); }
    std::vector<std::size_t> support() const;
    bool is_normalized() const;

    const Ivhfe& cell(std::size_t parameter, std::size_t object) const;
    const std::optional<SoftRow>& row(std::size_t parameter) const { return rows_.at(parameter); }

    /// Structural identity; use ss_equal for the soft-set equality relation.
    friend bool operator==(const SoftSet& a, const SoftSet& b) {
        return *a.context_ == *b.context_ && a.rows_ == b.rows_;
    }

private:
    ContextPtr context_;
    std::vector<std::optional<SoftRow>> rows_;
};

SoftSet null_set(const ContextPtr& context);
SoftSet absolute_set(const ContextPtr& context);

/// Extends the support to every parameter, filling new cells with {[0,0]}.
SoftSet normalize(const SoftSet& f);

/// Normalizes, then complements every cell.
SoftSet ss_complement(const SoftSet& f);

/// Support A ∪ B; cells from the sole owner or joined on A ∩ B.
SoftSet ss_union(const SoftSet& f, const SoftSet& g, OrderProfile profile);
/// Support A ∩ B with met cells. Throws Error(EmptyIntersection) when the
/// supports are disjoint.
SoftSet ss_intersection(const SoftSet& f, const SoftSet& g, OrderProfile profile);

/// Support inclusion plus hfe_leq on every cell of f's support. Supports are
/// compared as given; normalize first to compare like-for-like.
bool ss_subset(const SoftSet& f, const SoftSet& g, OrderProfile profile);
bool ss_equal(const SoftSet& f, const SoftSet& g, OrderProfile profile);

/// Location of the first disagreement between two soft sets, in parameter
/// then object order. position is 0-based after padding; it is absent when
/// the disagreement is a support mismatch.
struct CellDifference {
    std::size_t parameter;
    std::size_t object;
    std::optional<std::size_t> position;
};

std::optional<CellDifference> first_difference(const SoftSet& f, const SoftSet& g,
                                               OrderProfile profile);

} // namespace ivhfs

#endif
