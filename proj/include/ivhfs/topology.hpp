#ifndef IVHFS_TOPOLOGY_HPP
#define IVHFS_TOPOLOGY_HPP

#include "ivhfs/softset.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ivhfs {

inline constexpr std::string_view kNullName = "phi";
inline constexpr std::string_view kAbsoluteName = "E";

struct NamedSet {
    std::string name;
    SoftSet set;
};

/// A finite, ordered family of named soft sets over one context. Members are
/// normalized on construction; membership is always judged by ss_equal.
class Family {
public:
    /// Throws Error(SchemaError) on repeated names and Error(ContextMismatch)
    /// for members over another context.
    Family(ContextPtr context, std::vector<NamedSet> members);

    const Context& context() const noexcept { return *context_; }
    const ContextPtr& context_ptr() const noexcept { return context_; }
    const std::vector<NamedSet>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }

    /// Index of the first member ss_equal to f (after normalizing f).
    std::optional<std::size_t> find(const SoftSet& f, OrderProfile profile) const;
    bool contains(const SoftSet& f, OrderProfile profile) const { return find(f, profile).has_value(); }

private:
    ContextPtr context_;
    std::vector<NamedSet> members_;
};

enum class Axiom { ContainsPhi, ContainsE, MeetClosed, JoinClosed };

/// "contains-phi", "contains-E", "meet-closed", "join-closed".
std::string_view to_string(Axiom axiom);

/// The member that agrees with a witness for the longest stretch in
/// (parameter, object, position) order, and where they first disagree.
struct NearestMember {
    std::size_t member;
    CellDifference difference;
};

struct Violation {
    Axiom axiom;
    std::vector<std::string> operands;
    SoftSet witness;
    std::optional<NearestMember> nearest;
};

struct TopologyReport {
    bool valid() const noexcept { return violations.empty(); }
    std::vector<Violation> violations;
};

/// Checks phi and E membership and pairwise closure under intersection and
/// union. Violations come out in member-order-major order.
TopologyReport validate_topology(const Family& family, OrderProfile profile);

std::optional<NearestMember> nearest_member(const Family& family, const SoftSet& f,
                                            OrderProfile profile);

/// Complements of every member, named "<name>^C", in member order.
std::vector<NamedSet> closed_members(const Family& family);
bool is_open(const Family& family, const SoftSet& f, OrderProfile profile);
bool is_closed(const Family& family, const SoftSet& f, OrderProfile profile);

/// Intersection of all closed members containing f. Validity of the family
/// is not required.
SoftSet closure(const Family& family, const SoftSet& f, OrderProfile profile);
/// Union of all members contained in f.
SoftSet interior(const Family& family, const SoftSet& f, OrderProfile profile);

enum class TopologyRelation { Equal, Coarser, Finer, Incomparable };
std::string_view to_string(TopologyRelation relation);

/// Throws Error(ContextMismatch).
TopologyRelation compare_topologies(const Family& lhs, const Family& rhs, OrderProfile profile);

/// Members of the first family present in every other. Throws
/// Error(ContextMismatch), or Error(SchemaError) for an empty input.
Family intersect_topologies(std::span<const Family> families, OrderProfile profile);

/// A normalized soft set whose only non-null parameter is `at`.
struct SoftPoint {
    SoftSet carrier;
    std::size_t at;
};

std::optional<SoftPoint> as_point(const SoftSet& f);

/// The point's row at its parameter is below g's row, object by object.
bool point_in(const SoftPoint& p, const SoftSet& g, OrderProfile profile);

struct NeighborhoodResult {
    bool holds = false;
    std::optional<std::string> witness;
};

/// Some member G with p ∈ G ⊆ i; the witness is the first such member.
NeighborhoodResult is_nbd_of_point(const Family& family, const SoftSet& i, const SoftPoint& p,
                                   OrderProfile profile);

/// Classifies each candidate with is_nbd_of_point.
std::vector<bool> nbd_system(const Family& family, const SoftPoint& p,
                             std::span<const SoftSet> candidates, OrderProfile profile);

/// Some member G with h ⊆ G ⊆ i.
NeighborhoodResult is_nbd_of_set(const Family& family, const SoftSet& i, const SoftSet& h,
                                 OrderProfile profile);

/// Finite stand-ins for the unbounded neighborhood quantifiers: the members
/// and their complements, and every soft point obtained by restricting one
/// of those to a single parameter.
std::vector<NamedSet> default_set_pool(const Family& family);
std::vector<SoftPoint> default_point_pool(const Family& family);

/// f restricted to one parameter; every other parameter becomes null.
SoftSet restrict_to(const SoftSet& f, std::size_t parameter);

} // namespace ivhfs

#endif
