#include "ivhfs/topology.hpp"

#include "ivhfs/error.hpp"

#include <set>
#include <tuple>

namespace ivhfs {

namespace {

auto difference_key(const CellDifference& d) {
    // A support mismatch sorts before any cell comparison at that parameter.
    const long position = d.position ? static_cast<long>(*d.position) : -1;
    return std::make_tuple(d.parameter, d.object, position);
}

bool contained_in_family(const Family& small, const Family& big, OrderProfile profile) {
    for (const auto& member : small.members()) {
        if (!big.contains(member.set, profile)) {
            return false;
        }
    }
    return true;
}

} // namespace

Family::Family(ContextPtr context, std::vector<NamedSet> members)
    : context_(std::move(context)) {
    std::set<std::string> names;
    members_.reserve(members.size());
    for (auto& member : members) {
        require_same_context(*context_, member.set.context());
        if (!names.insert(member.name).second) {
            throw Error(ErrorKind::SchemaError,
                        "family lists \"" + member.name + "\" more than once");
        }
        members_.push_back({std::move(member.name), normalize(member.set)});
    }
}

std::optional<std::size_t> Family::find(const SoftSet& f, OrderProfile profile) const {
    require_same_context(*context_, f.context());
    const SoftSet full = normalize(f);
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (ss_equal(full, members_[i].set, profile)) {
            return i;
        }
    }
    return std::nullopt;
}

std::string_view to_string(Axiom axiom) {
    switch (axiom) {
    case Axiom::ContainsPhi: return "contains-phi";
    case Axiom::ContainsE: return "contains-E";
    case Axiom::MeetClosed: return "meet-closed";
    case Axiom::JoinClosed: return "join-closed";
    }
    return "unknown";
}

std::optional<NearestMember> nearest_member(const Family& family, const SoftSet& f,
                                            OrderProfile profile) {
    const SoftSet full = normalize(f);
    std::optional<NearestMember> best;
    for (std::size_t i = 0; i < family.size(); ++i) {
        auto diff = first_difference(full, family.members()[i].set, profile);
        if (!diff) {
            continue;
        }
        if (!best || difference_key(*diff) > difference_key(best->difference)) {
            best = NearestMember{i, *diff};
        }
    }
    return best;
}

TopologyReport validate_topology(const Family& family, OrderProfile profile) {
    TopologyReport report;
    auto missing = [&](Axiom axiom, SoftSet witness, std::vector<std::string> operands) {
        auto nearest = nearest_member(family, witness, profile);
        report.violations.push_back({axiom, std::move(operands), std::move(witness), nearest});
    };

    const SoftSet phi = null_set(family.context_ptr());
    const SoftSet top = absolute_set(family.context_ptr());
    if (!family.contains(phi, profile)) {
        missing(Axiom::ContainsPhi, phi, {std::string(kNullName)});
    }
    if (!family.contains(top, profile)) {
        missing(Axiom::ContainsE, top, {std::string(kAbsoluteName)});
    }

    const auto& members = family.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            SoftSet meet = ss_intersection(members[i].set, members[j].set, profile);
            if (!family.contains(meet, profile)) {
                missing(Axiom::MeetClosed, std::move(meet), {members[i].name, members[j].name});
            }
            SoftSet join = ss_union(members[i].set, members[j].set, profile);
            if (!family.contains(join, profile)) {
                missing(Axiom::JoinClosed, std::move(join), {members[i].name, members[j].name});
            }
        }
    }
    return report;
}

std::vector<NamedSet> closed_members(const Family& family) {
    std::vector<NamedSet> out;
    out.reserve(family.size());
    for (const auto& member : family.members()) {
        out.push_back({member.name + "^C", ss_complement(member.set)});
    }
    return out;
}

bool is_open(const Family& family, const SoftSet& f, OrderProfile profile) {
    return family.contains(f, profile);
}

bool is_closed(const Family& family, const SoftSet& f, OrderProfile profile) {
    return family.contains(ss_complement(f), profile);
}

SoftSet closure(const Family& family, const SoftSet& f, OrderProfile profile) {
    require_same_context(family.context(), f.context());
    const SoftSet full = normalize(f);
    std::optional<SoftSet> result;
    for (const auto& closed : closed_members(family)) {
        if (!ss_subset(full, closed.set, profile)) {
            continue;
        }
        result = result ? ss_intersection(*result, closed.set, profile) : closed.set;
    }
    // E is above every soft set, so an empty fold means E is not closed here.
    return result ? *result : absolute_set(family.context_ptr());
}

SoftSet interior(const Family& family, const SoftSet& f, OrderProfile profile) {
    require_same_context(family.context(), f.context());
    const SoftSet full = normalize(f);
    std::optional<SoftSet> result;
    for (const auto& member : family.members()) {
        if (!ss_subset(member.set, full, profile)) {
            continue;
        }
        result = result ? ss_union(*result, member.set, profile) : member.set;
    }
    return result ? *result : null_set(family.context_ptr());
}

std::string_view to_string(TopologyRelation relation) {
    switch (relation) {
    case TopologyRelation::Equal: return "equal";
    case TopologyRelation::Coarser: return "coarser";
    case TopologyRelation::Finer: return "finer";
    case TopologyRelation::Incomparable: return "incomparable";
    }
    return "unknown";
}

TopologyRelation compare_topologies(const Family& lhs, const Family& rhs, OrderProfile profile) {
    require_same_context(lhs.context(), rhs.context());
    const bool forward = contained_in_family(lhs, rhs, profile);
    const bool backward = contained_in_family(rhs, lhs, profile);
    if (forward && backward) {
        return TopologyRelation::Equal;
    }
    if (forward) {
        return TopologyRelation::Coarser;
    }
    return backward ? TopologyRelation::Finer : TopologyRelation::Incomparable;
}

Family intersect_topologies(std::span<const Family> families, OrderProfile profile) {
    if (families.empty()) {
        throw Error(ErrorKind::SchemaError, "cannot intersect an empty list of topologies");
    }
    const Family& first = families.front();
    for (const auto& other : families.subspan(1)) {
        require_same_context(first.context(), other.context());
    }
    std::vector<NamedSet> kept;
    for (const auto& member : first.members()) {
        bool everywhere = true;
        for (const auto& other : families.subspan(1)) {
            if (!other.contains(member.set, profile)) {
                everywhere = false;
                break;
            }
        }
        if (everywhere) {
            kept.push_back(member);
        }
    }
    return Family(first.context_ptr(), std::move(kept));
}

std::optional<SoftPoint> as_point(const SoftSet& f) {
    const SoftSet full = normalize(f);
    std::optional<std::size_t> at;
    for (std::size_t e = 0; e < full.context().parameters().size(); ++e) {
        bool null_row = true;
        for (const auto& cell : *full.row(e)) {
            null_row = null_row && cell.is_null();
        }
        if (null_row) {
            continue;
        }
        if (at) {
            return std::nullopt;
        }
        at = e;
    }
    if (!at) {
        return std::nullopt;
    }
    return SoftPoint{full, *at};
}

bool point_in(const SoftPoint& p, const SoftSet& g, OrderProfile profile) {
    require_same_context(p.carrier.context(), g.context());
    const SoftSet full = normalize(g);
    const auto& mine = *p.carrier.row(p.at);
    const auto& theirs = *full.row(p.at);
    for (std::size_t h = 0; h < mine.size(); ++h) {
        if (!hfe_leq(mine[h], theirs[h], profile)) {
            return false;
        }
    }
    return true;
}

NeighborhoodResult is_nbd_of_point(const Family& family, const SoftSet& i, const SoftPoint& p,
                                   OrderProfile profile) {
    require_same_context(family.context(), i.context());
    require_same_context(family.context(), p.carrier.context());
    const SoftSet full = normalize(i);
    for (const auto& member : family.members()) {
        if (point_in(p, member.set, profile) && ss_subset(member.set, full, profile)) {
            return {true, member.name};
        }
    }
    return {};
}

std::vector<bool> nbd_system(const Family& family, const SoftPoint& p,
                             std::span<const SoftSet> candidates, OrderProfile profile) {
    std::vector<bool> out;
    out.reserve(candidates.size());
    for (const auto& candidate : candidates) {
        out.push_back(is_nbd_of_point(family, candidate, p, profile).holds);
    }
    return out;
}

NeighborhoodResult is_nbd_of_set(const Family& family, const SoftSet& i, const SoftSet& h,
                                 OrderProfile profile) {
    require_same_context(family.context(), i.context());
    require_same_context(family.context(), h.context());
    const SoftSet outer = normalize(i);
    const SoftSet inner = normalize(h);
    for (const auto& member : family.members()) {
        if (ss_subset(inner, member.set, profile) && ss_subset(member.set, outer, profile)) {
            return {true, member.name};
        }
    }
    return {};
}

SoftSet restrict_to(const SoftSet& f, std::size_t parameter) {
    const SoftSet full = normalize(f);
    const auto& ctx = full.context();
    std::vector<std::optional<SoftRow>> rows;
    for (std::size_t e = 0; e < ctx.parameters().size(); ++e) {
        rows.push_back(e == parameter ? *full.row(e)
                                      : SoftRow(ctx.universe().size(), Ivhfe::zero()));
    }
    return SoftSet(full.context_ptr(), std::move(rows));
}

std::vector<NamedSet> default_set_pool(const Family& family) {
    std::vector<NamedSet> pool = family.members();
    for (auto& closed : closed_members(family)) {
        pool.push_back(std::move(closed));
    }
    return pool;
}

std::vector<SoftPoint> default_point_pool(const Family& family) {
    std::vector<SoftPoint> points;
    for (const auto& entry : default_set_pool(family)) {
        for (std::size_t e = 0; e < family.context().parameters().size(); ++e) {
            if (auto p = as_point(restrict_to(entry.set, e))) {
                points.push_back(std::move(*p));
            }
        }
    }
    return points;
}

} // namespace ivhfs
