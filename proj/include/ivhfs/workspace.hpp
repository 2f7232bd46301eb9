#ifndef IVHFS_WORKSPACE_HPP
#define IVHFS_WORKSPACE_HPP

#include "ivhfs/topology.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ivhfs {

using Json = nlohmann::ordered_json;

/// A parsed workspace document: one context, named soft sets and named
/// topologies (lists of set names). "phi" and "E" are reserved and resolve
/// to the null and absolute sets.
class Workspace {
public:
    Workspace(ContextPtr context, std::vector<NamedSet> sets,
              std::vector<std::pair<std::string, std::vector<std::string>>> topologies);

    const ContextPtr& context() const noexcept { return context_; }
    const std::vector<NamedSet>& sets() const noexcept { return sets_; }
    const std::vector<std::pair<std::string, std::vector<std::string>>>& topologies() const noexcept {
        return topologies_;
    }

    /// Throws Error(UnknownName).
    SoftSet set(std::string_view name) const;
    Family topology(std::string_view name) const;

private:
    ContextPtr context_;
    std::vector<NamedSet> sets_;
    std::vector<std::pair<std::string, std::vector<std::string>>> topologies_;
};

/// Throws Error(ParseError | SchemaError | ValueError).
Workspace parse_workspace(std::string_view document);
Workspace load_workspace(const std::filesystem::path& path);
/// Path of a bundled fixture such as "example_3_5".
std::filesystem::path fixture_path(std::string_view name);

Json to_json(const UnitInterval& interval);
Json to_json(const Ivhfe& element);
/// parameter -> object -> Ivhfe, in context order, support only.
Json to_json(const SoftSet& set);
Json to_json(const Workspace& workspace);

/// Canonical document text; parse_workspace(render_workspace(w)) reproduces w.
std::string render_workspace(const Workspace& workspace);

/// Builds a workspace around ad-hoc sets, e.g. to record a failing case.
Workspace make_workspace(const ContextPtr& context, std::vector<NamedSet> sets,
                         std::vector<std::pair<std::string, std::vector<std::string>>> topologies = {});

} // namespace ivhfs

#endif
