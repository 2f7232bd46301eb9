#include "ivhfs/workspace.hpp"

#include "ivhfs/error.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace ivhfs {

namespace {

[[noreturn]] void fail(ErrorKind kind, const std::string& where, const std::string& what) {
    throw Error(kind, where + ": " + what);
}

const Json& member(const Json& object, const char* key, const std::string& where) {
    auto it = object.find(key);
    if (it == object.end()) {
        fail(ErrorKind::ParseError, where, std::string("missing \"") + key + "\"");
    }
    return *it;
}

std::vector<std::string> name_list(const Json& node, const std::string& where) {
    if (!node.is_array()) {
        fail(ErrorKind::ParseError, where, "expected an array of names");
    }
    std::vector<std::string> names;
    for (const auto& item : node) {
        if (!item.is_string()) {
            fail(ErrorKind::ParseError, where, "names must be strings");
        }
        names.push_back(item.get<std::string>());
    }
    return names;
}

Rational endpoint(const Json& node, const std::string& where) {
    if (!node.is_string()) {
        fail(ErrorKind::ParseError, where, "endpoints must be decimal strings");
    }
    try {
        return parse_rational(node.get<std::string>());
    } catch (const Error& e) {
        fail(ErrorKind::ParseError, where, e.what());
    }
}

UnitInterval parse_interval(const Json& node, const std::string& where) {
    if (!node.is_array() || node.size() != 2) {
        fail(ErrorKind::ParseError, where, "an interval is a two-element array");
    }
    Rational lower = endpoint(node[0], where);
    Rational upper = endpoint(node[1], where);
    try {
        return UnitInterval(lower, upper);
    } catch (const Error& e) {
        fail(ErrorKind::ValueError, where, e.what());
    }
}

Ivhfe parse_hfe(const Json& node, const std::string& where) {
    if (!node.is_array()) {
        fail(ErrorKind::ParseError, where, "a hesitant element is an array of intervals");
    }
    if (node.empty()) {
        fail(ErrorKind::SchemaError, where, "empty hesitant element");
    }
    std::vector<UnitInterval> raw;
    for (std::size_t k = 0; k < node.size(); ++k) {
        raw.push_back(parse_interval(node[k], where + "[" + std::to_string(k) + "]"));
    }
    return canonicalize(std::move(raw));
}

SoftSet parse_set(const ContextPtr& ctx, const Json& node, const std::string& where) {
    if (!node.is_object()) {
        fail(ErrorKind::ParseError, where, "a soft set maps parameters to rows");
    }
    if (node.empty()) {
        fail(ErrorKind::SchemaError, where, "soft set has an empty support");
    }
    std::vector<std::optional<SoftRow>> rows(ctx->parameters().size());
    for (const auto& [param, row] : node.items()) {
        const std::string at = where + "." + param;
        auto e = ctx->parameter_index(param);
        if (!e) {
            fail(ErrorKind::SchemaError, at, "unknown parameter");
        }
        if (!row.is_object()) {
            fail(ErrorKind::ParseError, at, "a row maps objects to hesitant elements");
        }
        std::vector<std::optional<Ivhfe>> cells(ctx->universe().size());
        for (const auto& [object, value] : row.items()) {
            auto h = ctx->object_index(object);
            if (!h) {
                fail(ErrorKind::SchemaError, at + "." + object, "unknown object");
            }
            cells[*h] = parse_hfe(value, at + "." + object);
        }
        SoftRow full;
        for (std::size_t h = 0; h < cells.size(); ++h) {
            if (!cells[h]) {
                fail(ErrorKind::SchemaError, at,
                     "no hesitant element for object \"" + ctx->universe()[h] + "\"");
            }
            full.push_back(std::move(*cells[h]));
        }
        rows[*e] = std::move(full);
    }
    return SoftSet(ctx, std::move(rows));
}

bool reserved(std::string_view name) { return name == kNullName || name == kAbsoluteName; }

// nlohmann keeps the last of repeated keys; catch repeats while parsing.
Json parse_strict(std::string_view document) {
    std::vector<std::set<std::string>> open_objects;
    std::string duplicate;
    auto callback = [&](int, Json::parse_event_t event, Json& parsed) {
        switch (event) {
        case Json::parse_event_t::object_start:
            open_objects.emplace_back();
            break;
        case Json::parse_event_t::object_end:
            open_objects.pop_back();
            break;
        case Json::parse_event_t::key:
            if (!open_objects.back().insert(parsed.get<std::string>()).second && duplicate.empty()) {
                duplicate = parsed.get<std::string>();
            }
            break;
        default:
            break;
        }
        return true;
    };
    Json doc;
    try {
        doc = Json::parse(document.begin(), document.end(), callback);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("malformed workspace document: ") + e.what());
    }
    if (!duplicate.empty()) {
        throw Error(ErrorKind::SchemaError, "duplicate name \"" + duplicate + "\" in workspace");
    }
    return doc;
}

} // namespace

Workspace::Workspace(ContextPtr context, std::vector<NamedSet> sets,
                     std::vector<std::pair<std::string, std::vector<std::string>>> topologies)
    : context_(std::move(context)), sets_(std::move(sets)), topologies_(std::move(topologies)) {
    std::set<std::string> names;
    for (const auto& entry : sets_) {
        if (reserved(entry.name)) {
            throw Error(ErrorKind::SchemaError,
                        "\"" + entry.name + "\" is reserved and cannot be redeclared");
        }
        if (entry.name.empty() || !names.insert(entry.name).second) {
            throw Error(ErrorKind::SchemaError, "duplicate set name \"" + entry.name + "\"");
        }
        require_same_context(*context_, entry.set.context());
    }
    std::set<std::string> topology_names;
    for (const auto& [name, members] : topologies_) {
        if (!topology_names.insert(name).second) {
            throw Error(ErrorKind::SchemaError, "duplicate topology name \"" + name + "\"");
        }
        for (const auto& m : members) {
            if (!reserved(m) && !names.contains(m)) {
                throw Error(ErrorKind::SchemaError,
                            "topology \"" + name + "\" lists undeclared set \"" + m + "\"");
            }
        }
    }
}

SoftSet Workspace::set(std::string_view name) const {
    if (name == kNullName) {
        return null_set(context_);
    }
    if (name == kAbsoluteName) {
        return absolute_set(context_);
    }
    for (const auto& entry : sets_) {
        if (entry.name == name) {
            return entry.set;
        }
    }
    throw Error(ErrorKind::UnknownName, "no soft set named \"" + std::string(name) + "\"");
}

Family Workspace::topology(std::string_view name) const {
    for (const auto& [topology_name, members] : topologies_) {
        if (topology_name != name) {
            continue;
        }
        std::vector<NamedSet> resolved;
        for (const auto& m : members) {
            resolved.push_back({m, set(m)});
        }
        return Family(context_, std::move(resolved));
    }
    throw Error(ErrorKind::UnknownName, "no topology named \"" + std::string(name) + "\"");
}

Workspace parse_workspace(std::string_view document) {
    const Json doc = parse_strict(document);
    if (!doc.is_object()) {
        throw Error(ErrorKind::ParseError, "workspace document must be a JSON object");
    }
    for (const auto& [key, value] : doc.items()) {
        if (key != "universe" && key != "parameters" && key != "sets" && key != "topologies" &&
            key != "description") {
            throw Error(ErrorKind::ParseError, "workspace: unexpected key \"" + key + "\"");
        }
    }
    auto ctx = std::make_shared<const Context>(name_list(member(doc, "universe", "workspace"), "universe"),
                                               name_list(member(doc, "parameters", "workspace"), "parameters"));

    std::vector<NamedSet> sets;
    if (auto it = doc.find("sets"); it != doc.end()) {
        if (!it->is_object()) {
            throw Error(ErrorKind::ParseError, "sets: expected an object");
        }
        for (const auto& [name, node] : it->items()) {
            if (reserved(name)) {
                throw Error(ErrorKind::SchemaError,
                            "sets." + name + ": reserved name cannot be redeclared");
            }
            sets.push_back({name, parse_set(ctx, node, "sets." + name)});
        }
    }

    std::vector<std::pair<std::string, std::vector<std::string>>> topologies;
    if (auto it = doc.find("topologies"); it != doc.end()) {
        if (!it->is_object()) {
            throw Error(ErrorKind::ParseError, "topologies: expected an object");
        }
        for (const auto& [name, node] : it->items()) {
            topologies.emplace_back(name, name_list(node, "topologies." + name));
        }
    }
    return Workspace(ctx, std::move(sets), std::move(topologies));
}

Workspace load_workspace(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot read workspace file " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_workspace(text.str());
}

std::filesystem::path fixture_path(std::string_view name) {
    return std::filesystem::path(IVHFS_FIXTURE_DIR) / (std::string(name) + ".json");
}

Json to_json(const UnitInterval& interval) {
    return Json::array({format_rational(interval.lower()), format_rational(interval.upper())});
}

Json to_json(const Ivhfe& element) {
    Json out = Json::array();
    for (const auto& x : element.elements()) {
        out.push_back(to_json(x));
    }
    return out;
}

Json to_json(const SoftSet& set) {
    const auto& ctx = set.context();
    Json out = Json::object();
    for (std::size_t e : set.support()) {
        Json row = Json::object();
        for (std::size_t h = 0; h < ctx.universe().size(); ++h) {
            row[ctx.universe()[h]] = to_json(set.cell(e, h));
        }
        out[ctx.parameters()[e]] = std::move(row);
    }
    return out;
}

Json to_json(const Workspace& workspace) {
    Json out = Json::object();
    out["universe"] = workspace.context()->universe();
    out["parameters"] = workspace.context()->parameters();
    Json sets = Json::object();
    for (const auto& entry : workspace.sets()) {
        sets[entry.name] = to_json(entry.set);
    }
    out["sets"] = std::move(sets);
    Json topologies = Json::object();
    for (const auto& [name, members] : workspace.topologies()) {
        topologies[name] = members;
    }
    out["topologies"] = std::move(topologies);
    return out;
}

std::string render_workspace(const Workspace& workspace) {
    return to_json(workspace).dump(2) + "\n";
}

Workspace make_workspace(const ContextPtr& context, std::vector<NamedSet> sets,
                         std::vector<std::pair<std::string, std::vector<std::string>>> topologies) {
    return Workspace(context, std::move(sets), std::move(topologies));
}

} // namespace ivhfs
