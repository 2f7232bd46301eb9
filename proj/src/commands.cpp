#include "ivhfs/commands.hpp"

#include "ivhfs/error.hpp"
#include "ivhfs/workspace.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>
#include <ostream>

namespace ivhfs {

namespace {

struct Options {
    std::string workspace;
    std::string fixture;
    std::string profile = "componentwise";
    std::string format = "text";
};

/// What a command produced, independent of the output format.
struct Outcome {
    int status = kExitTrue;
    Json result;
    std::optional<Json> witness;
    std::optional<Json> violations;
    std::vector<std::string> warnings;
    std::vector<std::string> text;
};

struct Invocation {
    const Workspace& workspace;
    OrderProfile profile;
    const std::vector<std::string>& names;
};

using Handler = std::function<Outcome(const Invocation&)>;

struct CommandSpec {
    const char* name;
    std::size_t arity;
    const char* usage;
    Handler handler;
};

std::string cell_label(const Context& ctx, std::size_t parameter, std::size_t object) {
    return "(" + ctx.parameters()[parameter] + ", " + ctx.universe()[object] + ")";
}

void append_set_lines(std::vector<std::string>& lines, const SoftSet& set,
                      const std::string& indent = "  ") {
    const auto& ctx = set.context();
    for (std::size_t e : set.support()) {
        for (std::size_t h = 0; h < ctx.universe().size(); ++h) {
            lines.push_back(indent + ctx.parameters()[e] + " " + ctx.universe()[h] + ": " +
                            to_string(set.cell(e, h)));
        }
    }
}

Outcome set_outcome(const SoftSet& set) {
    Outcome out;
    out.result = to_json(set);
    append_set_lines(out.text, set);
    return out;
}

Outcome bool_outcome(bool value) {
    Outcome out;
    out.status = value ? kExitTrue : kExitFalse;
    out.result = value;
    out.text.push_back(value ? "true" : "false");
    return out;
}

SoftPoint require_point(const SoftSet& set, const std::string& name) {
    auto p = as_point(set);
    if (!p) {
        throw Error(ErrorKind::UsageError, "\"" + name + "\" is not a soft point");
    }
    return *p;
}

/// First cell of f's support at which f ⊆ g breaks.
std::optional<Json> subset_failure(const SoftSet& f, const SoftSet& g, OrderProfile profile) {
    const auto& ctx = f.context();
    for (std::size_t e : f.support()) {
        if (!g.in_support(e)) {
            return Json{{"parameter", ctx.parameters()[e]}, {"reason", "outside support"}};
        }
        for (std::size_t h = 0; h < ctx.universe().size(); ++h) {
            if (!hfe_leq(f.cell(e, h), g.cell(e, h), profile)) {
                return Json{{"parameter", ctx.parameters()[e]},
                            {"object", ctx.universe()[h]},
                            {"left", to_json(f.cell(e, h))},
                            {"right", to_json(g.cell(e, h))}};
            }
        }
    }
    return std::nullopt;
}

void warn_if_invalid(Outcome& out, const Family& family, const std::string& name,
                     OrderProfile profile) {
    if (!validate_topology(family, profile).valid()) {
        out.warnings.push_back("topology \"" + name + "\" fails validation under the " +
                               std::string(to_string(profile)) +
                               " profile; result computed from its members anyway");
    }
}

Json nearest_json(const Family& family, const NearestMember& nearest) {
    const auto& ctx = family.context();
    Json out{{"member", family.members()[nearest.member].name},
             {"parameter", ctx.parameters()[nearest.difference.parameter]},
             {"object", ctx.universe()[nearest.difference.object]}};
    if (nearest.difference.position) {
        out["position"] = *nearest.difference.position + 1;
    }
    return out;
}

Outcome cmd_validate(const Invocation& in) {
    const Family family = in.workspace.topology(in.names[0]);
    const TopologyReport report = validate_topology(family, in.profile);
    Outcome out;
    out.status = report.valid() ? kExitTrue : kExitFalse;
    out.result = report.valid() ? "valid" : "invalid";
    if (report.valid()) {
        out.text.push_back("valid");
        return out;
    }
    out.text.push_back("invalid (" + std::to_string(report.violations.size()) + " violation(s))");
    Json violations = Json::array();
    const auto& ctx = family.context();
    for (const auto& v : report.violations) {
        Json entry{{"axiom", to_string(v.axiom)}, {"operands", v.operands},
                   {"witness", to_json(v.witness)}};
        std::string line = "  " + std::string(to_string(v.axiom)) + " [";
        for (std::size_t i = 0; i < v.operands.size(); ++i) {
            line += (i ? ", " : "") + v.operands[i];
        }
        line += "]: result matches no member";
        if (v.nearest) {
            entry["nearest"] = nearest_json(family, *v.nearest);
            const auto& d = v.nearest->difference;
            const auto& other = family.members()[v.nearest->member];
            line += "; nearest " + other.name + " differs at cell " +
                    cell_label(ctx, d.parameter, d.object);
            if (d.position) {
                line += " position " + std::to_string(*d.position + 1) + ": " +
                        to_string(v.witness.cell(d.parameter, d.object)) + " vs " +
                        to_string(other.set.cell(d.parameter, d.object));
            }
        }
        out.text.push_back(line);
        violations.push_back(std::move(entry));
    }
    out.violations = std::move(violations);
    return out;
}

Outcome cmd_subset(const Invocation& in) {
    const SoftSet f = in.workspace.set(in.names[0]);
    const SoftSet g = in.workspace.set(in.names[1]);
    Outcome out = bool_outcome(ss_subset(f, g, in.profile));
    if (auto failure = subset_failure(f, g, in.profile)) {
        out.witness = *failure;
        out.text.push_back("  first failing cell: " + failure->dump());
    }
    return out;
}

Outcome cmd_equal(const Invocation& in) {
    const SoftSet f = in.workspace.set(in.names[0]);
    const SoftSet g = in.workspace.set(in.names[1]);
    Outcome out = bool_outcome(ss_equal(f, g, in.profile));
    if (auto failure = subset_failure(f, g, in.profile)) {
        out.witness = Json{{"direction", in.names[0] + " ⊆ " + in.names[1]}, {"cell", *failure}};
    } else if (auto reverse = subset_failure(g, f, in.profile)) {
        out.witness = Json{{"direction", in.names[1] + " ⊆ " + in.names[0]}, {"cell", *reverse}};
    }
    if (out.witness) {
        out.text.push_back("  fails: " + out.witness->dump());
    }
    return out;
}

Outcome cmd_score(const Invocation& in) {
    const SoftSet f = in.workspace.set(in.names[0]);
    const auto& ctx = f.context();
    Outcome out;
    out.result = Json::object();
    for (std::size_t e : f.support()) {
        Json row = Json::object();
        for (std::size_t h = 0; h < ctx.universe().size(); ++h) {
            UnitInterval s = score(f.cell(e, h));
            row[ctx.universe()[h]] = to_json(s);
            out.text.push_back("  " + ctx.parameters()[e] + " " + ctx.universe()[h] + ": " +
                               to_string(s));
        }
        out.result[ctx.parameters()[e]] = std::move(row);
    }
    return out;
}

Outcome cmd_closure_like(const Invocation& in, bool want_closure) {
    const Family family = in.workspace.topology(in.names[0]);
    const SoftSet f = in.workspace.set(in.names[1]);
    Outcome out = set_outcome(want_closure ? closure(family, f, in.profile)
                                           : interior(family, f, in.profile));
    warn_if_invalid(out, family, in.names[0], in.profile);
    return out;
}

Outcome cmd_closed_sets(const Invocation& in) {
    const Family family = in.workspace.topology(in.names[0]);
    Outcome out;
    out.result = Json::object();
    for (const auto& closed : closed_members(family)) {
        out.result[closed.name] = to_json(closed.set);
        out.text.push_back(closed.name + ":");
        append_set_lines(out.text, closed.set);
    }
    return out;
}

Outcome cmd_compare(const Invocation& in) {
    const Family lhs = in.workspace.topology(in.names[0]);
    const Family rhs = in.workspace.topology(in.names[1]);
    Outcome out;
    const auto relation = compare_topologies(lhs, rhs, in.profile);
    out.result = to_string(relation);
    switch (relation) {
    case TopologyRelation::Equal:
        out.text.push_back(in.names[0] + " equals " + in.names[1]);
        break;
    case TopologyRelation::Incomparable:
        out.text.push_back(in.names[0] + " and " + in.names[1] + " are incomparable");
        break;
    default:
        out.text.push_back(in.names[0] + " is " + std::string(to_string(relation)) + " than " +
                           in.names[1]);
    }
    return out;
}

Outcome cmd_point(const Invocation& in) {
    const auto p = as_point(in.workspace.set(in.names[0]));
    Outcome out = bool_outcome(p.has_value());
    if (p) {
        const std::string& param = p->carrier.context().parameters()[p->at];
        out.witness = param;
        out.text.back() = "true: soft point at " + param;
    }
    return out;
}

Outcome cmd_in(const Invocation& in) {
    const SoftPoint p = require_point(in.workspace.set(in.names[0]), in.names[0]);
    return bool_outcome(point_in(p, in.workspace.set(in.names[1]), in.profile));
}

Outcome nbd_outcome(const NeighborhoodResult& r) {
    Outcome out = bool_outcome(r.holds);
    if (r.witness) {
        out.witness = *r.witness;
        out.text.back() = "true: witness " + *r.witness;
    }
    return out;
}

Outcome cmd_nbd(const Invocation& in) {
    const Family family = in.workspace.topology(in.names[0]);
    const SoftPoint p = require_point(in.workspace.set(in.names[2]), in.names[2]);
    Outcome out = nbd_outcome(is_nbd_of_point(family, in.workspace.set(in.names[1]), p, in.profile));
    warn_if_invalid(out, family, in.names[0], in.profile);
    return out;
}

Outcome cmd_nbd_system(const Invocation& in) {
    const Family family = in.workspace.topology(in.names[0]);
    const SoftPoint p = require_point(in.workspace.set(in.names[1]), in.names[1]);
    Outcome out;
    out.result = Json::array();
    out.text.push_back("candidate pool: members of " + in.names[0] + " and their complements");
    for (const auto& candidate : default_set_pool(family)) {
        const auto r = is_nbd_of_point(family, candidate.set, p, in.profile);
        Json entry{{"candidate", candidate.name}, {"neighborhood", r.holds}};
        if (r.witness) {
            entry["witness"] = *r.witness;
        }
        out.result.push_back(std::move(entry));
        out.text.push_back("  " + candidate.name + ": " +
                           (r.holds ? "neighborhood (witness " + *r.witness + ")" : "not a neighborhood"));
    }
    warn_if_invalid(out, family, in.names[0], in.profile);
    return out;
}

Outcome cmd_nbd_of_set(const Invocation& in) {
    const Family family = in.workspace.topology(in.names[0]);
    Outcome out = nbd_outcome(is_nbd_of_set(family, in.workspace.set(in.names[1]),
                                            in.workspace.set(in.names[2]), in.profile));
    warn_if_invalid(out, family, in.names[0], in.profile);
    return out;
}

const std::vector<CommandSpec>& command_table() {
    static const std::vector<CommandSpec> table = {
        {"validate", 1, "<topology>", cmd_validate},
        {"canon", 1, "<set>",
         [](const Invocation& in) { return set_outcome(in.workspace.set(in.names[0])); }},
        {"complement", 1, "<set>",
         [](const Invocation& in) { return set_outcome(ss_complement(in.workspace.set(in.names[0]))); }},
        {"union", 2, "<set> <set>",
         [](const Invocation& in) {
             return set_outcome(ss_union(in.workspace.set(in.names[0]), in.workspace.set(in.names[1]),
                                         in.profile));
         }},
        {"intersect", 2, "<set> <set>",
         [](const Invocation& in) {
             return set_outcome(ss_intersection(in.workspace.set(in.names[0]),
                                                in.workspace.set(in.names[1]), in.profile));
         }},
        {"subset", 2, "<set> <set>", cmd_subset},
        {"equal", 2, "<set> <set>", cmd_equal},
        {"score", 1, "<set>", cmd_score},
        {"closure", 2, "<topology> <set>", [](const Invocation& in) { return cmd_closure_like(in, true); }},
        {"interior", 2, "<topology> <set>", [](const Invocation& in) { return cmd_closure_like(in, false); }},
        {"closed-sets", 1, "<topology>", cmd_closed_sets},
        {"compare", 2, "<topology> <topology>", cmd_compare},
        {"point", 1, "<set>", cmd_point},
        {"in", 2, "<point-set> <set>", cmd_in},
        {"nbd", 3, "<topology> <set> <point-set>", cmd_nbd},
        {"nbd-system", 2, "<topology> <point-set>", cmd_nbd_system},
        {"nbd-of-set", 3, "<topology> <set> <set>", cmd_nbd_of_set},
    };
    return table;
}

void emit(const Outcome& outcome, OrderProfile profile, bool machine, std::ostream& out) {
    if (machine) {
        Json doc{{"profile", to_string(profile)}, {"result", outcome.result}};
        if (outcome.witness) {
            doc["witness"] = *outcome.witness;
        }
        if (outcome.violations) {
            doc["violations"] = *outcome.violations;
        }
        if (!outcome.warnings.empty()) {
            doc["warnings"] = outcome.warnings;
        }
        out << doc.dump(2) << "\n";
        return;
    }
    out << "profile: " << to_string(profile) << "\n";
    for (const auto& w : outcome.warnings) {
        out << "warning: " << w << "\n";
    }
    for (const auto& line : outcome.text) {
        out << line << "\n";
    }
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    Options options;
    CLI::App app{"Interval-valued hesitant fuzzy soft sets and their finite topologies", "ivhfs"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--workspace", options.workspace, "workspace JSON file");
    app.add_option("--fixture", options.fixture, "bundled fixture name, e.g. example_3_5");
    app.add_option("--profile", options.profile, "componentwise | rank (default componentwise)")
        ->check(CLI::IsMember({"componentwise", "rank", "rank-select"}));
    app.add_option("--format", options.format, "text | machine")
        ->check(CLI::IsMember({"text", "machine"}));

    std::map<std::string, std::vector<std::string>> operands;
    for (const auto& spec : command_table()) {
        auto* sub = app.add_subcommand(spec.name, std::string(spec.name) + " " + spec.usage);
        sub->add_option("names", operands[spec.name], spec.usage)
            ->expected(static_cast<int>(spec.arity))
            ->required();
    }

    std::vector<std::string> storage{"ivhfs"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) {
        argv.push_back(s.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitTrue : kExitError;
    }

    try {
        const OrderProfile profile = parse_profile(options.profile);
        if (options.workspace.empty() == options.fixture.empty()) {
            throw Error(ErrorKind::UsageError, "give exactly one of --workspace FILE or --fixture NAME");
        }
        const Workspace workspace = load_workspace(
            options.fixture.empty() ? std::filesystem::path(options.workspace) : fixture_path(options.fixture));

        for (const auto& spec : command_table()) {
            if (app.got_subcommand(spec.name)) {
                const Outcome outcome = spec.handler({workspace, profile, operands[spec.name]});
                emit(outcome, profile, options.format == "machine", out);
                return outcome.status;
            }
        }
        throw Error(ErrorKind::UsageError, "no subcommand given");
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return kExitError;
    }
}

} // namespace ivhfs
