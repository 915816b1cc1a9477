// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nfrs/export.hpp"
#include "nfrs/ontology.hpp"
#include "nfrs/query.hpp"
#include "nfrs/text_format.hpp"
#include "nfrs/validator.hpp"
#include "support/mutations.hpp"
#include "support/support.hpp"

using namespace nfrs;
using namespace nfrs::testing;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome
{
    bool ok = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (ok)
            detail = why;
        ok = false;
    }
};

struct CommandResult
{
    int status = -1;
    std::string out;
};

CommandResult run_nfrsctl(const std::string& args)
{
    CommandResult r;
    std::string cmd = std::string("\"") + NFRSCTL_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    int status = ::pclose(pipe);
    r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// 1 --------------------------------------------------------------------------

Outcome schema_fidelity()
{
    Outcome o;
    auto start = Clock::now();
    auto r = run_nfrsctl("schema counts --version 1.2");
    double elapsed = seconds_since(start);
    if (r.status != 0)
        o.fail("exit status " + std::to_string(r.status));
    if (r.out != "terms=15 properties=18 relationships=12\n")
        o.fail("printed '" + r.out + "'");
    if (elapsed >= 1.0)
        o.fail("took " + std::to_string(elapsed) + " s");
    return o;
}

// 2 --------------------------------------------------------------------------

struct CardinalityRow
{
    const char* name;
    const char* source;
    const char* target;
    const char* wording;
};

// Transcribed from the relationships table, with its multiplicity wording.
constexpr CardinalityRow kCardinalities[] = {
    {"belongs to", "Evaluable Entity", "Evaluable Entity Category", "one"},
    {"combines", "Characteristic", "Attribute", "none or more"},
    {"combines", "Characteristic", "Statement Item", "none or more"},
    {"deals with universals", "NFR View", "Evaluable Entity Category", "one"},
    {"depends on", "Quality View", "Quality View", "none or more"},
    {"influences", "Quality View", "Quality View", "none or more"},
    {"is represented by", "Evaluation Focus", "NFRs Model", "one or more"},
    {"is mapped to", "Statement Item", "Attribute", "none or more"},
    {"refers to particulars", "Non-Functional Requirement", "Evaluable Entity", "one or more"},
    {"refers to universals", "Non-Functional Requirement", "Evaluable Entity Category", "none or more"},
    {"relates with", "Non-Functional Requirement", "Non-Functional Requirement", "none or more"},
    {"satisfies", "Non-Functional Requirement", "Functional Requirement", "none or more"},
};

std::pair<unsigned, std::optional<unsigned>> bounds_of(const std::string& wording)
{
    if (wording == "one")
        return {1, 1};
    if (wording == "one or more")
        return {1, std::nullopt};
    return {0, std::nullopt};
}

Outcome cardinality_fidelity()
{
    Outcome o;
    const auto& schema = kernel::builtin_schema("1.2");
    int matched = 0;
    for (const auto& row : kCardinalities)
    {
        auto [min, max] = bounds_of(row.wording);
        bool found = false;
        for (const auto& r : schema.relationships)
        {
            if (r.name == row.name && r.source_term == row.source && r.target_term == row.target)
            {
                found = true;
                if (r.min == min && r.max == max)
                    ++matched;
                else
                    o.fail(std::string(row.name) + " has wrong bounds");
            }
        }
        if (!found)
            o.fail(std::string("missing ") + row.name + " (" + row.source + " -> " + row.target + ")");
    }
    if (schema.relationships.size() != std::size(kCardinalities))
        o.fail("schema has " + std::to_string(schema.relationships.size()) + " relationships");
    if (matched != 12)
        o.fail(std::to_string(matched) + "/12 exact");
    return o;
}

// 3 --------------------------------------------------------------------------

Outcome appendix_regression()
{
    Outcome o;
    auto r = run_nfrsctl("schema diff 1.1 1.2");
    if (r.status != 0)
        o.fail("exit status " + std::to_string(r.status));
    const std::set<std::string> expected = {
        "added term: Functional Requirement",
        "added relationship: relates with (Non-Functional Requirement -> Non-Functional Requirement)",
        "added relationship: is mapped to (Statement Item -> Attribute)",
        "added relationship: satisfies (Non-Functional Requirement -> Functional Requirement)",
        "renamed relationship: refers to -> refers to particulars (Non-Functional Requirement -> "
        "Evaluable Entity)",
        "renamed relationship: refers to -> refers to universals (Non-Functional Requirement -> "
        "Evaluable Entity Category)",
        "removed stereotype: Non-Functional Requirement <<ThingFO:Quantity-related Assertion>>",
        "removed stereotype: Evaluable Entity Category <<ThingFO:Thing Category>>",
        "added stereotype: Evaluable Entity Category <<SituationCO:Entity Category>>",
        "added stereotype: Evaluable Entity Category <<SituationCO:Context Category>>",
    };
    auto lines = lines_of(r.out);
    std::set<std::string> got(lines.begin(), lines.end());
    for (const auto& e : expected)
    {
        if (!got.contains(e))
            o.fail("missing '" + e + "'");
    }
    for (const auto& g : got)
    {
        if (!expected.contains(g))
            o.fail("spurious '" + g + "'");
    }
    if (lines.size() != got.size())
        o.fail("duplicate lines");
    return o;
}

// 4 --------------------------------------------------------------------------

Outcome quality_views_chain()
{
    Outcome o;
    auto doc = load_fixture("quality_views_chain.nfrs");
    const std::vector<std::string> downstream = {"Process Quality View", "Software Product Quality View",
                                                 "System Quality View", "System-in-Use Quality View"};
    const std::vector<std::string> upstream = {"System Quality View", "Software Product Quality View",
                                               "Process Quality View", "Resource Quality View"};
    auto inf = query::influence_closure(doc, "Quality Views", "Resource Quality View").reached;
    auto dep = query::depends_closure(doc, "Quality Views", "System-in-Use Quality View").reached;
    if (inf != downstream)
        o.fail("influence closure differs");
    if (dep != upstream)
        o.fail("depends closure differs");
    return o;
}

// 5 --------------------------------------------------------------------------

Outcome rule_mutations()
{
    Outcome o;
    auto start = Clock::now();
    auto base = load_fixture("web_app.nfrs");
    auto arch = read_fixture("reference.arch");

    for (auto mode : {validation::ValidationMode::Model, validation::ValidationMode::Instance})
    {
        if (!validation::validate(base, mode).empty())
            o.fail("mutation base is not clean");
    }
    if (!kernel::lint_architecture(kernel::parse_arch_spec(arch)).empty())
        o.fail("reference architecture is not clean");

    // R-001..R-017 and L-001..L-003; R-006b is checked too but not counted.
    int passed = 0;
    int counted = 0;
    auto record = [&](const std::string& code, const MutationOutcome& m) {
        if (code != "R-006b")
            ++counted;
        if (m.passed())
        {
            passed += code != "R-006b";
            return;
        }
        std::string why = code + (m.code_present ? " also raised" : " not raised");
        for (const auto& other : m.other_errors)
            why += " " + other;
        o.fail(why);
    };
    for (const auto& m : document_mutations())
        record(m.code, run_mutation(base, m));
    for (const auto& m : arch_mutations())
        record(m.code, run_mutation(arch, m));

    double elapsed = seconds_since(start);
    if (counted != 20 || passed != 20)
        o.fail(std::to_string(passed) + "/" + std::to_string(counted) + " rules");
    if (elapsed >= 10.0)
        o.fail("took " + std::to_string(elapsed) + " s");
    return o;
}

// 6 --------------------------------------------------------------------------

bool covers_every_edge_kind(const store::Document& d)
{
    using store::ModelEdgeKind;
    using store::NfrKind;
    std::set<std::string> seen;
    for (const auto& [_, e] : d.entities)
        if (e.category)
            seen.insert("belongs to");
    for (const auto& [_, m] : d.models)
    {
        for (const auto& e : m.edges)
        {
            const auto* t = m.find(e.target);
            switch (e.kind)
            {
            case ModelEdgeKind::Combines:
                if (t && t->kind == NfrKind::Attribute)
                    seen.insert("combines attribute");
                if (t && t->kind == NfrKind::StatementItem)
                    seen.insert("combines item");
                break;
            case ModelEdgeKind::MapsTo: seen.insert("is mapped to"); break;
            case ModelEdgeKind::RefersToEntity: seen.insert("refers to particulars"); break;
            case ModelEdgeKind::RefersToCategory: seen.insert("refers to universals"); break;
            case ModelEdgeKind::RelatesWith: seen.insert("relates with"); break;
            case ModelEdgeKind::Satisfies: seen.insert("satisfies"); break;
            case ModelEdgeKind::SubCharacteristic: break;
            }
        }
    }
    for (const auto& [_, vm] : d.view_models)
    {
        for (const auto& [_, v] : vm.views)
        {
            if (v.category)
                seen.insert("deals with universals");
            if (v.focus)
                seen.insert("is represented by");
        }
        if (!vm.influences.empty())
            seen.insert("influences");
        if (!vm.depends_on.empty())
            seen.insert("depends on");
    }
    return seen.size() == 12;
}

Outcome round_trip()
{
    Outcome o;
    int failures = 0;
    int full_coverage = 0;
    for (std::uint32_t seed = 1; seed <= 200; ++seed)
    {
        auto doc = DocumentGenerator(seed).document();
        full_coverage += covers_every_edge_kind(doc);
        auto text = text::serialize(doc);
        auto reparsed = text::parse(text);
        bool ok = reparsed.ok() && reparsed.document() == doc;
        ok = ok && exporting::canonical_json(exporting::to_json(doc)) ==
                       exporting::canonical_json(exporting::to_json(reparsed.document()));
        ok = ok && text::serialize(reparsed.document()) == text;
        if (!ok)
        {
            ++failures;
            o.fail("seed " + std::to_string(seed) + " does not round-trip");
        }
    }
    if (failures)
        o.fail(std::to_string(failures) + " failures");
    if (full_coverage == 0)
        o.fail("no generated document covers all 12 edge kinds");
    return o;
}

// 7 --------------------------------------------------------------------------

Outcome closure_oracle()
{
    Outcome o;
    std::mt19937 rng(20261016);
    int mismatches = 0;
    for (int i = 0; i < 100; ++i)
    {
        auto g = random_view_graph(rng);
        auto doc = view_graph_document(g, "VM");
        auto arcs = influence_arcs(g);
        auto forward = brute_force_reach(g.views, arcs);
        auto backward = brute_force_reach(g.views, reversed(arcs));
        for (const auto& v : g.views)
        {
            auto inf = query::influence_closure(doc, "VM", v).reached;
            auto dep = query::depends_closure(doc, "VM", v).reached;
            std::set<std::string> inf_set(inf.begin(), inf.end());
            std::set<std::string> dep_set(dep.begin(), dep.end());
            if (inf_set != forward[v] || inf_set.size() != inf.size() || dep_set != backward[v] ||
                dep_set.size() != dep.size())
                ++mismatches;
        }
    }
    if (mismatches)
        o.fail(std::to_string(mismatches) + " mismatches");
    return o;
}

// 8 --------------------------------------------------------------------------

Outcome iso_fixture()
{
    Outcome o;
    auto doc = load_fixture("iso_product_quality.nfrs");
    if (has_errors(validation::validate(doc, validation::ValidationMode::Model)))
        o.fail("fixture has Model-mode errors");
    const auto& model = doc.models.at("ISO Product Quality");
    const auto* focus = model.focus();
    if (!focus)
    {
        o.fail("fixture has no single focus");
        return o;
    }
    std::set<std::string> all_attributes;
    for (const auto& [name, n] : model.nfrs)
    {
        if (n.kind == store::NfrKind::Attribute)
            all_attributes.insert(name);
    }
    std::set<std::string> visited, traversed;
    collect_attributes(model, focus->name, visited, traversed);
    if (traversed != all_attributes)
        o.fail("traversal oracle does not reach every attribute");
    auto leaves = query::leaf_attributes(doc, model.name, focus->name);
    if (std::vector<std::string>(all_attributes.begin(), all_attributes.end()) != leaves)
        o.fail("leaf_attributes differs from the full attribute set");
    return o;
}

} // namespace

int main()
{
    struct Criterion
    {
        const char* label;
        Outcome (*check)();
    };
    const Criterion criteria[] = {
        {"1 schema fidelity", schema_fidelity},
        {"2 cardinality fidelity", cardinality_fidelity},
        {"3 v1.1 -> v1.2 regression", appendix_regression},
        {"4 quality-views chain", quality_views_chain},
        {"5 rule mutation suite", rule_mutations},
        {"6 round-trip property", round_trip},
        {"7 closure oracle", closure_oracle},
        {"8 ISO-style fixture", iso_fixture},
    };

    int failed = 0;
    for (const auto& c : criteria)
    {
        Outcome o;
        try
        {
            o = c.check();
        }
        catch (const std::exception& e)
        {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << c.label;
        if (!o.ok)
            std::cout << "  (" << o.detail << ")";
        std::cout << "\n";
        failed += !o.ok;
    }
    std::cout << (std::size(criteria) - failed) << "/" << std::size(criteria) << " criteria passed\n";
    return failed ? 1 : 0;
}
