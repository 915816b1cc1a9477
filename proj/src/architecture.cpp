#include "nfrs/architecture.hpp"

#include <sstream>

namespace nfrs::kernel {

const ComponentRef* ArchSpec::find(std::string_view name) const
{
    for (const auto& c : components)
    {
        if (c.name == name)
            return &c;
    }
    return nullptr;
}

ArchParseError::ArchParseError(SourceLocation where, const std::string& what)
    : Error("line " + std::to_string(where.line) + ": " + what)
    , location(where)
{
}

namespace {

std::vector<std::string> split_words(std::string_view line)
{
    std::vector<std::string> words;
    std::istringstream in{std::string(line)};
    std::string w;
    while (in >> w)
        words.push_back(w);
    return words;
}

} // namespace

ArchSpec parse_arch_spec(std::string_view text)
{
    ArchSpec spec;
    unsigned line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size())
    {
        auto eol = text.find('\n', pos);
        auto line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto words = split_words(line);
        if (words.empty())
            continue;

        auto first_col = static_cast<unsigned>(line.find_first_not_of(" \t") + 1);
        SourceLocation where{line_no, first_col};

        if (words[0] == "component")
        {
            if (words.size() != 4 || words[2] != "level")
                throw ArchParseError(where, "expected 'component <NAME> level <LEVEL>'");
            auto level = parse_level(words[3]);
            if (!level)
                throw ArchParseError(where, "unknown level '" + words[3] + "'");
            if (spec.find(words[1]))
                throw ArchParseError(where, "component '" + words[1] + "' declared twice");
            spec.components.push_back({words[1], *level, ""});
            spec.component_locations.emplace(words[1], where);
        }
        else if (words[0] == "enriches")
        {
            if (words.size() != 4 || words[2] != "<-")
                throw ArchParseError(where, "expected 'enriches <CONSUMER> <- <SUPPLIER>'");
            spec.enrichment_edges.push_back({words[1], words[3], where});
        }
        else if (words[0] == "peer")
        {
            if (words.size() != 3)
                throw ArchParseError(where, "expected 'peer <A> <B>'");
            spec.peer_edges.push_back({words[1], words[2], where});
        }
        else
        {
            throw ArchParseError(where, "unknown directive '" + words[0] + "'");
        }
    }

    for (const auto* edges : {&spec.enrichment_edges, &spec.peer_edges})
    {
        for (const auto& e : *edges)
        {
            for (const auto& end : {e.first, e.second})
            {
                if (!spec.find(end))
                    throw ArchParseError(e.location.value_or(SourceLocation{}),
                                         "undeclared component '" + end + "'");
            }
        }
    }
    return spec;
}

ArchSpec reference_architecture()
{
    ArchSpec spec;
    for (const auto& c : known_components())
        spec.components.push_back(c);
    spec.components.push_back(builtin_schema("1.2").component);
    for (const char* supplier : {"ThingFO", "SituationCO", "ProcessCO", "FRsTDO"})
        spec.enrichment_edges.push_back({"NFRsTDO", supplier, std::nullopt});
    return spec;
}

std::vector<Diagnostic> lint_architecture(const ArchSpec& spec)
{
    std::vector<Diagnostic> out;
    auto located = [&](std::string_view name) -> std::optional<SourceLocation> {
        auto it = spec.component_locations.find(name);
        if (it == spec.component_locations.end())
            return std::nullopt;
        return it->second;
    };

    std::vector<const ComponentRef*> foundational;
    for (const auto& c : spec.components)
    {
        if (c.level == OntoLevel::Foundational)
            foundational.push_back(&c);
    }
    if (foundational.empty())
    {
        out.push_back({"L-001", Severity::Error,
                       "no Foundational component; exactly one (ThingFO) is required",
                       std::nullopt, "architecture"});
    }
    else if (foundational.size() > 1)
    {
        std::string names;
        for (const auto* c : foundational)
            names += (names.empty() ? "" : ", ") + c->name;
        out.push_back({"L-001", Severity::Error,
                       "more than one Foundational component (" + names + ")",
                       located(foundational[1]->name), "architecture"});
    }
    else if (foundational.front()->name != "ThingFO")
    {
        out.push_back({"L-001", Severity::Error,
                       "the Foundational component must be ThingFO, found '" +
                           foundational.front()->name + "'",
                       located(foundational.front()->name), "component/" + foundational.front()->name});
    }

    for (const auto& e : spec.enrichment_edges)
    {
        const auto* consumer = spec.find(e.first);
        const auto* supplier = spec.find(e.second);
        if (!consumer || !supplier)
            continue;
        if (supplier->level > consumer->level)
        {
            out.push_back({"L-002", Severity::Error,
                           "'" + consumer->name + "' (" + to_string(consumer->level) +
                               ") is enriched from lower-tier '" + supplier->name + "' (" +
                               to_string(supplier->level) + ")",
                           e.location, "enriches/" + e.first + "<-" + e.second});
        }
    }

    for (const auto& e : spec.peer_edges)
    {
        const auto* a = spec.find(e.first);
        const auto* b = spec.find(e.second);
        if (!a || !b)
            continue;
        if (a->level != b->level)
        {
            out.push_back({"L-003", Severity::Error,
                           "peer edge joins different tiers (" + std::string(to_string(a->level)) +
                               ", " + to_string(b->level) + ")",
                           e.location, "peer/" + e.first + "/" + e.second});
        }
        else if (a->level == OntoLevel::Foundational)
        {
            out.push_back({"L-003", Severity::Error,
                           "peer edges are not allowed at the Foundational tier", e.location,
                           "peer/" + e.first + "/" + e.second});
        }
    }

    sort_diagnostics(out);
    return out;
}

} // namespace nfrs::kernel
