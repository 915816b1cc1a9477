#include "nfrs/query.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "nfrs/validator.hpp"

namespace nfrs::query {

using namespace store;

UnknownViewModel::UnknownViewModel(const std::string& name)
    : Error("unknown view model '" + name + "'")
{
}
UnknownView::UnknownView(const std::string& name)
    : Error("unknown view '" + name + "'")
{
}
NotAQualityView::NotAQualityView(const std::string& name)
    : Error("'" + name + "' is not a quality view")
{
}
UnknownModel::UnknownModel(const std::string& name)
    : Error("unknown model '" + name + "'")
{
}
UnknownCharacteristic::UnknownCharacteristic(const std::string& name)
    : Error("unknown characteristic '" + name + "'")
{
}
UnknownFunctionalRequirement::UnknownFunctionalRequirement(const std::string& name)
    : Error("unknown functional requirement '" + name + "'")
{
}

namespace {

using Adjacency = std::map<std::string, std::set<std::string>, std::less<>>;

const NfrsViewModelNode& quality_origin(const Document& doc, std::string_view view_model,
                                        std::string_view origin)
{
    auto it = doc.view_models.find(view_model);
    if (it == doc.view_models.end())
        throw UnknownViewModel(std::string(view_model));
    const NfrViewNode* v = it->second.find(origin);
    if (!v)
        throw UnknownView(std::string(origin));
    if (v->kind != FocusKind::Quality)
        throw NotAQualityView(std::string(origin));
    return it->second;
}

Adjacency influence_graph(const NfrsViewModelNode& vm)
{
    Adjacency g;
    for (const auto& e : vm.influences)
        g[e.source].insert(e.target);
    for (const auto& e : vm.depends_on)
        g[e.target].insert(e.source);
    return g;
}

Adjacency dependency_graph(const NfrsViewModelNode& vm)
{
    Adjacency g;
    for (const auto& e : validation::derive_depends_on(vm).depends_on)
        g[e.source].insert(e.target);
    return g;
}

ClosureResult bfs(const Adjacency& g, std::string_view origin)
{
    ClosureResult out{std::string(origin), {}};
    std::set<std::string, std::less<>> seen;
    std::deque<std::string> queue{std::string(origin)};
    while (!queue.empty())
    {
        auto u = std::move(queue.front());
        queue.pop_front();
        auto it = g.find(u);
        if (it == g.end())
            continue;
        for (const auto& v : it->second)
        {
            if (seen.insert(v).second)
            {
                out.reached.push_back(v);
                queue.push_back(v);
            }
        }
    }
    return out;
}

std::vector<std::string> successors(const Adjacency& g, std::string_view origin)
{
    auto it = g.find(origin);
    if (it == g.end())
        return {};
    return {it->second.begin(), it->second.end()};
}

const NfrsModelNode& model_of(const Document& doc, std::string_view model)
{
    auto it = doc.models.find(model);
    if (it == doc.models.end())
        throw UnknownModel(std::string(model));
    return it->second;
}

} // namespace

ClosureResult influence_closure(const Document& doc, std::string_view view_model,
                                std::string_view origin)
{
    return bfs(influence_graph(quality_origin(doc, view_model, origin)), origin);
}

ClosureResult depends_closure(const Document& doc, std::string_view view_model,
                              std::string_view origin)
{
    return bfs(dependency_graph(quality_origin(doc, view_model, origin)), origin);
}

std::vector<std::string> direct_influences(const Document& doc, std::string_view view_model,
                                           std::string_view origin)
{
    return successors(influence_graph(quality_origin(doc, view_model, origin)), origin);
}

std::vector<std::string> direct_dependencies(const Document& doc, std::string_view view_model,
                                             std::string_view origin)
{
    return successors(dependency_graph(quality_origin(doc, view_model, origin)), origin);
}

std::vector<std::string> leaf_attributes(const Document& doc, std::string_view model,
                                         std::string_view characteristic)
{
    const auto& m = model_of(doc, model);
    const NfrNode* start = m.find(characteristic);
    if (!start || start->kind != NfrKind::Characteristic)
        throw UnknownCharacteristic(std::string(characteristic));

    Adjacency children;
    Adjacency combined;
    for (const auto& e : m.edges)
    {
        if (e.kind == ModelEdgeKind::SubCharacteristic)
            children[e.source].insert(e.target);
        else if (e.kind == ModelEdgeKind::Combines)
            combined[e.source].insert(e.target);
    }

    std::set<std::string> attributes;
    std::set<std::string, std::less<>> visited{std::string(characteristic)};
    std::vector<std::string> pending{std::string(characteristic)};
    while (!pending.empty())
    {
        auto c = std::move(pending.back());
        pending.pop_back();
        if (auto it = combined.find(c); it != combined.end())
        {
            for (const auto& t : it->second)
            {
                const NfrNode* n = m.find(t);
                if (n && n->kind == NfrKind::Attribute)
                    attributes.insert(t);
            }
        }
        if (auto it = children.find(c); it != children.end())
        {
            for (const auto& child : it->second)
            {
                if (visited.insert(child).second)
                    pending.push_back(child);
            }
        }
    }
    return {attributes.begin(), attributes.end()};
}

CoverageReport mapping_coverage(const Document& doc, std::string_view model)
{
    const auto& m = model_of(doc, model);
    std::map<std::string, std::set<std::string>> targets;
    for (const auto& e : m.edges)
    {
        if (e.kind == ModelEdgeKind::MapsTo)
            targets[e.source].insert(e.target);
    }

    CoverageReport report;
    for (const auto& [name, n] : m.nfrs)
    {
        if (n.kind != NfrKind::StatementItem)
            continue;
        if (auto it = targets.find(name); it != targets.end())
            report.mapped.emplace_back(name, std::vector<std::string>(it->second.begin(), it->second.end()));
        else
            report.unmapped.push_back(name);
    }
    const auto total = report.mapped.size() + report.unmapped.size();
    if (total > 0)
        report.ratio = {report.mapped.size(), total};
    return report;
}

std::vector<std::pair<std::string, std::string>> trace_satisfies(const Document& doc,
                                                                 std::string_view fr)
{
    if (!doc.functional_requirements.contains(fr))
        throw UnknownFunctionalRequirement(std::string(fr));
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [model_name, m] : doc.models)
    {
        for (const auto& e : m.edges)
        {
            if (e.kind == ModelEdgeKind::Satisfies && e.target == fr && m.find(e.source))
                out.emplace_back(model_name, e.source);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace nfrs::query
