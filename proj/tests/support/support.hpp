#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nfrs/document.hpp"
#include "nfrs/text_format.hpp"

namespace nfrs::testing {

inline std::string fixture_path(const std::string& name)
{
    return std::string(NFRS_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name)
{
    std::ifstream in(fixture_path(name), std::ios::binary);
    if (!in)
        throw std::runtime_error("missing fixture " + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline store::Document load_fixture(const std::string& name)
{
    auto result = text::parse(read_fixture(name));
    if (!result)
    {
        const auto& e = result.errors().front();
        throw std::runtime_error(name + ":" + std::to_string(e.location.line) + ":" +
                                 std::to_string(e.location.column) + ": " + e.message());
    }
    return result.document();
}

// ---------------------------------------------------------------------------
// Random documents

class DocumentGenerator
{
public:
    explicit DocumentGenerator(std::uint32_t seed)
        : m_rng(seed)
    {
    }

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(m_rng); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(m_rng); }

    template <typename T>
    const T& pick(const std::vector<T>& v)
    {
        return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
    }

    /// Names stress the quoting rules: spaces, quotes, backslashes, non-ASCII.
    std::string name()
    {
        static const std::vector<std::string> pieces = {
            "Usability", "Time", "Behaviour", "QV", "\"quoted\"", "back\\slash", "Größe",
            "日本", "a-b", "x.y", "#hash", "{brace}", "->", "ü", "Cost", "42"};
        std::string out = pick(pieces);
        for (int i = uniform(0, 2); i > 0; --i)
            out += " " + pick(pieces);
        return out;
    }

    /// Free text may also hold control characters.
    std::string text()
    {
        static const std::vector<std::string> pieces = {
            "plain", "line\nbreak", "tab\there", "cr\r", "bell\x07", "quote\"", "\\", "é",
            "emoji \xF0\x9F\x98\x80", " leading", "trailing ", ""};
        std::string out;
        for (int i = uniform(1, 3); i > 0; --i)
            out += pick(pieces);
        return out;
    }

    std::optional<std::string> maybe_text(double p = 0.5)
    {
        if (coin(p))
            return text();
        return std::nullopt;
    }

    std::vector<std::string> names(int lo, int hi)
    {
        std::set<std::string> out;
        for (int n = uniform(lo, hi); static_cast<int>(out.size()) < n;)
            out.insert(name() + " " + std::to_string(uniform(0, 999)));
        return {out.begin(), out.end()};
    }

    /**
     * Populates every node kind and every edge kind. Edge endpoints are drawn
     * from existing names most of the time, with occasional dangling names,
     * since the text format itself does not resolve references.
     */
    store::Document document()
    {
        using namespace store;
        Document doc;

        auto cats = names(1, 4);
        for (const auto& c : cats)
        {
            CategoryNode node{c, maybe_text(), std::nullopt};
            if (coin(0.4))
                node.parent = pick(cats);
            doc.categories.emplace(c, node);
        }
        auto ents = names(1, 4);
        for (const auto& e : ents)
            doc.entities.emplace(e, EntityNode{e, maybe_text(), coin(0.9) ? std::optional(pick(cats))
                                                                          : std::nullopt});
        auto frs = names(1, 3);
        for (const auto& f : frs)
            doc.functional_requirements.emplace(f, FunctionalRequirementNode{f, text(), text()});

        std::vector<std::pair<std::string, std::string>> foci;
        for (const auto& m : names(1, 3))
        {
            NfrsModelNode model;
            model.name = m;
            model.specification = maybe_text();
            auto chars = names(1, 4);
            auto attrs = names(1, 4);
            auto items = names(1, 4);
            for (const auto& c : chars)
            {
                NfrNode n{NfrKind::Characteristic, c, maybe_text(0.3), text(), std::nullopt,
                          std::nullopt};
                if (coin(0.3))
                    n.focus = coin() ? FocusKind::Quality : FocusKind::Cost;
                if (n.focus || coin(0.2))
                    foci.emplace_back(m, c);
                model.nfrs.emplace(c, n);
            }
            for (const auto& a : attrs)
            {
                if (!model.nfrs.contains(a))
                    model.nfrs.emplace(a, NfrNode{NfrKind::Attribute, a, maybe_text(0.3), text(),
                                                  std::nullopt, std::nullopt});
            }
            for (const auto& s : items)
            {
                if (!model.nfrs.contains(s))
                    model.nfrs.emplace(s, NfrNode{NfrKind::StatementItem, s, maybe_text(0.3),
                                                  std::nullopt, text(), std::nullopt});
            }
            std::vector<std::string> all;
            for (const auto& [n, _] : model.nfrs)
                all.push_back(n);

            auto edge = [&](ModelEdgeKind k, const std::string& s, const std::string& t) {
                model.edges.insert({k, s, t});
            };
            for (int i = uniform(1, 3); i > 0; --i)
            {
                edge(ModelEdgeKind::SubCharacteristic, pick(chars), pick(chars));
                edge(ModelEdgeKind::Combines, pick(chars), pick(attrs));
                edge(ModelEdgeKind::Combines, pick(chars), pick(items));
                edge(ModelEdgeKind::MapsTo, pick(items), pick(attrs));
                edge(ModelEdgeKind::RefersToEntity, pick(all), coin(0.9) ? pick(ents) : name());
                edge(ModelEdgeKind::RefersToCategory, pick(all), pick(cats));
                edge(ModelEdgeKind::RelatesWith, pick(all), pick(all));
                edge(ModelEdgeKind::Satisfies, pick(all), pick(frs));
            }
            doc.models.emplace(m, std::move(model));
        }
        if (foci.empty())
            foci.emplace_back("Missing Model", "Missing Focus");

        for (const auto& vmn : names(1, 2))
        {
            NfrsViewModelNode vm;
            vm.name = vmn;
            vm.specification = maybe_text();
            auto views = names(1, 5);
            for (const auto& v : views)
            {
                NfrViewNode node;
                node.name = v;
                node.statement = maybe_text(0.3);
                node.kind = coin(0.8) ? FocusKind::Quality : FocusKind::Cost;
                if (coin(0.9))
                    node.category = pick(cats);
                if (coin(0.9))
                {
                    const auto& [m, c] = pick(foci);
                    node.focus = FocusRef{m, c};
                }
                vm.views.emplace(v, node);
            }
            for (int i = uniform(1, 4); i > 0; --i)
            {
                vm.influences.insert({pick(views), pick(views)});
                if (coin())
                    vm.depends_on.insert({pick(views), pick(views)});
            }
            doc.view_models.emplace(vmn, std::move(vm));
        }
        return doc;
    }

private:
    std::mt19937 m_rng;
};

// ---------------------------------------------------------------------------
// Random view graphs and a brute-force reachability oracle

struct ViewGraph
{
    std::vector<std::string> views;
    std::set<store::ViewEdge> influences;
    std::set<store::ViewEdge> depends_on;
};

inline ViewGraph random_view_graph(std::mt19937& rng)
{
    ViewGraph g;
    int n = std::uniform_int_distribution<int>(1, 8)(rng);
    for (int i = 0; i < n; ++i)
        g.views.push_back("V" + std::to_string(i));
    std::shuffle(g.views.begin(), g.views.end(), rng);
    std::bernoulli_distribution edge(std::uniform_real_distribution<double>(0.05, 0.4)(rng));
    std::bernoulli_distribution explicit_dep(0.3);
    for (const auto& a : g.views)
    {
        for (const auto& b : g.views)
        {
            if (!edge(rng))
                continue;
            // either authored as influences(a, b) or as the mirrored depends_on(b, a)
            if (explicit_dep(rng))
                g.depends_on.insert({b, a});
            else
                g.influences.insert({a, b});
        }
    }
    return g;
}

inline store::Document view_graph_document(const ViewGraph& g, const std::string& vm_name)
{
    store::NfrsViewModelNode vm;
    vm.name = vm_name;
    for (const auto& v : g.views)
        vm.views.emplace(v, store::NfrViewNode{v, std::nullopt, store::FocusKind::Quality,
                                               std::nullopt, std::nullopt});
    vm.influences = g.influences;
    vm.depends_on = g.depends_on;
    store::Document doc;
    doc.view_models.emplace(vm_name, std::move(vm));
    return doc;
}

/// Warshall over an adjacency matrix; `reach[a][b]` iff a path of length >= 1 leads a to b.
inline std::map<std::string, std::set<std::string>> brute_force_reach(
    const std::vector<std::string>& nodes, const std::set<std::pair<std::string, std::string>>& arcs)
{
    const std::size_t n = nodes.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i)
        index[nodes[i]] = i;
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : arcs)
        r[index.at(a)][index.at(b)] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (r[i][k] && r[k][j])
                    r[i][j] = true;
    std::map<std::string, std::set<std::string>> out;
    for (std::size_t i = 0; i < n; ++i)
    {
        auto& row = out[nodes[i]];
        for (std::size_t j = 0; j < n; ++j)
            if (r[i][j])
                row.insert(nodes[j]);
    }
    return out;
}

/// Arcs of "a influences b": authored influences plus mirrored explicit depends_on.
inline std::set<std::pair<std::string, std::string>> influence_arcs(const ViewGraph& g)
{
    std::set<std::pair<std::string, std::string>> arcs;
    for (const auto& e : g.influences)
        arcs.emplace(e.source, e.target);
    for (const auto& e : g.depends_on)
        arcs.emplace(e.target, e.source);
    return arcs;
}

inline std::set<std::pair<std::string, std::string>> reversed(
    const std::set<std::pair<std::string, std::string>>& arcs)
{
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& [a, b] : arcs)
        out.emplace(b, a);
    return out;
}

/// Plain recursive walk over the model's combines / subcharacteristic edges.
inline void collect_attributes(const store::NfrsModelNode& m, const std::string& from,
                               std::set<std::string>& visited, std::set<std::string>& out)
{
    if (!visited.insert(from).second)
        return;
    for (const auto& e : m.edges)
    {
        if (e.source != from)
            continue;
        const auto* target = m.find(e.target);
        if (!target)
            continue;
        if (e.kind == store::ModelEdgeKind::Combines && target->kind == store::NfrKind::Attribute)
            out.insert(e.target);
        if (e.kind == store::ModelEdgeKind::SubCharacteristic)
            collect_attributes(m, e.target, visited, out);
    }
}

} // namespace nfrs::testing
