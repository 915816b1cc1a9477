#include "nfrs/document.hpp"

#include <utility>

namespace nfrs::store {

const char* keyword(NfrKind kind) noexcept
{
    switch (kind)
    {
    case NfrKind::Attribute: return "attribute";
    case NfrKind::Characteristic: return "characteristic";
    case NfrKind::StatementItem: return "statement_item";
    }
    return "?";
}

const char* keyword(FocusKind kind) noexcept
{
    return kind == FocusKind::Quality ? "quality" : "cost";
}

std::optional<NfrKind> parse_nfr_kind(std::string_view word) noexcept
{
    for (auto k : {NfrKind::Attribute, NfrKind::Characteristic, NfrKind::StatementItem})
    {
        if (word == keyword(k))
            return k;
    }
    return std::nullopt;
}

std::optional<FocusKind> parse_focus_kind(std::string_view word) noexcept
{
    if (word == "quality")
        return FocusKind::Quality;
    if (word == "cost")
        return FocusKind::Cost;
    return std::nullopt;
}

const char* term_name(NfrKind kind) noexcept
{
    switch (kind)
    {
    case NfrKind::Attribute: return "Attribute";
    case NfrKind::Characteristic: return "Characteristic";
    case NfrKind::StatementItem: return "Statement Item";
    }
    return "?";
}

const char* keyword(ModelEdgeKind kind) noexcept
{
    switch (kind)
    {
    case ModelEdgeKind::SubCharacteristic: return "subcharacteristic";
    case ModelEdgeKind::Combines: return "combines";
    case ModelEdgeKind::MapsTo: return "maps";
    case ModelEdgeKind::RefersToEntity: return "refers_to_entity";
    case ModelEdgeKind::RefersToCategory: return "refers_to_category";
    case ModelEdgeKind::RelatesWith: return "relates";
    case ModelEdgeKind::Satisfies: return "satisfies";
    }
    return "?";
}

std::optional<ModelEdgeKind> parse_model_edge_kind(std::string_view word) noexcept
{
    for (auto k : {ModelEdgeKind::SubCharacteristic, ModelEdgeKind::Combines, ModelEdgeKind::MapsTo,
                   ModelEdgeKind::RefersToEntity, ModelEdgeKind::RefersToCategory,
                   ModelEdgeKind::RelatesWith, ModelEdgeKind::Satisfies})
    {
        if (word == keyword(k))
            return k;
    }
    return std::nullopt;
}

const char* to_string(NodeKind kind) noexcept
{
    switch (kind)
    {
    case NodeKind::Category: return "category";
    case NodeKind::Entity: return "entity";
    case NodeKind::FunctionalRequirement: return "fr";
    case NodeKind::Model: return "model";
    case NodeKind::ViewModel: return "view_model";
    }
    return "?";
}

std::optional<std::string> field_violation(const NfrNode& nfr)
{
    const char* kind = keyword(nfr.kind);
    switch (nfr.kind)
    {
    case NfrKind::Attribute:
    case NfrKind::Characteristic:
        if (!nfr.definition)
            return std::string(kind) + " '" + nfr.name + "' requires a definition";
        if (nfr.declaration)
            return std::string(kind) + " '" + nfr.name + "' cannot carry a declaration";
        break;
    case NfrKind::StatementItem:
        if (!nfr.declaration)
            return "statement_item '" + nfr.name + "' requires a declaration";
        if (nfr.definition)
            return "statement_item '" + nfr.name + "' cannot carry a definition";
        break;
    }
    if (nfr.focus && nfr.kind != NfrKind::Characteristic)
        return std::string(kind) + " '" + nfr.name + "' cannot be an evaluation focus";
    return std::nullopt;
}

const NfrNode* NfrsModelNode::find(std::string_view nfr) const
{
    auto it = nfrs.find(nfr);
    return it == nfrs.end() ? nullptr : &it->second;
}

const NfrNode* NfrsModelNode::focus() const
{
    const NfrNode* found = nullptr;
    for (const auto& [_, n] : nfrs)
    {
        if (!n.is_focus())
            continue;
        if (found)
            return nullptr;
        found = &n;
    }
    return found;
}

const NfrViewNode* NfrsViewModelNode::find(std::string_view view) const
{
    auto it = views.find(view);
    return it == views.end() ? nullptr : &it->second;
}

std::optional<SourceLocation> Document::location_of(std::string_view subject) const
{
    auto it = source_locations.find(subject);
    if (it == source_locations.end())
        return std::nullopt;
    return it->second;
}

bool operator==(const Document& a, const Document& b)
{
    return a.categories == b.categories && a.entities == b.entities &&
           a.functional_requirements == b.functional_requirements && a.models == b.models &&
           a.view_models == b.view_models;
}

namespace path {

std::string category(std::string_view name)
{
    return "category/" + std::string(name);
}
std::string entity(std::string_view name)
{
    return "entity/" + std::string(name);
}
std::string fr(std::string_view name)
{
    return "fr/" + std::string(name);
}
std::string model(std::string_view name)
{
    return "model/" + std::string(name);
}
std::string nfr(std::string_view model_name, std::string_view nfr_name)
{
    return model(model_name) + "/nfr/" + std::string(nfr_name);
}
std::string model_edge(std::string_view model_name, const ModelEdge& edge)
{
    return model(model_name) + "/" + keyword(edge.kind) + "/" + edge.source + "->" + edge.target;
}
std::string view_model(std::string_view name)
{
    return "view_model/" + std::string(name);
}
std::string view(std::string_view vm, std::string_view view_name)
{
    return view_model(vm) + "/view/" + std::string(view_name);
}
std::string influences(std::string_view vm, const ViewEdge& edge)
{
    return view_model(vm) + "/influences/" + edge.source + "->" + edge.target;
}
std::string depends_on(std::string_view vm, const ViewEdge& edge)
{
    return view_model(vm) + "/depends_on/" + edge.source + "->" + edge.target;
}

} // namespace path

DuplicateName::DuplicateName(std::string_view what, const std::string& n)
    : Error("duplicate " + std::string(what) + " name '" + n + "'")
    , name(n)
{
}

NotFound::NotFound(std::string_view what, const std::string& name)
    : Error(std::string(what) + " '" + name + "' not found")
{
}

namespace {

template <typename Map, typename Node>
void insert_unique(Map& map, Node node, std::string_view what)
{
    auto name = node.name;
    if (map.contains(name))
        throw DuplicateName(what, name);
    map.emplace(std::move(name), std::move(node));
}

NfrsModelNode& model_of(Document& doc, std::string_view model)
{
    auto it = doc.models.find(model);
    if (it == doc.models.end())
        throw NotFound("model", std::string(model));
    return it->second;
}

NfrsViewModelNode& view_model_of(Document& doc, std::string_view vm)
{
    auto it = doc.view_models.find(vm);
    if (it == doc.view_models.end())
        throw NotFound("view_model", std::string(vm));
    return it->second;
}

void require_nfr_kind(const NfrsModelNode& model, const std::string& name,
                      std::initializer_list<NfrKind> allowed, const ModelEdge& edge,
                      const char* role)
{
    const NfrNode* n = model.find(name);
    if (!n)
        return;
    for (auto k : allowed)
    {
        if (n->kind == k)
            return;
    }
    throw EdgeKindMismatch(std::string(keyword(edge.kind)) + " edge " + role + " '" + name +
                           "' is a " + keyword(n->kind));
}

// A global name that resolves only to some other node kind contradicts the edge.
void require_global_kind(const Document& doc, NodeKind wanted, const std::string& name,
                         const ModelEdge& edge)
{
    if (contains(doc, wanted, name))
        return;
    for (auto k : {NodeKind::Category, NodeKind::Entity, NodeKind::FunctionalRequirement,
                   NodeKind::Model, NodeKind::ViewModel})
    {
        if (k != wanted && contains(doc, k, name))
            throw EdgeKindMismatch(std::string(keyword(edge.kind)) + " edge target '" + name +
                                   "' is a " + to_string(k) + ", expected " + to_string(wanted));
    }
}

} // namespace

Document add_node(const Document& doc, AnyNode node)
{
    Document out = doc;
    std::visit(
        [&out](auto&& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, CategoryNode>)
                insert_unique(out.categories, std::move(n), "category");
            else if constexpr (std::is_same_v<T, EntityNode>)
                insert_unique(out.entities, std::move(n), "entity");
            else if constexpr (std::is_same_v<T, FunctionalRequirementNode>)
                insert_unique(out.functional_requirements, std::move(n), "fr");
            else if constexpr (std::is_same_v<T, NfrsModelNode>)
            {
                for (const auto& [_, nfr] : n.nfrs)
                {
                    if (auto bad = field_violation(nfr))
                        throw InvalidNode(*bad);
                }
                insert_unique(out.models, std::move(n), "model");
            }
            else
                insert_unique(out.view_models, std::move(n), "view_model");
        },
        std::move(node));
    return out;
}

Document add_nfr(const Document& doc, std::string_view model, NfrNode nfr)
{
    if (auto bad = field_violation(nfr))
        throw InvalidNode(*bad);
    Document out = doc;
    insert_unique(model_of(out, model).nfrs, std::move(nfr), "nfr");
    return out;
}

Document add_view(const Document& doc, std::string_view view_model, NfrViewNode view)
{
    Document out = doc;
    insert_unique(view_model_of(out, view_model).views, std::move(view), "view");
    return out;
}

Document add_model_edge(const Document& doc, std::string_view model, ModelEdge edge)
{
    Document out = doc;
    auto& m = model_of(out, model);
    using K = NfrKind;
    switch (edge.kind)
    {
    case ModelEdgeKind::SubCharacteristic:
        require_nfr_kind(m, edge.source, {K::Characteristic}, edge, "parent");
        require_nfr_kind(m, edge.target, {K::Characteristic}, edge, "child");
        break;
    case ModelEdgeKind::Combines:
        require_nfr_kind(m, edge.source, {K::Characteristic}, edge, "source");
        require_nfr_kind(m, edge.target, {K::Attribute, K::StatementItem}, edge, "target");
        break;
    case ModelEdgeKind::MapsTo:
        require_nfr_kind(m, edge.source, {K::StatementItem}, edge, "source");
        require_nfr_kind(m, edge.target, {K::Attribute}, edge, "target");
        break;
    case ModelEdgeKind::RefersToEntity:
        require_global_kind(out, NodeKind::Entity, edge.target, edge);
        break;
    case ModelEdgeKind::RefersToCategory:
        require_global_kind(out, NodeKind::Category, edge.target, edge);
        break;
    case ModelEdgeKind::RelatesWith:
        break;
    case ModelEdgeKind::Satisfies:
        require_global_kind(out, NodeKind::FunctionalRequirement, edge.target, edge);
        break;
    }
    m.edges.insert(std::move(edge));
    return out;
}

Document add_view_edge(const Document& doc, std::string_view view_model, ViewEdge edge,
                       bool depends_on)
{
    Document out = doc;
    auto& vm = view_model_of(out, view_model);
    for (const auto& end : {edge.source, edge.target})
    {
        const NfrViewNode* v = vm.find(end);
        if (v && v->kind != FocusKind::Quality)
            throw EdgeKindMismatch(std::string(depends_on ? "depends_on" : "influences") +
                                   " edge endpoint '" + end + "' is a cost view");
    }
    (depends_on ? vm.depends_on : vm.influences).insert(std::move(edge));
    return out;
}

NodeRef resolve(const Document& doc, NodeKind kind, std::string_view name)
{
    auto lookup = [&](const auto& map) -> decltype(&map.begin()->second) {
        auto it = map.find(name);
        if (it == map.end())
            throw NotFound(to_string(kind), std::string(name));
        return &it->second;
    };
    switch (kind)
    {
    case NodeKind::Category: return lookup(doc.categories);
    case NodeKind::Entity: return lookup(doc.entities);
    case NodeKind::FunctionalRequirement: return lookup(doc.functional_requirements);
    case NodeKind::Model: return lookup(doc.models);
    case NodeKind::ViewModel: return lookup(doc.view_models);
    }
    throw NotFound(to_string(kind), std::string(name));
}

bool contains(const Document& doc, NodeKind kind, std::string_view name)
{
    switch (kind)
    {
    case NodeKind::Category: return doc.categories.contains(name);
    case NodeKind::Entity: return doc.entities.contains(name);
    case NodeKind::FunctionalRequirement: return doc.functional_requirements.contains(name);
    case NodeKind::Model: return doc.models.contains(name);
    case NodeKind::ViewModel: return doc.view_models.contains(name);
    }
    return false;
}

} // namespace nfrs::store
