#include "nfrs/export.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

namespace nfrs::exporting {

using nlohmann::json;
using namespace store;

std::optional<ExportFormat> parse_export_format(std::string_view text) noexcept
{
    if (text == "json")
        return ExportFormat::Json;
    if (text == "dot")
        return ExportFormat::Dot;
    if (text == "turtle" || text == "ttl")
        return ExportFormat::Turtle;
    return std::nullopt;
}

std::string canonical_json(const json& j)
{
    return j.dump() + "\n";
}

namespace {

void put(json& obj, const char* key, const std::optional<std::string>& value)
{
    if (value)
        obj[key] = *value;
}

std::optional<std::string> get_opt(const json& obj, const char* key)
{
    if (!obj.contains(key))
        return std::nullopt;
    return obj.at(key).get<std::string>();
}

json edges_json(const std::set<ViewEdge>& edges)
{
    auto arr = json::array();
    for (const auto& e : edges)
        arr.push_back({{"source", e.source}, {"target", e.target}});
    return arr;
}

json model_json(const NfrsModelNode& m)
{
    json obj;
    obj["name"] = m.name;
    put(obj, "specification", m.specification);
    obj["nfrs"] = json::array();
    for (const auto& [_, n] : m.nfrs)
    {
        json nj;
        nj["kind"] = keyword(n.kind);
        nj["name"] = n.name;
        put(nj, "statement", n.statement);
        put(nj, "definition", n.definition);
        put(nj, "declaration", n.declaration);
        if (n.focus)
            nj["focus"] = keyword(*n.focus);
        obj["nfrs"].push_back(std::move(nj));
    }
    // sorted by (kind keyword, source, target) so the array is independent of enum order
    std::vector<std::tuple<std::string, std::string, std::string>> edges;
    for (const auto& e : m.edges)
        edges.emplace_back(keyword(e.kind), e.source, e.target);
    std::sort(edges.begin(), edges.end());
    obj["edges"] = json::array();
    for (const auto& [kind, source, target] : edges)
        obj["edges"].push_back({{"kind", kind}, {"source", source}, {"target", target}});
    return obj;
}

json view_model_json(const NfrsViewModelNode& vm)
{
    json obj;
    obj["name"] = vm.name;
    put(obj, "specification", vm.specification);
    obj["views"] = json::array();
    for (const auto& [_, v] : vm.views)
    {
        json vj;
        vj["name"] = v.name;
        vj["kind"] = keyword(v.kind);
        put(vj, "category", v.category);
        put(vj, "statement", v.statement);
        if (v.focus)
            vj["focus"] = {{"model", v.focus->model}, {"characteristic", v.focus->characteristic}};
        obj["views"].push_back(std::move(vj));
    }
    obj["influences"] = edges_json(vm.influences);
    obj["depends_on"] = edges_json(vm.depends_on);
    return obj;
}

template <typename T>
T enum_field(const json& obj, const char* key, std::optional<T> (*parse)(std::string_view) noexcept)
{
    auto text = obj.at(key).get<std::string>();
    auto value = parse(text);
    if (!value)
        throw Error(std::string("invalid ") + key + " '" + text + "'");
    return *value;
}

std::set<ViewEdge> view_edges_from(const json& arr)
{
    std::set<ViewEdge> out;
    for (const auto& e : arr)
        out.insert({e.at("source").get<std::string>(), e.at("target").get<std::string>()});
    return out;
}

} // namespace

json to_json(const Document& doc)
{
    json root = json::object();
    root["categories"] = json::array();
    for (const auto& [_, c] : doc.categories)
    {
        json cj;
        cj["name"] = c.name;
        put(cj, "description", c.description);
        put(cj, "parent", c.parent);
        root["categories"].push_back(std::move(cj));
    }
    root["entities"] = json::array();
    for (const auto& [_, e] : doc.entities)
    {
        json ej;
        ej["name"] = e.name;
        put(ej, "description", e.description);
        put(ej, "belongs_to", e.category);
        root["entities"].push_back(std::move(ej));
    }
    root["frs"] = json::array();
    for (const auto& [_, fr] : doc.functional_requirements)
        root["frs"].push_back(
            {{"name", fr.name}, {"statement", fr.statement}, {"requester", fr.requester}});
    root["models"] = json::array();
    for (const auto& [_, m] : doc.models)
        root["models"].push_back(model_json(m));
    root["view_models"] = json::array();
    for (const auto& [_, vm] : doc.view_models)
        root["view_models"].push_back(view_model_json(vm));
    return root;
}

Document document_from_json(const json& j)
{
    try
    {
        Document doc;
        for (const auto& c : j.at("categories"))
            doc = add_node(doc, CategoryNode{c.at("name").get<std::string>(), get_opt(c, "description"),
                                             get_opt(c, "parent")});
        for (const auto& e : j.at("entities"))
            doc = add_node(doc, EntityNode{e.at("name").get<std::string>(), get_opt(e, "description"),
                                           get_opt(e, "belongs_to")});
        for (const auto& fr : j.at("frs"))
            doc = add_node(doc, FunctionalRequirementNode{fr.at("name").get<std::string>(),
                                                          fr.at("statement").get<std::string>(),
                                                          fr.at("requester").get<std::string>()});
        for (const auto& mj : j.at("models"))
        {
            NfrsModelNode m;
            m.name = mj.at("name").get<std::string>();
            m.specification = get_opt(mj, "specification");
            for (const auto& nj : mj.at("nfrs"))
            {
                NfrNode n;
                n.kind = enum_field<NfrKind>(nj, "kind", parse_nfr_kind);
                n.name = nj.at("name").get<std::string>();
                n.statement = get_opt(nj, "statement");
                n.definition = get_opt(nj, "definition");
                n.declaration = get_opt(nj, "declaration");
                if (nj.contains("focus"))
                    n.focus = enum_field<FocusKind>(nj, "focus", parse_focus_kind);
                if (m.nfrs.contains(n.name))
                    throw DuplicateName("nfr", n.name);
                m.nfrs.emplace(n.name, std::move(n));
            }
            // edges are inserted raw: kind conformance is the validator's concern
            for (const auto& ej : mj.at("edges"))
                m.edges.insert({enum_field<ModelEdgeKind>(ej, "kind", parse_model_edge_kind),
                                ej.at("source").get<std::string>(),
                                ej.at("target").get<std::string>()});
            doc = add_node(doc, std::move(m));
        }
        for (const auto& vj : j.at("view_models"))
        {
            NfrsViewModelNode vm;
            vm.name = vj.at("name").get<std::string>();
            vm.specification = get_opt(vj, "specification");
            for (const auto& v : vj.at("views"))
            {
                NfrViewNode view;
                view.name = v.at("name").get<std::string>();
                view.kind = enum_field<FocusKind>(v, "kind", parse_focus_kind);
                view.category = get_opt(v, "category");
                view.statement = get_opt(v, "statement");
                if (v.contains("focus"))
                    view.focus = FocusRef{v.at("focus").at("model").get<std::string>(),
                                          v.at("focus").at("characteristic").get<std::string>()};
                if (vm.views.contains(view.name))
                    throw DuplicateName("view", view.name);
                vm.views.emplace(view.name, std::move(view));
            }
            vm.influences = view_edges_from(vj.at("influences"));
            vm.depends_on = view_edges_from(vj.at("depends_on"));
            doc = add_node(doc, std::move(vm));
        }
        return doc;
    }
    catch (const json::exception& e)
    {
        throw Error(std::string("malformed document JSON: ") + e.what());
    }
}

json to_json(const kernel::OntologySchema& schema)
{
    json root;
    root["component"] = {{"name", schema.component.name},
                         {"level", kernel::to_string(schema.component.level)},
                         {"version", schema.component.version}};
    root["terms"] = json::array();
    for (const auto& [_, t] : schema.terms)
    {
        json tj;
        tj["name"] = t.name;
        tj["synonyms"] = t.synonyms;
        tj["definition"] = t.definition;
        tj["notes"] = t.notes;
        tj["parent_term"] = t.parent_term ? json(*t.parent_term) : json(nullptr);
        tj["stereotypes"] = json::array();
        for (const auto& s : t.stereotypes)
        {
            json sj = {{"component", s.component.name},
                       {"level", kernel::to_string(s.component.level)},
                       {"term", s.term}};
            if (s.reused_from)
                sj["reused_from"] = true;
            tj["stereotypes"].push_back(std::move(sj));
        }
        tj["properties"] = json::array();
        for (const auto& p : t.properties)
            tj["properties"].push_back({{"name", p.name}, {"definition", p.definition}});
        root["terms"].push_back(std::move(tj));
    }
    std::vector<kernel::RelationshipDef> rels = schema.relationships;
    std::sort(rels.begin(), rels.end(), [](const auto& a, const auto& b) {
        return kernel::key_of(a) < kernel::key_of(b);
    });
    root["relationships"] = json::array();
    for (const auto& r : rels)
    {
        root["relationships"].push_back({{"name", r.name},
                                         {"source", r.source_term},
                                         {"target", r.target_term},
                                         {"min", r.min},
                                         {"max", r.max ? json(*r.max) : json("unbounded")},
                                         {"reflexive_allowed", r.reflexive_allowed},
                                         {"directed", r.directed}});
    }
    return root;
}

json to_json(const kernel::SchemaDiff& diff)
{
    auto rel_list = [](const std::vector<kernel::RelationshipKey>& keys) {
        auto arr = json::array();
        for (const auto& k : keys)
            arr.push_back({{"name", k.name}, {"source", k.source_term}, {"target", k.target_term}});
        return arr;
    };
    json root;
    root["added_terms"] = diff.added_terms;
    root["removed_terms"] = diff.removed_terms;
    root["added_relationships"] = rel_list(diff.added_relationships);
    root["removed_relationships"] = rel_list(diff.removed_relationships);
    root["renamed_relationships"] = json::array();
    for (const auto& r : diff.renamed_relationships)
        root["renamed_relationships"].push_back({{"old_name", r.old_name},
                                                 {"new_name", r.new_name},
                                                 {"source", r.source_term},
                                                 {"target", r.target_term}});
    root["stereotype_changes"] = json::array();
    for (const auto& c : diff.stereotype_changes)
        root["stereotype_changes"].push_back({{"term", c.term},
                                              {"change", c.added ? "added" : "removed"},
                                              {"stereotype", kernel::to_string(c.stereotype)}});
    return root;
}

std::string export_document(const Document& doc, ExportFormat format)
{
    switch (format)
    {
    case ExportFormat::Json: return canonical_json(to_json(doc));
    case ExportFormat::Dot: return export_dot(doc);
    case ExportFormat::Turtle: return export_turtle(doc);
    }
    return {};
}

} // namespace nfrs::exporting
