#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <vector>

#include "nfrs/export.hpp"
#include "nfrs/validator.hpp"

namespace nfrs::exporting {

using namespace store;

std::string percent_encode(std::string_view raw)
{
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    for (char c : raw)
    {
        auto u = static_cast<unsigned char>(c);
        if (std::isalnum(u) || c == '-' || c == '.' || c == '_' || c == '~')
        {
            out += c;
        }
        else
        {
            out += '%';
            out += hex[u >> 4];
            out += hex[u & 0xF];
        }
    }
    return out;
}

namespace {

// Relationship labels, spelled as in the ontology's relationship table.
constexpr const char* kBelongsTo = "belongs to";
constexpr const char* kCombines = "combines";
constexpr const char* kDealsWith = "deals with universals";
constexpr const char* kDependsOn = "depends on";
constexpr const char* kInfluences = "influences";
constexpr const char* kRepresentedBy = "is represented by";
constexpr const char* kMappedTo = "is mapped to";
constexpr const char* kRefersParticulars = "refers to particulars";
constexpr const char* kRefersUniversals = "refers to universals";
constexpr const char* kRelatesWith = "relates with";
constexpr const char* kSatisfies = "satisfies";
// Structural links that are not tabulated relationships.
constexpr const char* kSubCharacteristic = "has sub-characteristic";
constexpr const char* kHasFocus = "has evaluation focus";
constexpr const char* kSubCategoryOf = "sub-category of";
constexpr const char* kSpecifiedIn = "specified in";

const char* relationship_label(ModelEdgeKind kind)
{
    switch (kind)
    {
    case ModelEdgeKind::SubCharacteristic: return kSubCharacteristic;
    case ModelEdgeKind::Combines: return kCombines;
    case ModelEdgeKind::MapsTo: return kMappedTo;
    case ModelEdgeKind::RefersToEntity: return kRefersParticulars;
    case ModelEdgeKind::RefersToCategory: return kRefersUniversals;
    case ModelEdgeKind::RelatesWith: return kRelatesWith;
    case ModelEdgeKind::Satisfies: return kSatisfies;
    }
    return "?";
}

/// "is represented by" -> "is_represented_by"
std::string snake_case(std::string_view name)
{
    std::string out;
    for (char c : name)
    {
        if (c == ' ' || c == '-')
            out += '_';
        else
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

std::string scoped(std::string_view scope, std::string_view name)
{
    return percent_encode(scope) + "/" + percent_encode(name);
}

// -- DOT ----------------------------------------------------------------------

std::string dot_string(std::string_view raw)
{
    std::string out = "\"";
    for (char c : raw)
    {
        if (c == '"' || c == '\\')
            out += '\\';
        if (c == '\n')
            out += "\\n";
        else if (c != '\r')
            out += c;
    }
    return out + "\"";
}

const char* edge_style(std::string_view label)
{
    static const std::map<std::string_view, const char*> styles = {
        {kBelongsTo, "style=solid, color=gray40"},
        {kCombines, "style=solid, color=black"},
        {kDealsWith, "style=dashed, color=gray40"},
        {kDependsOn, "style=dashed, color=firebrick"},
        {kInfluences, "style=bold, color=forestgreen"},
        {kRepresentedBy, "style=dotted, color=navy"},
        {kMappedTo, "style=dashed, color=darkorange"},
        {kRefersParticulars, "style=dotted, color=purple"},
        {kRefersUniversals, "style=dotted, color=mediumpurple"},
        {kRelatesWith, "style=solid, color=teal, dir=both"},
        {kSatisfies, "style=bold, color=royalblue"},
        {kSubCharacteristic, "style=solid, color=black, arrowhead=diamond"},
        {kHasFocus, "style=bold, color=navy"},
        {kSubCategoryOf, "style=solid, color=gray60, arrowhead=empty"},
    };
    auto it = styles.find(label);
    return it == styles.end() ? "style=solid" : it->second;
}

class DotWriter
{
public:
    void node(const std::string& id, std::string_view label, const char* shape, const char* extra = "")
    {
        m_nodes.push_back("  " + dot_string(id) + " [label=" + dot_string(label) + ", shape=" +
                          shape + extra + "];");
    }

    void edge(const std::string& from, const std::string& to, const char* label)
    {
        m_edges.push_back("  " + dot_string(from) + " -> " + dot_string(to) + " [label=" +
                          dot_string(label) + ", " + edge_style(label) + "];");
    }

    std::string finish()
    {
        std::string out = "digraph \"nfrs\" {\n  rankdir=LR;\n";
        for (const auto& n : m_nodes)
            out += n + "\n";
        std::sort(m_edges.begin(), m_edges.end());
        for (const auto& e : m_edges)
            out += e + "\n";
        return out + "}\n";
    }

private:
    std::vector<std::string> m_nodes;
    std::vector<std::string> m_edges;
};

std::string id_category(std::string_view n) { return "category:" + percent_encode(n); }
std::string id_entity(std::string_view n) { return "entity:" + percent_encode(n); }
std::string id_fr(std::string_view n) { return "fr:" + percent_encode(n); }
std::string id_model(std::string_view n) { return "model:" + percent_encode(n); }
std::string id_nfr(std::string_view m, std::string_view n) { return "nfr:" + scoped(m, n); }
std::string id_view_model(std::string_view n) { return "view_model:" + percent_encode(n); }
std::string id_view(std::string_view vm, std::string_view v) { return "view:" + scoped(vm, v); }

// Model-edge targets outside the model live in document-wide collections.
std::string model_edge_target(const NfrsModelNode& m, const ModelEdge& e)
{
    switch (e.kind)
    {
    case ModelEdgeKind::RefersToEntity: return id_entity(e.target);
    case ModelEdgeKind::RefersToCategory: return id_category(e.target);
    case ModelEdgeKind::Satisfies: return id_fr(e.target);
    default: return id_nfr(m.name, e.target);
    }
}

// -- Turtle -------------------------------------------------------------------

std::string turtle_literal(std::string_view raw)
{
    std::string out = "\"";
    for (char c : raw)
    {
        switch (c)
        {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20 || c == 0x7F)
            {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned char>(c));
                out += buf;
            }
            else
            {
                out += c;
            }
        }
    }
    return out + "\"";
}

std::string urn(const char* kind, const std::string& encoded)
{
    return std::string("<urn:nfrstdo:") + kind + ":" + encoded + ">";
}

/// Collects the triples of one subject and prints them as a Turtle block.
class Subject
{
public:
    explicit Subject(std::string iri)
        : m_iri(std::move(iri))
    {
    }

    void type(const char* term) { m_types.push_back(std::string("nfrstdo:") + term); }

    void literal(const char* predicate, const std::optional<std::string>& value)
    {
        if (value)
            m_literals.emplace_back(predicate, turtle_literal(*value));
    }

    void link(std::string_view predicate_name, std::string object)
    {
        m_links.emplace_back(snake_case(predicate_name), std::move(object));
    }

    std::string render()
    {
        std::sort(m_literals.begin(), m_literals.end());
        std::sort(m_links.begin(), m_links.end());
        m_links.erase(std::unique(m_links.begin(), m_links.end()), m_links.end());

        std::vector<std::string> parts;
        std::string types = "a ";
        for (std::size_t i = 0; i < m_types.size(); ++i)
            types += (i ? ", " : "") + m_types[i];
        parts.push_back(types);
        for (const auto& [p, o] : m_literals)
            parts.push_back("nfrstdo:" + p + " " + o);
        for (const auto& [p, o] : m_links)
            parts.push_back("nfrstdo:" + p + " " + o);

        std::string out = m_iri + "\n";
        for (std::size_t i = 0; i < parts.size(); ++i)
            out += "    " + parts[i] + (i + 1 == parts.size() ? " .\n" : " ;\n");
        return out;
    }

private:
    std::string m_iri;
    std::vector<std::string> m_types;
    std::vector<std::pair<std::string, std::string>> m_literals;
    std::vector<std::pair<std::string, std::string>> m_links;
};

std::string turtle_target(const NfrsModelNode& m, const ModelEdge& e)
{
    switch (e.kind)
    {
    case ModelEdgeKind::RefersToEntity: return urn("entity", percent_encode(e.target));
    case ModelEdgeKind::RefersToCategory: return urn("category", percent_encode(e.target));
    case ModelEdgeKind::Satisfies: return urn("fr", percent_encode(e.target));
    default: return urn("nfr", scoped(m.name, e.target));
    }
}

const char* nfr_class(NfrKind kind)
{
    switch (kind)
    {
    case NfrKind::Attribute: return "Attribute";
    case NfrKind::Characteristic: return "Characteristic";
    case NfrKind::StatementItem: return "StatementItem";
    }
    return "NonFunctionalRequirement";
}

} // namespace

std::string export_dot(const Document& doc)
{
    DotWriter w;
    for (const auto& [name, c] : doc.categories)
    {
        w.node(id_category(name), name, "tab");
        if (c.parent)
            w.edge(id_category(name), id_category(*c.parent), kSubCategoryOf);
    }
    for (const auto& [name, e] : doc.entities)
    {
        w.node(id_entity(name), name, "component");
        if (e.category)
            w.edge(id_entity(name), id_category(*e.category), kBelongsTo);
    }
    for (const auto& [name, fr] : doc.functional_requirements)
        w.node(id_fr(name), name, "parallelogram");

    for (const auto& [mname, m] : doc.models)
    {
        w.node(id_model(mname), mname, "folder");
        for (const auto& [nname, n] : m.nfrs)
        {
            const char* shape = n.kind == NfrKind::Characteristic ? "box"
                                : n.kind == NfrKind::Attribute   ? "ellipse"
                                                                 : "note";
            w.node(id_nfr(mname, nname), nname, shape, n.is_focus() ? ", peripheries=2" : "");
            if (n.is_focus())
                w.edge(id_nfr(mname, nname), id_model(mname), kRepresentedBy);
        }
        for (const auto& e : m.edges)
            w.edge(id_nfr(mname, e.source), model_edge_target(m, e), relationship_label(e.kind));
    }

    for (const auto& [vmname, vm] : doc.view_models)
    {
        w.node(id_view_model(vmname), vmname, "folder");
        for (const auto& [vname, v] : vm.views)
        {
            w.node(id_view(vmname, vname), vname, "diamond");
            if (v.category)
                w.edge(id_view(vmname, vname), id_category(*v.category), kDealsWith);
            if (v.focus)
                w.edge(id_view(vmname, vname), id_nfr(v.focus->model, v.focus->characteristic),
                       kHasFocus);
        }
        for (const auto& e : vm.influences)
            w.edge(id_view(vmname, e.source), id_view(vmname, e.target), kInfluences);
        for (const auto& e : validation::derive_depends_on(vm).depends_on)
            w.edge(id_view(vmname, e.source), id_view(vmname, e.target), kDependsOn);
    }
    return w.finish();
}

std::string export_turtle(const Document& doc)
{
    std::string out = "@prefix nfrstdo: <urn:nfrstdo:ontology#> .\n";
    auto emit = [&out](Subject& s) { out += "\n" + s.render(); };

    for (const auto& [name, c] : doc.categories)
    {
        Subject s(urn("category", percent_encode(name)));
        s.type("EvaluableEntityCategory");
        s.literal("name", name);
        s.literal("description", c.description);
        if (c.parent)
            s.link(kSubCategoryOf, urn("category", percent_encode(*c.parent)));
        emit(s);
    }
    for (const auto& [name, e] : doc.entities)
    {
        Subject s(urn("entity", percent_encode(name)));
        s.type("EvaluableEntity");
        s.literal("name", name);
        s.literal("description", e.description);
        if (e.category)
            s.link(kBelongsTo, urn("category", percent_encode(*e.category)));
        emit(s);
    }
    for (const auto& [name, fr] : doc.functional_requirements)
    {
        Subject s(urn("fr", percent_encode(name)));
        s.type("FunctionalRequirement");
        s.literal("name", name);
        s.literal("statement", fr.statement);
        s.literal("requester", fr.requester);
        emit(s);
    }
    for (const auto& [mname, m] : doc.models)
    {
        Subject ms(urn("model", percent_encode(mname)));
        ms.type("NFRsModel");
        ms.literal("name", mname);
        ms.literal("specification", m.specification);
        emit(ms);

        std::map<std::string, std::vector<const ModelEdge*>> outgoing;
        for (const auto& e : m.edges)
            outgoing[e.source].push_back(&e);

        for (const auto& [nname, n] : m.nfrs)
        {
            Subject s(urn("nfr", scoped(mname, nname)));
            s.type(nfr_class(n.kind));
            if (n.focus)
            {
                s.type("EvaluationFocus");
                s.type(*n.focus == FocusKind::Quality ? "QualityFocus" : "CostFocus");
                s.link(kRepresentedBy, urn("model", percent_encode(mname)));
            }
            s.literal("name", nname);
            s.literal("statement", n.statement);
            s.literal("definition", n.definition);
            s.literal("declaration", n.declaration);
            s.link(kSpecifiedIn, urn("model", percent_encode(mname)));
            for (const ModelEdge* e : outgoing[nname])
                s.link(relationship_label(e->kind), turtle_target(m, *e));
            emit(s);
        }
    }
    for (const auto& [vmname, vm] : doc.view_models)
    {
        Subject vs(urn("view_model", percent_encode(vmname)));
        vs.type("NFRsViewModel");
        vs.literal("name", vmname);
        vs.literal("specification", vm.specification);
        emit(vs);

        auto derived = validation::derive_depends_on(vm);
        for (const auto& [vname, v] : vm.views)
        {
            Subject s(urn("view", scoped(vmname, vname)));
            s.type(v.kind == FocusKind::Quality ? "QualityView" : "CostView");
            s.literal("name", vname);
            s.literal("statement", v.statement);
            s.link(kSpecifiedIn, urn("view_model", percent_encode(vmname)));
            if (v.category)
                s.link(kDealsWith, urn("category", percent_encode(*v.category)));
            if (v.focus)
                s.link(kHasFocus, urn("nfr", scoped(v.focus->model, v.focus->characteristic)));
            for (const auto& e : vm.influences)
            {
                if (e.source == vname)
                    s.link(kInfluences, urn("view", scoped(vmname, e.target)));
            }
            for (const auto& e : derived.depends_on)
            {
                if (e.source == vname)
                    s.link(kDependsOn, urn("view", scoped(vmname, e.target)));
            }
            emit(s);
        }
    }
    return out;
}

} // namespace nfrs::exporting
