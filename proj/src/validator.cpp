#include "nfrs/validator.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace nfrs::validation {

using namespace store;

const std::vector<RuleInfo>& rule_catalog()
{
    static const std::vector<RuleInfo> rules = {
        {"R-REF", "every name reference resolves to a node of the required kind"},
        {"R-001", "an evaluable entity belongs to exactly one evaluable entity category"},
        {"R-002", "combines edges to attributes start at characteristics"},
        {"R-003", "combines edges to statement items start at characteristics"},
        {"R-004", "a view deals with exactly one evaluable entity category"},
        {"R-005", "depends_on edges join quality views only"},
        {"R-006", "influences edges join quality views only"},
        {"R-006b", "explicit depends_on edges mirror an influences edge"},
        {"R-007", "an evaluation focus roots its model and is what views refer to"},
        {"R-008", "maps edges go from statement items to attributes"},
        {"R-009", "every NFR refers to at least one evaluable entity"},
        {"R-010", "refers_to_category edges target categories"},
        {"R-011", "relates edges connect distinct NFRs"},
        {"R-012", "satisfies edges target functional requirements"},
        {"R-013", "the characteristic hierarchy is a forest with at most one focus at a root"},
        {"R-014", "a view has one focus whose kind matches the view kind"},
        {"R-015", "a view's category is a super-category"},
        {"R-016", "influences edges are acyclic"},
        {"R-017", "only characteristics take part in the sub-characteristic hierarchy"},
        {"L-001", "exactly one foundational component, ThingFO"},
        {"L-002", "enrichment never comes from a lower tier"},
        {"L-003", "peer edges join non-foundational components of one tier"},
    };
    return rules;
}

namespace {

/// Nontrivial strongly connected components (including self-loops), members sorted.
std::vector<std::vector<std::string>> cycles_of(const std::map<std::string, std::set<std::string>>& succ)
{
    std::map<std::string, int> index;
    std::map<std::string, int> low;
    std::vector<std::string> stack;
    std::set<std::string> on_stack;
    std::vector<std::vector<std::string>> out;
    int counter = 0;

    std::function<void(const std::string&)> visit = [&](const std::string& v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack.insert(v);
        if (auto it = succ.find(v); it != succ.end())
        {
            for (const auto& w : it->second)
            {
                if (!index.contains(w))
                {
                    visit(w);
                    low[v] = std::min(low[v], low[w]);
                }
                else if (on_stack.contains(w))
                {
                    low[v] = std::min(low[v], index[w]);
                }
            }
        }
        if (low[v] != index[v])
            return;
        std::vector<std::string> scc;
        while (true)
        {
            auto w = stack.back();
            stack.pop_back();
            on_stack.erase(w);
            scc.push_back(w);
            if (w == v)
                break;
        }
        bool self_loop = false;
        if (auto it = succ.find(v); it != succ.end())
            self_loop = it->second.contains(v);
        if (scc.size() > 1 || self_loop)
        {
            std::sort(scc.begin(), scc.end());
            out.push_back(std::move(scc));
        }
    };

    for (const auto& [v, _] : succ)
    {
        if (!index.contains(v))
            visit(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string join(const std::vector<std::string>& names)
{
    std::string s;
    for (const auto& n : names)
        s += (s.empty() ? "'" : ", '") + n + "'";
    return s;
}

std::optional<NodeKind> global_kind(const Document& doc, std::string_view name)
{
    for (auto k : {NodeKind::Category, NodeKind::Entity, NodeKind::FunctionalRequirement,
                   NodeKind::Model, NodeKind::ViewModel})
    {
        if (contains(doc, k, name))
            return k;
    }
    return std::nullopt;
}

class Checker
{
public:
    Checker(const Document& doc, ValidationMode mode)
        : m_doc(doc)
        , m_mode(mode)
    {
    }

    std::vector<Diagnostic> run()
    {
        categories();
        entities();
        for (const auto& [_, m] : m_doc.models)
            model(m);
        for (const auto& [_, vm] : m_doc.view_models)
            view_model(vm);
        sort_diagnostics(m_out);
        return std::move(m_out);
    }

private:
    void emit(const char* code, Severity sev, std::string message, std::string subject)
    {
        auto loc = m_doc.location_of(subject);
        m_out.push_back({code, sev, std::move(message), loc, std::move(subject)});
    }

    void error(const char* code, std::string message, std::string subject)
    {
        emit(code, Severity::Error, std::move(message), std::move(subject));
    }

    void warning(const char* code, std::string message, std::string subject)
    {
        emit(code, Severity::Warning, std::move(message), std::move(subject));
    }

    void unresolved(std::string_view what, const std::string& name, std::string subject)
    {
        error("R-REF", std::string(what) + " '" + name + "' does not resolve", std::move(subject));
    }

    // -- document-level nodes -------------------------------------------------

    void categories()
    {
        std::map<std::string, std::set<std::string>> parent_of;
        for (const auto& [name, c] : m_doc.categories)
        {
            if (!c.parent)
                continue;
            if (!m_doc.categories.contains(*c.parent))
                unresolved("parent category", *c.parent, path::category(name));
            else
                parent_of[name].insert(*c.parent);
        }
        for (const auto& cycle : cycles_of(parent_of))
            error("R-REF", "category parent chain is cyclic through " + join(cycle),
                  path::category(cycle.front()));
    }

    void entities()
    {
        for (const auto& [name, e] : m_doc.entities)
        {
            auto subject = path::entity(name);
            if (!e.category)
            {
                error("R-001", "entity '" + name + "' belongs to no evaluable entity category",
                      subject);
                continue;
            }
            if (m_doc.categories.contains(*e.category))
                continue;
            if (auto k = global_kind(m_doc, *e.category))
                error("R-001",
                      "entity '" + name + "' belongs to '" + *e.category + "', which is a " +
                          to_string(*k) + ", not a category",
                      subject);
            else
                unresolved("category", *e.category, subject);
        }
    }

    // -- NFRs models ------------------------------------------------------------

    void model(const NfrsModelNode& m)
    {
        std::set<std::string> referring; // NFRs with a refers_to_entity edge
        std::map<std::string, std::set<std::string>> children; // characteristic hierarchy
        std::map<std::string, std::vector<std::string>> parents;

        for (const auto& e : m.edges)
        {
            auto subject = path::model_edge(m.name, e);
            const NfrNode* src = m.find(e.source);
            const NfrNode* dst = m.find(e.target);
            const std::string kw = keyword(e.kind);

            if (!src)
                unresolved(kw + " source NFR", e.source, subject);

            switch (e.kind)
            {
            case ModelEdgeKind::SubCharacteristic:
                if (!dst)
                    unresolved("sub-characteristic", e.target, subject);
                if (!src || !dst)
                    break;
                if (src->kind != NfrKind::Characteristic || dst->kind != NfrKind::Characteristic)
                {
                    const NfrNode* bad = src->kind != NfrKind::Characteristic ? src : dst;
                    error("R-017",
                          std::string(term_name(bad->kind)) + " '" + bad->name +
                              "' cannot take part in the sub-characteristic hierarchy",
                          subject);
                    break;
                }
                children[e.source].insert(e.target);
                parents[e.target].push_back(e.source);
                break;

            case ModelEdgeKind::Combines:
                if (!dst)
                    unresolved("combined NFR", e.target, subject);
                if (!src || !dst)
                    break;
                if (dst->kind == NfrKind::Characteristic)
                    error("R-002",
                          "combines must target an attribute or statement item, '" + dst->name +
                              "' is a characteristic",
                          subject);
                else if (src->kind != NfrKind::Characteristic)
                    error(dst->kind == NfrKind::Attribute ? "R-002" : "R-003",
                          std::string("only a characteristic can combine; '") + src->name +
                              "' is a " + term_name(src->kind),
                          subject);
                break;

            case ModelEdgeKind::MapsTo:
                if (!dst)
                    unresolved("mapped attribute", e.target, subject);
                if (!src || !dst)
                    break;
                if (src->kind != NfrKind::StatementItem || dst->kind != NfrKind::Attribute)
                    error("R-008",
                          "maps must go from a statement item to an attribute, found " +
                              std::string(term_name(src->kind)) + " -> " + term_name(dst->kind),
                          subject);
                break;

            case ModelEdgeKind::RefersToEntity:
                if (src)
                    referring.insert(e.source);
                if (!m_doc.entities.contains(e.target))
                {
                    auto k = global_kind(m_doc, e.target);
                    error("R-REF",
                          k ? "'" + e.target + "' is a " + to_string(*k) + ", not an evaluable entity"
                            : "entity '" + e.target + "' does not resolve",
                          subject);
                }
                break;

            case ModelEdgeKind::RefersToCategory:
                if (!m_doc.categories.contains(e.target))
                {
                    if (auto k = global_kind(m_doc, e.target))
                        error("R-010",
                              "refers_to_category target '" + e.target + "' is a " +
                                  to_string(*k) + ", not a category",
                              subject);
                    else
                        unresolved("category", e.target, subject);
                }
                break;

            case ModelEdgeKind::RelatesWith:
                if (!dst)
                    unresolved("related NFR", e.target, subject);
                if (src && dst && e.source == e.target)
                    warning("R-011", "NFR '" + e.source + "' relates with itself", subject);
                break;

            case ModelEdgeKind::Satisfies:
                if (!m_doc.functional_requirements.contains(e.target))
                {
                    if (auto k = global_kind(m_doc, e.target))
                        error("R-012",
                              "satisfies target '" + e.target + "' is a " + to_string(*k) +
                                  ", not a functional requirement",
                              subject);
                    else
                        unresolved("functional requirement", e.target, subject);
                }
                break;
            }
        }

        const Severity r009 = m_mode == ValidationMode::Instance ? Severity::Error : Severity::Warning;
        for (const auto& [name, n] : m.nfrs)
        {
            if (!referring.contains(name))
                emit("R-009", r009, "NFR '" + name + "' refers to no evaluable entity",
                     path::nfr(m.name, name));
        }

        hierarchy(m, children, parents);
    }

    void hierarchy(const NfrsModelNode& m, const std::map<std::string, std::set<std::string>>& children,
                   const std::map<std::string, std::vector<std::string>>& parents)
    {
        for (const auto& [child, ps] : parents)
        {
            std::set<std::string> distinct(ps.begin(), ps.end());
            if (distinct.size() > 1)
                error("R-013",
                      "characteristic '" + child + "' has more than one parent (" +
                          join({distinct.begin(), distinct.end()}) + ")",
                      path::nfr(m.name, child));
        }
        for (const auto& cycle : cycles_of(children))
            error("R-013", "sub-characteristic cycle through " + join(cycle),
                  path::nfr(m.name, cycle.front()));

        std::vector<std::string> foci;
        for (const auto& [name, n] : m.nfrs)
        {
            if (n.is_focus())
                foci.push_back(name);
        }
        if (foci.size() > 1)
            error("R-013", "model declares more than one evaluation focus (" + join(foci) + ")",
                  path::model(m.name));
        for (const auto& f : foci)
        {
            if (parents.contains(f))
                error("R-013", "evaluation focus '" + f + "' has a parent characteristic",
                      path::nfr(m.name, f));
        }

        if (foci.size() != 1)
            return;
        for (const auto& [name, n] : m.nfrs)
        {
            if (n.kind == NfrKind::Characteristic && name != foci.front() && !parents.contains(name))
                error("R-007",
                      "characteristic '" + name + "' is not beneath the evaluation focus '" +
                          foci.front() + "'",
                      path::nfr(m.name, name));
        }
    }

    // -- NFRs view models -------------------------------------------------------

    void view_model(const NfrsViewModelNode& vm)
    {
        for (const auto& [name, v] : vm.views)
            view(vm, v);

        auto check_edges = [&](const std::set<ViewEdge>& edges, bool depends) {
            for (const auto& e : edges)
            {
                auto subject = depends ? path::depends_on(vm.name, e) : path::influences(vm.name, e);
                for (const auto& end : {e.source, e.target})
                {
                    const NfrViewNode* v = vm.find(end);
                    if (!v)
                        unresolved("view", end, subject);
                    else if (v->kind != FocusKind::Quality)
                        error(depends ? "R-005" : "R-006",
                              std::string(depends ? "depends_on" : "influences") +
                                  " connects quality views only; '" + end + "' is a cost view",
                              subject);
                }
            }
        };
        check_edges(vm.influences, false);
        check_edges(vm.depends_on, true);

        for (const auto& e : depends_on_contradictions(vm))
            error("R-006b",
                  "'" + e.source + "' depends on '" + e.target + "' but '" + e.target +
                      "' does not influence '" + e.source + "'",
                  path::depends_on(vm.name, e));

        std::map<std::string, std::set<std::string>> succ;
        for (const auto& e : vm.influences)
        {
            const NfrViewNode* a = vm.find(e.source);
            const NfrViewNode* b = vm.find(e.target);
            if (a && b && a->kind == FocusKind::Quality && b->kind == FocusKind::Quality)
                succ[e.source].insert(e.target);
        }
        for (const auto& cycle : cycles_of(succ))
            warning("R-016", "influences cycle through " + join(cycle),
                    path::view(vm.name, cycle.front()));
    }

    void view(const NfrsViewModelNode& vm, const NfrViewNode& v)
    {
        auto subject = path::view(vm.name, v.name);

        if (!v.category)
        {
            error("R-004", "view '" + v.name + "' deals with no evaluable entity category", subject);
        }
        else if (auto it = m_doc.categories.find(*v.category); it != m_doc.categories.end())
        {
            if (it->second.parent)
                warning("R-015",
                        "view category '" + *v.category + "' is a sub-category of '" +
                            *it->second.parent + "'; views should use super-categories",
                        subject);
        }
        else if (auto k = global_kind(m_doc, *v.category))
        {
            error("R-004",
                  "view category '" + *v.category + "' is a " + to_string(*k) + ", not a category",
                  subject);
        }
        else
        {
            unresolved("category", *v.category, subject);
        }

        if (!v.focus)
        {
            error("R-014", "view '" + v.name + "' has no evaluation focus", subject);
            return;
        }
        auto model = m_doc.models.find(v.focus->model);
        if (model == m_doc.models.end())
        {
            if (m_mode == ValidationMode::Instance)
                error("R-007",
                      "focus model '" + v.focus->model + "' is not represented in the document",
                      subject);
            return;
        }
        const NfrNode* focus = model->second.find(v.focus->characteristic);
        if (!focus)
        {
            unresolved("focus characteristic", v.focus->model + "." + v.focus->characteristic,
                       subject);
            return;
        }
        if (!focus->is_focus())
        {
            error("R-007",
                  "view focus '" + focus->name + "' is not an evaluation focus of model '" +
                      v.focus->model + "'",
                  subject);
            return;
        }
        if (*focus->focus != v.kind)
            error("R-014",
                  std::string(keyword(v.kind)) + " view '" + v.name + "' refers to " +
                      keyword(*focus->focus) + " focus '" + focus->name + "'",
                  subject);
    }

    const Document& m_doc;
    ValidationMode m_mode;
    std::vector<Diagnostic> m_out;
};

bool is_quality_view(const NfrsViewModelNode& vm, const std::string& name)
{
    const NfrViewNode* v = vm.find(name);
    return v && v->kind == FocusKind::Quality;
}

} // namespace

std::vector<Diagnostic> validate(const Document& doc, ValidationMode mode)
{
    return Checker(doc, mode).run();
}

NfrsViewModelNode derive_depends_on(const NfrsViewModelNode& vm)
{
    NfrsViewModelNode out = vm;
    for (const auto& e : vm.influences)
        out.depends_on.insert({e.target, e.source});
    return out;
}

std::vector<ViewEdge> depends_on_contradictions(const NfrsViewModelNode& vm)
{
    std::vector<ViewEdge> out;
    for (const auto& e : vm.depends_on)
    {
        if (!is_quality_view(vm, e.source) || !is_quality_view(vm, e.target))
            continue;
        if (!vm.influences.contains({e.target, e.source}))
            out.push_back(e);
    }
    return out;
}

} // namespace nfrs::validation
