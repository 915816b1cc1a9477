#include "nfrs/ontology.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

namespace nfrs::kernel {

const char* to_string(OntoLevel level) noexcept
{
    switch (level)
    {
    case OntoLevel::Foundational: return "Foundational";
    case OntoLevel::Core: return "Core";
    case OntoLevel::TopDomain: return "TopDomain";
    case OntoLevel::LowDomain: return "LowDomain";
    case OntoLevel::Instance: return "Instance";
    }
    return "?";
}

std::optional<OntoLevel> parse_level(std::string_view text) noexcept
{
    for (auto level : {OntoLevel::Foundational, OntoLevel::Core, OntoLevel::TopDomain,
                       OntoLevel::LowDomain, OntoLevel::Instance})
    {
        if (text == to_string(level))
            return level;
    }
    return std::nullopt;
}

RelationshipKey key_of(const RelationshipDef& rel)
{
    return {rel.name, rel.source_term, rel.target_term};
}

std::string describe(const RelationshipKey& key)
{
    return key.name + " (" + key.source_term + " -> " + key.target_term + ")";
}

std::string to_string(const Stereotype& s)
{
    return s.component.name + ":" + s.term;
}

const TermDef* OntologySchema::find_term(std::string_view name) const
{
    auto it = terms.find(name);
    return it == terms.end() ? nullptr : &it->second;
}

UnknownVersion::UnknownVersion(const std::string& version)
    : Error("unknown schema version '" + version + "' (known: 1.1, 1.2)")
{
}

UnknownTerm::UnknownTerm(const std::string& term)
    : Error("unknown term '" + term + "'")
{
}

bool SchemaDiff::empty() const noexcept
{
    return added_terms.empty() && removed_terms.empty() && added_relationships.empty() &&
           removed_relationships.empty() && renamed_relationships.empty() &&
           stereotype_changes.empty();
}

// ---------------------------------------------------------------------------
// Component registry
// ---------------------------------------------------------------------------

namespace {

const ComponentRef kThingFO{"ThingFO", OntoLevel::Foundational, "1.3"};
const ComponentRef kSituationCO{"SituationCO", OntoLevel::Core, "1.2"};
const ComponentRef kProcessCO{"ProcessCO", OntoLevel::Core, "1.3"};
const ComponentRef kPEventCO{"PEventCO", OntoLevel::Core, "1.0"};
const ComponentRef kFRsTDO{"FRsTDO", OntoLevel::TopDomain, "1.1"};
const ComponentRef kTestTDO{"TestTDO", OntoLevel::TopDomain, "1.3"};
const ComponentRef kMetricsLDO{"MetricsLDO", OntoLevel::LowDomain, "2.0"};
const ComponentRef kIndicatorsLDO{"IndicatorsLDO", OntoLevel::LowDomain, "2.0"};

struct RegisteredLink
{
    Stereotype from;
    Stereotype to;
};

// Stereotypes of higher-level terms themselves. Only the links needed to
// complete chains of NFRsTDO terms are registered.
const std::vector<RegisteredLink>& registered_links()
{
    static const std::vector<RegisteredLink> links = {
        {{kSituationCO, "Entity Category"}, {kThingFO, "Thing Category"}},
        {{kSituationCO, "Context Category"}, {kThingFO, "Thing Category"}},
        {{kSituationCO, "Target Entity"}, {kThingFO, "Thing"}},
        {{kSituationCO, "Context Entity"}, {kThingFO, "Thing"}},
    };
    return links;
}

std::size_t level_distance(OntoLevel a, OntoLevel b)
{
    auto ia = static_cast<int>(a);
    auto ib = static_cast<int>(b);
    return static_cast<std::size_t>(ia > ib ? ia - ib : ib - ia);
}

// ---------------------------------------------------------------------------
// Built-in schemas
// ---------------------------------------------------------------------------

constexpr const char* kAttribute = "Attribute";
constexpr const char* kCharacteristic = "Characteristic";
constexpr const char* kEntity = "Evaluable Entity";
constexpr const char* kCategory = "Evaluable Entity Category";
constexpr const char* kFR = "Functional Requirement";
constexpr const char* kNFR = "Non-Functional Requirement";
constexpr const char* kModel = "NFRs Model";
constexpr const char* kItem = "Statement Item";
constexpr const char* kCostFocus = "Cost Focus";
constexpr const char* kCostView = "Cost View";
constexpr const char* kFocus = "Evaluation Focus";
constexpr const char* kView = "NFR View";
constexpr const char* kViewModel = "NFRs View Model";
constexpr const char* kQualityFocus = "Quality Focus";
constexpr const char* kQualityView = "Quality View";

void add_term(OntologySchema& schema, TermDef term)
{
    auto name = term.name;
    schema.terms.emplace(std::move(name), std::move(term));
}

OntologySchema make_v12()
{
    OntologySchema s;
    s.component = {"NFRsTDO", OntoLevel::TopDomain, "1.2"};

    add_term(s, {kAttribute,
                 {"Property", "Elementary Aspect"},
                 "An NFR standing for a measurable and evaluable aspect of an entity or "
                 "entity category.",
                 {"Elementary NFR; quantified by metrics and interpreted by elementary "
                  "indicators."},
                 kNFR,
                 {},
                 {{"definition", "Textual meaning of the elementary aspect."}}});
    add_term(s, {kCharacteristic,
                 {"Dimension", "Factor", "Non-elementary Aspect", "Calculable Concept",
                  "Evaluable Concept"},
                 "An NFR standing for an evaluable, non-elementary aspect of an entity or "
                 "entity category.",
                 {"Combines Attributes or Statement Items.", "May have sub-characteristics."},
                 kNFR,
                 {},
                 {{"definition", "Textual meaning of the non-elementary aspect."}}});
    add_term(s, {kEntity,
                 {"Evaluable Particular Entity", "Evaluable Particular", "Object"},
                 "A target or context entity that is a concrete thing to be evaluated.",
                 {},
                 std::nullopt,
                 {{kSituationCO, "Target Entity"}, {kSituationCO, "Context Entity"}},
                 {{"name", "Identifying label."}, {"description", "Describes the entity."}}});
    add_term(s, {kCategory,
                 {"Evaluable Universal"},
                 "An entity or context category that evaluable entities belong to.",
                 {},
                 std::nullopt,
                 {{kSituationCO, "Entity Category"}, {kSituationCO, "Context Category"}},
                 {{"name", "Identifying label."},
                  {"description", "Aim of the category as a universal."}}});
    add_term(s, {kFR,
                 {},
                 "An assertion on particulars stating what a developable entity does or "
                 "shall do.",
                 {"Reused unchanged from FRsTDO."},
                 std::nullopt,
                 {{kFRsTDO, kFR, true}, {kThingFO, "Assertion on Particulars"}},
                 {{"name", "Identifying label."},
                  {"statement", "What the developable entity does or shall do."},
                  {"requester", "Agent that requires the requirement."}}});
    add_term(s, {kNFR,
                 {"ility"},
                 "A quality- or constraint-related assertion about how (well) an evaluable "
                 "entity performs.",
                 {},
                 std::nullopt,
                 {{kThingFO, "Quality-related Assertion"},
                  {kThingFO, "Constraint-related Assertion"}},
                 {{"name", "Identifying label."},
                  {"statement", "The characteristic, attribute or item to be evaluated."}}});
    add_term(s, {kModel,
                 {"Quality Model"},
                 "An artifact specifying and representing NFRs.",
                 {},
                 std::nullopt,
                 {{kProcessCO, "Artifact"}},
                 {{"name", "Identifying label."},
                  {"specification", "Representation of the NFRs in some language."}}});
    add_term(s, {kItem,
                 {"Item", "Guideline", "Heuristic"},
                 "An NFR declared as a textual expression of an evaluable aspect.",
                 {"May be mapped to Attributes."},
                 kNFR,
                 {},
                 {{"declaration", "Textual expression of the item."}}});
    add_term(s, {kCostFocus, {}, "An evaluation focus for cost.", {}, kFocus, {}, {}});
    add_term(s, {kCostView, {"Cost Perspective"}, "An NFR view for cost.", {}, kView, {}, {}});
    add_term(s, {kFocus,
                 {},
                 "A characteristic that is the root of an NFRs model.",
                 {},
                 kCharacteristic,
                 {},
                 {}});
    add_term(s, {kView,
                 {"NFR Perspective"},
                 "An assertion on universals relating one evaluable entity category with "
                 "one evaluation focus.",
                 {"The category must be a super-category.", "The focus must be a root."},
                 std::nullopt,
                 {{kThingFO, "Assertion on Universals"}},
                 {{"name", "Identifying label."},
                  {"statement", "The category/focus pairing the view stands for."}}});
    add_term(s, {kViewModel,
                 {},
                 "An artifact specifying and representing NFR views.",
                 {},
                 std::nullopt,
                 {{kProcessCO, "Artifact"}},
                 {{"name", "Identifying label."},
                  {"specification", "Representation of the views in some language."}}});
    add_term(s, {kQualityFocus, {}, "An evaluation focus for quality.", {}, kFocus, {}, {}});
    add_term(s, {kQualityView,
                 {"Quality Perspective"},
                 "An NFR view for quality.",
                 {},
                 kView,
                 {},
                 {}});

    constexpr std::optional<unsigned> unbounded = std::nullopt;
    s.relationships = {
        {"belongs to", kEntity, kCategory, 1, 1, false, true},
        {"combines", kCharacteristic, kAttribute, 0, unbounded, false, true},
        {"combines", kCharacteristic, kItem, 0, unbounded, false, true},
        {"deals with universals", kView, kCategory, 1, 1, false, true},
        {"depends on", kQualityView, kQualityView, 0, unbounded, false, true},
        {"influences", kQualityView, kQualityView, 0, unbounded, false, true},
        {"is represented by", kFocus, kModel, 1, unbounded, false, true},
        {"is mapped to", kItem, kAttribute, 0, unbounded, false, true},
        {"refers to particulars", kNFR, kEntity, 1, unbounded, false, true},
        {"refers to universals", kNFR, kCategory, 0, unbounded, false, true},
        {"relates with", kNFR, kNFR, 0, unbounded, true, false},
        {"satisfies", kNFR, kFR, 0, unbounded, false, true},
    };
    return s;
}

// The earlier version, obtained by undoing each recorded v1.1 -> v1.2 change.
OntologySchema make_v11()
{
    OntologySchema s = make_v12();
    s.component.version = "1.1";

    auto& nfr = s.terms.at(kNFR);
    nfr.stereotypes = {{kThingFO, "Quality-related Assertion"},
                       {kThingFO, "Quantity-related Assertion"},
                       {kThingFO, "Constraint-related Assertion"}};

    s.terms.at(kCategory).stereotypes = {{kThingFO, "Thing Category"}};

    auto removed = [](const RelationshipDef& r) {
        return r.name == "relates with" || r.name == "is mapped to" || r.name == "satisfies";
    };
    std::erase_if(s.relationships, removed);

    s.terms.erase(kFR);

    for (auto& r : s.relationships)
    {
        if (r.name == "refers to particulars" || r.name == "refers to universals")
            r.name = "refers to";
    }
    return s;
}

} // namespace

const std::vector<ComponentRef>& known_components()
{
    static const std::vector<ComponentRef> components = {
        kThingFO, kSituationCO, kProcessCO, kPEventCO, kFRsTDO, kTestTDO, kMetricsLDO,
        kIndicatorsLDO,
    };
    return components;
}

std::optional<ComponentRef> find_component(std::string_view name)
{
    for (const auto& c : known_components())
    {
        if (c.name == name)
            return c;
    }
    if (name == "NFRsTDO")
        return builtin_schema("1.2").component;
    return std::nullopt;
}

const OntologySchema& builtin_schema(std::string_view version)
{
    static const OntologySchema v11 = make_v11();
    static const OntologySchema v12 = make_v12();
    if (version == "1.2")
        return v12;
    if (version == "1.1")
        return v11;
    throw UnknownVersion(std::string(version));
}

void check_schema(const OntologySchema& schema)
{
    for (const auto& [name, term] : schema.terms)
    {
        if (name != term.name)
            throw InvalidSchema("term keyed as '" + name + "' is named '" + term.name + "'");
        if (term.parent_term && !schema.find_term(*term.parent_term))
            throw InvalidSchema("term '" + name + "' has unknown parent '" + *term.parent_term +
                                "'");
        std::set<std::string_view> props;
        for (const auto& p : term.properties)
        {
            if (!props.insert(p.name).second)
                throw InvalidSchema("term '" + name + "' repeats property '" + p.name + "'");
        }
        for (const auto& st : term.stereotypes)
        {
            const auto owner = schema.component.level;
            const bool higher = st.component.level < owner;
            const bool peer_reuse = st.reused_from && st.component.level == owner;
            if (!higher && !peer_reuse)
                throw InvalidSchema("term '" + name + "' is stereotyped by " + to_string(st) +
                                    " which is not above " + to_string(owner));
        }
    }
    for (const auto& r : schema.relationships)
    {
        if (!schema.find_term(r.source_term) || !schema.find_term(r.target_term))
            throw InvalidSchema("relationship '" + describe(key_of(r)) +
                                "' references an unknown term");
        if (r.max && r.min > *r.max)
            throw InvalidSchema("relationship '" + describe(key_of(r)) + "' has min > max");
    }
}

SchemaCounts schema_counts(const OntologySchema& schema)
{
    SchemaCounts counts;
    counts.terms = schema.terms.size();
    for (const auto& [_, term] : schema.terms)
        counts.properties += term.properties.size();
    counts.relationships = schema.relationships.size();
    return counts;
}

std::vector<Stereotype> stereotype_chain(const OntologySchema& schema, std::string_view term)
{
    const TermDef* def = schema.find_term(term);
    if (!def)
        throw UnknownTerm(std::string(term));

    // Breadth-first over registered links, remembering discovery order.
    std::vector<Stereotype> found;
    std::set<std::pair<std::string, std::string>> seen;
    auto push = [&](const Stereotype& s) {
        if (seen.emplace(s.component.name, s.term).second)
            found.push_back(s);
    };
    for (const auto& s : def->stereotypes)
        push(s);
    for (std::size_t i = 0; i < found.size(); ++i)
    {
        for (const auto& link : registered_links())
        {
            if (link.from.component.name == found[i].component.name &&
                link.from.term == found[i].term)
                push(link.to);
        }
    }

    const auto owner = schema.component.level;
    std::stable_sort(found.begin(), found.end(), [owner](const Stereotype& a, const Stereotype& b) {
        return level_distance(owner, a.component.level) < level_distance(owner, b.component.level);
    });
    return found;
}

SchemaDiff diff_schemas(const OntologySchema& older, const OntologySchema& newer)
{
    SchemaDiff diff;

    for (const auto& [name, _] : newer.terms)
    {
        if (!older.find_term(name))
            diff.added_terms.push_back(name);
    }
    for (const auto& [name, _] : older.terms)
    {
        if (!newer.find_term(name))
            diff.removed_terms.push_back(name);
    }

    std::set<RelationshipKey> old_keys;
    std::set<RelationshipKey> new_keys;
    for (const auto& r : older.relationships)
        old_keys.insert(key_of(r));
    for (const auto& r : newer.relationships)
        new_keys.insert(key_of(r));

    // Unmatched relationships grouped by endpoint pair; names sorted per group.
    using Endpoints = std::pair<std::string, std::string>;
    std::map<Endpoints, std::vector<std::string>> only_old;
    std::map<Endpoints, std::vector<std::string>> only_new;
    for (const auto& k : old_keys)
    {
        if (!new_keys.contains(k))
            only_old[{k.source_term, k.target_term}].push_back(k.name);
    }
    for (const auto& k : new_keys)
    {
        if (!old_keys.contains(k))
            only_new[{k.source_term, k.target_term}].push_back(k.name);
    }

    for (auto& [ends, new_names] : only_new)
    {
        auto it = only_old.find(ends);
        std::size_t paired = 0;
        if (it != only_old.end())
        {
            paired = std::min(new_names.size(), it->second.size());
            for (std::size_t i = 0; i < paired; ++i)
                diff.renamed_relationships.push_back(
                    {it->second[i], new_names[i], ends.first, ends.second});
        }
        for (std::size_t i = paired; i < new_names.size(); ++i)
            diff.added_relationships.push_back({new_names[i], ends.first, ends.second});
    }
    for (auto& [ends, old_names] : only_old)
    {
        auto it = only_new.find(ends);
        std::size_t paired = it == only_new.end() ? 0 : std::min(old_names.size(), it->second.size());
        for (std::size_t i = paired; i < old_names.size(); ++i)
            diff.removed_relationships.push_back({old_names[i], ends.first, ends.second});
    }
    std::sort(diff.added_relationships.begin(), diff.added_relationships.end());
    std::sort(diff.removed_relationships.begin(), diff.removed_relationships.end());
    std::sort(diff.renamed_relationships.begin(), diff.renamed_relationships.end(),
              [](const RenamedRelationship& a, const RenamedRelationship& b) {
                  return std::tie(a.old_name, a.new_name, a.source_term, a.target_term) <
                         std::tie(b.old_name, b.new_name, b.source_term, b.target_term);
              });

    // Stereotype deltas only for terms present in both versions.
    for (const auto& [name, new_term] : newer.terms)
    {
        const TermDef* old_term = older.find_term(name);
        if (!old_term)
            continue;
        std::set<Stereotype> before(old_term->stereotypes.begin(), old_term->stereotypes.end());
        std::set<Stereotype> after(new_term.stereotypes.begin(), new_term.stereotypes.end());
        for (const auto& s : before)
        {
            if (!after.contains(s))
                diff.stereotype_changes.push_back({name, false, s});
        }
        for (const auto& s : after)
        {
            if (!before.contains(s))
                diff.stereotype_changes.push_back({name, true, s});
        }
    }
    return diff;
}

} // namespace nfrs::kernel
