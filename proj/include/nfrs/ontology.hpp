#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nfrs/diagnostic.hpp"

namespace nfrs::kernel {

/// Tiers of the five-level ontological architecture, most abstract first.
enum class OntoLevel
{
    Foundational,
    Core,
    TopDomain,
    LowDomain,
    Instance
};

inline constexpr std::size_t kOntoLevelCount = 5;

const char* to_string(OntoLevel level) noexcept;
std::optional<OntoLevel> parse_level(std::string_view text) noexcept;

struct ComponentRef
{
    std::string name;
    OntoLevel level = OntoLevel::TopDomain;
    std::string version;

    friend bool operator==(const ComponentRef&, const ComponentRef&) = default;
    friend auto operator<=>(const ComponentRef&, const ComponentRef&) = default;
};

/// A term of a higher (or, for reuse, peer) component whose semantics a term carries.
struct Stereotype
{
    ComponentRef component;
    std::string term;
    /// Set when the term is taken over wholesale from a same-level component.
    bool reused_from = false;

    friend bool operator==(const Stereotype&, const Stereotype&) = default;
    friend auto operator<=>(const Stereotype&, const Stereotype&) = default;
};

struct PropertyDef
{
    std::string name;
    std::string definition;

    friend bool operator==(const PropertyDef&, const PropertyDef&) = default;
};

struct TermDef
{
    std::string name;
    std::vector<std::string> synonyms;
    std::string definition;
    std::vector<std::string> notes;
    std::optional<std::string> parent_term;
    std::vector<Stereotype> stereotypes;
    std::vector<PropertyDef> properties;

    friend bool operator==(const TermDef&, const TermDef&) = default;
};

struct RelationshipDef
{
    std::string name;
    std::string source_term;
    std::string target_term;
    unsigned min = 0;
    std::optional<unsigned> max; ///< nullopt means unbounded
    bool reflexive_allowed = false;
    bool directed = true;

    friend bool operator==(const RelationshipDef&, const RelationshipDef&) = default;
};

/// Relationship identity used for diffing: (name, source, target).
struct RelationshipKey
{
    std::string name;
    std::string source_term;
    std::string target_term;

    friend bool operator==(const RelationshipKey&, const RelationshipKey&) = default;
    friend auto operator<=>(const RelationshipKey&, const RelationshipKey&) = default;
};

RelationshipKey key_of(const RelationshipDef& rel);
std::string describe(const RelationshipKey& key);

struct OntologySchema
{
    ComponentRef component;
    std::map<std::string, TermDef, std::less<>> terms;
    std::vector<RelationshipDef> relationships;

    const TermDef* find_term(std::string_view name) const;

    friend bool operator==(const OntologySchema&, const OntologySchema&) = default;
};

class UnknownVersion : public Error
{
public:
    explicit UnknownVersion(const std::string& version);
};

class UnknownTerm : public Error
{
public:
    explicit UnknownTerm(const std::string& term);
};

class InvalidSchema : public Error
{
public:
    using Error::Error;
};

/// The hardcoded NFRsTDO schema for version "1.1" or "1.2".
const OntologySchema& builtin_schema(std::string_view version);

/// Checks term/relationship references, cardinality bounds and stereotype tiers.
/// Throws InvalidSchema on the first violation.
void check_schema(const OntologySchema& schema);

struct SchemaCounts
{
    std::size_t terms = 0;
    std::size_t properties = 0;
    std::size_t relationships = 0;

    friend bool operator==(const SchemaCounts&, const SchemaCounts&) = default;
};

SchemaCounts schema_counts(const OntologySchema& schema);

/// Components of the architecture that NFRsTDO terms are enriched from.
/// Only names and levels are known; their content is not modelled.
const std::vector<ComponentRef>& known_components();
std::optional<ComponentRef> find_component(std::string_view name);

/**
 * Declared stereotypes of `term` followed by the stereotypes registered for
 * those higher-level terms, transitively. Ordered by ascending level distance
 * from the owning component; declaration order breaks ties. Duplicates are
 * dropped.
 */
std::vector<Stereotype> stereotype_chain(const OntologySchema& schema, std::string_view term);

struct StereotypeChange
{
    std::string term;
    bool added = false;
    Stereotype stereotype;

    friend bool operator==(const StereotypeChange&, const StereotypeChange&) = default;
};

struct RenamedRelationship
{
    std::string old_name;
    std::string new_name;
    std::string source_term;
    std::string target_term;

    friend bool operator==(const RenamedRelationship&, const RenamedRelationship&) = default;
};

struct SchemaDiff
{
    std::vector<std::string> added_terms;
    std::vector<std::string> removed_terms;
    std::vector<RelationshipKey> added_relationships;
    std::vector<RelationshipKey> removed_relationships;
    std::vector<RenamedRelationship> renamed_relationships;
    std::vector<StereotypeChange> stereotype_changes;

    bool empty() const noexcept;

    friend bool operator==(const SchemaDiff&, const SchemaDiff&) = default;
};

/**
 * Name-matched delta from `older` to `newer`. A relationship present only in
 * `newer` whose (source, target) pair matches a relationship present only in
 * `older` is reported as a rename rather than an add/remove pair.
 */
SchemaDiff diff_schemas(const OntologySchema& older, const OntologySchema& newer);

/// `<component>:<term>`, the form printed by `schema stereotypes`.
std::string to_string(const Stereotype& s);

} // namespace nfrs::kernel
