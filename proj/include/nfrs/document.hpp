#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "nfrs/diagnostic.hpp"

namespace nfrs::store {

enum class NfrKind
{
    Attribute,
    Characteristic,
    StatementItem
};

enum class FocusKind
{
    Quality,
    Cost
};

/// The keyword used for the kind in the text format ("attribute", ...).
const char* keyword(NfrKind kind) noexcept;
const char* keyword(FocusKind kind) noexcept;
std::optional<NfrKind> parse_nfr_kind(std::string_view word) noexcept;
std::optional<FocusKind> parse_focus_kind(std::string_view word) noexcept;
/// Ontology term naming the kind ("Statement Item", ...).
const char* term_name(NfrKind kind) noexcept;

struct CategoryNode
{
    std::string name;
    std::optional<std::string> description;
    std::optional<std::string> parent;

    friend bool operator==(const CategoryNode&, const CategoryNode&) = default;
};

struct EntityNode
{
    std::string name;
    std::optional<std::string> description;
    /// belongs-to target; absence is reported by the validator (R-001).
    std::optional<std::string> category;

    friend bool operator==(const EntityNode&, const EntityNode&) = default;
};

struct FunctionalRequirementNode
{
    std::string name;
    std::string statement;
    std::string requester;

    friend bool operator==(const FunctionalRequirementNode&, const FunctionalRequirementNode&) = default;
};

/// An Attribute, Characteristic or Statement Item inside one NFRs model.
struct NfrNode
{
    NfrKind kind = NfrKind::Attribute;
    std::string name;
    std::optional<std::string> statement;
    std::optional<std::string> definition;  ///< Attribute and Characteristic only
    std::optional<std::string> declaration; ///< Statement Item only
    std::optional<FocusKind> focus;         ///< set iff this characteristic is an Evaluation Focus

    bool is_focus() const noexcept { return focus.has_value(); }

    friend bool operator==(const NfrNode&, const NfrNode&) = default;
};

/// Returns a message describing the first field-presence violation, if any.
std::optional<std::string> field_violation(const NfrNode& nfr);

enum class ModelEdgeKind
{
    SubCharacteristic, ///< source = parent characteristic, target = child
    Combines,          ///< Attribute or Statement Item target, resolved by name
    MapsTo,
    RefersToEntity,
    RefersToCategory,
    RelatesWith,
    Satisfies
};

const char* keyword(ModelEdgeKind kind) noexcept;
std::optional<ModelEdgeKind> parse_model_edge_kind(std::string_view word) noexcept;

struct ModelEdge
{
    ModelEdgeKind kind = ModelEdgeKind::Combines;
    std::string source;
    std::string target;

    friend bool operator==(const ModelEdge&, const ModelEdge&) = default;
    friend auto operator<=>(const ModelEdge&, const ModelEdge&) = default;
};

struct NfrsModelNode
{
    std::string name;
    std::optional<std::string> specification;
    std::map<std::string, NfrNode, std::less<>> nfrs;
    std::set<ModelEdge> edges;

    const NfrNode* find(std::string_view nfr) const;
    /// The single focus-marked characteristic, or nullptr when there is none or several.
    const NfrNode* focus() const;

    friend bool operator==(const NfrsModelNode&, const NfrsModelNode&) = default;
};

struct FocusRef
{
    std::string model;
    std::string characteristic;

    friend bool operator==(const FocusRef&, const FocusRef&) = default;
    friend auto operator<=>(const FocusRef&, const FocusRef&) = default;
};

struct NfrViewNode
{
    std::string name;
    std::optional<std::string> statement;
    FocusKind kind = FocusKind::Quality;
    std::optional<std::string> category; ///< deals-with-universals target (R-004 when absent)
    std::optional<FocusRef> focus;       ///< R-014 when absent

    friend bool operator==(const NfrViewNode&, const NfrViewNode&) = default;
};

/// A directed view-to-view edge; `influences` or `depends_on` depending on the set it is in.
struct ViewEdge
{
    std::string source;
    std::string target;

    friend bool operator==(const ViewEdge&, const ViewEdge&) = default;
    friend auto operator<=>(const ViewEdge&, const ViewEdge&) = default;
};

struct NfrsViewModelNode
{
    std::string name;
    std::optional<std::string> specification;
    std::map<std::string, NfrViewNode, std::less<>> views;
    std::set<ViewEdge> influences;
    std::set<ViewEdge> depends_on; ///< explicitly authored edges only

    const NfrViewNode* find(std::string_view view) const;

    friend bool operator==(const NfrsViewModelNode&, const NfrsViewModelNode&) = default;
};

enum class NodeKind
{
    Category,
    Entity,
    FunctionalRequirement,
    Model,
    ViewModel
};

const char* to_string(NodeKind kind) noexcept;

/**
 * One workspace of instances. Names are identities: categories, entities,
 * FRs, models and view models are unique document-wide, NFRs per model and
 * views per view model.
 *
 * Equality is structural and ignores `source_locations`.
 */
struct Document
{
    std::map<std::string, CategoryNode, std::less<>> categories;
    std::map<std::string, EntityNode, std::less<>> entities;
    std::map<std::string, FunctionalRequirementNode, std::less<>> functional_requirements;
    std::map<std::string, NfrsModelNode, std::less<>> models;
    std::map<std::string, NfrsViewModelNode, std::less<>> view_models;

    /// Keyed by subject path (see the path helpers below).
    std::map<std::string, SourceLocation, std::less<>> source_locations;

    std::optional<SourceLocation> location_of(std::string_view subject) const;

    friend bool operator==(const Document& a, const Document& b);
};

// Subject paths shared by the parser, validator and source location map.
namespace path {
std::string category(std::string_view name);
std::string entity(std::string_view name);
std::string fr(std::string_view name);
std::string model(std::string_view name);
std::string nfr(std::string_view model, std::string_view nfr);
std::string model_edge(std::string_view model, const ModelEdge& edge);
std::string view_model(std::string_view name);
std::string view(std::string_view view_model, std::string_view view);
std::string influences(std::string_view view_model, const ViewEdge& edge);
std::string depends_on(std::string_view view_model, const ViewEdge& edge);
} // namespace path

class DuplicateName : public Error
{
public:
    DuplicateName(std::string_view what, const std::string& name);
    std::string name;
};

class NotFound : public Error
{
public:
    NotFound(std::string_view what, const std::string& name);
};

/// Raised when an edge's endpoint resolves to a node of the wrong kind.
class EdgeKindMismatch : public Error
{
public:
    using Error::Error;
};

class InvalidNode : public Error
{
public:
    using Error::Error;
};

using AnyNode = std::variant<CategoryNode, EntityNode, FunctionalRequirementNode, NfrsModelNode,
                             NfrsViewModelNode>;

using NodeRef = std::variant<const CategoryNode*, const EntityNode*,
                             const FunctionalRequirementNode*, const NfrsModelNode*,
                             const NfrsViewModelNode*>;

// Persistent updates: each returns a new document and leaves the input untouched.

Document add_node(const Document& doc, AnyNode node);
Document add_nfr(const Document& doc, std::string_view model, NfrNode nfr);
Document add_view(const Document& doc, std::string_view view_model, NfrViewNode view);

/**
 * Adds an edge to a model. Endpoints that already resolve must have the kinds
 * the relationship demands (a combines edge must start at a Characteristic,
 * a satisfies edge must end at a Functional Requirement, ...); otherwise
 * EdgeKindMismatch is thrown. Unresolved names are accepted and left to the
 * validator.
 */
Document add_model_edge(const Document& doc, std::string_view model, ModelEdge edge);

/// Adds an `influences` edge (`depends_on == false`) or an explicit `depends_on` edge.
/// Endpoints that resolve to cost views are rejected with EdgeKindMismatch.
Document add_view_edge(const Document& doc, std::string_view view_model, ViewEdge edge,
                       bool depends_on = false);

/// Exact, kind-segregated lookup. Throws NotFound.
NodeRef resolve(const Document& doc, NodeKind kind, std::string_view name);

/// Non-throwing variant of resolve.
bool contains(const Document& doc, NodeKind kind, std::string_view name);

} // namespace nfrs::store
