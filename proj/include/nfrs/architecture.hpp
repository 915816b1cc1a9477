#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nfrs/diagnostic.hpp"
#include "nfrs/ontology.hpp"

namespace nfrs::kernel {

struct ArchEdge
{
    std::string first;  ///< consumer for enrichment edges
    std::string second; ///< supplier for enrichment edges
    std::optional<SourceLocation> location;
};

/// A set of ontology components placed on tiers, with the edges between them.
struct ArchSpec
{
    std::vector<ComponentRef> components;
    std::vector<ArchEdge> enrichment_edges;
    std::vector<ArchEdge> peer_edges;
    std::map<std::string, SourceLocation, std::less<>> component_locations;

    const ComponentRef* find(std::string_view name) const;
};

class ArchParseError : public Error
{
public:
    ArchParseError(SourceLocation where, const std::string& what);

    SourceLocation location;
};

/**
 * Reads the line-oriented architecture format:
 *
 *     # comment
 *     component ThingFO level Foundational
 *     enriches NFRsTDO <- ThingFO
 *     peer NFRsTDO FRsTDO
 *
 * Component names are unique and every edge endpoint must be declared.
 */
ArchSpec parse_arch_spec(std::string_view text);

/// The component allocation of the reference architecture with NFRsTDO's enrichment sources.
ArchSpec reference_architecture();

/**
 * Layering rules:
 *   L-001  exactly one Foundational component, named ThingFO
 *   L-002  an enrichment supplier never sits on a lower tier than its consumer
 *   L-003  peer edges join components of the same, non-Foundational tier
 */
std::vector<Diagnostic> lint_architecture(const ArchSpec& spec);

} // namespace nfrs::kernel
