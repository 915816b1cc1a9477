#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "nfrs/document.hpp"
#include "nfrs/ontology.hpp"

namespace nfrs::exporting {

enum class ExportFormat
{
    Json,
    Dot,
    Turtle
};

std::optional<ExportFormat> parse_export_format(std::string_view text) noexcept;

/// Canonical object form of a document: keys sorted, arrays ordered by name.
nlohmann::json to_json(const store::Document& doc);

/// Inverse of to_json. Throws nfrs::Error on malformed input.
store::Document document_from_json(const nlohmann::json& j);

nlohmann::json to_json(const kernel::OntologySchema& schema);
nlohmann::json to_json(const kernel::SchemaDiff& diff);

/// Compact canonical JSON followed by a single LF.
std::string canonical_json(const nlohmann::json& j);

/// Graphviz digraph; one node per instance, edges labelled with relationship names.
std::string export_dot(const store::Document& doc);

/// RDF Turtle with `urn:nfrstdo:<kind>:<percent-encoded-name>` subjects.
std::string export_turtle(const store::Document& doc);

std::string export_document(const store::Document& doc, ExportFormat format);

/// RFC 3986 percent-encoding of every byte outside the unreserved set.
std::string percent_encode(std::string_view raw);

} // namespace nfrs::exporting
