#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nfrs/diagnostic.hpp"
#include "nfrs/document.hpp"

namespace nfrs::text {

struct ParseError
{
    SourceLocation location;
    std::string expected;
    std::string found;

    std::string message() const;

    friend bool operator==(const ParseError&, const ParseError&) = default;
};

/// Either a document or at least one error; never both.
class ParseResult
{
public:
    explicit ParseResult(store::Document doc);
    explicit ParseResult(std::vector<ParseError> errors);

    bool ok() const noexcept { return std::holds_alternative<store::Document>(m_value); }
    explicit operator bool() const noexcept { return ok(); }

    const store::Document& document() const;
    store::Document& document();
    const std::vector<ParseError>& errors() const;

private:
    std::variant<store::Document, std::vector<ParseError>> m_value;
};

/**
 * Parses the `.nfrs` authoring language. Only syntax, required fields and
 * name uniqueness are checked; references between nodes are left to the
 * validator. Every node and edge gets an entry in `source_locations`.
 */
ParseResult parse(std::string_view input);

/**
 * Canonical text form: blocks ordered categories, entities, frs, models,
 * view models; names sorted inside each; edges sorted; two-space indent, LF.
 */
std::string serialize(const store::Document& doc);

/// Quotes and escapes a string the way the lexer reads it back.
std::string quote(std::string_view raw);

} // namespace nfrs::text
