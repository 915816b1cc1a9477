#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nfrs {

/// 1-based position in a source file.
struct SourceLocation
{
    unsigned line = 1;
    unsigned column = 1;

    friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
    friend auto operator<=>(const SourceLocation&, const SourceLocation&) = default;
};

enum class Severity
{
    Error,
    Warning
};

const char* to_string(Severity s) noexcept;

/**
 * One finding of the validator or the architecture linter.
 *
 * `code` is drawn from the rule catalog (R-### for documents, L-### for
 * architecture specs). `subject` is the slash-separated path of the node or
 * edge the finding is about, e.g. `model/Product Quality/nfr/Usability`.
 */
struct Diagnostic
{
    std::string code;
    Severity severity = Severity::Error;
    std::string message;
    std::optional<SourceLocation> location;
    std::string subject;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// Orders by (code, subject, message); the canonical emission order.
bool diagnostic_less(const Diagnostic& a, const Diagnostic& b);
void sort_diagnostics(std::vector<Diagnostic>& diags);

bool has_errors(const std::vector<Diagnostic>& diags);

/// `<file>:<line>:<col>: <severity> <code>: <message> [<subject>]`
std::string render_text(const Diagnostic& d, const std::string& file);

/// JSON array of diagnostic records, one object per finding, LF terminated.
std::string render_json(const std::vector<Diagnostic>& diags, const std::string& file);

/// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace nfrs
