#include "nfrs/diagnostic.hpp"

#include <algorithm>
#include <tuple>

#include <nlohmann/json.hpp>

namespace nfrs {

const char* to_string(Severity s) noexcept
{
    return s == Severity::Error ? "error" : "warning";
}

bool diagnostic_less(const Diagnostic& a, const Diagnostic& b)
{
    return std::tie(a.code, a.subject, a.message) < std::tie(b.code, b.subject, b.message);
}

void sort_diagnostics(std::vector<Diagnostic>& diags)
{
    std::stable_sort(diags.begin(), diags.end(), diagnostic_less);
}

bool has_errors(const std::vector<Diagnostic>& diags)
{
    return std::any_of(diags.begin(), diags.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::string render_text(const Diagnostic& d, const std::string& file)
{
    std::string out = file;
    if (d.location)
        out += ":" + std::to_string(d.location->line) + ":" + std::to_string(d.location->column);
    out += ": ";
    out += to_string(d.severity);
    out += " " + d.code + ": " + d.message;
    if (!d.subject.empty())
        out += " [" + d.subject + "]";
    return out;
}

std::string render_json(const std::vector<Diagnostic>& diags, const std::string& file)
{
    auto arr = nlohmann::json::array();
    for (const auto& d : diags)
    {
        nlohmann::json rec;
        rec["file"] = file;
        rec["code"] = d.code;
        rec["severity"] = to_string(d.severity);
        rec["message"] = d.message;
        rec["subject"] = d.subject;
        if (d.location)
        {
            rec["line"] = d.location->line;
            rec["column"] = d.location->column;
        }
        arr.push_back(std::move(rec));
    }
    return arr.dump() + "\n";
}

} // namespace nfrs
