#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nfrs/diagnostic.hpp"
#include "nfrs/document.hpp"

namespace nfrs::query {

class UnknownViewModel : public Error
{
public:
    explicit UnknownViewModel(const std::string& name);
};

class UnknownView : public Error
{
public:
    explicit UnknownView(const std::string& name);
};

class NotAQualityView : public Error
{
public:
    explicit NotAQualityView(const std::string& name);
};

class UnknownModel : public Error
{
public:
    explicit UnknownModel(const std::string& name);
};

class UnknownCharacteristic : public Error
{
public:
    explicit UnknownCharacteristic(const std::string& name);
};

class UnknownFunctionalRequirement : public Error
{
public:
    explicit UnknownFunctionalRequirement(const std::string& name);
};

/// Views reached from `origin`, breadth-first, siblings in lexicographic order.
/// The origin itself only appears when a cycle leads back to it.
struct ClosureResult
{
    std::string origin;
    std::vector<std::string> reached;

    friend bool operator==(const ClosureResult&, const ClosureResult&) = default;
};

/**
 * Transitive influence among quality views. The influence graph is the
 * authored `influences` edges plus the reverse of any explicit `depends_on`
 * edges, so influence and dependency closures are exact mirrors.
 */
ClosureResult influence_closure(const store::Document& doc, std::string_view view_model,
                                std::string_view origin);

/// Closure over the derived depends_on relation (the reversed influence graph).
ClosureResult depends_closure(const store::Document& doc, std::string_view view_model,
                              std::string_view origin);

/// Direct successors only (the CLI without `--transitive`).
std::vector<std::string> direct_influences(const store::Document& doc, std::string_view view_model,
                                           std::string_view origin);
std::vector<std::string> direct_dependencies(const store::Document& doc,
                                             std::string_view view_model, std::string_view origin);

/// Attributes combined by `characteristic` or any transitive sub-characteristic; sorted, unique.
std::vector<std::string> leaf_attributes(const store::Document& doc, std::string_view model,
                                         std::string_view characteristic);

struct Ratio
{
    std::uint64_t numerator = 1;
    std::uint64_t denominator = 1;

    double value() const noexcept
    {
        return static_cast<double>(numerator) / static_cast<double>(denominator);
    }

    friend bool operator==(const Ratio&, const Ratio&) = default;
};

struct CoverageReport
{
    std::vector<std::pair<std::string, std::vector<std::string>>> mapped;
    std::vector<std::string> unmapped;
    Ratio ratio; ///< mapped / all statement items; 1/1 when there are none

    friend bool operator==(const CoverageReport&, const CoverageReport&) = default;
};

CoverageReport mapping_coverage(const store::Document& doc, std::string_view model);

/// (model, NFR) pairs with a satisfies edge to `fr`, sorted.
std::vector<std::pair<std::string, std::string>> trace_satisfies(const store::Document& doc,
                                                                 std::string_view fr);

} // namespace nfrs::query
