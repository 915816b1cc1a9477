#pragma once

#include <string>
#include <vector>

#include "nfrs/diagnostic.hpp"
#include "nfrs/document.hpp"

namespace nfrs::validation {

/**
 * Model mode checks authored quality models, which legitimately exist before
 * any concrete entity does. Instance mode enforces the relationship
 * cardinalities literally (R-009 becomes an error, view foci must be present
 * in the document).
 */
enum class ValidationMode
{
    Model,
    Instance
};

struct RuleInfo
{
    const char* code;
    const char* summary;
};

/// Every code the validator and architecture linter can emit, in catalog order.
const std::vector<RuleInfo>& rule_catalog();

/// All findings, sorted by (code, subject). Empty iff the document conforms.
std::vector<Diagnostic> validate(const store::Document& doc, ValidationMode mode);

/// Explicit depends_on plus the inverse of every influences edge.
store::NfrsViewModelNode derive_depends_on(const store::NfrsViewModelNode& vm);

/// Explicit depends_on(b, a) edges between quality views that lack influences(a, b).
std::vector<store::ViewEdge> depends_on_contradictions(const store::NfrsViewModelNode& vm);

} // namespace nfrs::validation
