#pragma once

#include <string>
#include <variant>

#include "leximax/model.hpp"
#include "leximax/rounding.hpp"

namespace leximax {

using ParsedDocument = std::variant<Instance, FiniteInstance>;

/// Parses a JSON document with keys {candidates, groups, values, k} into an
/// Instance, or {solutions, groups, utilities} into a FiniteInstance.
/// Throws std::invalid_argument with a "parse:"/"range:"/"dimension:"
/// category on malformed input.
ParsedDocument parse_instance(const std::string& text);

/// Parses {"x": [...], "k": ...}.
MarginalVector parse_marginals(const std::string& text);

// Canonical serializers: alphabetical keys, two-space indent, numbers
// rounded to 12 significant digits.
std::string serialize(const Instance& inst);
std::string serialize(const FiniteInstance& inst);
std::string serialize(const MarginalVector& mv);

/// Rounds through a 12-significant-digit decimal representation so that
/// serialized output is byte-stable.
Real round12(Real v);

}  // namespace leximax
