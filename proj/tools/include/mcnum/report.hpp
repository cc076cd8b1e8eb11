#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "mcnum/classifier.hpp"
#include "mcnum/coloring.hpp"
#include "mcnum/families.hpp"
#include "mcnum/solver.hpp"

namespace mcnum {

using Record = nlohmann::ordered_json;

/// {"n":..,"classes":[[[u,v],...],...]}, the coloring file layout.
Record coloring_record(const MCColoring& c);
Record witness_record(const FamilyWitness& w);
Record exact_record(std::string_view graph6, const Graph& g, const ExactResult& r);
Record classification_record(std::string_view graph6, const Graph& g, const MCClassification& c);
Record verification_record(const VerificationReport& r);

/// Parses a coloring file. Edges must be [u,v] with 0 <= u < v < n; whether
/// they belong to a graph is left to verify_coloring. Throws FormatError.
MCColoring parse_coloring(std::string_view text);

/// One line, no trailing newline.
std::string to_line(const Record& r);

}  // namespace mcnum
