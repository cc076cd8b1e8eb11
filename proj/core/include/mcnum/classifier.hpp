#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mcnum/coloring.hpp"
#include "mcnum/families.hpp"
#include "mcnum/graph.hpp"

namespace mcnum {

enum class Formula { M, Floor, PlusThree, PlusFour, PlusK, PlusKPlusOne, PlusSPlusOne };

/// "m", "m-n+2", "m-n+3", "m-n+4", "m-n+k", "m-n+k+1", "m-n+s+1".
std::string_view to_string(Formula f);

struct ExactVerdict {
  int value = 0;
  Formula formula = Formula::M;
  std::string rule;
  std::optional<FamilyWitness> witness;
};

struct BoundsVerdict {
  int lower = 0;
  int upper = 0;
  std::vector<std::string> rules;
};

struct MCClassification {
  int kappa = 0;
  bool planar = false;
  std::variant<ExactVerdict, BoundsVerdict> verdict;

  bool is_exact() const { return std::holds_alternative<ExactVerdict>(verdict); }
  const ExactVerdict& exact() const { return std::get<ExactVerdict>(verdict); }
  const BoundsVerdict& bounds() const { return std::get<BoundsVerdict>(verdict); }
  /// [value, value] for exact verdicts.
  int lower() const;
  int upper() const;
};

/// First sufficient condition for mc = m - n + 2 that holds, checked in the
/// order "complement-4-connected", "triangle-free", "degree-bound",
/// "diameter", "cut-vertex". The degree bound is
/// Delta < n - (2m - 3(n-1)) / (n-3), compared after multiplying through by
/// n - 3, and only for n >= 4. Throws PreconditionError unless g is connected
/// with n >= 3.
std::optional<std::string_view> quick_floor(const Graph& g);

/// Exact value or bounds from the structural characterizations, in this
/// order: n <= 2; complete; delta-perfectly-connected; quick_floor; A or
/// kappa-perfectly-connected; B1/B2/B3; elimination for kappa in {1,2,3};
/// planar kappa 4 and 5; otherwise bounds. Throws PreconditionError for
/// disconnected or empty input.
MCClassification classify(const Graph& g);

/// The coloring the family's structure prescribes. Throws InvalidWitnessError
/// when the witness does not describe g.
MCColoring construct_coloring(const Graph& g, const FamilyWitness& w);

}  // namespace mcnum
