#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qturbo/seed.hpp"
#include "qturbo/state_graph.hpp"

namespace qturbo {

/// F(w): admissible paths of physical weight w and logical weight > 0 between
/// vertices on zero-physical-weight cycles; F1(w): the same with logical weight 1.
struct DistanceSpectrum {
  std::size_t w_max = 0;
  std::vector<std::uint64_t> F;
  std::vector<std::uint64_t> F1;

  /// Free distance: smallest w with F(w) > 0, if any within w_max.
  std::optional<std::size_t> d_free() const;
  /// Smallest w with F1(w) > 0, if any within w_max.
  std::optional<std::size_t> d1() const;

  /// "w,F,F1" lines with a header row.
  std::string to_csv() const;
};

/// Counts paths that leave a zero-weight-cycle vertex by an edge not on a
/// zero-weight cycle and stop at their first arrival on a zero-weight-cycle vertex.
/// Logical weight is tracked in classes {0, 1, >=2}. Refuses catastrophic seeds
/// (ValidationError naming the offending cycle) and reports counter overflow as
/// BudgetError.
DistanceSpectrum compute_spectrum(const StateDiagram& d, std::size_t w_max);
DistanceSpectrum compute_spectrum(const SeedTransformation& seed, std::size_t w_max,
                                  EnumerationBudget budget = {});

/// Upper bound d_free(outer) * d1(inner) on the turbo-code minimum distance.
/// Throws ValidationError when either distance is not reached within w_max.
std::size_t turbo_dmin_bound(const DistanceSpectrum& outer, const DistanceSpectrum& inner);

}  // namespace qturbo
