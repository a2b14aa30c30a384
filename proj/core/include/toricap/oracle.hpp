#pragma once

#include <vector>

#include "toricap/capacities.hpp"
#include "toricap/geometry.hpp"
#include "toricap/lattice.hpp"
#include "toricap/words.hpp"

namespace toricap {

/// Search limits for the brute-force enumerators. Zero fields mean "use the
/// default for the given k" (max_coordinate = k+1, max_parts = k+1,
/// bounding_box = k+2).
struct EnumerationBudget {
  long max_coordinate = 0;
  long max_parts = 0;
  long bounding_box = 0;
  double time_limit = 0.0;  // seconds, 0 = unlimited

  static EnumerationBudget defaults_for(long k);
};

/// Exhaustive index-2k minimization over orbit-label multisets subject to
/// the permissibility side condition (single-orbit axis words allowed).
CapacityValue enumerate_words_min(const ToricDomain& domain, long k,
                                  EnumerationBudget budget = {});

enum class CountKind { Boundary, Total };

/// Exhaustive minimization of the boundary Omega-length over convex lattice
/// polygons (segments and points included) with the prescribed boundary or
/// total lattice point count, up to translation.
CapacityValue enumerate_polygons_min(const ToricDomain& domain, long count,
                                     CountKind count_kind,
                                     EnumerationBudget budget = {});

/// Classical ECH capacity of the ellipsoid with axis lengths a, b: the
/// (k+1)-th smallest value of m*a + n*b over m, n >= 0 (N_0 = 0).
Rat ech_ellipsoid_reference(const Rat& a, const Rat& b, long k);

}  // namespace toricap
