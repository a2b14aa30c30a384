#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toricap/geometry.hpp"

namespace toricap {

/// Outcome of a verification suite. Each failure line names the domain,
/// the index, the expected value, and the value obtained.
struct VerifyResult {
  std::string suite;
  long checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void check(bool cond, const std::string& what);
};

/// Published capacity tables for the two reference ellipsoids, k = 1..12,
/// all three families, exact.
VerifyResult verify_tables();

/// Seeded random parameter draws per family; closed forms against the
/// candidate optimizer for k <= kmax.
VerifyResult verify_closed_forms(long samples = 200, std::uint64_t seed = 0,
                                 long kmax = 20);

/// Three-route agreement (candidates / word enumeration / lattice polygons)
/// on the fixed ten-domain panel for k <= kmax, and the ECH cross-check
/// against the classical ellipsoid sequence.
VerifyResult verify_oracles(long kmax = 8, long ech_kmax = 20);

/// Seeded random polygon domains: monotonicity, scaling, inclusion,
/// capacity ordering, multiple covers, transpose, support-norm identities.
VerifyResult verify_invariants(long samples = 100, std::uint64_t seed = 0);

/// Seeded random weakly permissible words: reduce preserves the index,
/// never increases action, lands in a canonical family; canonical minimum
/// equals the exhaustive minimum at each index.
VerifyResult verify_reduction(long samples = 500, std::uint64_t seed = 0,
                              long max_weight = 8);

/// Sharp-ratio formulas against capacity-sequence ratios, a <= amax.
VerifyResult verify_sharpness(long amax = 15, long bmax_polydisk = 5);

/// Fixed ten-domain panel shared by the oracle and property suites.
std::vector<ToricDomain> panel_domains();

/// Deterministic random convex toric polygon (hull of seeded rational
/// points together with its axis intercepts, so symmetrization is convex).
ToricDomain random_polygon_domain(std::uint64_t seed);

}  // namespace toricap
