#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricap/capacities.hpp"
#include "toricap/geometry.hpp"

namespace toricap {

enum class Family { Gt, Gh, Ech };

std::string family_str(Family f);

struct FamilyBound {
  Family family = Family::Gt;
  Value mu;                 // max_k c_k(source)/c_k(target), k = 1..kmax
  long witness_k = 0;       // smallest attaining k
  bool still_increasing = false;  // max attained at k = kmax
  std::vector<Value> source_prefix, target_prefix;
};

struct Sharpness {
  Value formula_mu;
  bool attained = false;
};

struct ObstructionReport {
  ToricDomainSpec source, target;
  long kmax = 0;
  std::vector<FamilyBound> bounds;  // gt, gh, ech in that order
  Value volume;
  bool volume_exact = false;
  std::optional<Sharpness> sharpness;  // present when a sharp formula applies
};

/// Best capacity-ratio lower bound for source -> target over one family.
FamilyBound embedding_lower_bound(const ToricDomain& source,
                                  const ToricDomain& target, Family family,
                                  long kmax);

/// sqrt(area(source)/area(target)); exact when the ratio is a rational
/// square, binary64 otherwise.
Value volume_bound(const ToricDomain& source, const ToricDomain& target);

/// 2a/(a+b-1): sharp stabilized ratio for the ellipsoid pair (a,1) -> (b,1),
/// a >= b+1 integers of opposite parity.
Rat sharp_ellipsoid_mu(long a, long b);

/// 2a/(a+2b-1): sharp ratio for ellipsoid (a,1) -> polydisk (b,1),
/// a odd, a >= 2b-1, b rational >= 1.
Rat sharp_polydisk_mu(long a, const Rat& b);

/// Aggregates all three family bounds, the volume bound, and the sharpness
/// comparison when the inputs match a sharp-formula precondition.
/// kmax = 0 selects the default 4*ceil(xmax(source)+ymax(source)).
ObstructionReport report(const ToricDomain& source, const ToricDomain& target,
                         long kmax = 0);

}  // namespace toricap
