#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricap/geometry.hpp"
#include "toricap/lattice.hpp"
#include "toricap/words.hpp"

namespace toricap {

enum class Method { Candidates, Enumeration, Lattice, ClosedForm };

/// A capacity number together with its minimizer witnesses. Depending on
/// the computation route the witnesses are words or lattice polygons.
struct CapacityValue {
  Value value;
  std::vector<Word> word_witnesses;            // sorted, deduplicated
  std::vector<LatticePolygon> poly_witnesses;  // sorted, deduplicated
  bool exact = true;
  Method method = Method::Candidates;
  bool experimental = false;       // capped variant with 2 <= ell < inf
  bool lower_bound_only = false;   // set when an enumeration ran out of budget

  std::vector<std::string> witness_strings() const;
};

/// gt(domain, k): minimal idealized action over permissible words of index
/// 2k. Candidates scans the four canonical families (both orientations);
/// Enumeration and Lattice are the exhaustive validation routes.
CapacityValue gt(const ToricDomain& domain, long k,
                 Method method = Method::Candidates);
std::vector<CapacityValue> gt_sequence(const ToricDomain& domain, long kmax,
                                       Method method = Method::Candidates);

/// Gutt-Hutchings: min over i+j=k of the support of (i,j).
CapacityValue gh(const ToricDomain& domain, long k);

/// ECH: minimal Omega-length over convex lattice polygons with k+1 total
/// lattice points; c_0 = 0.
CapacityValue ech(const ToricDomain& domain, long k);

/// Capped variant: the index-2k minimization restricted to words of length
/// at most ell. ell = 1 equals gh; ell >= 2 is flagged experimental.
CapacityValue gt_capped(const ToricDomain& domain, long k, long ell);

// Closed forms. Each validates its stated parameter range and asserts
// branch agreement at the case boundaries.
CapacityValue closed_form_ellipsoid(const Rat& a, long k);      // a >= 1
CapacityValue closed_form_polydisk(const Rat& a, long k);       // a >= 1
CapacityValue closed_form_quad(const Rat& a, const Rat& b, const Rat& c,
                               long k);  // c >= 1, max(a+b,c) <= 2
CapacityValue closed_form_lp(const Rat& p, bool p_infinite, long k);

/// Dispatches to the matching closed form when the domain is one of the
/// four named families in range; nullopt otherwise.
std::optional<CapacityValue> closed_form(const ToricDomain& domain, long k);

}  // namespace toricap
