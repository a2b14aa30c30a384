#pragma once

#include <string>
#include <vector>

#include "toricap/geometry.hpp"
#include "toricap/lattice.hpp"

namespace toricap {

enum class OrbitKind { Elliptic, Hyperbolic };

/// A labeled closed Reeb orbit e_{i,j} or h_{i,j}. (i,j) != (0,0); the
/// hyperbolic label exists only for i,j >= 1.
struct Orbit {
  OrbitKind kind = OrbitKind::Elliptic;
  long i = 0, j = 0;

  bool operator==(const Orbit& o) const {
    return kind == o.kind && i == o.i && j == o.j;
  }
  bool operator<(const Orbit& o) const {
    if (i != o.i) return i < o.i;
    if (j != o.j) return j < o.j;
    return kind < o.kind;
  }
};

Orbit elliptic(long i, long j);    // throws BadParameter on invalid labels
Orbit hyperbolic(long i, long j);  // requires i,j >= 1

int cz_index(const Orbit& orbit);  // 2i+2j+1 elliptic, 2i+2j hyperbolic

/// A nonempty finite multiset of orbits. Equality is multiset equality;
/// storage is kept sorted.
class Word {
 public:
  explicit Word(std::vector<Orbit> orbits);  // throws BadParameter if empty

  const std::vector<Orbit>& orbits() const { return orbits_; }
  std::size_t size() const { return orbits_.size(); }

  bool elliptic_only() const;
  long hyperbolic_count() const;

  Word concat(const Word& other) const;

  bool operator==(const Word& o) const { return orbits_ == o.orbits_; }
  bool operator<(const Word& o) const { return orbits_ < o.orbits_; }

  std::string str() const;                   // "e(0,1)*e(1,1)"
  static Word parse(const std::string& s);   // same syntax, '*'-joined

 private:
  std::vector<Orbit> orbits_;
};

/// Sum of CZ indices plus (word length) - 2.
long word_index(const Word& w);

/// Idealized action: the sum of the clamped supports of the orbit labels.
Value action(const Word& w, const ToricDomain& domain);

bool is_strongly_permissible(const Word& w);
bool is_weakly_permissible(const Word& w);

/// Region under the concave staircase of edge vectors (j,-i), bounded by
/// the axes. Degenerates to a segment for single-axis words.
LatticePolygon staircase_region(const Word& w);

/// ECH grading 2(L(R)-1) - h, with L(R) the total lattice point count of
/// the staircase region and h the number of hyperbolic orbits.
long ech_index(const Word& w);

/// The four minimal-word families (in the frame where xmax >= ymax):
///   1: (0,1)^i x (1,1)^j, j >= 1     2: (0,1)^i x (1,s), s >= 2
///   3: (0,1)^i x (1,0),  i >= 1      4: (0,s), s >= 1
enum class CanonicalForm { None, Form1, Form2, Form3, Form4 };
CanonicalForm canonical_form(const Word& w);

/// True if w matches one of the four families as written or with the two
/// coordinates swapped (the swapped variants arise for domains that are
/// internally transposed during reduction).
bool is_canonical_either_orientation(const Word& w);

/// All canonical-family words of index 2k, in both orientations,
/// deduplicated and sorted. Contains an action minimizer over all weakly
/// permissible index-2k words for every convex toric domain.
std::vector<Word> canonical_candidates(long k);

/// Rewrites w (weakly permissible, even index) into a canonical-family
/// elliptic word with the same index and no larger idealized action, using
/// the hyperbolic pairing, (0,1)-splitting, and case-analysis replacements.
/// The domain is transposed internally when xmax < ymax.
Word reduce(const Word& w, const ToricDomain& domain);

}  // namespace toricap
