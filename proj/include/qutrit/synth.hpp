#pragma once

// Exact synthesis over the Clifford+D gate set.
//
// The level of g is the distance from g.v0 to v0 in the Bruhat-Tits tree.
// One of 108 coset representatives c of D / Stab_D(H v0) always satisfies
// level(g c H) <= level(g) - 2, so repeated descent reaches a monomial
// matrix, which is then written with at most six gates.

#include <array>
#include <vector>

#include "qutrit/gates.hpp"

namespace qutrit {

/// One representative per coset of D / Stab_D(H v0), sorted by the canonical
/// form of the representative.
struct CosetReps108 {
  std::vector<DiagElement> reps;
};

/// Partitions D by d ~ d' iff level(H^-1 d^-1 d' H) = 0. Throws
/// WrongClassCount unless there are 108 classes of 54 elements each.
CosetReps108 build_coset_reps(const Catalog& catalog = Catalog::standard());

/// g = head * H tail[0] H tail[1] ... H tail[r-1], projectively, with head
/// monomial (level 0).
struct Factorization {
  ProjClass head;
  std::vector<DiagElement> tail;
  /// Level decrease of each descent step, in order.
  std::vector<int> descents;
};

class Synthesizer {
 public:
  explicit Synthesizer(const Catalog& catalog = Catalog::standard());

  const Catalog& catalog() const { return catalog_; }
  const CosetReps108& coset_reps() const { return reps_; }

  /// Level descent. Throws InvalidInput for non-unitary input and
  /// NoDescentStep if the input is not in the group.
  Factorization factor(const ProjClass& g) const;

  /// A word w with evaluate(w) projectively equal to g; length <= level(g) + 8.
  GateWord synthesize(const ProjClass& g) const;
  GateWord synthesize(const ProjClass& g, Factorization& factorization) const;

  /// Writes a monomial c as (permutation word) * (diagonal token); at most 6
  /// tokens. Throws NotInC if c is not monomial with entries in <-xi>.
  GateWord decompose_C(const ProjClass& c) const;

 private:
  const Catalog& catalog_;
  CosetReps108 reps_;
  // H numerator mod 3 in the basis of powers of (xi - 1).
  std::array<std::array<std::array<std::uint8_t, 6>, 3>, 3> h_mod3_{};
};

}  // namespace qutrit
