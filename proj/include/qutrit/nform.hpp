#pragma once

// Normal forms in the amalgam C0 *_{CD} C3.
//
// Right transversals: T3 = {1, H, HS, HS^2} for CD\C3 and
// T0 = {diag((-xi)^a, 1, (-xi)^b) : 0 <= a, b <= 5} for CD\C0 (index 6a + b).
// Every element has a unique expression c0 t1 t2 ... tr with c0 in C0, odd
// letters in T3 \ {1} and even letters in T0 \ {1}.

#include <cstdint>
#include <utility>
#include <vector>

#include "qutrit/synth.hpp"

namespace qutrit {

struct NormalForm {
  ProjClass c0;
  /// letters[i] indexes T3 (1..3) for even i and T0 (1..35) for odd i.
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
};

/// |C0| * 3^ceil(r/2) * 35^floor(r/2): the number of elements with
/// Bass-Serre length exactly r.
BigInt count_words(int r);

class NormalFormEngine {
 public:
  explicit NormalFormEngine(const Synthesizer& synthesizer);

  const Catalog& catalog() const { return catalog_; }
  const Synthesizer& synthesizer() const { return synth_; }
  const std::vector<ProjClass>& t0() const { return t0_; }
  const std::vector<ProjClass>& t3() const { return t3_; }

  /// x = d * T0[index] with d in CD. Throws NotInC0.
  std::pair<ProjClass, int> split_C0(const ProjClass& x) const;
  /// x = d * T3[index] with d in CD. Throws NotInC3.
  std::pair<ProjClass, int> split_C3(const ProjClass& x) const;

  NormalForm normal_form(const ProjClass& g) const;
  int bs_length(const ProjClass& g) const { return normal_form(g).length(); }

  /// Projective value of a normal form.
  ProjClass evaluate(const NormalForm& nf) const;

  /// Gate word of a normal form: decompose_C(c0) followed by each letter
  /// written with H and D tokens.
  GateWord to_word(const NormalForm& nf) const;

  /// The letter as a ScaledUnitary: T3[index] for even positions, T0[index]
  /// for odd positions.
  const ScaledUnitary& letter_matrix(std::size_t position, int index) const;

 private:
  enum class Side { C0, C3 };
  struct Factor {
    Side side;
    ProjClass value;
  };
  NormalForm normalize(const std::vector<Factor>& factors) const;
  std::pair<ProjClass, int> split(Side side, const ProjClass& x) const;

  const Synthesizer& synth_;
  const Catalog& catalog_;
  std::vector<ProjClass> t0_, t3_;
  std::vector<ProjClass> t0_inv_, t3_inv_;
  std::vector<ScaledUnitary> t0_mat_, t3_mat_;
};

}  // namespace qutrit
