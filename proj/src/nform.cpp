#include "qutrit/nform.hpp"

#include <deque>
#include <stdexcept>

#include "qutrit/errors.hpp"

namespace qutrit {

BigInt count_words(int r) {
  if (r < 0) throw std::invalid_argument("Bass-Serre length must be nonnegative");
  BigInt n = 1944;
  for (int i = 0; i < (r + 1) / 2; ++i) n *= 3;
  for (int i = 0; i < r / 2; ++i) n *= 35;
  return n;
}

NormalFormEngine::NormalFormEngine(const Synthesizer& synthesizer)
    : synth_(synthesizer), catalog_(synthesizer.catalog()) {
  const ScaledUnitary& h = catalog_.hadamard();
  const ScaledUnitary hs = h.times_diag(GateToken::s().diag().k);
  const ScaledUnitary hs2 = hs.times_diag(GateToken::s().diag().k);
  t3_mat_ = {ScaledUnitary(), h, hs, hs2};
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) t0_mat_.push_back(ScaledUnitary::diagonal_units({a, 0, b}));
  for (const auto& m : t3_mat_) {
    t3_.push_back(canonicalize(m));
    t3_inv_.push_back(inverse(t3_.back()));
  }
  for (const auto& m : t0_mat_) {
    t0_.push_back(canonicalize(m));
    t0_inv_.push_back(inverse(t0_.back()));
  }
}

std::pair<ProjClass, int> NormalFormEngine::split_C0(const ProjClass& x) const { return split(Side::C0, x); }

std::pair<ProjClass, int> NormalFormEngine::split_C3(const ProjClass& x) const { return split(Side::C3, x); }

std::pair<ProjClass, int> NormalFormEngine::split(Side side, const ProjClass& x) const {
  const auto& inv = side == Side::C0 ? t0_inv_ : t3_inv_;
  const FiniteSubgroup& cd = catalog_.cd();
  for (std::size_t i = 0; i < inv.size(); ++i) {
    ProjClass d = x * inv[i];
    if (cd.contains(d)) return {std::move(d), static_cast<int>(i)};
  }
  if (side == Side::C0) throw NotInC0();
  throw NotInC3();
}

NormalForm NormalFormEngine::normalize(const std::vector<Factor>& factors) const {
  // Right-to-left folding: split each factor as (CD part) * (transversal),
  // keep the transversal, and push the CD part into the factor on its left.
  // A factor that lands in CD merges its neighbours, which sit on the same side.
  struct Letter {
    Side side;
    int index;
  };
  std::deque<Letter> letters;
  ProjClass carry;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    ProjClass x = it->value * carry;
    if (!letters.empty() && letters.front().side == it->side) {
      const auto& t = it->side == Side::C0 ? t0_ : t3_;
      x = x * t[letters.front().index];
      letters.pop_front();
    }
    auto [d, index] = split(it->side, x);
    if (index != 0) letters.push_front({it->side, index});
    carry = std::move(d);
  }
  NormalForm nf;
  nf.c0 = carry;
  if (!letters.empty() && letters.front().side == Side::C0) {
    nf.c0 = carry * t0_[letters.front().index];
    letters.pop_front();
  }
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const Side expected = i % 2 == 0 ? Side::C3 : Side::C0;
    if (letters[i].side != expected) throw std::logic_error("normal form letters do not alternate");
    nf.letters.push_back(letters[i].index);
  }
  return nf;
}

NormalForm NormalFormEngine::normal_form(const ProjClass& g) const {
  const Factorization f = synth_.factor(g);
  std::vector<Factor> factors;
  factors.push_back({Side::C0, f.head});
  const ProjClass h = t3_[1];
  for (const auto& d : f.tail) {
    factors.push_back({Side::C3, h});
    factors.push_back({Side::C0, canonicalize(d.matrix())});
  }
  return normalize(factors);
}

const ScaledUnitary& NormalFormEngine::letter_matrix(std::size_t position, int index) const {
  return position % 2 == 0 ? t3_mat_.at(index) : t0_mat_.at(index);
}

ProjClass NormalFormEngine::evaluate(const NormalForm& nf) const {
  ScaledUnitary acc = nf.c0.rep();
  for (std::size_t i = 0; i < nf.letters.size(); ++i) acc = acc * letter_matrix(i, nf.letters[i]);
  return canonicalize(acc);
}

GateWord NormalFormEngine::to_word(const NormalForm& nf) const {
  GateWord word = synth_.decompose_C(nf.c0);
  for (std::size_t i = 0; i < nf.letters.size(); ++i) {
    const int index = nf.letters[i];
    if (i % 2 == 0) {
      word.push_back(GateToken::h());
      if (index > 1) {
        DiagElement s = GateToken::s().diag();
        if (index == 3) s = s * s;
        word.push_back(GateToken::d(s));
      }
    } else {
      word.push_back(GateToken::d(DiagElement{{index / 6, 0, index % 6}}));
    }
  }
  return word;
}

}  // namespace qutrit
