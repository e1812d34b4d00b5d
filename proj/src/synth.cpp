#include "qutrit/synth.hpp"

#include <algorithm>
#include <stdexcept>

#include "qutrit/errors.hpp"

namespace qutrit {

namespace {

// Z[xi]/(3) = F_3[y]/(y^6) with y = xi - 1, and y generates the same ideal
// as pi. An element's pi-adic valuation (capped at 6) is the index of its
// lowest nonzero y-coefficient.
using Mod3 = std::array<std::uint8_t, 6>;

Mod3 to_mod3(const CycInt& a) {
  // xi^i = (1 + y)^i; binomial coefficients mod 3 for i <= 5.
  static constexpr std::uint8_t kBinomial[6][6] = {
      {1, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0}, {1, 2, 1, 0, 0, 0},
      {1, 0, 0, 1, 0, 0}, {1, 1, 0, 1, 1, 0}, {1, 2, 1, 1, 2, 1},
  };
  Mod3 out{};
  for (int i = 0; i < 6; ++i) {
    if (a[i].is_zero()) continue;
    int r = static_cast<int>(a[i] % 3);
    if (r < 0) r += 3;
    if (r == 0) continue;
    for (int j = 0; j <= i; ++j) out[j] = static_cast<std::uint8_t>((out[j] + r * kBinomial[i][j]) % 3);
  }
  return out;
}

Mod3 mul(const Mod3& a, const Mod3& b) {
  Mod3 out{};
  for (int i = 0; i < 6; ++i) {
    if (!a[i]) continue;
    for (int j = 0; i + j < 6; ++j) out[i + j] = static_cast<std::uint8_t>((out[i + j] + a[i] * b[j]) % 3);
  }
  return out;
}

void add_into(Mod3& acc, const Mod3& x) {
  for (int i = 0; i < 6; ++i) acc[i] = static_cast<std::uint8_t>((acc[i] + x[i]) % 3);
}

int valuation(const Mod3& a) {
  for (int i = 0; i < 6; ++i)
    if (a[i]) return i;
  return 6;
}

const std::array<Mod3, 18>& unit_table() {
  static const auto table = [] {
    std::array<Mod3, 18> t{};
    for (int k = 0; k < 18; ++k) t[k] = to_mod3(CycInt::minus_xi_pow(k));
    return t;
  }();
  return table;
}

std::array<int, 3> monomial_permutation(const ScaledUnitary& c, std::array<int, 3>& exps) {
  if (!c.is_monomial_unit()) throw NotInC();
  std::array<int, 3> perm{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (c(i, j).is_zero()) continue;
      perm[i] = j;
      for (int k = 0; k < 18; ++k)
        if (c(i, j) == CycInt::minus_xi_pow(k)) exps[i] = k;
    }
  }
  return perm;
}

}  // namespace

CosetReps108 build_coset_reps(const Catalog& catalog) {
  const std::vector<DiagElement> stab = hadamard_stabilizer_in_D(catalog);
  constexpr int kSize = 18 * 18 * 18;
  std::vector<bool> assigned(kSize, false);
  std::vector<DiagElement> reps;
  for (int i = 0; i < kSize; ++i) {
    if (assigned[i]) continue;
    const DiagElement d = DiagElement::from_index(i);
    std::size_t class_size = 0;
    for (const auto& s : stab) {
      const int j = (d * s).index();
      if (assigned[j]) throw WrongClassCount(0);
      assigned[j] = true;
      ++class_size;
    }
    if (class_size != 54) throw WrongClassCount(class_size);
    reps.push_back(d);
  }
  if (reps.size() != 108) throw WrongClassCount(reps.size());
  std::vector<std::pair<ProjClass, DiagElement>> keyed;
  for (const auto& r : reps) keyed.emplace_back(canonicalize(r.matrix()), r);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  CosetReps108 out;
  for (const auto& [cls, r] : keyed) out.reps.push_back(r);
  return out;
}

Synthesizer::Synthesizer(const Catalog& catalog) : catalog_(catalog), reps_(build_coset_reps(catalog)) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h_mod3_[i][j] = to_mod3(catalog_.hadamard()(i, j));
}

Factorization Synthesizer::factor(const ProjClass& g) const {
  if (!g.rep().is_unitary()) throw InvalidInput("matrix is not unitary over Z[xi, 1/3]");
  const auto& units = unit_table();
  const int h_exp = catalog_.hadamard().pi_exp();

  Factorization out;
  std::vector<DiagElement> chosen;
  ScaledUnitary cur = g.rep();
  while (cur.level() > 0) {
    // partial[i][k][u] = cur[i][k] * (-xi)^u mod 3
    std::array<std::array<std::array<Mod3, 18>, 3>, 3> partial{};
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) {
        const Mod3 x = to_mod3(cur(i, k));
        for (int u = 0; u < 18; ++u) partial[i][k][u] = mul(x, units[u]);
      }
    bool found = false;
    for (const auto& c : reps_.reps) {
      // level(cur c H) <= level(cur) - 2 iff every entry of num(cur) c num(H)
      // has valuation >= e_H + 1, which is decided modulo 3 when e_H < 6.
      bool descends = true;
      for (int i = 0; i < 3 && descends; ++i) {
        for (int j = 0; j < 3 && descends; ++j) {
          Mod3 s{};
          for (int k = 0; k < 3; ++k) add_into(s, mul(partial[i][k][c.k[k]], h_mod3_[k][j]));
          descends = valuation(s) >= h_exp + 1;
        }
      }
      if (!descends) continue;
      ScaledUnitary next = cur.times_diag(c.k) * catalog_.hadamard();
      if (next.level() > cur.level() - 2) continue;
      out.descents.push_back(cur.level() - next.level());
      chosen.push_back(c);
      cur = std::move(next);
      found = true;
      break;
    }
    if (!found) throw NoDescentStep(cur.level());
  }

  // g = cur * (c_1 H ... c_r H)^-1 and H^-1 = -H P with P the (1 2) swap,
  // which commutes with H and permutes diagonal entries. Moving every P to
  // the left leaves H d_r H d_{r-1} ... H d_1 with d_j = P^{j+1} c_j^-1 P^{j+1}.
  const std::size_t r = chosen.size();
  out.tail.reserve(r);
  for (std::size_t j = r; j >= 1; --j) {
    DiagElement d = chosen[j - 1].inverse();
    if ((j + 1) % 2 == 1) d = d.swapped();
    out.tail.push_back(d);
  }
  ScaledUnitary tail_value;
  for (const auto& d : out.tail) tail_value = (tail_value * catalog_.hadamard()).times_diag(d.k);
  out.head = canonicalize(g.rep() * inverse(tail_value));
  if (out.head.level() != 0) throw std::logic_error("synthesis residual is not integral");
  return out;
}

GateWord Synthesizer::synthesize(const ProjClass& g) const {
  Factorization f;
  return synthesize(g, f);
}

GateWord Synthesizer::synthesize(const ProjClass& g, Factorization& f) const {
  f = factor(g);
  GateWord word = decompose_C(f.head);
  for (const auto& d : f.tail) {
    word.push_back(GateToken::h());
    if (!d.is_scalar()) word.push_back(GateToken::d(d));
  }
  if (!(canonicalize(evaluate(word, catalog_)) == g)) throw std::logic_error("synthesized word does not evaluate to its input");
  return word;
}

GateWord Synthesizer::decompose_C(const ProjClass& c) const {
  std::array<int, 3> exps{};
  const std::array<int, 3> perm = monomial_permutation(c.rep(), exps);
  // c = P * diag with (P * diag)[i][perm[i]] = diag[perm[i]].
  DiagElement d;
  for (int i = 0; i < 3; ++i) d.k[perm[i]] = exps[i];
  GateWord word;
  for (const auto& [p, w] : permutation_words()) {
    if (p == perm) {
      word = w;
      break;
    }
  }
  if (!d.is_scalar()) word.push_back(GateToken::d(d));
  return word;
}

}  // namespace qutrit
