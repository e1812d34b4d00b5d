#pragma once

// The Clifford+D gate catalog: H, S, T and the diagonal group D of matrices
// diag(+-xi^a, +-xi^b, +-xi^c), together with the finite stabilizer subgroups
//
//   C0 (monomial, 1944) > C1 (486) > C2 (162) > CD (54),   C3 = <H, CD> (216)
//
// all taken projectively and stored as explicit sets of ProjClass.

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_set>
#include <vector>

#include "qutrit/umatrix.hpp"

namespace qutrit {

/// An element of D written as diag((-xi)^k0, (-xi)^k1, (-xi)^k2), k in Z/18.
struct DiagElement {
  std::array<int, 3> k{0, 0, 0};

  static DiagElement from_signed(int a, int b, int c, int s1, int s2, int s3);
  /// Index in 0..5831, row-major over (k0, k1, k2).
  int index() const { return (k[0] * 18 + k[1]) * 18 + k[2]; }
  static DiagElement from_index(int index);

  DiagElement inverse() const;
  DiagElement operator*(const DiagElement& rhs) const;
  /// Scalar matrices are trivial in PU(3).
  bool is_scalar() const { return k[0] == k[1] && k[1] == k[2]; }
  /// Conjugation by the transposition swapping basis vectors 1 and 2.
  DiagElement swapped() const { return {{k[0], k[2], k[1]}}; }
  ScaledUnitary matrix() const { return ScaledUnitary::diagonal_units(k); }

  friend bool operator==(const DiagElement&, const DiagElement&) = default;
};

class GateToken {
 public:
  enum class Kind { H, S, T, D };

  static GateToken h() { return GateToken(Kind::H, {}); }
  static GateToken s() { return GateToken(Kind::S, {{0, 12, 0}}); }
  static GateToken t() { return GateToken(Kind::T, {{10, 0, 8}}); }
  static GateToken d(const DiagElement& e) { return GateToken(Kind::D, e); }
  static GateToken d(int a, int b, int c, int s1, int s2, int s3) {
    return d(DiagElement::from_signed(a, b, c, s1, s2, s3));
  }

  Kind kind() const { return kind_; }
  bool is_h() const { return kind_ == Kind::H; }
  /// The diagonal element for S, T and D tokens.
  const DiagElement& diag() const { return diag_; }

  /// "H", "S", "T" or "D(a,b,c;s1,s2,s3)" with a,b,c in 0..8 and signs + or -.
  std::string to_string() const;
  /// Accepts the forms above; signs may be written +, -, +1 or -1.
  static GateToken parse(const std::string& text);

  friend bool operator==(const GateToken&, const GateToken&) = default;

 private:
  GateToken(Kind kind, DiagElement diag) : kind_(kind), diag_(diag) {}
  Kind kind_;
  DiagElement diag_;
};

using GateWord = std::vector<GateToken>;

std::string to_string(const GateWord& word);
GateWord parse_word(const std::string& text);

/// 1 / sqrt(-3) written as a unit over pi^3: sqrt(-3) = pi^3 * u, this is u^-1.
CycInt hadamard_unit_inverse();
/// Exact H = u^-1 [[1,1,1],[1,w,w^2],[1,w^2,w]] / pi^3 with w = xi^3.
ScaledUnitary standard_hadamard();
/// W = diag(1, xi^3, xi^6).
DiagElement w_gate();

enum class GroupLabel { C0, C1, C2, C3, CD };
std::string to_string(GroupLabel label);
GroupLabel parse_group_label(const std::string& text);

struct FiniteSubgroup {
  GroupLabel label;
  std::vector<ProjClass> elements;  // sorted
  std::unordered_set<ProjClass, ProjClassHash> members;

  std::size_t size() const { return elements.size(); }
  bool contains(const ProjClass& p) const { return members.count(p) > 0; }
  bool is_subset_of(const FiniteSubgroup& other) const;
};

FiniteSubgroup make_subgroup(GroupLabel label, std::vector<ProjClass> elements);

/// Projective closure of a generating set; throws ClosureDiverged past `limit`.
std::vector<ProjClass> generate_closure(const std::vector<ProjClass>& generators, std::size_t limit = 10000);

/// Gate constants plus lazily enumerated subgroups. The Hadamard gate is
/// injectable so the verification suite can be run against a corrupted one.
class Catalog {
 public:
  Catalog();
  explicit Catalog(ScaledUnitary hadamard);
  Catalog(const Catalog&) = delete;
  Catalog& operator=(const Catalog&) = delete;

  static const Catalog& standard();

  const ScaledUnitary& hadamard() const { return h_; }
  const ScaledUnitary& hadamard_inverse() const { return h_inv_; }

  const FiniteSubgroup& group(GroupLabel label) const;
  const FiniteSubgroup& c0() const { return group(GroupLabel::C0); }
  const FiniteSubgroup& c1() const { return group(GroupLabel::C1); }
  const FiniteSubgroup& c2() const { return group(GroupLabel::C2); }
  const FiniteSubgroup& c3() const { return group(GroupLabel::C3); }
  const FiniteSubgroup& cd() const { return group(GroupLabel::CD); }

  /// Level of H^-1 c H.
  int conjugated_level(const ScaledUnitary& c) const;

 private:
  struct Slot {
    std::once_flag once;
    std::unique_ptr<FiniteSubgroup> value;
  };

  ScaledUnitary h_;
  ScaledUnitary h_inv_;
  mutable std::array<Slot, 5> groups_;
};

ScaledUnitary gate_matrix(const GateToken& token, const Catalog& catalog = Catalog::standard());
/// Left-to-right product of the word's gate matrices.
ScaledUnitary evaluate(const GateWord& word, const Catalog& catalog = Catalog::standard());

FiniteSubgroup enumerate_C0();
/// j = 1 or 2: {c in C0 : level(H^-1 c H) <= 12 - 2j}.
FiniteSubgroup enumerate_Cj(const Catalog& catalog, int j);
/// {c in C0 : level(H^-1 c H) <= 6}.
FiniteSubgroup enumerate_CD(const Catalog& catalog);
/// Closure of {H} and CD.
FiniteSubgroup enumerate_C3(const Catalog& catalog);

/// All 5832 elements of D with level(H^-1 d H) = 0, as (non-projective) elements.
std::vector<DiagElement> hadamard_stabilizer_in_D(const Catalog& catalog);
/// Number of c in C0 with level(H^-1 c H) = 0.
std::size_t hadamard_stabilizer_in_C0(const Catalog& catalog);

struct PermutationWordCheck {
  std::string word;                  // e.g. "-H^2"
  std::array<int, 3> permutation{};  // matched permutation, valid when matched
  bool matched = false;
};

struct M3Report {
  std::vector<PermutationWordCheck> words;
  bool pairwise_distinct = false;
  bool covers_all_permutations = false;
  bool ok() const;
};

/// Checks that 1, -H^2, -HWH, -HW^2H, H^3WH, H^3W^2H are, projectively, the
/// six permutation matrices.
M3Report verify_M3_identity(const Catalog& catalog = Catalog::standard());

/// The six permutation-realizing words, as (permutation, word) pairs in the
/// order listed above. The words equal the permutation matrix up to a scalar.
std::vector<std::pair<std::array<int, 3>, GateWord>> permutation_words();

/// All six permutations of {0,1,2} in lexicographic order.
const std::array<std::array<int, 3>, 6>& all_permutations();

}  // namespace qutrit
