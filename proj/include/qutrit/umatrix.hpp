#pragma once

// Exact 3x3 unitary matrices over Z[xi, 1/3], stored as num / pi^e.
//
// A ScaledUnitary is always kept reduced: e is lowered while every entry of
// num is divisible by pi, so level() = 2e is the pi-adic level of the matrix
// (the tree distance from the base vertex). ProjClass is the canonical
// representative modulo the center <-xi>.

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <string>

#include "qutrit/cyclo.hpp"

namespace qutrit {

using CycMatrix = std::array<std::array<CycInt, 3>, 3>;
using ComplexMatrix = std::array<std::array<std::complex<double>, 3>, 3>;

class ScaledUnitary {
 public:
  ScaledUnitary();  // identity
  /// Takes num / pi^pi_exp and reduces it. Unitarity is not checked here;
  /// see is_unitary().
  ScaledUnitary(CycMatrix num, int pi_exp);

  static ScaledUnitary identity() { return {}; }
  /// Diagonal matrix diag((-xi)^k0, (-xi)^k1, (-xi)^k2).
  static ScaledUnitary diagonal_units(const std::array<int, 3>& minus_xi_exps);
  /// Permutation matrix with entry (i, perm[i]) equal to 1.
  static ScaledUnitary permutation(const std::array<int, 3>& perm);

  const CycMatrix& num() const { return num_; }
  const CycInt& operator()(int i, int j) const { return num_[i][j]; }
  int pi_exp() const { return pi_exp_; }
  int level() const { return 2 * pi_exp_; }

  /// num^H num == Pi^e I, exactly.
  bool is_unitary() const;
  /// True iff the matrix is monomial with every nonzero entry in <-xi>.
  bool is_monomial_unit() const;
  bool is_diagonal() const;

  /// Scalar multiple by (-xi)^k (a center element).
  ScaledUnitary mul_minus_xi_pow(int k) const;
  /// this * diag((-xi)^k0, (-xi)^k1, (-xi)^k2); column scaling, no reduction needed.
  ScaledUnitary times_diag(const std::array<int, 3>& minus_xi_exps) const;

  friend bool operator==(const ScaledUnitary& a, const ScaledUnitary& b) {
    return a.pi_exp_ == b.pi_exp_ && a.num_ == b.num_;
  }
  /// Order by pi exponent, then the row-major flattened coefficients.
  friend int compare(const ScaledUnitary& a, const ScaledUnitary& b);

  std::string to_string() const;

 private:
  void reduce();

  CycMatrix num_;
  int pi_exp_ = 0;
};

ScaledUnitary matmul(const ScaledUnitary& a, const ScaledUnitary& b);
inline ScaledUnitary operator*(const ScaledUnitary& a, const ScaledUnitary& b) { return matmul(a, b); }
/// a^{-1} = a^* = (-xi)^e num^H / pi^e for unitary a.
ScaledUnitary inverse(const ScaledUnitary& a);
inline int level(const ScaledUnitary& a) { return a.level(); }

class ProjClass {
 public:
  ProjClass();  // identity class

  const ScaledUnitary& rep() const { return rep_; }
  int level() const { return rep_.level(); }
  std::size_t hash() const { return hash_; }
  /// Compact byte serialization of the canonical representative.
  std::string key() const;

  friend bool operator==(const ProjClass& a, const ProjClass& b) {
    return a.hash_ == b.hash_ && a.rep_ == b.rep_;
  }
  friend bool operator<(const ProjClass& a, const ProjClass& b) { return compare(a.rep_, b.rep_) < 0; }

 private:
  friend ProjClass canonicalize(const ScaledUnitary& a);
  explicit ProjClass(ScaledUnitary canonical);

  ScaledUnitary rep_;
  std::size_t hash_ = 0;
};

/// Lexicographically least of the 18 associates (-xi)^k a.
ProjClass canonicalize(const ScaledUnitary& a);
inline ProjClass operator*(const ProjClass& a, const ProjClass& b) { return canonicalize(a.rep() * b.rep()); }
inline ProjClass inverse(const ProjClass& a) { return canonicalize(inverse(a.rep())); }

struct ProjClassHash {
  std::size_t operator()(const ProjClass& p) const { return p.hash(); }
};

/// Complex embedding xi -> exp(2 pi i k / 9) with k = 1, 2, 4 for
/// embedding_index = 1, 2, 3. Uses extended precision when the coefficients
/// are large enough for double evaluation to cancel.
ComplexMatrix embed(const ScaledUnitary& a, int embedding_index);
inline ComplexMatrix embed(const ProjClass& a, int embedding_index) { return embed(a.rep(), embedding_index); }

/// The root of unity exponent k used by embedding_index (1 -> 1, 2 -> 2, 3 -> 4).
int embedding_exponent(int embedding_index);

/// Bi-invariant metric on PU(3): sqrt(1 - |tr(g^* h)| / 3). Both arguments
/// must be unitary.
double pu3_distance(const ComplexMatrix& g, const ComplexMatrix& h);
double pu3_distance(const ProjClass& g, const ProjClass& h, int embedding_index);

ComplexMatrix complex_matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix complex_adjoint(const ComplexMatrix& a);
/// Operator-norm distance from a^* a to I (Frobenius bound).
double unitarity_defect(const ComplexMatrix& a);

}  // namespace qutrit

template <>
struct std::hash<qutrit::ProjClass> {
  std::size_t operator()(const qutrit::ProjClass& p) const { return p.hash(); }
};
