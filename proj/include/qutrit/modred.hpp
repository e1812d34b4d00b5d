#pragma once

// Reduction of gates modulo the three primes above 19.
//
// x^6 + x^3 + 1 splits over F_19 with roots 4, 16 and 9, so xi -> theta_i
// defines three ring maps Z[xi, 1/3] -> F_19. Since pi = 1 - xi has norm 3,
// 1/pi maps to (1 - theta_i)^-1.

#include <array>
#include <cstdint>
#include <string>

#include "qutrit/umatrix.hpp"

namespace qutrit {

inline constexpr int kModPrime = 19;
inline constexpr std::array<int, 3> kThetaRoots{4, 16, 9};

/// Residues modulo 19 in 0..18.
int mod19(long long x);
int inverse_mod19(int x);

struct F19Matrix {
  std::array<std::array<int, 3>, 3> a{};
  int prime_index = 0;

  int determinant() const;
  /// Product in F_19; the prime index of the left factor is kept.
  F19Matrix operator*(const F19Matrix& rhs) const;
  /// Rows separated by newlines, entries by single spaces.
  std::string to_string() const;

  friend bool operator==(const F19Matrix& x, const F19Matrix& y) { return x.a == y.a; }
};

/// Image of a ring element under xi -> theta_i.
int reduce(const CycInt& x, int i);
/// Entrywise image of num / pi^e.
F19Matrix reduce(const ScaledUnitary& g, int i);

/// Exact determinant, a unit of the form +-xi^k.
CycInt determinant(const ScaledUnitary& g);

/// g divided by the scalar s*xi^a, with s = +-1 and the smallest a in 0..8,
/// such that the quotient has determinant 1. Returns the scalar's exponent a
/// and sign through the out-parameters. Throws InvalidInput when det(g) is
/// not a cube in <-xi>.
ScaledUnitary su_normalize(const ScaledUnitary& g, int* xi_exp = nullptr, int* sign = nullptr);

/// If x = lambda * y for some lambda in F_19^*, returns lambda; otherwise 0.
int projective_scalar(const F19Matrix& x, const F19Matrix& y);

struct ThetaReport {
  std::array<bool, 3> roots{};  // theta_i^6 + theta_i^3 + 1 == 0 mod 19
  bool psi_vanishes = false;    // 1 - theta_0 - theta_0^2 == 0 mod 19
  bool ok() const { return roots[0] && roots[1] && roots[2] && psi_vanishes; }
};
ThetaReport verify_theta_roots();

/// Non-proof sanity pass: a seeded random walk on the joint image of
/// {H, S/xi, T} in SL3(F_19)^3, returning the number of distinct triples
/// visited in `steps` steps.
std::size_t image_diversity(std::size_t steps, std::uint64_t seed);

}  // namespace qutrit
