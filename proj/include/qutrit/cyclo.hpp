#pragma once

// Exact arithmetic in the ring of integers Z[xi] of Q(zeta_9), xi = zeta_9.
//
// Elements are stored in the power basis {1, xi, ..., xi^5}; products are
// reduced with xi^6 = -xi^3 - 1 (minimal polynomial x^6 + x^3 + 1). The unique
// prime above 3 is pi = 1 - xi, with pi^6 ~ 3.

#include <array>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qutrit {

using BigInt = boost::multiprecision::cpp_int;

class CycInt {
 public:
  static constexpr int kDegree = 6;
  using Coeffs = std::array<BigInt, kDegree>;

  CycInt() = default;
  CycInt(long value) { c_[0] = value; }  // NOLINT: integers embed implicitly
  explicit CycInt(const BigInt& value) { c_[0] = value; }
  explicit CycInt(Coeffs coeffs) : c_(std::move(coeffs)) {}
  CycInt(std::initializer_list<long> coeffs);

  /// xi^k for any integer k (reduced mod 9).
  static CycInt xi_pow(int k);
  /// (-xi)^k for any integer k (reduced mod 18).
  static CycInt minus_xi_pow(int k);

  const BigInt& operator[](std::size_t i) const { return c_[i]; }
  const Coeffs& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;

  CycInt& operator+=(const CycInt& rhs);
  CycInt& operator-=(const CycInt& rhs);
  CycInt& operator*=(const CycInt& rhs) { return *this = *this * rhs; }
  CycInt& operator*=(long k);

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend CycInt operator*(CycInt a, long k) { return a *= k; }
  CycInt operator-() const;

  /// Multiplication by xi^k; a coefficient shift, no big multiplications.
  CycInt mul_xi_pow(int k) const;
  /// Multiplication by (-xi)^k.
  CycInt mul_minus_xi_pow(int k) const;

  /// Sum of coefficients, i.e. the image under xi -> 1.
  BigInt coefficient_sum() const;

  friend bool operator==(const CycInt& a, const CycInt& b) { return a.c_ == b.c_; }
  /// Lexicographic comparison of the coefficient tuples (c0 first).
  friend int compare(const CycInt& a, const CycInt& b);

  std::string to_string() const;

 private:
  Coeffs c_{};
};

namespace cyc {
CycInt xi();
/// xi^{-1} = -xi^5 - xi^2.
CycInt xi_inv();
/// sigma = xi + xi^{-1}, generator of the real subfield.
CycInt sigma();
/// pi = 1 - xi.
CycInt pi();
/// Pi = pi * conj(pi) = 2 - sigma.
CycInt big_pi();
/// Units u1 = 1 + xi, u2 = 1 + xi^2.
CycInt u1();
CycInt u2();
/// psi = 1 - xi - xi^2, a prime of norm 19.
CycInt psi();
/// sqrt(-3) = xi^3 - xi^6.
CycInt sqrt_minus3();
}  // namespace cyc

/// Applies phi^k where phi(xi) = xi^2; k is taken mod 6. phi^3 is complex
/// conjugation.
CycInt galois(const CycInt& a, int k);
inline CycInt conj(const CycInt& a) { return galois(a, 3); }

/// Absolute norm: product of the six Galois conjugates. Throws std::logic_error
/// if the product is not rational (an arithmetic bug, never a data error).
BigInt norm(const CycInt& a);

inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

/// True iff pi divides a. Z[xi]/(pi) = F_3 with xi -> 1.
bool divisible_by_pi(const CycInt& a);

/// a / pi, computed as a * kappa / 3 where kappa is the product of the five
/// nontrivial conjugates of pi. Throws NotDivisible.
CycInt divide_pi(const CycInt& a);

namespace detail {
/// a / pi by back-substitution in (1 - xi) q = a; a dozen additions and one
/// exact division by 3. Same contract as divide_pi.
CycInt divide_pi_linear(const CycInt& a);
}  // namespace detail

/// pi-adic valuation; kInfiniteValuation for zero.
int ord_pi(const CycInt& a);

/// 3-adic valuation of a nonzero integer; kInfiniteValuation for zero.
int valuation3(const BigInt& n);

/// Evaluates a at xi -> exp(2 pi i k / 9), in double precision.
std::complex<double> evaluate(const CycInt& a, int k);

/// Array of 6 decimal strings, little-endian in xi-degree.
std::vector<std::string> to_decimal_strings(const CycInt& a);
CycInt from_decimal_strings(const std::vector<std::string>& digits);

std::size_t hash_value(const CycInt& a);

}  // namespace qutrit
