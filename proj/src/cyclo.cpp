#include "qutrit/cyclo.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qutrit/errors.hpp"

namespace qutrit {

namespace {

int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

// Galois exponent for phi^k: xi -> xi^(2^k mod 9).
constexpr std::array<int, 6> kGaloisPower = {1, 2, 4, 8, 7, 5};

// Adds coeff * xi^j (0 <= j <= 8) into a reduced coefficient array.
void add_xi_term(CycInt::Coeffs& out, int j, const BigInt& coeff) {
  if (j < 6) {
    out[j] += coeff;
  } else {
    // xi^j = xi^(j-6) * xi^6 = -xi^(j-3) - xi^(j-6)
    out[j - 3] -= coeff;
    out[j - 6] -= coeff;
  }
}

}  // namespace

CycInt::CycInt(std::initializer_list<long> coeffs) {
  if (coeffs.size() > kDegree) throw std::invalid_argument("CycInt takes at most 6 coefficients");
  std::size_t i = 0;
  for (long v : coeffs) c_[i++] = v;
}

CycInt CycInt::xi_pow(int k) {
  CycInt out;
  add_xi_term(out.c_, mod(k, 9), BigInt(1));
  return out;
}

CycInt CycInt::minus_xi_pow(int k) {
  k = mod(k, 18);
  CycInt out = xi_pow(k);
  return (k % 2 == 0) ? out : -out;
}

bool CycInt::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool CycInt::is_one() const {
  if (c_[0] != 1) return false;
  for (int i = 1; i < kDegree; ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

CycInt& CycInt::operator+=(const CycInt& rhs) {
  for (int i = 0; i < kDegree; ++i) c_[i] += rhs.c_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& rhs) {
  for (int i = 0; i < kDegree; ++i) c_[i] -= rhs.c_[i];
  return *this;
}

CycInt& CycInt::operator*=(long k) {
  for (auto& c : c_) c *= k;
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  std::array<BigInt, 11> prod{};
  for (int i = 0; i < CycInt::kDegree; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < CycInt::kDegree; ++j) {
      if (b.c_[j].is_zero()) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  for (int d = 10; d >= 6; --d) {
    if (prod[d].is_zero()) continue;
    prod[d - 3] -= prod[d];
    prod[d - 6] -= prod[d];
  }
  CycInt out;
  for (int i = 0; i < CycInt::kDegree; ++i) out.c_[i] = std::move(prod[i]);
  return out;
}

CycInt CycInt::mul_xi_pow(int k) const {
  k = mod(k, 9);
  CycInt out = *this;
  for (int step = 0; step < k; ++step) {
    // xi * (c0 + ... + c5 xi^5) = -c5 + c0 xi + c1 xi^2 + (c2 - c5) xi^3 + c3 xi^4 + c4 xi^5
    BigInt top = std::move(out.c_[5]);
    out.c_[5] = std::move(out.c_[4]);
    out.c_[4] = std::move(out.c_[3]);
    out.c_[3] = out.c_[2] - top;
    out.c_[2] = std::move(out.c_[1]);
    out.c_[1] = std::move(out.c_[0]);
    out.c_[0] = -top;
  }
  return out;
}

CycInt CycInt::mul_minus_xi_pow(int k) const {
  k = mod(k, 18);
  CycInt out = mul_xi_pow(k);
  return (k % 2 == 0) ? out : -out;
}

BigInt CycInt::coefficient_sum() const {
  BigInt s = 0;
  for (const auto& c : c_) s += c;
  return s;
}

int compare(const CycInt& a, const CycInt& b) {
  for (int i = 0; i < CycInt::kDegree; ++i) {
    if (a.c_[i] < b.c_[i]) return -1;
    if (b.c_[i] < a.c_[i]) return 1;
  }
  return 0;
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < kDegree; ++i) os << (i ? "," : "") << c_[i];
  os << ']';
  return os.str();
}

namespace cyc {
CycInt xi() { return CycInt::xi_pow(1); }
CycInt xi_inv() { return CycInt{0, 0, -1, 0, 0, -1}; }
CycInt sigma() { return xi() + xi_inv(); }
CycInt pi() { return CycInt{1, -1}; }
CycInt big_pi() { return CycInt(2) - sigma(); }
CycInt u1() { return CycInt{1, 1}; }
CycInt u2() { return CycInt{1, 0, 1}; }
CycInt psi() { return CycInt{1, -1, -1}; }
CycInt sqrt_minus3() { return CycInt::xi_pow(3) - CycInt::xi_pow(6); }
}  // namespace cyc

CycInt galois(const CycInt& a, int k) {
  const int power = kGaloisPower[mod(k, 6)];
  CycInt::Coeffs out{};
  for (int i = 0; i < CycInt::kDegree; ++i) {
    if (a[i].is_zero()) continue;
    add_xi_term(out, (i * power) % 9, a[i]);
  }
  return CycInt(std::move(out));
}

BigInt norm(const CycInt& a) {
  CycInt prod = a;
  for (int k = 1; k < 6; ++k) prod = prod * galois(a, k);
  for (int i = 1; i < CycInt::kDegree; ++i) {
    if (!prod[i].is_zero()) throw std::logic_error("norm is not rational: " + prod.to_string());
  }
  return prod[0];
}

bool divisible_by_pi(const CycInt& a) {
  return (a.coefficient_sum() % 3).is_zero();
}

namespace {
const CycInt& pi_cofactor() {
  static const CycInt kappa = [] {
    CycInt out = 1;
    for (int k = 1; k < 6; ++k) out = out * galois(cyc::pi(), k);
    return out;
  }();
  return kappa;
}
}  // namespace

CycInt divide_pi(const CycInt& a) {
  CycInt scaled = a * pi_cofactor();
  CycInt::Coeffs out{};
  for (int i = 0; i < CycInt::kDegree; ++i) {
    BigInt q, r;
    boost::multiprecision::divide_qr(scaled[i], BigInt(3), q, r);
    if (!r.is_zero()) throw NotDivisible();
    out[i] = std::move(q);
  }
  return CycInt(std::move(out));
}

namespace detail {
CycInt divide_pi_linear(const CycInt& a) {
  // (1 - xi) q = a with xi^6 = -xi^3 - 1 gives, for q0 = x:
  //   q1 = a1 + x, q2 = a1 + a2 + x, q3 = a1 + a2 + a3 - a0 + 2x,
  //   q4 = q3 + a4, q5 = q4 + a5 = a0 - x,  so 3x = 2 a0 - (a1 + ... + a5).
  BigInt rest = a[1] + a[2] + a[3] + a[4] + a[5];
  BigInt x, r;
  boost::multiprecision::divide_qr(BigInt(2 * a[0] - rest), BigInt(3), x, r);
  if (!r.is_zero()) throw NotDivisible();
  CycInt::Coeffs q;
  q[0] = x;
  q[1] = a[1] + x;
  q[2] = q[1] + a[2];
  q[3] = q[2] + a[3] - a[0] + x;
  q[4] = q[3] + a[4];
  q[5] = a[0] - x;
  return CycInt(std::move(q));
}
}  // namespace detail

int ord_pi(const CycInt& a) {
  if (a.is_zero()) return kInfiniteValuation;
  int v = 0;
  CycInt x = a;
  while (divisible_by_pi(x)) {
    x = divide_pi(x);
    ++v;
  }
  return v;
}

int valuation3(const BigInt& n) {
  if (n.is_zero()) return kInfiniteValuation;
  int v = 0;
  BigInt x = n;
  BigInt q, r;
  for (;;) {
    boost::multiprecision::divide_qr(x, BigInt(3), q, r);
    if (!r.is_zero()) return v;
    x = q;
    ++v;
  }
}

std::complex<double> evaluate(const CycInt& a, int k) {
  std::complex<double> sum = 0.0;
  for (int j = 0; j < CycInt::kDegree; ++j) {
    if (a[j].is_zero()) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod(j * k, 9)) / 9.0;
    sum += a[j].convert_to<double>() * std::polar(1.0, angle);
  }
  return sum;
}

std::vector<std::string> to_decimal_strings(const CycInt& a) {
  std::vector<std::string> out;
  out.reserve(CycInt::kDegree);
  for (const auto& c : a.coeffs()) out.push_back(c.str());
  return out;
}

CycInt from_decimal_strings(const std::vector<std::string>& digits) {
  if (digits.size() != CycInt::kDegree)
    throw InvalidInput("cyclotomic integer needs exactly 6 coefficients");
  CycInt::Coeffs c{};
  for (int i = 0; i < CycInt::kDegree; ++i) {
    const std::string& s = digits[i];
    const bool ok = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) == std::string::npos &&
                    !(s[0] == '-' && s.size() == 1);
    if (!ok) throw InvalidInput("not a decimal integer: '" + s + "'");
    c[i] = BigInt(s);
  }
  return CycInt(std::move(c));
}

std::size_t hash_value(const CycInt& a) {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& c : a.coeffs()) {
    const auto& be = c.backend();
    std::size_t limb = be.size() ? static_cast<std::size_t>(be.limbs()[0]) : 0;
    limb ^= (static_cast<std::size_t>(be.size()) << 48) ^ (c.sign() < 0 ? 0x9e3779b97f4a7c15ULL : 0);
    h = (h ^ limb) * 0x100000001b3ULL;
  }
  return h;
}

}  // namespace qutrit
