#include "qutrit/umatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <mpfr.h>

namespace qutrit {

namespace {

CycMatrix identity_num() {
  CycMatrix m;
  for (int i = 0; i < 3; ++i) m[i][i] = 1;
  return m;
}

std::size_t hash_matrix(const ScaledUnitary& a) {
  std::size_t h = static_cast<std::size_t>(a.pi_exp()) * 0x9e3779b97f4a7c15ULL;
  for (const auto& row : a.num())
    for (const auto& x : row) h = (h ^ hash_value(x)) * 0x100000001b3ULL + 0x7f4a7c15ULL;
  return h;
}

void put_varint(std::string& out, unsigned long long v) {
  while (v >= 0x80) {
    out.push_back(static_cast<char>((v & 0x7f) | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<char>(v));
}

// RAII holder for an mpfr_t.
class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

std::complex<double> evaluate_long(const CycInt& a, int k) {
  std::complex<long double> sum = 0.0L;
  for (int j = 0; j < CycInt::kDegree; ++j) {
    if (a[j].is_zero()) continue;
    const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>((j * k) % 9) / 9.0L;
    sum += a[j].convert_to<long double>() * std::polar(1.0L, angle);
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

std::complex<double> evaluate_precise(const CycInt& a, int k, mpfr_prec_t bits) {
  MpfrValue re(bits), im(bits), angle(bits), c(bits), s(bits), coeff(bits), term(bits);
  mpfr_set_zero(re.get(), 1);
  mpfr_set_zero(im.get(), 1);
  for (int j = 0; j < CycInt::kDegree; ++j) {
    if (a[j].is_zero()) continue;
    const int m = (j * k) % 9;
    mpfr_const_pi(angle.get(), MPFR_RNDN);
    mpfr_mul_ui(angle.get(), angle.get(), 2 * static_cast<unsigned long>(m), MPFR_RNDN);
    mpfr_div_ui(angle.get(), angle.get(), 9, MPFR_RNDN);
    mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
    mpfr_set_str(coeff.get(), a[j].str().c_str(), 10, MPFR_RNDN);
    mpfr_mul(term.get(), coeff.get(), c.get(), MPFR_RNDN);
    mpfr_add(re.get(), re.get(), term.get(), MPFR_RNDN);
    mpfr_mul(term.get(), coeff.get(), s.get(), MPFR_RNDN);
    mpfr_add(im.get(), im.get(), term.get(), MPFR_RNDN);
  }
  return {mpfr_get_d(re.get(), MPFR_RNDN), mpfr_get_d(im.get(), MPFR_RNDN)};
}

}  // namespace

ScaledUnitary::ScaledUnitary() : num_(identity_num()) {}

ScaledUnitary::ScaledUnitary(CycMatrix num, int pi_exp) : num_(std::move(num)), pi_exp_(pi_exp) {
  if (pi_exp_ < 0) throw std::invalid_argument("pi exponent must be nonnegative");
  reduce();
}

ScaledUnitary ScaledUnitary::diagonal_units(const std::array<int, 3>& minus_xi_exps) {
  CycMatrix m;
  for (int i = 0; i < 3; ++i) m[i][i] = CycInt::minus_xi_pow(minus_xi_exps[i]);
  return ScaledUnitary(std::move(m), 0);
}

ScaledUnitary ScaledUnitary::permutation(const std::array<int, 3>& perm) {
  CycMatrix m;
  for (int i = 0; i < 3; ++i) m[i][perm[i]] = 1;
  return ScaledUnitary(std::move(m), 0);
}

void ScaledUnitary::reduce() {
  bool all_zero = true;
  for (const auto& row : num_)
    for (const auto& x : row) all_zero = all_zero && x.is_zero();
  if (all_zero) throw std::invalid_argument("zero matrix is not unitary");
  while (pi_exp_ > 0) {
    for (const auto& row : num_)
      for (const auto& x : row)
        if (!divisible_by_pi(x)) return;
    for (auto& row : num_)
      for (auto& x : row)
        if (!x.is_zero()) x = detail::divide_pi_linear(x);
    --pi_exp_;
  }
}

bool ScaledUnitary::is_unitary() const {
  CycInt pi_power = 1;
  const CycInt big_pi = cyc::big_pi();
  for (int i = 0; i < pi_exp_; ++i) pi_power = pi_power * big_pi;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CycInt s;
      for (int k = 0; k < 3; ++k) s += conj(num_[k][i]) * num_[k][j];
      if (!(s == (i == j ? pi_power : CycInt()))) return false;
    }
  }
  return true;
}

bool ScaledUnitary::is_monomial_unit() const {
  if (pi_exp_ != 0) return false;
  for (int i = 0; i < 3; ++i) {
    int nonzero = 0;
    for (int j = 0; j < 3; ++j) {
      const CycInt& x = num_[i][j];
      if (x.is_zero()) continue;
      ++nonzero;
      bool unit = false;
      for (int k = 0; k < 18 && !unit; ++k) unit = (x == CycInt::minus_xi_pow(k));
      if (!unit) return false;
    }
    if (nonzero != 1) return false;
  }
  for (int j = 0; j < 3; ++j) {
    int nonzero = 0;
    for (int i = 0; i < 3; ++i) nonzero += num_[i][j].is_zero() ? 0 : 1;
    if (nonzero != 1) return false;
  }
  return true;
}

bool ScaledUnitary::is_diagonal() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && !num_[i][j].is_zero()) return false;
  return true;
}

ScaledUnitary ScaledUnitary::mul_minus_xi_pow(int k) const {
  ScaledUnitary out = *this;
  for (auto& row : out.num_)
    for (auto& x : row) x = x.mul_minus_xi_pow(k);
  return out;
}

ScaledUnitary ScaledUnitary::times_diag(const std::array<int, 3>& minus_xi_exps) const {
  ScaledUnitary out = *this;
  for (auto& row : out.num_)
    for (int j = 0; j < 3; ++j) row[j] = row[j].mul_minus_xi_pow(minus_xi_exps[j]);
  return out;
}

int compare(const ScaledUnitary& a, const ScaledUnitary& b) {
  if (a.pi_exp_ != b.pi_exp_) return a.pi_exp_ < b.pi_exp_ ? -1 : 1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (int c = compare(a.num_[i][j], b.num_[i][j]); c != 0) return c;
  return 0;
}

std::string ScaledUnitary::to_string() const {
  std::ostringstream os;
  os << "pi^-" << pi_exp_ << " * [";
  for (int i = 0; i < 3; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < 3; ++j) os << (j ? " " : "") << num_[i][j].to_string();
  }
  os << ']';
  return os.str();
}

ScaledUnitary matmul(const ScaledUnitary& a, const ScaledUnitary& b) {
  CycMatrix out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CycInt s;
      for (int k = 0; k < 3; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        s += a(i, k) * b(k, j);
      }
      out[i][j] = std::move(s);
    }
  }
  return ScaledUnitary(std::move(out), a.pi_exp() + b.pi_exp());
}

ScaledUnitary inverse(const ScaledUnitary& a) {
  CycMatrix out;
  const int e = a.pi_exp();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = conj(a(j, i)).mul_minus_xi_pow(e);
  return ScaledUnitary(std::move(out), e);
}

ProjClass::ProjClass() : ProjClass(canonicalize(ScaledUnitary())) {}

ProjClass::ProjClass(ScaledUnitary canonical) : rep_(std::move(canonical)), hash_(hash_matrix(rep_)) {}

std::string ProjClass::key() const {
  std::string out;
  out.reserve(64);
  put_varint(out, static_cast<unsigned long long>(rep_.pi_exp()));
  for (const auto& row : rep_.num()) {
    for (const auto& x : row) {
      for (const auto& c : x.coeffs()) {
        if (boost::multiprecision::msb(abs(c) + 1) < 60) {
          const long long v = c.convert_to<long long>();
          const unsigned long long zig = (static_cast<unsigned long long>(v) << 1) ^ static_cast<unsigned long long>(v >> 63);
          put_varint(out, zig << 1);
        } else {
          const std::string digits = c.str();
          put_varint(out, (static_cast<unsigned long long>(digits.size()) << 1) | 1);
          out += digits;
        }
      }
    }
  }
  return out;
}

ProjClass canonicalize(const ScaledUnitary& a) {
  // Associates differ by a unit scalar, so they agree on which entries are zero;
  // the first nonzero entry alone decides the lexicographic order, and distinct
  // k give distinct values there.
  const CycInt* lead = nullptr;
  for (const auto& row : a.num()) {
    for (const auto& x : row) {
      if (!x.is_zero()) {
        lead = &x;
        break;
      }
    }
    if (lead) break;
  }
  int best_k = 0;
  CycInt best = *lead;
  CycInt current = *lead;
  for (int k = 1; k < 18; ++k) {
    current = current.mul_minus_xi_pow(1);
    if (compare(current, best) < 0) {
      best = current;
      best_k = k;
    }
  }
  return ProjClass(best_k == 0 ? a : a.mul_minus_xi_pow(best_k));
}

int embedding_exponent(int embedding_index) {
  switch (embedding_index) {
    case 1: return 1;
    case 2: return 2;
    case 3: return 4;
    default: throw std::invalid_argument("embedding index must be 1, 2 or 3");
  }
}

ComplexMatrix embed(const ScaledUnitary& a, int embedding_index) {
  const int k = embedding_exponent(embedding_index);
  const std::complex<double> pi_value = 1.0 - std::polar(1.0, 2.0 * std::numbers::pi * k / 9.0);
  const int e = a.pi_exp();
  const double log2_inv_abs_pi = -std::log2(std::abs(pi_value));
  const std::complex<double> scale = std::polar(std::pow(std::abs(pi_value), -e), -e * std::arg(pi_value));

  ComplexMatrix out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const CycInt& x = a(i, j);
      if (x.is_zero()) continue;
      unsigned max_bits = 0;
      for (const auto& c : x.coeffs())
        if (!c.is_zero()) max_bits = std::max<unsigned>(max_bits, boost::multiprecision::msb(abs(c)) + 1);
      // Absolute error of the double sum is about 2^(max_bits - 50), and 11
      // bits less in long double; it is amplified by |pi|^-e in the final entry.
      const double error_log2 = static_cast<double>(max_bits) - 50.0 + e * log2_inv_abs_pi;
      std::complex<double> value;
      if (error_log2 < -46.0) {
        value = evaluate(x, k);
      } else if (error_log2 - 11.0 < -46.0) {
        value = evaluate_long(x, k);
      } else {
        const auto bits = static_cast<mpfr_prec_t>(max_bits + std::ceil(e * log2_inv_abs_pi) + 96);
        value = evaluate_precise(x, k, bits);
      }
      out[i][j] = value * scale;
    }
  }
  return out;
}

ComplexMatrix complex_matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

ComplexMatrix complex_adjoint(const ComplexMatrix& a) {
  ComplexMatrix out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = std::conj(a[j][i]);
  return out;
}

double unitarity_defect(const ComplexMatrix& a) {
  const ComplexMatrix p = complex_matmul(complex_adjoint(a), a);
  double frob = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) frob += std::norm(p[i][j] - (i == j ? 1.0 : 0.0));
  return std::sqrt(frob);
}

double pu3_distance(const ComplexMatrix& g, const ComplexMatrix& h) {
  // For unitary g, h: min over phases |g - lambda h|_F^2 = 6 - 2|tr(g^* h)|,
  // attained at lambda = conj(tr) / |tr|. Evaluating the residual directly keeps
  // full precision near zero distance.
  std::complex<double> tr = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) tr += std::conj(g[k][i]) * h[k][i];
  const double abs_tr = std::abs(tr);
  if (abs_tr < 0.5) return std::sqrt(std::max(0.0, 1.0 - abs_tr / 3.0));
  const std::complex<double> phase = std::conj(tr) / abs_tr;
  double residual = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) residual += std::norm(g[i][k] - phase * h[i][k]);
  return std::sqrt(residual / 6.0);
}

double pu3_distance(const ProjClass& g, const ProjClass& h, int embedding_index) {
  return pu3_distance(embed(g, embedding_index), embed(h, embedding_index));
}

}  // namespace qutrit
