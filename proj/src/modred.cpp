#include "qutrit/modred.hpp"

#include <random>
#include <sstream>
#include <unordered_set>

#include "qutrit/errors.hpp"
#include "qutrit/gates.hpp"

namespace qutrit {

int mod19(long long x) {
  const long long r = x % kModPrime;
  return static_cast<int>(r < 0 ? r + kModPrime : r);
}

int inverse_mod19(int x) {
  x = mod19(x);
  if (x == 0) throw std::domain_error("0 has no inverse mod 19");
  int r = 1;
  for (int e = 0; e < kModPrime - 2; ++e) r = r * x % kModPrime;
  return r;
}

int F19Matrix::determinant() const {
  const long long d = 1LL * a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                      1LL * a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                      1LL * a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  return mod19(d);
}

F19Matrix F19Matrix::operator*(const F19Matrix& rhs) const {
  F19Matrix out;
  out.prime_index = prime_index;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int s = 0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * rhs.a[k][j];
      out.a[i][j] = s % kModPrime;
    }
  return out;
}

std::string F19Matrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) os << (j ? " " : "") << a[i][j];
    os << '\n';
  }
  return os.str();
}

int reduce(const CycInt& x, int i) {
  const int theta = kThetaRoots.at(i);
  int acc = 0;
  int power = 1;
  for (int k = 0; k < CycInt::kDegree; ++k) {
    acc = (acc + static_cast<int>(static_cast<long long>(x[k] % kModPrime)) * power) % kModPrime;
    power = power * theta % kModPrime;
  }
  return mod19(acc);
}

F19Matrix reduce(const ScaledUnitary& g, int i) {
  const int inv_pi = inverse_mod19(1 - kThetaRoots.at(i));
  int scale = 1;
  for (int e = 0; e < g.pi_exp(); ++e) scale = scale * inv_pi % kModPrime;
  F19Matrix out;
  out.prime_index = i;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out.a[r][c] = reduce(g(r, c), i) * scale % kModPrime;
  return out;
}

CycInt determinant(const ScaledUnitary& g) {
  const auto& m = g.num();
  CycInt d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  for (int e = 0; e < 3 * g.pi_exp(); ++e) d = detail::divide_pi_linear(d);
  return d;
}

ScaledUnitary su_normalize(const ScaledUnitary& g, int* xi_exp, int* sign) {
  const CycInt det = determinant(g);
  for (int s : {1, -1}) {
    for (int a = 0; a < 9; ++a) {
      // (s xi^a)^3 = s xi^{3a}
      if (!(det == CycInt::xi_pow(3 * a) * s)) continue;
      if (xi_exp) *xi_exp = a;
      if (sign) *sign = s;
      // s xi^a = (-xi)^k with k = a (mod 2 adjusted for the sign): (-xi)^k = (-1)^k xi^k.
      int k = a;
      if ((k % 2 == 0) != (s == 1)) k += 9;
      return g.mul_minus_xi_pow(18 - k);
    }
  }
  throw InvalidInput("determinant is not a cube of a root of unity in Z[xi]");
}

int projective_scalar(const F19Matrix& x, const F19Matrix& y) {
  for (int lambda = 1; lambda < kModPrime; ++lambda) {
    bool match = true;
    for (int i = 0; i < 3 && match; ++i)
      for (int j = 0; j < 3 && match; ++j) match = x.a[i][j] == lambda * y.a[i][j] % kModPrime;
    if (match) return lambda;
  }
  return 0;
}

ThetaReport verify_theta_roots() {
  ThetaReport report;
  for (int i = 0; i < 3; ++i) {
    const long long t = kThetaRoots[i];
    const long long t3 = t * t * t;
    report.roots[i] = mod19(t3 * t3 + t3 + 1) == 0;
  }
  const long long t = kThetaRoots[0];
  report.psi_vanishes = mod19(1 - t - t * t) == 0 && reduce(cyc::psi(), 0) == 0;
  return report;
}

std::size_t image_diversity(std::size_t steps, std::uint64_t seed) {
  const Catalog& catalog = Catalog::standard();
  const std::array<ScaledUnitary, 3> gens{catalog.hadamard(), su_normalize(gate_matrix(GateToken::s())),
                                          gate_matrix(GateToken::t())};
  std::array<std::array<F19Matrix, 3>, 3> images;
  for (int g = 0; g < 3; ++g)
    for (int i = 0; i < 3; ++i) images[g][i] = reduce(gens[g], i);

  std::array<F19Matrix, 3> cur;
  for (int i = 0; i < 3; ++i) cur[i].a = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  // 19^9 < 2^39, so each matrix packs into 39 bits and a triple into 117.
  auto pack = [](const F19Matrix& m) {
    std::uint64_t v = 0;
    for (const auto& row : m.a)
      for (int x : row) v = v * kModPrime + static_cast<std::uint64_t>(x);
    return v;
  };
  std::unordered_set<unsigned __int128> seen;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 2);
  for (std::size_t s = 0; s < steps; ++s) {
    const int g = pick(rng);
    for (int i = 0; i < 3; ++i) cur[i] = cur[i] * images[g][i];
    unsigned __int128 key = pack(cur[0]);
    key = (key << 39) | pack(cur[1]);
    key = (key << 39) | pack(cur[2]);
    seen.insert(key);
  }
  return seen.size();
}

}  // namespace qutrit
