#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <set>

#include "qutrit/errors.hpp"
#include "qutrit/gates.hpp"
#include "qutrit/verify.hpp"

using namespace qutrit;

namespace {

// Lexicographic minimum over all 18 associates, with the ordering spelled out
// independently of compare(ScaledUnitary).
ScaledUnitary brute_force_canonical(const ScaledUnitary& a) {
  auto flat = [](const ScaledUnitary& m) {
    std::vector<BigInt> v;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (const auto& c : m(i, j).coeffs()) v.push_back(c);
    return v;
  };
  ScaledUnitary best = a;
  for (int k = 1; k < 18; ++k) {
    const ScaledUnitary c = a.mul_minus_xi_pow(k);
    if (flat(c) < flat(best)) best = c;
  }
  return best;
}

ScaledUnitary random_element(std::mt19937_64& rng, int max_length = 40) {
  return evaluate(random_word(rng, max_length));
}

double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double d = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

}  // namespace

TEST_CASE("construction reduces by pi") {
  CycMatrix m;
  for (int i = 0; i < 3; ++i) m[i][i] = cyc::pi() * cyc::pi();
  const ScaledUnitary a(m, 3);
  CHECK(a.pi_exp() == 1);
  CHECK(a(0, 0) == CycInt(1));
  CHECK_THROWS(ScaledUnitary(CycMatrix{}, 0));
  CHECK_THROWS(ScaledUnitary(m, -1));
}

TEST_CASE("Hadamard constant") {
  const ScaledUnitary h = standard_hadamard();
  CHECK(h.pi_exp() == 3);
  CHECK(h.level() == 6);
  CHECK(h.is_unitary());
  // pi^3 times the unit is sqrt(-3), and the stored unit inverts it
  CycInt s = cyc::sqrt_minus3();
  for (int i = 0; i < 3; ++i) s = divide_pi(s);
  CHECK((s * hadamard_unit_inverse()).is_one());
  // H^2 is minus the (1 2) transposition
  const ScaledUnitary h2 = h * h;
  CHECK(h2.pi_exp() == 0);
  CHECK(h2(0, 0) == CycInt(-1));
  CHECK(h2(1, 2) == CycInt(-1));
  CHECK(h2(2, 1) == CycInt(-1));
  const ScaledUnitary h4 = h2 * h2;
  CHECK(h4 == ScaledUnitary());
}

TEST_CASE("canonical form agrees with the 18-associate minimum") {
  std::mt19937_64 rng(1);
  for (int n = 0; n < 300; ++n) {
    const ScaledUnitary g = random_element(rng);
    const ProjClass c = canonicalize(g);
    CHECK(c.rep() == brute_force_canonical(g));
    for (int k : {1, 5, 9, 17}) CHECK(canonicalize(g.mul_minus_xi_pow(k)) == c);
    CHECK(canonicalize(c.rep()) == c);
  }
  CHECK(canonicalize(ScaledUnitary()) == canonicalize(ScaledUnitary().mul_minus_xi_pow(9)));
}

TEST_CASE("associates of H are pairwise distinct") {
  std::set<std::string> seen;
  for (int k = 0; k < 18; ++k) seen.insert(standard_hadamard().mul_minus_xi_pow(k).to_string());
  CHECK(seen.size() == 18);
}

TEST_CASE("canonicalization is a congruence") {
  std::mt19937_64 rng(2);
  for (int n = 0; n < 100; ++n) {
    const ScaledUnitary a = random_element(rng, 20), b = random_element(rng, 20);
    const ProjClass ab = canonicalize(a * b);
    CHECK(canonicalize(a.mul_minus_xi_pow(4) * b.mul_minus_xi_pow(11)) == ab);
    CHECK(canonicalize(a) * canonicalize(b) == ab);
  }
}

TEST_CASE("unitarity and level properties of random products") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 300; ++n) {
    const ScaledUnitary a = random_element(rng, 50), b = random_element(rng, 50);
    CHECK(a.is_unitary());
    CHECK(a.level() % 2 == 0);
    CHECK(inverse(a).level() == a.level());
    CHECK(a * inverse(a) == ScaledUnitary());
    CHECK((a * b).level() <= a.level() + b.level());
    if (a.level() == 0) CHECK(a.is_monomial_unit());
  }
}

TEST_CASE("permutation and diagonal builders") {
  const ScaledUnitary p = ScaledUnitary::permutation({1, 2, 0});
  CHECK(p(0, 1).is_one());
  CHECK(p(2, 0).is_one());
  CHECK(p.is_monomial_unit());
  CHECK_FALSE(p.is_diagonal());
  const ScaledUnitary d = ScaledUnitary::diagonal_units({1, 0, 17});
  CHECK(d.is_diagonal());
  CHECK(d(0, 0) == CycInt::minus_xi_pow(1));
  CHECK(ScaledUnitary().times_diag({1, 0, 17}) == d);
  CHECK_FALSE(standard_hadamard().is_monomial_unit());
}

TEST_CASE("complex embedding") {
  for (int i = 1; i <= 3; ++i) {
    const ComplexMatrix id = embed(ScaledUnitary(), i);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) CHECK(id[r][c] == std::complex<double>(r == c ? 1.0 : 0.0, 0.0));
  }
  CHECK(embedding_exponent(1) == 1);
  CHECK(embedding_exponent(2) == 2);
  CHECK(embedding_exponent(3) == 4);
  CHECK_THROWS(embedding_exponent(0));

  const ComplexMatrix h = embed(standard_hadamard(), 1);
  CHECK(std::abs(std::abs(h[0][0]) - 1.0 / std::sqrt(3.0)) < 1e-12);
  // the non-unitary-scaled H: entries 1/sqrt(-3) times cube roots of unity
  const std::complex<double> w = std::polar(1.0, 2.0 * M_PI / 3.0);
  const std::complex<double> s = 1.0 / std::complex<double>(0.0, std::sqrt(3.0));
  CHECK(std::abs(h[1][1] - s * w) < 1e-12);
  CHECK(std::abs(h[1][2] - s * w * w) < 1e-12);

  std::mt19937_64 rng(4);
  for (int n = 0; n < 200; ++n) {
    const ScaledUnitary a = random_element(rng, 50), b = random_element(rng, 50);
    for (int i = 1; i <= 3; ++i) {
      const ComplexMatrix ea = embed(a, i);
      CHECK(unitarity_defect(ea) < 1e-12);
      CHECK(max_entry_diff(embed(a * b, i), complex_matmul(ea, embed(b, i))) < 1e-10);
    }
  }
}

TEST_CASE("embedding of large coefficients stays unitary") {
  std::mt19937_64 rng(5);
  ScaledUnitary g;
  for (int n = 0; n < 8; ++n) g = g * random_element(rng, 40);
  REQUIRE(g.level() > 150);
  for (int i = 1; i <= 3; ++i) CHECK(unitarity_defect(embed(g, i)) < 1e-12);
}

TEST_CASE("PU(3) distance") {
  std::mt19937_64 rng(6);
  const ProjClass h = canonicalize(standard_hadamard());
  const ProjClass id;
  // tr(H) = (1 + w + w) / sqrt(-3) with w = exp(2 pi i / 3)
  const std::complex<double> w = std::polar(1.0, 2.0 * M_PI / 3.0);
  const double tr = std::abs((1.0 + 2.0 * w) / std::complex<double>(0.0, std::sqrt(3.0)));
  CHECK(pu3_distance(id, h, 1) == doctest::Approx(std::sqrt(1.0 - tr / 3.0)).epsilon(1e-12));
  for (int n = 0; n < 100; ++n) {
    const ProjClass a = canonicalize(random_element(rng)), b = canonicalize(random_element(rng));
    for (int i = 1; i <= 3; ++i) {
      CHECK(pu3_distance(a, a, i) < 1e-12);
      CHECK(pu3_distance(a, b, i) == doctest::Approx(pu3_distance(b, a, i)).epsilon(1e-12));
      CHECK(pu3_distance(embed(a.rep(), i), embed(a.rep().mul_minus_xi_pow(7), i)) < 1e-12);
    }
    if (!(a == b)) CHECK(pu3_distance(a, b, 1) > 1e-6);
  }
}

TEST_CASE("ProjClass keys are injective on a sample") {
  std::mt19937_64 rng(7);
  std::set<std::string> keys;
  std::set<std::string> reps;
  for (int n = 0; n < 300; ++n) {
    const ProjClass c = canonicalize(random_element(rng));
    keys.insert(c.key());
    reps.insert(c.rep().to_string());
  }
  CHECK(keys.size() == reps.size());
}
