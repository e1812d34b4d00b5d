#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "qutrit/errors.hpp"
#include "qutrit/gates.hpp"

using namespace qutrit;

namespace {

// The subgroup criterion evaluated directly on every monomial class.
std::size_t count_by_conjugated_level(int max_level) {
  const ScaledUnitary& h = standard_hadamard();
  std::size_t n = 0;
  for (const auto& c : enumerate_C0().elements)
    if ((inverse(h) * c.rep() * h).level() <= max_level) ++n;
  return n;
}

}  // namespace

TEST_CASE("subgroup sizes") {
  const Catalog& c = Catalog::standard();
  CHECK(c.c0().size() == 1944);
  CHECK(c.c1().size() == 486);
  CHECK(c.c2().size() == 162);
  CHECK(c.c3().size() == 216);
  CHECK(c.cd().size() == 54);
}

TEST_CASE("subgroups match their defining level criteria") {
  CHECK(count_by_conjugated_level(10) == 486);
  CHECK(count_by_conjugated_level(8) == 162);
  CHECK(count_by_conjugated_level(6) == 54);
}

TEST_CASE("subgroup inclusions and intersection") {
  const Catalog& c = Catalog::standard();
  CHECK(c.c1().is_subset_of(c.c0()));
  CHECK(c.c2().is_subset_of(c.c1()));
  CHECK(c.cd().is_subset_of(c.c2()));
  CHECK(c.cd().is_subset_of(c.c3()));
  std::size_t both = 0;
  for (const auto& x : c.c3().elements)
    if (c.c0().contains(x)) ++both;
  CHECK(both == 54);
  CHECK(c.c3().contains(canonicalize(standard_hadamard())));
  CHECK_FALSE(c.c0().contains(canonicalize(standard_hadamard())));
}

TEST_CASE("subgroups are closed under products") {
  const Catalog& c = Catalog::standard();
  for (GroupLabel label : {GroupLabel::C2, GroupLabel::C3, GroupLabel::CD}) {
    const auto& g = c.group(label);
    for (std::size_t i = 0; i < g.size(); i += 7)
      for (std::size_t j = 0; j < g.size(); j += 5) CHECK(g.contains(g.elements[i] * g.elements[j]));
  }
}

TEST_CASE("CD is S3 extended by the order-3 diagonal group") {
  std::vector<ProjClass> gens;
  for (const auto& p : all_permutations()) gens.push_back(canonicalize(ScaledUnitary::permutation(p)));
  gens.push_back(canonicalize(ScaledUnitary::diagonal_units({0, 12, 0})));
  gens.push_back(canonicalize(ScaledUnitary::diagonal_units({0, 0, 12})));
  auto closure = generate_closure(gens);
  std::sort(closure.begin(), closure.end());
  CHECK(closure == Catalog::standard().cd().elements);
}

TEST_CASE("level identities") {
  const Catalog& c = Catalog::standard();
  CHECK(c.hadamard().level() == 6);
  CHECK(c.conjugated_level(gate_matrix(GateToken::s())) == 6);
  CHECK(c.conjugated_level(gate_matrix(GateToken::t())) == 8);
  CHECK(c.c1().contains(canonicalize(gate_matrix(GateToken::s()))));
  CHECK(c.c1().contains(canonicalize(gate_matrix(GateToken::t()))));
}

TEST_CASE("stabilizers of the Hadamard vertex") {
  const Catalog& c = Catalog::standard();
  CHECK(hadamard_stabilizer_in_D(c).size() == 54);
  CHECK(hadamard_stabilizer_in_C0(c) == 18);
}

TEST_CASE("permutation words") {
  const M3Report report = verify_M3_identity();
  CHECK(report.ok());
  CHECK(report.pairwise_distinct);
  CHECK(report.covers_all_permutations);
  for (const auto& [perm, word] : permutation_words())
    CHECK(canonicalize(evaluate(word)) == canonicalize(ScaledUnitary::permutation(perm)));
  // -H^2 is the transposition of the last two basis vectors
  CHECK(canonicalize(standard_hadamard() * standard_hadamard()) == canonicalize(ScaledUnitary::permutation({0, 2, 1})));
}

TEST_CASE("gate tokens") {
  CHECK(GateToken::s().diag().matrix()(1, 1) == CycInt::xi_pow(3));
  CHECK(GateToken::t().diag().matrix()(0, 0) == cyc::xi());
  CHECK(GateToken::t().diag().matrix()(2, 2) == CycInt::xi_pow(8));
  CHECK(w_gate().matrix()(2, 2) == CycInt::xi_pow(6));
  const GateWord w = parse_word("H S T D(1,2,3;+,-,+) D(0,0,8;-1,+1,-1)");
  REQUIRE(w.size() == 5);
  CHECK(w[3] == GateToken::d(1, 2, 3, 1, -1, 1));
  CHECK(parse_word(to_string(w)) == w);
  CHECK(to_string(GateWord{GateToken::d(1, 2, 3, 1, -1, 1)}) == "D(1,2,3;+,-,+)");
  CHECK_THROWS_AS(parse_word("H X"), InvalidInput);
  CHECK_THROWS_AS(parse_word("D(1,2;+,+,+)"), InvalidInput);
  CHECK(evaluate(GateWord{}) == ScaledUnitary());
}

TEST_CASE("diagonal elements") {
  for (int i = 0; i < 5832; i += 37) {
    const DiagElement d = DiagElement::from_index(i);
    CHECK(d.index() == i);
    CHECK((d * d.inverse()).is_scalar());
    CHECK(d.matrix() * d.inverse().matrix() == ScaledUnitary());
  }
  CHECK(DiagElement::from_signed(1, 0, 0, -1, 1, 1).matrix()(0, 0) == -cyc::xi());
}

TEST_CASE("closure guard") {
  const std::vector<ProjClass> gens{canonicalize(standard_hadamard()), canonicalize(gate_matrix(GateToken::t()))};
  CHECK_THROWS_AS(generate_closure(gens, 500), ClosureDiverged);
}

TEST_CASE("group labels") {
  CHECK(parse_group_label("C3") == GroupLabel::C3);
  CHECK(to_string(GroupLabel::CD) == "CD");
  CHECK_THROWS(parse_group_label("C9"));
}
