#include "qutrit/gates.hpp"

#include <algorithm>
#include <deque>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "qutrit/errors.hpp"

namespace qutrit {

namespace {

int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

int parse_sign(const std::string& s) {
  if (s == "+" || s == "+1" || s == "1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw InvalidInput("bad sign '" + s + "' in D token");
}

std::vector<ProjClass> sorted_unique(std::vector<ProjClass> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

struct NamedWord {
  const char* name;
  GateWord word;
};

std::vector<NamedWord> m3_words() {
  const GateToken H = GateToken::h();
  const GateToken W = GateToken::d(w_gate());
  const GateToken W2 = GateToken::d(w_gate() * w_gate());
  // The leading minus signs are scalars and vanish projectively.
  return {
      {"1", {}},
      {"-H^2", {H, H}},
      {"-HWH", {H, W, H}},
      {"-HW^2H", {H, W2, H}},
      {"H^3WH", {H, H, H, W, H}},
      {"H^3W^2H", {H, H, H, W2, H}},
  };
}

}  // namespace

DiagElement DiagElement::from_signed(int a, int b, int c, int s1, int s2, int s3) {
  auto one = [](int exp, int sign) {
    // (-xi)^k = (-1)^k xi^k: pick k = exp mod 9 or exp mod 9 + 9 with parity matching the sign.
    int k = mod(exp, 9);
    const bool want_odd = sign < 0;
    if ((k % 2 == 1) != want_odd) k += 9;
    return k;
  };
  return {{one(a, s1), one(b, s2), one(c, s3)}};
}

DiagElement DiagElement::from_index(int index) {
  return {{index / 324, (index / 18) % 18, index % 18}};
}

DiagElement DiagElement::inverse() const {
  return {{mod(-k[0], 18), mod(-k[1], 18), mod(-k[2], 18)}};
}

DiagElement DiagElement::operator*(const DiagElement& rhs) const {
  return {{mod(k[0] + rhs.k[0], 18), mod(k[1] + rhs.k[1], 18), mod(k[2] + rhs.k[2], 18)}};
}

std::string GateToken::to_string() const {
  switch (kind_) {
    case Kind::H: return "H";
    case Kind::S: return "S";
    case Kind::T: return "T";
    case Kind::D: break;
  }
  std::ostringstream os;
  os << "D(" << diag_.k[0] % 9 << ',' << diag_.k[1] % 9 << ',' << diag_.k[2] % 9 << ';';
  for (int i = 0; i < 3; ++i) os << (i ? "," : "") << (diag_.k[i] % 2 == 0 ? '+' : '-');
  os << ')';
  return os.str();
}

GateToken GateToken::parse(const std::string& text) {
  if (text == "H") return h();
  if (text == "S") return s();
  if (text == "T") return t();
  static const std::regex pattern(
      R"(D\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*;\s*([+-]1?|1)\s*,\s*([+-]1?|1)\s*,\s*([+-]1?|1)\s*\))");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw InvalidInput("unrecognized gate token '" + text + "'");
  return d(std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), parse_sign(m[4]), parse_sign(m[5]),
           parse_sign(m[6]));
}

std::string to_string(const GateWord& word) {
  std::string out;
  for (const auto& t : word) {
    if (!out.empty()) out += ' ';
    out += t.to_string();
  }
  return out;
}

GateWord parse_word(const std::string& text) {
  std::istringstream is(text);
  GateWord word;
  std::string tok;
  while (is >> tok) word.push_back(GateToken::parse(tok));
  return word;
}

CycInt hadamard_unit_inverse() { return CycInt{-1, 1, -1, -1, 2, -2}; }

ScaledUnitary standard_hadamard() {
  const CycInt v = hadamard_unit_inverse();
  const CycInt w = v.mul_xi_pow(3);
  const CycInt w2 = v.mul_xi_pow(6);
  CycMatrix m{{{v, v, v}, {v, w, w2}, {v, w2, w}}};
  return ScaledUnitary(std::move(m), 3);
}

DiagElement w_gate() { return DiagElement::from_signed(0, 3, 6, 1, 1, 1); }

std::string to_string(GroupLabel label) {
  switch (label) {
    case GroupLabel::C0: return "C0";
    case GroupLabel::C1: return "C1";
    case GroupLabel::C2: return "C2";
    case GroupLabel::C3: return "C3";
    case GroupLabel::CD: return "CD";
  }
  return "?";
}

GroupLabel parse_group_label(const std::string& text) {
  for (auto label : {GroupLabel::C0, GroupLabel::C1, GroupLabel::C2, GroupLabel::C3, GroupLabel::CD})
    if (to_string(label) == text) return label;
  throw InvalidInput("unknown group '" + text + "' (expected C0, C1, C2, C3 or CD)");
}

bool FiniteSubgroup::is_subset_of(const FiniteSubgroup& other) const {
  return std::all_of(elements.begin(), elements.end(), [&](const ProjClass& p) { return other.contains(p); });
}

FiniteSubgroup make_subgroup(GroupLabel label, std::vector<ProjClass> elements) {
  FiniteSubgroup g{label, sorted_unique(std::move(elements)), {}};
  g.members.reserve(g.elements.size() * 2);
  g.members.insert(g.elements.begin(), g.elements.end());
  return g;
}

std::vector<ProjClass> generate_closure(const std::vector<ProjClass>& generators, std::size_t limit) {
  std::unordered_set<ProjClass, ProjClassHash> seen{ProjClass()};
  std::deque<ProjClass> frontier{ProjClass()};
  while (!frontier.empty()) {
    ProjClass x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      ProjClass y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > limit) throw ClosureDiverged(limit);
        frontier.push_back(std::move(y));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

Catalog::Catalog() : Catalog(standard_hadamard()) {}

Catalog::Catalog(ScaledUnitary hadamard) : h_(std::move(hadamard)), h_inv_(inverse(h_)) {}

const Catalog& Catalog::standard() {
  static const Catalog catalog;
  return catalog;
}

int Catalog::conjugated_level(const ScaledUnitary& c) const { return level(h_inv_ * c * h_); }

const FiniteSubgroup& Catalog::group(GroupLabel label) const {
  Slot& slot = groups_[static_cast<std::size_t>(label)];
  std::call_once(slot.once, [&] {
    FiniteSubgroup g = [&] {
      switch (label) {
        case GroupLabel::C0: return enumerate_C0();
        case GroupLabel::C1: return enumerate_Cj(*this, 1);
        case GroupLabel::C2: return enumerate_Cj(*this, 2);
        case GroupLabel::CD: return enumerate_CD(*this);
        case GroupLabel::C3: return enumerate_C3(*this);
      }
      throw std::logic_error("unknown group label");
    }();
    slot.value = std::make_unique<FiniteSubgroup>(std::move(g));
  });
  return *slot.value;
}

ScaledUnitary gate_matrix(const GateToken& token, const Catalog& catalog) {
  if (token.is_h()) return catalog.hadamard();
  return token.diag().matrix();
}

ScaledUnitary evaluate(const GateWord& word, const Catalog& catalog) {
  ScaledUnitary acc;
  for (const auto& t : word) acc = t.is_h() ? acc * catalog.hadamard() : acc.times_diag(t.diag().k);
  return acc;
}

const std::array<std::array<int, 3>, 6>& all_permutations() {
  static const std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  return perms;
}

FiniteSubgroup enumerate_C0() {
  std::vector<ProjClass> out;
  out.reserve(6 * 18 * 18 * 18);
  for (const auto& perm : all_permutations()) {
    const ScaledUnitary p = ScaledUnitary::permutation(perm);
    for (int a = 0; a < 18; ++a)
      for (int b = 0; b < 18; ++b)
        for (int c = 0; c < 18; ++c) out.push_back(canonicalize(p.times_diag({a, b, c})));
  }
  return make_subgroup(GroupLabel::C0, std::move(out));
}

namespace {
FiniteSubgroup filter_C0(const Catalog& catalog, GroupLabel label, int max_level) {
  std::vector<ProjClass> out;
  for (const auto& c : catalog.c0().elements)
    if (catalog.conjugated_level(c.rep()) <= max_level) out.push_back(c);
  return make_subgroup(label, std::move(out));
}
}  // namespace

FiniteSubgroup enumerate_Cj(const Catalog& catalog, int j) {
  if (j != 1 && j != 2) throw std::invalid_argument("enumerate_Cj takes j = 1 or 2");
  return filter_C0(catalog, j == 1 ? GroupLabel::C1 : GroupLabel::C2, 12 - 2 * j);
}

FiniteSubgroup enumerate_CD(const Catalog& catalog) { return filter_C0(catalog, GroupLabel::CD, 6); }

FiniteSubgroup enumerate_C3(const Catalog& catalog) {
  std::vector<ProjClass> gens = catalog.cd().elements;
  gens.push_back(canonicalize(catalog.hadamard()));
  return make_subgroup(GroupLabel::C3, generate_closure(gens));
}

std::vector<DiagElement> hadamard_stabilizer_in_D(const Catalog& catalog) {
  std::vector<DiagElement> out;
  for (int i = 0; i < 18 * 18 * 18; ++i) {
    const DiagElement d = DiagElement::from_index(i);
    if (level(catalog.hadamard_inverse().times_diag(d.k) * catalog.hadamard()) == 0) out.push_back(d);
  }
  return out;
}

std::size_t hadamard_stabilizer_in_C0(const Catalog& catalog) {
  const auto& c0 = catalog.c0().elements;
  return static_cast<std::size_t>(std::count_if(c0.begin(), c0.end(), [&](const ProjClass& c) {
    return catalog.conjugated_level(c.rep()) == 0;
  }));
}

bool M3Report::ok() const {
  return pairwise_distinct && covers_all_permutations &&
         std::all_of(words.begin(), words.end(), [](const auto& w) { return w.matched; });
}

M3Report verify_M3_identity(const Catalog& catalog) {
  std::vector<std::pair<ProjClass, std::array<int, 3>>> perm_classes;
  for (const auto& perm : all_permutations())
    perm_classes.emplace_back(canonicalize(ScaledUnitary::permutation(perm)), perm);

  M3Report report;
  std::vector<ProjClass> values;
  std::vector<std::array<int, 3>> hit;
  for (const auto& [name, word] : m3_words()) {
    PermutationWordCheck check;
    check.word = name;
    const ProjClass value = canonicalize(evaluate(word, catalog));
    values.push_back(value);
    for (const auto& [cls, perm] : perm_classes) {
      if (cls == value) {
        check.matched = true;
        check.permutation = perm;
        hit.push_back(perm);
      }
    }
    report.words.push_back(check);
  }
  report.pairwise_distinct = sorted_unique(values).size() == values.size();
  std::sort(hit.begin(), hit.end());
  hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
  report.covers_all_permutations = hit.size() == 6;
  return report;
}

std::vector<std::pair<std::array<int, 3>, GateWord>> permutation_words() {
  static const auto table = [] {
    std::vector<std::pair<std::array<int, 3>, GateWord>> out;
    const M3Report report = verify_M3_identity(Catalog::standard());
    if (!report.ok()) throw std::logic_error("permutation words do not realize the permutation group");
    const auto words = m3_words();
    for (std::size_t i = 0; i < words.size(); ++i) out.emplace_back(report.words[i].permutation, words[i].word);
    return out;
  }();
  return table;
}

}  // namespace qutrit
