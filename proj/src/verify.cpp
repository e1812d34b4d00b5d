#include "qutrit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <cmath>
#include <functional>
#include <sstream>

#include "json.hpp"

#include "qutrit/approx.hpp"
#include "qutrit/modred.hpp"
#include "qutrit/nform.hpp"
#include "qutrit/synth.hpp"

namespace qutrit {

namespace {

struct Outcome {
  bool pass;
  std::string details;
};

Outcome expect_size(const Catalog& catalog, GroupLabel label, std::size_t expected) {
  const std::size_t n = catalog.group(label).size();
  return {n == expected, "|" + to_string(label) + "| = " + std::to_string(n) + ", expected " + std::to_string(expected)};
}

Outcome check_units() {
  std::vector<std::string> failed;
  auto require = [&](bool ok, const char* what) {
    if (!ok) failed.push_back(what);
  };
  const CycInt xi = cyc::xi();
  require(CycInt::xi_pow(9).is_one(), "xi^9 = 1");
  require((xi * cyc::xi_inv()).is_one(), "xi xi^-1 = 1");
  require(cyc::sigma() == xi + cyc::xi_inv(), "sigma = xi + xi^-1");
  require(cyc::big_pi() == cyc::pi() * conj(cyc::pi()), "Pi = pi conj(pi)");
  require(norm(cyc::pi()) == 3, "N(pi) = 3");
  require(norm(cyc::u1()) == 1 && norm(cyc::u2()) == 1, "u1, u2 are units");
  require(norm(cyc::psi()) == 19, "N(psi) = 19");
  require(ord_pi(CycInt(3)) == 6, "ord_pi(3) = 6");
  CycInt u = cyc::sqrt_minus3();
  for (int i = 0; i < 3; ++i) u = divide_pi(u);
  require((u * hadamard_unit_inverse()).is_one(), "sqrt(-3) = pi^3 u with u u^-1 = 1");
  if (failed.empty()) return {true, "ring relations hold"};
  std::string d = "failed:";
  for (const auto& f : failed) d += " [" + f + "]";
  return {false, d};
}

Outcome check_embedding_table() {
  const auto values = unit_embedding_table();
  const auto& ref = unit_embedding_reference();
  std::ostringstream os;
  bool ok = true;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const bool m = matches_three_digits(values[i], ref[i]);
    ok = ok && m;
    os << (i ? " " : "") << values[i] << (m ? "" : "(!)");
  }
  return {ok, os.str()};
}

Outcome check_monomial_structure(const Catalog& catalog) {
  std::size_t bad = 0;
  for (const auto& c : catalog.c0().elements)
    if (c.level() != 0 || !c.rep().is_monomial_unit()) ++bad;
  return {bad == 0 && catalog.c0().size() == 1944,
          std::to_string(catalog.c0().size()) + " level-0 monomial classes, " + std::to_string(bad) + " malformed"};
}

Outcome check_m3(const Catalog& catalog) {
  const M3Report report = verify_M3_identity(catalog);
  std::string d;
  for (const auto& w : report.words) {
    d += w.word + "->";
    if (w.matched)
      for (int p : w.permutation) d += std::to_string(p);
    else
      d += "none";
    d += " ";
  }
  return {report.ok(), d + (report.pairwise_distinct ? "distinct" : "not distinct")};
}

Outcome check_cd_structure(const Catalog& catalog) {
  std::vector<ProjClass> gens;
  for (const auto& p : all_permutations()) gens.push_back(canonicalize(ScaledUnitary::permutation(p)));
  gens.push_back(canonicalize(ScaledUnitary::diagonal_units({0, 12, 0})));
  gens.push_back(canonicalize(ScaledUnitary::diagonal_units({0, 0, 12})));
  std::vector<ProjClass> closure = generate_closure(gens);
  std::sort(closure.begin(), closure.end());
  const bool ok = closure == catalog.cd().elements;
  return {ok, "<S3, diag(1,w,1), diag(1,1,w)> has " + std::to_string(closure.size()) + " elements, CD has " +
                  std::to_string(catalog.cd().size())};
}

Outcome check_orbits(const Catalog& catalog) {
  const std::size_t stab_d = hadamard_stabilizer_in_D(catalog).size();
  const std::size_t stab_c0 = hadamard_stabilizer_in_C0(catalog);
  const std::size_t orbit_d = stab_d ? 5832 / stab_d : 0;
  const std::size_t orbit_c0 = stab_c0 ? 1944 / stab_c0 : 0;
  const bool ok = stab_d == 54 && stab_c0 == 18 && orbit_d == 108 && orbit_c0 == 108;
  return {ok, "Stab_D = " + std::to_string(stab_d) + " (orbit " + std::to_string(orbit_d) + "), C0 stabilizer = " +
                  std::to_string(stab_c0) + " (orbit " + std::to_string(orbit_c0) + ")"};
}

Outcome check_level_identities(const Catalog& catalog) {
  const int lh = catalog.hadamard().level();
  const int ls = catalog.conjugated_level(gate_matrix(GateToken::s(), catalog));
  const int lt = catalog.conjugated_level(gate_matrix(GateToken::t(), catalog));
  return {lh == 6 && ls == 6 && lt == 8, "l(H) = " + std::to_string(lh) + ", l(H^-1 S H) = " + std::to_string(ls) +
                                             ", l(H^-1 T H) = " + std::to_string(lt)};
}

Outcome check_s_t_in_c1(const Catalog& catalog) {
  const bool s = catalog.c1().contains(canonicalize(gate_matrix(GateToken::s(), catalog)));
  const bool t = catalog.c1().contains(canonicalize(gate_matrix(GateToken::t(), catalog)));
  return {s && t, std::string("S ") + (s ? "in" : "not in") + " C1, T " + (t ? "in" : "not in") + " C1"};
}

Outcome check_roundtrip(const Catalog& catalog, const VerifyOptions& options) {
  const Synthesizer synth(catalog);
  std::mt19937_64 rng(options.seed + 1);
  std::size_t mismatch = 0, shallow = 0, too_long = 0;
  int max_level = 0;
  for (std::size_t n = 0; n < options.roundtrip_samples; ++n) {
    const ProjClass g = canonicalize(evaluate(random_word(rng), catalog));
    Factorization f;
    const GateWord w = synth.synthesize(g, f);
    if (!(canonicalize(evaluate(w, catalog)) == g)) ++mismatch;
    for (int d : f.descents)
      if (d < 2) ++shallow;
    if (static_cast<int>(w.size()) > g.level() + 8) ++too_long;
    max_level = std::max(max_level, g.level());
  }
  std::ostringstream os;
  os << options.roundtrip_samples << " words, max level " << max_level << ", mismatches " << mismatch
     << ", shallow descents " << shallow << ", over-length " << too_long;
  return {mismatch == 0 && shallow == 0 && too_long == 0, os.str()};
}

Outcome check_bs_lengths(const Catalog& catalog, const VerifyOptions& options) {
  const Synthesizer synth(catalog);
  const NormalFormEngine engine(synth);
  std::mt19937_64 rng(options.seed + 1);
  std::size_t outside = 0, level_bound = 0, not_round = 0;
  for (std::size_t n = 0; n < options.roundtrip_samples; ++n) {
    const ProjClass g = canonicalize(evaluate(random_word(rng), catalog));
    const NormalForm nf = engine.normal_form(g);
    const int bs = nf.length();
    const int len = static_cast<int>(synth.synthesize(g).size());
    if (len < bs - 1 || len > bs + 7) ++outside;
    if (g.level() > 3 * (bs + 1)) ++level_bound;
    if (!(engine.evaluate(nf) == g)) ++not_round;
  }
  std::ostringstream os;
  os << options.roundtrip_samples << " words, length outside [bs-1, bs+7]: " << outside
     << ", level > 3(bs+1): " << level_bound << ", normal-form mismatches: " << not_round;
  return {outside == 0 && level_bound == 0 && not_round == 0, os.str()};
}

Outcome check_nform_counts(const Catalog& catalog) {
  const bool formula = count_words(0) == 1944 && count_words(1) == 5832 && count_words(2) == 204120;
  const Synthesizer synth(catalog);
  const NormalFormEngine engine(synth);
  const WordBall ball = enumerate_ball(engine, 2);
  const bool ok = formula && ball.size() == 211896;
  return {ok, "count_words(0..2) = 1944, 5832, 204120; ball of radius 2 has " + std::to_string(ball.size()) +
                  " distinct classes"};
}

Outcome check_modred_displays(const Catalog& catalog) {
  using Rows = std::array<std::array<int, 3>, 3>;
  const Rows h{{{14, 14, 14}, {14, 3, 2}, {14, 2, 3}}};
  const Rows s{{{5, 0, 0}, {0, 16, 0}, {0, 0, 5}}};
  const Rows t{{{4, 0, 0}, {0, 1, 0}, {0, 0, 5}}};
  const F19Matrix rh = reduce(su_normalize(catalog.hadamard()), 0);
  const F19Matrix rs = reduce(su_normalize(gate_matrix(GateToken::s(), catalog)), 0);
  const F19Matrix rt = reduce(su_normalize(gate_matrix(GateToken::t(), catalog)), 0);
  const int sh = projective_scalar(rh, F19Matrix{h, 0});
  const int ss = projective_scalar(rs, F19Matrix{s, 0});
  const int st = projective_scalar(rt, F19Matrix{t, 0});
  const bool dets = rh.determinant() == 1 && rs.determinant() == 1 && rt.determinant() == 1;
  return {sh && ss && st && dets, "scalars H:" + std::to_string(sh) + " S/xi:" + std::to_string(ss) +
                                      " T:" + std::to_string(st) + (dets ? ", determinants 1" : ", determinant mismatch")};
}

Outcome check_theta() {
  const ThetaReport r = verify_theta_roots();
  return {r.ok(), std::string("roots 4,16,9: ") + (r.roots[0] && r.roots[1] && r.roots[2] ? "yes" : "no") +
                      ", theta0(psi) = 0: " + (r.psi_vanishes ? "yes" : "no")};
}

Outcome check_level_gap(const Catalog& catalog, const VerifyOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::size_t gaps = 0, non_monomial = 0, level0 = 0;
  std::map<int, std::size_t> histogram;
  for (std::size_t n = 0; n < options.level_gap_samples; ++n) {
    const ScaledUnitary g = evaluate(random_word(rng), catalog);
    const int l = g.level();
    ++histogram[l];
    if (l == 2 || l == 4) ++gaps;
    if (l == 0) {
      ++level0;
      if (!g.is_monomial_unit()) ++non_monomial;
    }
  }
  std::ostringstream os;
  os << options.level_gap_samples << " words, levels 2 or 4: " << gaps << ", level 0: " << level0
     << " (non-monomial " << non_monomial << "), levels seen:";
  int shown = 0;
  for (const auto& [l, c] : histogram) {
    if (shown++ == 8) {
      os << " ...";
      break;
    }
    os << ' ' << l;
  }
  return {gaps == 0 && non_monomial == 0, os.str()};
}

struct Check {
  std::string id;
  std::function<Outcome(const Catalog&, const VerifyOptions&)> run;
};

const std::vector<Check>& checks() {
  static const std::vector<Check> list = {
      {"cyclo.units", [](const Catalog&, const VerifyOptions&) { return check_units(); }},
      {"embed.table", [](const Catalog&, const VerifyOptions&) { return check_embedding_table(); }},
      {"monomial.structure", [](const Catalog& c, const VerifyOptions&) { return check_monomial_structure(c); }},
      {"m3.words", [](const Catalog& c, const VerifyOptions&) { return check_m3(c); }},
      {"sizes.C0", [](const Catalog& c, const VerifyOptions&) { return expect_size(c, GroupLabel::C0, 1944); }},
      {"sizes.C1", [](const Catalog& c, const VerifyOptions&) { return expect_size(c, GroupLabel::C1, 486); }},
      {"sizes.C2", [](const Catalog& c, const VerifyOptions&) { return expect_size(c, GroupLabel::C2, 162); }},
      {"sizes.C3", [](const Catalog& c, const VerifyOptions&) { return expect_size(c, GroupLabel::C3, 216); }},
      {"sizes.CD", [](const Catalog& c, const VerifyOptions&) { return expect_size(c, GroupLabel::CD, 54); }},
      {"cd.structure", [](const Catalog& c, const VerifyOptions&) { return check_cd_structure(c); }},
      {"orbits", [](const Catalog& c, const VerifyOptions&) { return check_orbits(c); }},
      {"levels.identities", [](const Catalog& c, const VerifyOptions&) { return check_level_identities(c); }},
      {"gates.s_t_in_c1", [](const Catalog& c, const VerifyOptions&) { return check_s_t_in_c1(c); }},
      {"synth.roundtrip", check_roundtrip},
      {"nform.lengths", check_bs_lengths},
      {"nform.counts", [](const Catalog& c, const VerifyOptions&) { return check_nform_counts(c); }},
      {"modred.displays", [](const Catalog& c, const VerifyOptions&) { return check_modred_displays(c); }},
      {"modred.theta", [](const Catalog&, const VerifyOptions&) { return check_theta(); }},
      {"levels.gap", check_level_gap},
  };
  return list;
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", s);
  return buf;
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& c : checks()) out.push_back(c.id);
    return out;
  }();
  return ids;
}

std::vector<CheckResult> run_all(const Catalog& catalog, const VerifyOptions& options) {
  std::vector<CheckResult> results;
  for (const auto& check : checks()) {
    if (check.id.rfind(options.filter, 0) != 0) continue;
    CheckResult r;
    r.id = check.id;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = check.run(catalog, options);
      r.pass = o.pass;
      r.details = o.details;
    } catch (const std::exception& e) {
      r.pass = false;
      r.details = std::string("exception: ") + e.what();
    }
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

std::string format_text(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  for (const auto& r : results)
    os << (r.pass ? "PASS " : "FAIL ") << r.id << " (" << format_seconds(r.elapsed_seconds) << " s): " << r.details
       << '\n';
  return os.str();
}

std::string format_json(const std::vector<CheckResult>& results, const VerifyOptions& options) {
  nlohmann::ordered_json j;
  j["seed"] = options.seed;
  j["level_gap_samples"] = options.level_gap_samples;
  j["roundtrip_samples"] = options.roundtrip_samples;
  j["filter"] = options.filter;
  j["passed"] = all_passed(results);
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& r : results)
    arr.push_back({{"id", r.id}, {"status", r.pass ? "pass" : "fail"}, {"details", r.details},
                   {"elapsed_seconds", r.elapsed_seconds}});
  return j.dump(2) + "\n";
}

GateWord random_word(std::mt19937_64& rng, int max_length) {
  std::uniform_int_distribution<int> length(1, max_length);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> diag(0, 18 * 18 * 18 - 1);
  const int n = length(rng);
  GateWord w;
  w.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (coin(rng))
      w.push_back(GateToken::h());
    else
      w.push_back(GateToken::d(DiagElement::from_index(diag(rng))));
  }
  return w;
}

std::vector<double> unit_embedding_table() {
  const CycInt pi2 = cyc::pi() * cyc::pi();
  std::vector<double> out;
  for (const CycInt& eta : {cyc::u1(), cyc::u2(), cyc::pi(), pi2}) {
    const CycInt r = conj(eta) * eta;
    for (int i = 1; i <= 3; ++i) out.push_back(evaluate(r, embedding_exponent(i)).real());
  }
  return out;
}

const std::vector<double>& unit_embedding_reference() {
  static const std::vector<double> ref = {3.53, 2.35, 0.121, 2.35, 0.121, 3.53, 0.468, 1.65, 3.88, 0.219, 2.73, 15.0};
  return ref;
}

bool matches_three_digits(double x, double reference) {
  if (x <= 0 || reference <= 0) return false;
  const double scale = std::pow(10.0, std::floor(std::log10(reference)) - 2);
  return std::llround(x / scale) == std::llround(reference / scale);
}

}  // namespace qutrit
