// One line per acceptance criterion; exit status 0 iff every line passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "qutrit/approx.hpp"
#include "qutrit/modred.hpp"
#include "qutrit/verify.hpp"

using namespace qutrit;

namespace {

// Pinned parameters.
constexpr std::uint64_t kSeed = 20240917;
constexpr std::size_t kLevelGapWords = 100000;
constexpr std::size_t kRoundTripWords = 1000;
constexpr int kMaxWordLength = 40;
constexpr int kProbeTargets = 100;
constexpr int kProbeRadius = 3;
constexpr double kSizesBudget = 60.0;
constexpr double kLevelGapBudget = 300.0;
constexpr double kRoundTripBudget = 600.0;
constexpr double kProbeBudget = 900.0;

struct Outcome {
  bool pass;
  std::string details;
};

int failures = 0;

void criterion(int number, const char* name, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0 && elapsed > budget_seconds) {
    o.pass = false;
    o.details += " [over time budget]";
  }
  if (!o.pass) ++failures;
  std::printf("%s %2d %s (%.1f s): %s\n", o.pass ? "PASS" : "FAIL", number, name, elapsed, o.details.c_str());
  std::fflush(stdout);
}

// The shared round-trip corpus for criteria 7 and 10.
std::vector<ProjClass> corpus() {
  std::mt19937_64 rng(kSeed + 1);
  std::vector<ProjClass> out;
  for (std::size_t n = 0; n < kRoundTripWords; ++n) out.push_back(canonicalize(evaluate(random_word(rng, kMaxWordLength))));
  return out;
}

}  // namespace

int main() {
  const Catalog& catalog = Catalog::standard();

  criterion(1, "subgroup sizes", kSizesBudget, [&] {
    const std::array<std::size_t, 5> got{catalog.c0().size(), catalog.c1().size(), catalog.c2().size(),
                                         catalog.c3().size(), catalog.cd().size()};
    const std::array<std::size_t, 5> want{1944, 486, 162, 216, 54};
    std::ostringstream os;
    os << "C0 C1 C2 C3 CD = " << got[0] << ' ' << got[1] << ' ' << got[2] << ' ' << got[3] << ' ' << got[4];
    return Outcome{got == want, os.str()};
  });

  criterion(2, "level identities", 0, [&] {
    const int lh = catalog.hadamard().level();
    const int ls = catalog.conjugated_level(gate_matrix(GateToken::s()));
    const int lt = catalog.conjugated_level(gate_matrix(GateToken::t()));
    return Outcome{lh == 6 && ls == 6 && lt == 8, "l(H)=" + std::to_string(lh) + " l(H^-1SH)=" + std::to_string(ls) +
                                                       " l(H^-1TH)=" + std::to_string(lt)};
  });

  criterion(3, "orbit counts", 0, [&] {
    const std::size_t sd = hadamard_stabilizer_in_D(catalog).size();
    const std::size_t sc = hadamard_stabilizer_in_C0(catalog);
    const std::size_t reps = build_coset_reps(catalog).reps.size();
    const bool ok = sd == 54 && 5832 / sd == 108 && reps == 108 && sc == 18 && 1944 / sc == 108;
    return Outcome{ok, "Stab_D=" + std::to_string(sd) + " D-orbit=" + std::to_string(reps) + " C0-stab=" +
                           std::to_string(sc) + " C0-orbit=" + std::to_string(1944 / std::max<std::size_t>(sc, 1))};
  });

  criterion(4, "permutation words", 0, [&] {
    const M3Report r = verify_M3_identity(catalog);
    std::string d;
    for (const auto& w : r.words) {
      d += w.word + "=";
      for (int p : w.permutation) d += std::to_string(p);
      d += ' ';
    }
    return Outcome{r.ok(), d};
  });

  criterion(5, "level gap", kLevelGapBudget, [&] {
    std::mt19937_64 rng(kSeed);
    std::size_t bad = 0, level0 = 0;
    int max_level = 0;
    for (std::size_t n = 0; n < kLevelGapWords; ++n) {
      const int l = evaluate(random_word(rng, kMaxWordLength), catalog).level();
      if (l != 0 && (l < 6 || l % 2 != 0)) ++bad;
      level0 += l == 0;
      max_level = std::max(max_level, l);
    }
    return Outcome{bad == 0, std::to_string(kLevelGapWords) + " words, levels outside {0,6,8,...}: " +
                                 std::to_string(bad) + ", level 0: " + std::to_string(level0) +
                                 ", max level: " + std::to_string(max_level)};
  });

  criterion(6, "embedding table", 0, [&] {
    const auto v = unit_embedding_table();
    const auto& ref = unit_embedding_reference();
    std::string d;
    bool ok = v.size() == ref.size();
    for (std::size_t i = 0; i < v.size() && i < ref.size(); ++i) {
      const bool m = matches_three_digits(v[i], ref[i]);
      ok = ok && m;
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3g%s ", v[i], m ? "" : "(!)");
      d += buf;
    }
    return Outcome{ok, d};
  });

  const Synthesizer synth(catalog);
  const NormalFormEngine engine(synth);
  std::vector<ProjClass> words;
  std::vector<int> synth_len;

  criterion(7, "synthesis round trip", kRoundTripBudget, [&] {
    words = corpus();
    std::size_t mismatch = 0, shallow = 0, too_long = 0;
    for (const auto& g : words) {
      Factorization f;
      const GateWord w = synth.synthesize(g, f);
      synth_len.push_back(static_cast<int>(w.size()));
      if (!(canonicalize(evaluate(w, catalog)) == g)) ++mismatch;
      for (int d : f.descents) shallow += d < 2;
      too_long += static_cast<int>(w.size()) > g.level() + 8;
    }
    return Outcome{mismatch == 0 && shallow == 0 && too_long == 0,
                   std::to_string(words.size()) + " words, mismatches " + std::to_string(mismatch) +
                       ", descents < 2: " + std::to_string(shallow) + ", length > level + 8: " + std::to_string(too_long)};
  });

  criterion(8, "amalgam uniqueness", 0, [&] {
    const WordBall ball = enumerate_ball(engine, 2);
    std::size_t collisions = 0;
    for (std::size_t i = 1; i < ball.size(); ++i) collisions += ball.entries()[i - 1].key == ball.entries()[i].key;
    return Outcome{ball.size() == 211896 && collisions == 0,
                   std::to_string(ball.size()) + " distinct classes (1944 + 5832 + 204120 = 211896), collisions " +
                       std::to_string(collisions)};
  });

  criterion(9, "mod-19 displays", 0, [&] {
    using Rows = std::array<std::array<int, 3>, 3>;
    const F19Matrix h = reduce(su_normalize(catalog.hadamard()), 0);
    const F19Matrix s = reduce(su_normalize(gate_matrix(GateToken::s())), 0);
    const F19Matrix t = reduce(su_normalize(gate_matrix(GateToken::t())), 0);
    const int sh = projective_scalar(h, F19Matrix{Rows{{{14, 14, 14}, {14, 3, 2}, {14, 2, 3}}}, 0});
    const int ss = projective_scalar(s, F19Matrix{Rows{{{5, 0, 0}, {0, 16, 0}, {0, 0, 5}}}, 0});
    const int st = projective_scalar(t, F19Matrix{Rows{{{4, 0, 0}, {0, 1, 0}, {0, 0, 5}}}, 0});
    const ThetaReport roots = verify_theta_roots();
    return Outcome{sh && ss && st && roots.ok(), "scalars H=" + std::to_string(sh) + " S/xi=" + std::to_string(ss) +
                                                     " T=" + std::to_string(st) + ", roots and psi " +
                                                     (roots.ok() ? "ok" : "FAIL")};
  });

  criterion(10, "length comparisons", 0, [&] {
    if (words.size() != synth_len.size() || words.empty()) return Outcome{false, "round-trip corpus unavailable"};
    std::size_t outside = 0, level_bound = 0;
    int lo = 1 << 30, hi = -(1 << 30);
    for (std::size_t i = 0; i < words.size(); ++i) {
      const int bs = engine.bs_length(words[i]);
      const int diff = synth_len[i] - bs;
      lo = std::min(lo, diff);
      hi = std::max(hi, diff);
      outside += diff < -1 || diff > 7;
      level_bound += words[i].level() > 3 * (bs + 1);
    }
    return Outcome{outside == 0 && level_bound == 0,
                   "len - bs in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], outside [-1,7]: " +
                       std::to_string(outside) + ", level > 3(bs+1): " + std::to_string(level_bound)};
  });

  criterion(11, "covering probe", kProbeBudget, [&] {
    CoverOptions o;
    o.n_targets = kProbeTargets;
    o.r_max = kProbeRadius;
    o.seed = kSeed;
    const CoverReport a = covering_probe(engine, o);
    const CoverReport b = covering_probe(engine, o);
    std::ostringstream ca, cb;
    write_csv(a, ca);
    write_csv(b, cb);
    std::size_t non_monotone = 0;
    for (std::size_t i = 1; i < a.records.size(); ++i)
      if (a.records[i].target_id == a.records[i - 1].target_id &&
          a.records[i].best_distance > a.records[i - 1].best_distance)
        ++non_monotone;
    const bool ok = non_monotone == 0 && a.medians[3] < a.medians[1] && ca.str() == cb.str();
    char buf[200];
    std::snprintf(buf, sizeof buf, "median r=1 %.4f, r=3 %.4f; non-monotone %zu; CSV identical: %s; slope %.4f",
                  a.medians[1], a.medians[3], non_monotone, ca.str() == cb.str() ? "yes" : "no", a.slope);
    return Outcome{ok, buf};
  });

  std::printf("%s: %d of 11 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
