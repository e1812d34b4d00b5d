#include "qutrit/approx.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qutrit/errors.hpp"

namespace qutrit {

namespace {

struct Monomial {
  std::array<int, 3> perm{};
  std::array<int, 3> exps{};
};

Monomial monomial_of(const ScaledUnitary& c) {
  Monomial m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (c(i, j).is_zero()) continue;
      m.perm[i] = j;
      for (int k = 0; k < 18; ++k)
        if (c(i, j) == CycInt::minus_xi_pow(k)) m.exps[i] = k;
    }
  return m;
}

struct Suffix {
  ScaledUnitary value;
  CompactNormalForm nf;
};

std::vector<Suffix> suffixes(const NormalFormEngine& engine, int r) {
  std::vector<Suffix> out{Suffix{}};
  std::vector<Suffix> frontier{Suffix{}};
  for (int position = 0; position < r; ++position) {
    const int count = position % 2 == 0 ? 4 : 36;
    std::vector<Suffix> next;
    for (const auto& s : frontier)
      for (int index = 1; index < count; ++index) {
        Suffix t{s.value * engine.letter_matrix(position, index), s.nf};
        t.nf.letters[position] = static_cast<std::uint8_t>(index);
        t.nf.length = static_cast<std::uint8_t>(position + 1);
        next.push_back(std::move(t));
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

// |tr(g^* h)|; the distance sqrt(1 - |tr| / 3) is decreasing in it.
double trace_overlap(const ComplexMatrix& g, const ComplexMatrix& h) {
  std::complex<double> tr = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) tr += std::conj(g[k][i]) * h[k][i];
  return std::abs(tr);
}

double fast_distance(const ComplexMatrix& g, const ComplexMatrix& h) {
  return std::sqrt(std::max(0.0, 1.0 - trace_overlap(g, h) / 3.0));
}

double median(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

void stream_ball(const NormalFormEngine& engine, int r, bool joint_embeddings,
                 const std::function<void(const StreamedEntry&)>& visit) {
  if (r < 0) throw std::invalid_argument("ball radius must be nonnegative");
  const auto& c0 = engine.catalog().c0().elements;
  std::vector<Monomial> monomials;
  monomials.reserve(c0.size());
  for (const auto& c : c0) monomials.push_back(monomial_of(c.rep()));

  for (const auto& suffix : suffixes(engine, r)) {
    const CycMatrix& s = suffix.value.num();
    for (std::size_t ci = 0; ci < c0.size(); ++ci) {
      const Monomial& m = monomials[ci];
      CycMatrix num;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) num[i][j] = s[m.perm[i]][j].mul_minus_xi_pow(m.exps[i]);
      const ProjClass element = canonicalize(ScaledUnitary(std::move(num), suffix.value.pi_exp()));
      StreamedEntry entry{&element, suffix.nf, {}};
      entry.nf.c0 = static_cast<std::uint16_t>(ci);
      entry.embeddings[0] = embed(element, 1);
      if (joint_embeddings) {
        entry.embeddings[1] = embed(element, 2);
        entry.embeddings[2] = embed(element, 3);
      }
      visit(entry);
    }
  }
}

WordBall enumerate_ball(const NormalFormEngine& engine, int r, bool joint_embeddings) {
  if (r > kMaxMaterializedRadius) throw BallTooLarge(r);
  BigInt expected = 0;
  for (int k = 0; k <= r; ++k) expected += count_words(k);

  WordBall ball(engine, r);
  std::vector<std::pair<BallEntry, std::array<ComplexMatrix, 2>>> rows;
  rows.reserve(static_cast<std::size_t>(expected));
  stream_ball(engine, r, joint_embeddings, [&](const StreamedEntry& e) {
    rows.push_back({BallEntry{e.element->key(), e.nf, e.embeddings[0]}, {e.embeddings[1], e.embeddings[2]}});
  });
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first.key < b.first.key; });
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].first.key == rows[i - 1].first.key) throw std::logic_error("two normal forms evaluate to the same element");
  if (BigInt(rows.size()) != expected) throw std::logic_error("ball size disagrees with the word count formula");

  ball.entries_.reserve(rows.size());
  if (joint_embeddings) ball.extra_.reserve(rows.size());
  for (auto& [entry, extra] : rows) {
    ball.entries_.push_back(std::move(entry));
    if (joint_embeddings) ball.extra_.push_back(extra);
  }
  return ball;
}

NormalForm WordBall::normal_form(std::size_t i) const {
  const CompactNormalForm& c = entries_.at(i).nf;
  NormalForm nf;
  nf.c0 = engine_->catalog().c0().elements.at(c.c0);
  for (int k = 0; k < c.length; ++k) nf.letters.push_back(c.letters[k]);
  return nf;
}

ProjClass WordBall::element(std::size_t i) const { return engine_->evaluate(normal_form(i)); }

NearestResult nearest(const ComplexMatrix& target, const WordBall& ball) {
  if (ball.size() == 0) throw std::invalid_argument("nearest neighbor in an empty ball");
  // Entries are sorted by key, so keeping the first maximum breaks ties by key.
  std::size_t best = 0;
  double best_overlap = -1.0;
  const auto& entries = ball.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const double overlap = trace_overlap(entries[i].embedding, target);
    if (overlap > best_overlap) {
      best_overlap = overlap;
      best = i;
    }
  }
  return {best, ball.element(best), pu3_distance(entries[best].embedding, target)};
}

ComplexMatrix haar_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  std::array<std::array<std::complex<double>, 3>, 3> cols{};
  for (auto& col : cols)
    for (auto& x : col) {
      const double re = normal(rng);
      const double im = normal(rng);
      x = {re, im};
    }
  // Modified Gram-Schmidt leaves R with a positive real diagonal, which is
  // exactly the phase normalization that makes Q Haar distributed.
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < j; ++i) {
      std::complex<double> dot = 0.0;
      for (int k = 0; k < 3; ++k) dot += std::conj(cols[i][k]) * cols[j][k];
      for (int k = 0; k < 3; ++k) cols[j][k] -= dot * cols[i][k];
    }
    double norm = 0.0;
    for (const auto& x : cols[j]) norm += std::norm(x);
    norm = std::sqrt(norm);
    for (auto& x : cols[j]) x /= norm;
  }
  ComplexMatrix q{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) q[i][j] = cols[j][i];
  return q;
}

CoverReport covering_probe(const NormalFormEngine& engine, const CoverOptions& options) {
  if (options.r_max < 0) throw std::invalid_argument("r_max must be nonnegative");
  if (options.r_max > kMaxMaterializedRadius && !options.allow_large) throw BallTooLarge(options.r_max);
  if (options.n_targets < 0) throw std::invalid_argument("target count must be nonnegative");

  const int nt = options.n_targets;
  const int nr = options.r_max + 1;
  std::mt19937_64 rng(options.seed);
  std::vector<std::array<ComplexMatrix, 3>> targets(nt);
  for (auto& t : targets) {
    t[0] = haar_unitary(rng);
    if (options.joint) {
      t[1] = haar_unitary(rng);
      t[2] = haar_unitary(rng);
    }
  }

  struct Best {
    double score = -1.0;  // overlap, or minus the joint distance
    std::optional<ProjClass> element;
    CompactNormalForm nf;
    ComplexMatrix embedding{};
  };
  // best[t][r] over entries of length <= r; joint[t][r] likewise for the joint distance.
  std::vector<std::vector<Best>> best(nt, std::vector<Best>(nr));
  std::vector<std::vector<double>> joint(nt, std::vector<double>(nr, std::numeric_limits<double>::infinity()));

  auto better = [](const Best& b, double score, const ProjClass& element) {
    if (score != b.score) return score > b.score;
    return element.key() < b.element->key();
  };

  stream_ball(engine, options.r_max, options.joint, [&](const StreamedEntry& e) {
    for (int t = 0; t < nt; ++t) {
      const double overlap = trace_overlap(e.embeddings[0], targets[t][0]);
      double joint_distance = 0.0;
      if (options.joint)
        for (int k = 0; k < 3; ++k) joint_distance = std::max(joint_distance, fast_distance(e.embeddings[k], targets[t][k]));
      for (int r = e.nf.length; r < nr; ++r) {
        Best& b = best[t][r];
        if (!b.element || better(b, overlap, *e.element)) {
          b.score = overlap;
          b.element = *e.element;
          b.nf = e.nf;
          b.embedding = e.embeddings[0];
        }
        if (options.joint) joint[t][r] = std::min(joint[t][r], joint_distance);
      }
    }
  });

  CoverReport report;
  report.options = options;
  const Synthesizer& synth = engine.synthesizer();
  std::vector<std::vector<double>> per_radius(nr);
  for (int t = 0; t < nt; ++t) {
    for (int r = 0; r < nr; ++r) {
      const Best& b = best[t][r];
      CoverRecord rec;
      rec.target_id = t;
      rec.r = r;
      rec.best_distance = pu3_distance(b.embedding, targets[t][0]);
      rec.best_word_len = static_cast<int>(synth.synthesize(*b.element).size());
      rec.bs_len = b.nf.length;
      if (options.joint) rec.joint_distance = joint[t][r];
      per_radius[r].push_back(rec.best_distance);
      report.records.push_back(rec);
    }
  }
  for (const auto& v : per_radius) report.medians.push_back(median(v));

  // Least squares y = slope * x + intercept with x = word length, y = log(1/eps).
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (const auto& rec : report.records) {
    if (rec.best_distance <= 0.0) continue;
    const double x = rec.best_word_len;
    const double y = -std::log(rec.best_distance);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  const double denom = n * sxx - sx * sx;
  if (n >= 2 && denom > 0) {
    report.slope = (n * sxy - sx * sy) / denom;
    report.intercept = (sy - report.slope * sx) / n;
  }
  report.volume_slope = 8.0 * report.slope;
  return report;
}

void write_csv(const CoverReport& report, std::ostream& out) {
  out << "target_id,r,best_distance,best_word_len,bs_len";
  if (report.options.joint) out << ",joint_distance";
  out << '\n';
  char buf[64];
  for (const auto& rec : report.records) {
    std::snprintf(buf, sizeof buf, "%.12e", rec.best_distance);
    out << rec.target_id << ',' << rec.r << ',' << buf << ',' << rec.best_word_len << ',' << rec.bs_len;
    if (rec.joint_distance) {
      std::snprintf(buf, sizeof buf, "%.12e", *rec.joint_distance);
      out << ',' << buf;
    }
    out << '\n';
  }
}

std::string summary(const CoverReport& report) {
  std::ostringstream os;
  char buf[160];
  for (std::size_t r = 0; r < report.medians.size(); ++r) {
    std::snprintf(buf, sizeof buf, "median best distance r=%zu: %.6f\n", r, report.medians[r]);
    os << buf;
  }
  std::snprintf(buf, sizeof buf, "fit log(1/eps) = %.6f * word_len + %.6f\n", report.slope, report.intercept);
  os << buf;
  std::snprintf(buf, sizeof buf, "volume-eps slope (x8): %.6f\n", report.volume_slope);
  os << buf;
  return os.str();
}

}  // namespace qutrit
