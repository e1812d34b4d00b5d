#pragma once

// Word balls in Bass-Serre length and an empirical covering probe against
// Haar-random targets in PU(3).

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qutrit/nform.hpp"

namespace qutrit {

inline constexpr int kMaxMaterializedRadius = 3;

/// A normal form c0 t1 ... tr stored compactly: c0 indexes the sorted C0
/// element list, letters are as in NormalForm.
struct CompactNormalForm {
  std::uint16_t c0 = 0;
  std::uint8_t length = 0;
  std::array<std::uint8_t, 4> letters{};
};

struct BallEntry {
  std::string key;  // ProjClass::key() of the element
  CompactNormalForm nf;
  ComplexMatrix embedding{};  // embedding index 1
};

class WordBall {
 public:
  WordBall(const NormalFormEngine& engine, int r) : engine_(&engine), r_(r) {}

  int radius() const { return r_; }
  std::size_t size() const { return entries_.size(); }
  /// Entries sorted by key; keys are pairwise distinct.
  const std::vector<BallEntry>& entries() const { return entries_; }
  /// Embeddings under indices 2 and 3, parallel to entries(); empty unless the
  /// ball was enumerated with joint embeddings.
  const std::vector<std::array<ComplexMatrix, 2>>& extra_embeddings() const { return extra_; }

  NormalForm normal_form(std::size_t i) const;
  ProjClass element(std::size_t i) const;
  const NormalFormEngine& engine() const { return *engine_; }

 private:
  friend WordBall enumerate_ball(const NormalFormEngine&, int, bool);
  const NormalFormEngine* engine_;
  int r_;
  std::vector<BallEntry> entries_;
  std::vector<std::array<ComplexMatrix, 2>> extra_;
};

/// All normal forms of length <= r, evaluated exactly, deduplicated by
/// projective class and checked against the count formula (throws
/// std::logic_error on a collision). Throws BallTooLarge when r > 3.
WordBall enumerate_ball(const NormalFormEngine& engine, int r, bool joint_embeddings = false);

/// Visits every normal form of length <= r without materializing the ball.
/// No radius guard; the caller opts in.
struct StreamedEntry {
  const ProjClass* element;
  CompactNormalForm nf;
  std::array<ComplexMatrix, 3> embeddings;  // only index 0 filled unless joint
};
void stream_ball(const NormalFormEngine& engine, int r, bool joint_embeddings,
                 const std::function<void(const StreamedEntry&)>& visit);

struct NearestResult {
  std::size_t index = 0;
  ProjClass element;
  double distance = 0.0;
};

/// Exhaustive nearest neighbor under pu3_distance in the first embedding.
/// Ties are broken by the smaller key, so the result does not depend on the
/// iteration order.
NearestResult nearest(const ComplexMatrix& target, const WordBall& ball);

/// Haar-random unitary: QR of a complex Gaussian matrix by Gram-Schmidt,
/// with the phases of R's diagonal folded into Q.
ComplexMatrix haar_unitary(std::mt19937_64& rng);

struct CoverRecord {
  int target_id = 0;
  int r = 0;
  double best_distance = 0.0;
  int best_word_len = 0;
  int bs_len = 0;
  std::optional<double> joint_distance;  // max over the three embeddings
};

struct CoverOptions {
  int n_targets = 100;
  int r_max = 3;
  std::uint64_t seed = 1;
  bool joint = false;
  /// Permits r_max > 3 through a streamed scan.
  bool allow_large = false;
};

struct CoverReport {
  CoverOptions options;
  std::vector<CoverRecord> records;  // ordered by (target_id, r)
  /// Least-squares fit of log(1/best_distance) against best_word_len.
  double slope = 0.0;
  double intercept = 0.0;
  /// The same slope with epsilon measured as a volume (dimension 8).
  double volume_slope = 0.0;
  /// Median best distance per radius, index r.
  std::vector<double> medians;
};

CoverReport covering_probe(const NormalFormEngine& engine, const CoverOptions& options);

/// CSV with header target_id,r,best_distance,best_word_len,bs_len and, for
/// joint probes, a trailing joint_distance column.
void write_csv(const CoverReport& report, std::ostream& out);
std::string summary(const CoverReport& report);

}  // namespace qutrit
