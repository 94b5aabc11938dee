#pragma once

// Tournament retrieval over an arbitrary set of standard patterns: standards are
// paired off, each pair is stored in its own two-memory network (where only the
// two memories are stable for eps below the critical value), the defective
// pattern is run through every pair, and the winners go on to the next round
// until one standard remains. The output is always one of the standards.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "kuramem/dynamics.hpp"
#include "kuramem/error.hpp"
#include "kuramem/patterns.hpp"

namespace kuramem {

enum class PairingMode { InOrder, Seeded };

struct Pairing {
  PairingMode mode = PairingMode::InOrder;
  std::uint64_t seed = 0;

  static Pairing in_order() { return {}; }
  static Pairing seeded(std::uint64_t s) { return {PairingMode::Seeded, s}; }
};

struct TournamentConfig {
  /// Per-pair eps = epsilon_fraction * critical_epsilon_m2; must lie in (0, 1).
  double epsilon_fraction = 0.5;
  Pairing pairing;
  double overlap_threshold = 0.999;
  IntegratorConfig integrator;
  /// A run that settles on an equilibrium matching neither memory (e.g. a
  /// sign-flipped input starts exactly on an unstable bipolar state) is restarted
  /// from that state plus seeded uniform noise of this amplitude. 0 disables.
  double saddle_kick = 1e-3;
  std::uint64_t kick_seed = 0;
  int max_kicks = 3;
  /// Resolve the pairs of a round on separate threads. Output is unaffected.
  bool parallel = false;

  void validate() const;
};

struct PairDiagnostics {
  std::array<std::size_t, 2> members{};  // indices into the standard list
  double epsilon = 0.0;
  std::array<double, 2> overlaps{};      // terminal m(xi1), m(xi2)
  std::size_t steps = 0;
  std::size_t integrations = 0;
  int kicks = 0;
  bool converged = false;
};

struct PairResult {
  int winner = 0;  // 1 or 2
  PairDiagnostics diagnostics;
};

/// Throws NoRetrieval if neither terminal overlap exceeds the threshold and
/// AmbiguousRetrieval if both do.
PairResult retrieve_pair(const BinaryPattern& xi1, const BinaryPattern& xi2,
                         const GrayPattern& defective, const TournamentConfig& cfg);

/// One or two indices.
using Subgroup = std::vector<std::size_t>;

/// Pairs consecutive entries, after a seeded shuffle in Seeded mode. An odd
/// count leaves one singleton at the end.
std::vector<Subgroup> subgroup(std::vector<std::size_t> indices, const Pairing& pairing);

struct RoundRecord {
  std::size_t round = 0;  // 1-based
  std::vector<Subgroup> subgroups;
  std::vector<std::size_t> winners;
  std::vector<PairDiagnostics> pairs;  // one per two-member subgroup, in subgroup order
};

struct RetrievalOutcome {
  BinaryPattern winner;
  std::size_t winner_index = 0;
  std::vector<RoundRecord> rounds;
  std::size_t total_integrations = 0;
};

/// NoRetrieval raised inside a tournament; carries the rounds completed so far
/// and the failing round number.
class RetrievalFailure : public Error {
 public:
  RetrievalFailure(std::size_t round, std::vector<RoundRecord> completed, const std::string& what);
  std::size_t round() const noexcept { return round_; }
  const std::vector<RoundRecord>& completed_rounds() const noexcept { return completed_; }

 private:
  std::size_t round_;
  std::vector<RoundRecord> completed_;
};

/// Every round restarts from the original defective pattern. Seeded pairing
/// uses seed + round for round r.
RetrievalOutcome tournament(const std::vector<BinaryPattern>& standards,
                            const GrayPattern& defective, const TournamentConfig& cfg = {});

}  // namespace kuramem
