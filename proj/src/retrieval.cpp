#include "kuramem/retrieval.hpp"

#include <future>

#include "kuramem/network.hpp"
#include "kuramem/rng.hpp"
#include "kuramem/spectral.hpp"

namespace kuramem {

void TournamentConfig::validate() const {
  if (!(epsilon_fraction > 0.0 && epsilon_fraction < 1.0)) {
    throw Error(Errc::InvalidConfig, "epsilon_fraction must lie in (0, 1)");
  }
  if (!(overlap_threshold > 0.0 && overlap_threshold < 1.0)) {
    throw Error(Errc::InvalidConfig, "overlap_threshold must lie in (0, 1)");
  }
  if (!(saddle_kick >= 0.0) || max_kicks < 0) {
    throw Error(Errc::InvalidConfig, "saddle_kick and max_kicks must be nonnegative");
  }
  integrator.validate();
}

RetrievalFailure::RetrievalFailure(std::size_t round, std::vector<RoundRecord> completed,
                                   const std::string& what)
    : Error(Errc::NoRetrieval, "round " + std::to_string(round) + ": " + what),
      round_(round),
      completed_(std::move(completed)) {}

PairResult retrieve_pair(const BinaryPattern& xi1, const BinaryPattern& xi2,
                         const GrayPattern& defective, const TournamentConfig& cfg) {
  cfg.validate();
  if (defective.size() != xi1.size()) {
    throw Error(Errc::DimensionMismatch, "defective pattern length differs from memories");
  }
  const double eps = cfg.epsilon_fraction * critical_epsilon_m2(xi1, xi2).value;
  const HebbianNetwork net({xi1, xi2}, eps);

  PairResult result;
  auto& d = result.diagnostics;
  d.epsilon = eps;
  SeededRng kick_rng(cfg.kick_seed);
  PhaseState state = init_from_gray(defective);

  while (true) {
    const Trajectory traj = integrate(net, state, cfg.integrator);
    ++d.integrations;
    d.steps += traj.steps;
    d.converged = traj.converged;
    d.overlaps = {overlap(traj.terminal, xi1), overlap(traj.terminal, xi2)};
    const bool first = d.overlaps[0] > cfg.overlap_threshold;
    const bool second = d.overlaps[1] > cfg.overlap_threshold;
    if (first && second) {
      throw Error(Errc::AmbiguousRetrieval, "both memories exceed the overlap threshold");
    }
    if (first || second) {
      result.winner = first ? 1 : 2;
      return result;
    }
    if (!traj.converged || cfg.saddle_kick == 0.0 || d.kicks >= cfg.max_kicks) {
      throw Error(Errc::NoRetrieval,
                  "terminal overlaps " + std::to_string(d.overlaps[0]) + ", " +
                      std::to_string(d.overlaps[1]) +
                      (traj.converged ? " at a non-memory equilibrium" : " at t_max"));
    }
    state = traj.terminal;
    state.time = 0.0;
    for (double& p : state.phases) p += cfg.saddle_kick * kick_rng.symmetric();
    ++d.kicks;
  }
}

std::vector<Subgroup> subgroup(std::vector<std::size_t> indices, const Pairing& pairing) {
  if (pairing.mode == PairingMode::Seeded) {
    SeededRng rng(pairing.seed);
    rng.shuffle(indices);
  }
  std::vector<Subgroup> out;
  for (std::size_t k = 0; k < indices.size(); k += 2) {
    if (k + 1 < indices.size()) {
      out.push_back({indices[k], indices[k + 1]});
    } else {
      out.push_back({indices[k]});
    }
  }
  return out;
}

RetrievalOutcome tournament(const std::vector<BinaryPattern>& standards,
                            const GrayPattern& defective, const TournamentConfig& cfg) {
  cfg.validate();
  if (standards.empty()) throw Error(Errc::WrongMemoryCount, "no standard patterns");
  for (const auto& s : standards) {
    if (s.size() != defective.size()) {
      throw Error(Errc::DimensionMismatch, "standards and defective pattern differ in length");
    }
  }
  for (std::size_t k = 0; k < standards.size(); ++k)
    for (std::size_t l = k + 1; l < standards.size(); ++l)
      if (sign_equivalent(standards[k], standards[l])) {
        throw Error(Errc::AntipodalMemories, "standards " + std::to_string(k + 1) + " and " +
                                                 std::to_string(l + 1) + " are sign-equivalent");
      }

  std::vector<std::size_t> alive(standards.size());
  for (std::size_t k = 0; k < alive.size(); ++k) alive[k] = k;

  RetrievalOutcome out{standards.front(), 0, {}, 0};
  std::size_t round = 0;
  while (alive.size() > 1) {
    ++round;
    Pairing pairing = cfg.pairing;
    pairing.seed += round;
    RoundRecord rec;
    rec.round = round;
    rec.subgroups = subgroup(alive, pairing);

    std::vector<std::future<PairResult>> pending;
    for (const auto& g : rec.subgroups) {
      if (g.size() != 2) continue;
      const auto launch = cfg.parallel ? std::launch::async : std::launch::deferred;
      pending.push_back(std::async(launch, [&, a = g[0], b = g[1]] {
        return retrieve_pair(standards[a], standards[b], defective, cfg);
      }));
    }

    std::size_t next_pair = 0;
    for (const auto& g : rec.subgroups) {
      if (g.size() == 1) {
        rec.winners.push_back(g[0]);
        continue;
      }
      PairResult r;
      try {
        r = pending[next_pair++].get();
      } catch (const Error& e) {
        if (e.code() != Errc::NoRetrieval) throw;
        // Drain the remaining futures so no worker outlives this frame.
        for (std::size_t k = next_pair; k < pending.size(); ++k) {
          try {
            pending[k].wait();
          } catch (...) {
          }
        }
        out.rounds.push_back(rec);
        throw RetrievalFailure(round, std::move(out.rounds),
                               "pair (" + std::to_string(g[0] + 1) + "," +
                                   std::to_string(g[1] + 1) + "): " + e.what());
      }
      r.diagnostics.members = {g[0], g[1]};
      out.total_integrations += r.diagnostics.integrations;
      rec.winners.push_back(g[r.winner - 1]);
      rec.pairs.push_back(r.diagnostics);
    }
    alive = rec.winners;
    out.rounds.push_back(std::move(rec));
  }
  out.winner_index = alive.front();
  out.winner = standards[out.winner_index];
  return out;
}

}  // namespace kuramem
