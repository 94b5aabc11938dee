#include "kuramem/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "kuramem/dynamics.hpp"
#include "kuramem/error.hpp"
#include "kuramem/network.hpp"
#include "kuramem/pattern_io.hpp"
#include "kuramem/retrieval.hpp"
#include "kuramem/spectral.hpp"

namespace kuramem {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double x) {
  if (x == 0.0) x = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

BinaryPattern load_binary(const std::string& path) {
  const PatternFile f = load_pattern(path);
  if (!f.is_binary()) throw UsageError(path + ": expected a binary (P±1) pattern");
  return f.binary();
}

std::vector<BinaryPattern> load_memories(const std::vector<std::string>& paths) {
  std::vector<BinaryPattern> out;
  for (const auto& p : paths) out.push_back(load_binary(p));
  return out;
}

void print_glyph(std::ostream& out, const BinaryPattern& p, std::size_t width) {
  if (width == 0) width = p.size();
  for (std::size_t i = 0; i < p.size(); ++i) {
    out << (p[i] > 0 ? '#' : '.');
    if ((i + 1) % width == 0) out << '\n';
  }
  if (p.size() % width != 0) out << '\n';
}

void print_spectrum(std::ostream& out, const SpectrumReport& rep) {
  out << "eigenvalue multiplicity label\n";
  for (const auto& e : rep.entries) {
    out << num(e.eigenvalue) << ' ' << e.multiplicity << ' ' << e.label << '\n';
  }
}

struct EpsRange {
  double first, last, step;
};

EpsRange parse_eps_range(const std::string& s) {
  EpsRange r{};
  char tail = 0;
  if (std::sscanf(s.c_str(), "%lf:%lf:%lf%c", &r.first, &r.last, &r.step, &tail) != 3 ||
      !(r.first >= 0.0) || !(r.last >= r.first) || !(r.step > 0.0) || !std::isfinite(r.last)) {
    throw UsageError("--eps-range expects a:b:step with 0 <= a <= b and step > 0");
  }
  return r;
}

// ---- spectrum ----------------------------------------------------------------

struct SpectrumArgs {
  std::vector<std::string> memories;
  std::string pattern;
  double epsilon = 0.0;
};

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out) {
  const HebbianNetwork net(load_memories(a.memories), a.epsilon);
  const BinaryPattern eta = load_binary(a.pattern);
  if (eta.size() != net.dimension()) throw Error(Errc::DimensionMismatch, "pattern length differs from memories");
  const Classification c = classify_with_spectrum(net, eta);

  out << "N " << net.dimension() << '\n';
  out << "M " << net.memory_count() << '\n';
  out << "epsilon " << num(net.epsilon()) << '\n';
  if (const auto k = matching_memory(net, eta)) out << "pattern memory " << (*k + 1) << '\n';
  out << "source " << to_string(c.verdict.source) << '\n';
  print_spectrum(out, c.spectrum);
  out << "lambda_max_nonzero " << num(c.verdict.lambda_max_nonzero) << '\n';
  out << "verdict " << to_string(c.verdict.status) << '\n';
  return kExitOk;
}

// ---- simulate ----------------------------------------------------------------

struct SimulateArgs {
  std::vector<std::string> memories;
  std::string init;
  double epsilon = 0.0;
  IntegratorConfig cfg;
  std::string out_path;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  const HebbianNetwork net(load_memories(a.memories), a.epsilon);
  const GrayPattern init = load_pattern(a.init).gray();
  if (init.size() != net.dimension()) throw Error(Errc::DimensionMismatch, "init length differs from memories");
  const Trajectory traj = integrate(net, init_from_gray(init), a.cfg);

  std::ostream* summary = &out;
  if (a.out_path.empty()) {
    write_trajectory_table(out, traj);
    summary = &err;
  } else {
    std::ofstream f(a.out_path);
    if (!f) throw Error(Errc::IoError, "cannot write " + a.out_path);
    write_trajectory_table(f, traj);
  }
  *summary << "steps " << traj.steps << '\n';
  *summary << "converged " << (traj.converged ? "yes" : "no") << '\n';
  *summary << "t_end " << num(traj.terminal.time) << '\n';
  for (std::size_t k = 0; k < net.memory_count(); ++k) {
    *summary << "m" << (k + 1) << ' ' << num(overlap(traj.terminal, net.memory(k))) << '\n';
  }
  return kExitOk;
}

// ---- retrieve ----------------------------------------------------------------

struct RetrieveArgs {
  std::vector<std::string> standards;
  std::string defective;
  std::uint64_t seed = 0;
  double epsilon_fraction = 0.5;
  std::string pairing = "inorder";
  double saddle_kick = TournamentConfig{}.saddle_kick;
  bool parallel = false;
};

std::vector<std::string> expand_standards(const std::vector<std::string>& given) {
  if (given.size() == 1 && fs::is_directory(given.front())) {
    std::vector<std::string> files;
    for (const auto& e : fs::directory_iterator(given.front())) {
      if (e.is_regular_file() && e.path().extension() == ".pat") files.push_back(e.path().string());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw UsageError(given.front() + ": no .pat files");
    return files;
  }
  return given;
}

void print_round(std::ostream& out, const RoundRecord& rec) {
  out << "round " << rec.round << '\n';
  std::size_t p = 0;
  for (std::size_t g = 0; g < rec.subgroups.size(); ++g) {
    const Subgroup& sg = rec.subgroups[g];
    if (sg.size() == 1) {
      out << "  (" << sg[0] + 1 << ") bye -> " << rec.winners[g] + 1 << '\n';
      continue;
    }
    if (p >= rec.pairs.size()) {
      out << "  (" << sg[0] + 1 << ',' << sg[1] + 1 << ") failed\n";
      continue;
    }
    const PairDiagnostics& d = rec.pairs[p++];
    out << "  (" << sg[0] + 1 << ',' << sg[1] + 1 << ") eps " << num(d.epsilon) << " m "
        << num(d.overlaps[0]) << ' ' << num(d.overlaps[1]) << " steps " << d.steps;
    if (d.kicks > 0) out << " kicks " << d.kicks;
    out << " -> " << rec.winners[g] + 1 << '\n';
  }
}

int cmd_retrieve(const RetrieveArgs& a, std::ostream& out, std::ostream& err) {
  const std::vector<std::string> files = expand_standards(a.standards);
  std::vector<BinaryPattern> standards;
  std::size_t width = 0;
  for (const auto& f : files) {
    const PatternFile pf = load_pattern(f);
    if (!pf.is_binary()) throw UsageError(f + ": standards must be binary patterns");
    standards.push_back(pf.binary());
    width = pf.width;
  }
  const GrayPattern defective = load_pattern(a.defective).gray();

  TournamentConfig cfg;
  cfg.epsilon_fraction = a.epsilon_fraction;
  cfg.pairing = a.pairing == "seeded" ? Pairing::seeded(a.seed) : Pairing::in_order();
  cfg.kick_seed = a.seed;
  cfg.saddle_kick = a.saddle_kick;
  cfg.parallel = a.parallel;

  out << "standards " << files.size() << '\n';
  for (std::size_t k = 0; k < files.size(); ++k) out << "  " << k + 1 << ' ' << files[k] << '\n';
  try {
    const RetrievalOutcome res = tournament(standards, defective, cfg);
    for (const auto& r : res.rounds) print_round(out, r);
    out << "path";
    for (const auto& r : res.rounds) {
      const auto it = std::find_if(r.subgroups.begin(), r.subgroups.end(), [&](const Subgroup& g) {
        return std::find(g.begin(), g.end(), res.winner_index) != g.end();
      });
      out << ' ' << r.round << ':';
      for (std::size_t m : *it) out << (m == it->front() ? "" : ",") << m + 1;
    }
    out << '\n';
    out << "integrations " << res.total_integrations << '\n';
    out << "winner " << res.winner_index + 1 << ' ' << files[res.winner_index] << '\n';
    print_glyph(out, res.winner, width);
    return kExitOk;
  } catch (const RetrievalFailure& e) {
    for (const auto& r : e.completed_rounds()) print_round(out, r);
    err << "error: " << e.what() << '\n';
    return kExitNoRetrieval;
  }
}

// ---- sweep -------------------------------------------------------------------

struct SweepArgs {
  std::vector<std::string> memories;
  std::string pattern;
  std::string range;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const EpsRange r = parse_eps_range(a.range);
  const std::vector<BinaryPattern> mems = load_memories(a.memories);
  const BinaryPattern eta = load_binary(a.pattern);
  const HebbianNetwork base(mems, 0.0);
  if (eta.size() != base.dimension()) throw Error(Errc::DimensionMismatch, "pattern length differs from memories");

  auto lambda_at = [&](double eps) {
    return classify(base.with_epsilon(eps), eta).lambda_max_nonzero;
  };

  const auto count = static_cast<std::size_t>(std::floor((r.last - r.first) / r.step + 1e-9)) + 1;
  std::vector<double> eps(count), lam(count);
  out << "epsilon lambda_max_nonzero verdict\n";
  for (std::size_t k = 0; k < count; ++k) {
    eps[k] = r.first + static_cast<double>(k) * r.step;
    lam[k] = lambda_at(eps[k]);
    out << num(eps[k]) << ' ' << num(lam[k]) << ' ' << to_string(stability_from_lambda(lam[k])) << '\n';
  }

  for (std::size_t k = 0; k + 1 < count; ++k) {
    const bool pos_lo = lam[k] > 0.0;
    if (pos_lo == (lam[k + 1] > 0.0)) continue;
    double lo = eps[k], hi = eps[k + 1];
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
      const double mid = 0.5 * (lo + hi);
      ((lambda_at(mid) > 0.0) == pos_lo ? lo : hi) = mid;
    }
    out << "critical_epsilon " << num(0.5 * (lo + hi)) << '\n';
    return kExitOk;
  }
  out << "critical_epsilon none\n";
  return kExitOk;
}

// ---- corrupt -----------------------------------------------------------------

struct CorruptArgs {
  std::string pattern;
  std::size_t flip = 0;
  double noise = -1.0;
  std::string mask;
  std::uint64_t seed = 0;
  std::string out_path;
};

int cmd_corrupt(const CorruptArgs& a, std::ostream& out, bool flip_set) {
  const PatternFile src = load_pattern(a.pattern);
  const int modes = int(flip_set) + int(a.noise >= 0.0) + int(!a.mask.empty());
  if (modes != 1) throw UsageError("give exactly one of --flip, --noise, --mask");
  Corruption mode;
  if (flip_set) {
    mode = FlipBits{a.flip, a.seed};
  } else if (a.noise >= 0.0) {
    mode = UniformNoise{a.noise, a.seed};
  } else {
    std::size_t r1 = 0, r2 = 0;
    char tail = 0;
    if (std::sscanf(a.mask.c_str(), "%zu:%zu%c", &r1, &r2, &tail) != 2) {
      throw UsageError("--mask expects first:last (0-based rows)");
    }
    mode = MaskRows{r1, r2};
  }
  const PatternFile result{src.width, src.height, corrupt(src.binary(), src.width, mode)};
  if (a.out_path.empty()) {
    out << format_pattern(result);
  } else {
    save_pattern(a.out_path, result);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Oscillatory associative memory with second-harmonic coupling"};
  app.name("kuramem");
  app.require_subcommand(1);

  SpectrumArgs spec;
  auto* sc_spec = app.add_subcommand("spectrum", "Jacobian spectrum and stability at a bipolar pattern");
  sc_spec->add_option("--memories", spec.memories, "Memory pattern files")->required()->expected(1, -1);
  sc_spec->add_option("--pattern", spec.pattern, "Pattern file to examine")->required();
  sc_spec->add_option("--epsilon", spec.epsilon, "Second-harmonic strength")->required();

  SimulateArgs sim;
  auto* sc_sim = app.add_subcommand("simulate", "Integrate the phase dynamics from a pattern");
  sc_sim->add_option("--memories", sim.memories, "Memory pattern files")->required()->expected(1, -1);
  sc_sim->add_option("--init", sim.init, "Initial pattern (binary or gray)")->required();
  sc_sim->add_option("--epsilon", sim.epsilon, "Second-harmonic strength")->required();
  sc_sim->add_option("--dt", sim.cfg.dt, "Step size")->capture_default_str();
  sc_sim->add_option("--tmax", sim.cfg.t_max, "Final time")->capture_default_str();
  sc_sim->add_option("--tol", sim.cfg.stop_tol, "Stop when max |dphi/dt| falls below")->capture_default_str();
  sc_sim->add_option("--stride", sim.cfg.trace_stride, "Steps between table rows")->capture_default_str();
  sc_sim->add_option("--out", sim.out_path, "Write the trajectory table here instead of stdout");

  RetrieveArgs ret;
  auto* sc_ret = app.add_subcommand("retrieve", "Tournament retrieval of a defective pattern");
  sc_ret->add_option("--standards", ret.standards, "Directory of .pat files or list of files")
      ->required()
      ->expected(1, -1);
  sc_ret->add_option("--defective", ret.defective, "Defective pattern (binary or gray)")->required();
  sc_ret->add_option("--seed", ret.seed, "Seed for seeded pairing and saddle kicks")->capture_default_str();
  sc_ret->add_option("--epsilon-fraction", ret.epsilon_fraction, "Per-pair eps as a fraction of the critical value")
      ->capture_default_str();
  sc_ret->add_option("--pairing", ret.pairing, "inorder or seeded")
      ->check(CLI::IsMember({"inorder", "seeded"}))
      ->capture_default_str();
  sc_ret->add_option("--saddle-kick", ret.saddle_kick, "Restart noise for runs stuck on a non-memory equilibrium (0 disables)")
      ->capture_default_str();
  sc_ret->add_flag("--parallel", ret.parallel, "Integrate the pairs of a round concurrently");

  SweepArgs sw;
  auto* sc_sw = app.add_subcommand("sweep", "lambda_max_nonzero over a range of eps");
  sc_sw->add_option("--memories", sw.memories, "Memory pattern files")->required()->expected(1, -1);
  sc_sw->add_option("--pattern", sw.pattern, "Pattern file to examine")->required();
  sc_sw->add_option("--eps-range", sw.range, "a:b:step")->required();

  CorruptArgs cor;
  auto* sc_cor = app.add_subcommand("corrupt", "Write a corrupted gray copy of a binary pattern");
  sc_cor->add_option("--pattern", cor.pattern, "Binary pattern file")->required();
  auto* flip_opt = sc_cor->add_option("--flip", cor.flip, "Negate this many random entries");
  sc_cor->add_option("--noise", cor.noise, "Uniform noise amplitude");
  sc_cor->add_option("--mask", cor.mask, "Zero rows first:last (0-based)");
  sc_cor->add_option("--seed", cor.seed, "Random seed")->capture_default_str();
  sc_cor->add_option("--out", cor.out_path, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    if (const auto subs = app.get_subcommands(); !subs.empty()) {
      err << subs.front()->help();
    } else {
      err << app.help();
    }
    return kExitUsage;
  }

  try {
    if (sc_spec->parsed()) return cmd_spectrum(spec, out);
    if (sc_sim->parsed()) return cmd_simulate(sim, out, err);
    if (sc_ret->parsed()) return cmd_retrieve(ret, out, err);
    if (sc_sw->parsed()) return cmd_sweep(sw, out);
    if (sc_cor->parsed()) return cmd_corrupt(cor, out, flip_opt->count() > 0);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::RangeError:
        return kExitParse;
      case Errc::NoRetrieval:
        return kExitNoRetrieval;
      case Errc::InvalidConfig:
        return kExitUsage;
      default:
        return kExitFailure;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace kuramem
