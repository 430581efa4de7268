// Command-line front end: model/irrep/grid configuration, sweeps,
// exceptional-point scans, consistency checks, orbit classification and
// matrix dumps, with CSV emission and a run manifest.
//
// Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 check failure.

#include "symspec/banded.hpp"
#include "symspec/basis.hpp"
#include "symspec/eigensolver.hpp"
#include "symspec/hamiltonian.hpp"
#include "symspec/pointgroup.hpp"
#include "symspec/spectra.hpp"
#include "symspec/util.hpp"
#include "symspec/version.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace symspec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitCheckFailure = 3;

struct RunConfig {
  std::string model = "harmonic";
  int limit = -1;  // -1: resolve per model (20 harmonic, 16 quartic)
  std::string irrep = "all";
  double g_min = 0.0;
  double g_max = 1.0;
  int steps = 200;
  double tol_im = kDefaultTolIm;
  double bisect_width = 1e-6;
  double energy_window = -1.0;  // -1: half the trusted spectral range
  std::string out_dir = "out";
  int threads = 1;
  bool inject_fault = false;

  int resolved_limit() const {
    if (limit >= 0) return limit;
    return model == "harmonic" ? 20 : 16;
  }

  ModelSpec model_spec(double g) const {
    return model == "harmonic" ? ModelSpec::harmonic(g, resolved_limit())
                               : ModelSpec::quartic(g, resolved_limit());
  }

  double resolved_window() const {
    if (energy_window > 0.0) return energy_window;
    if (model == "harmonic") return (2.0 * resolved_limit() + 3.0) / 2.0;
    // quartic: half the largest trusted H0 eigenvalue sum (3 * e_max/2)
    const auto e = quartic_1d_eigenvalues(resolved_limit(), resolved_limit() / 2);
    return e.empty() ? 10.0 : 1.5 * e.back();
  }

  std::vector<std::string> irrep_names() const {
    if (irrep == "all") return {"A1", "A2", "E", "T1", "T2"};
    return {irrep};
  }
};

void write_manifest(const RunConfig& cfg, const BlockAssembler* assembler,
                    const std::string& command) {
  std::ofstream os(fs::path(cfg.out_dir) / "manifest.txt");
  os << "tool=symspec " << kVersion << "\n";
  os << "command=" << command << "\n";
  os << "model=" << cfg.model << "\n";
  os << "limit=" << cfg.resolved_limit() << "\n";
  os << "gmin=" << cfg.g_min << "\n";
  os << "gmax=" << cfg.g_max << "\n";
  os << "steps=" << cfg.steps << "\n";
  os << "tol-im=" << cfg.tol_im << "\n";
  os << "bisect-width=" << cfg.bisect_width << "\n";
  os << "threads=" << cfg.threads << "\n";
  os << "irrep=" << cfg.irrep << "\n";
  if (assembler) {
    int total = 0;
    for (const auto& name : {"A1", "A2", "E", "T1", "T2"}) {
      const int n = int(assembler->basis(assembler->group().irrep(name)).size());
      os << "dim_" << name << "=" << n << "\n";
      total += n;
    }
    os << "dim_total=" << total << "\n";
    os << "dim_full=" << assembler->states().size() << "\n";
  }
}

int cmd_spectrum(const RunConfig& cfg) {
  fs::create_directories(cfg.out_dir);
  const SweepGrid grid(cfg.g_min, cfg.g_max, cfg.steps);
  BlockAssembler assembler(cfg.model_spec(0.0));
  assembler.prime_all();
  write_manifest(cfg, &assembler, "spectrum");

  std::ofstream combined(fs::path(cfg.out_dir) / ("im_e_" + cfg.model + ".csv"));
  combined << "g,irrep,branch,re,im\n";

  for (const std::string& name : cfg.irrep_names()) {
    const Irrep& irrep = assembler.group().irrep(name);
    const fs::path file =
        fs::path(cfg.out_dir) / ("spectrum_" + cfg.model + "_" + name + ".csv");
    std::ofstream os(file);
    if (assembler.basis(irrep).empty()) {
      os << "g,irrep,branch,re,im\n";  // irrep absent at this truncation
      continue;
    }
    const std::vector<SpectrumSlice> slices = sweep(assembler, irrep, grid, cfg.threads);
    const std::vector<BranchTrack> tracks = track(slices, name);
    write_sweep_csv(os, name, slices, tracks);

    std::ostringstream rows;
    write_sweep_csv(rows, name, slices, tracks);
    std::string text = rows.str();
    combined << text.substr(text.find('\n') + 1);  // drop per-irrep header

    int invalid = 0;
    for (const auto& s : slices) invalid += s.valid ? 0 : 1;
    std::cout << "spectrum " << cfg.model << " " << name << ": "
              << assembler.basis(irrep).size() << " branches, "
              << slices.size() << " grid points";
    if (invalid) std::cout << ", " << invalid << " invalid (solver failure)";
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_exceptional(const RunConfig& cfg) {
  fs::create_directories(cfg.out_dir);
  const SweepGrid grid(cfg.g_min, cfg.g_max, cfg.steps);
  BlockAssembler assembler(cfg.model_spec(0.0));
  assembler.prime_all();
  BlockAssembler larger(cfg.model_spec(0.0).with_limit(cfg.resolved_limit() + 4));
  write_manifest(cfg, &assembler, "exceptional");

  const double window = cfg.resolved_window();
  std::vector<ExceptionalPoint> all;
  for (const std::string& name : cfg.irrep_names()) {
    const Irrep& irrep = assembler.group().irrep(name);
    if (assembler.basis(irrep).empty()) continue;
    const std::vector<SpectrumSlice> slices = sweep(assembler, irrep, grid, cfg.threads);
    const std::vector<BranchTrack> low =
        tracks_below(track(slices, name), window);
    if (low.size() < 2) continue;
    std::vector<ExceptionalPoint> eps = find_exceptional(
        low, block_solver(assembler, irrep), cfg.tol_im, cfg.bisect_width);
    const BlockSolveFn solve_larger = block_solver(larger, irrep);
    for (ExceptionalPoint& ep : eps)
      ep.converged = check_ep_converged(ep, solve_larger, cfg.tol_im);
    all.insert(all.end(), eps.begin(), eps.end());
  }
  std::sort(all.begin(), all.end(),
            [](const ExceptionalPoint& a, const ExceptionalPoint& b) {
              return a.g_c < b.g_c;
            });

  std::ofstream os(fs::path(cfg.out_dir) / ("eps_" + cfg.model + ".csv"));
  write_ep_csv(os, all);

  const PhaseTransitionEstimate est = phase_transition_estimate(all, window);
  std::cout << "exceptional " << cfg.model << ": " << all.size()
            << " EPs recorded (window |E| <= " << window << ")\n";
  if (est.no_converged_ep) {
    std::cout << "g_PT estimate: none (no converged EP in window)\n";
  } else {
    std::cout << "g_PT estimate: " << est.g_pt << " from " << est.eps_in_window
              << " converged EPs";
    if (est.window_sensitive)
      std::cout << " [flag: smaller g_c outside window - estimate is "
                   "window-relative, transition location unresolved]";
    std::cout << "\n";
  }
  return kExitOk;
}

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

int cmd_check(const RunConfig& cfg) {
  std::vector<CheckResult> results;
  const bool harmonic = cfg.model == "harmonic";
  // oracle-sized truncation unless the user pinned one
  const int limit = cfg.limit >= 0 ? cfg.limit : (harmonic ? 8 : 6);
  const ModelSpec at_zero = harmonic ? ModelSpec::harmonic(0.0, limit)
                                     : ModelSpec::quartic(0.0, limit);

  // 1. first-order selection rule on degenerate multiplets
  {
    const FirstOrderReport rep = first_order_check(at_zero, 10);
    double worst = 0.0;
    for (const auto& e : rep.entries) worst = std::max(worst, e.max_abs);
    std::ostringstream d;
    d << rep.entries.size() << " multiplets, max |<m|xyz|n>| = " << worst;
    results.push_back({"first-order corrections vanish", rep.all_pass, d.str()});
  }

  // 2. cross-irrep mixing
  {
    BlockAssembler assembler(at_zero.with_g(1.0));
    assembler.prime_all();
    const auto& ops = assembler.operators();
    double worst = 0.0;
    const auto irreps = assembler.group().table().irreps;
    for (std::size_t a = 0; a < irreps.size(); ++a)
      for (std::size_t b = a + 1; b < irreps.size(); ++b)
        for (const SymVector& u : assembler.basis(irreps[a]))
          for (const SymVector& v : assembler.basis(irreps[b])) {
            double h0 = ops.h0_element(u, v);
            double w = ops.xyz_element(u, v);
            if (cfg.inject_fault) h0 += 1e-3;  // deliberate corruption, test aid
            worst = std::max(worst, std::max(std::abs(h0), std::abs(w)));
          }
    std::ostringstream d;
    d << "max cross-irrep |<u|H|v>| = " << worst;
    results.push_back({"functions of different symmetry do not mix", worst < 1e-12,
                       d.str()});
  }

  // 3. block spectra against the unprojected full matrix
  {
    const double g = 0.3;
    BlockAssembler assembler(at_zero.with_g(g));
    assembler.prime_all();
    std::vector<std::complex<double>> block_vals;
    for (const Irrep& irrep : assembler.group().table().irreps) {
      if (assembler.basis(irrep).empty()) continue;
      const Eigen::VectorXcd v = eig_all(assembler.matrix(irrep, g)).values;
      block_vals.insert(block_vals.end(), v.data(), v.data() + v.size());
    }
    const Eigen::VectorXcd full = eig_all(assemble_full(at_zero.with_g(g))).values;
    double worst = 0.0;
    if (full.size() != int(block_vals.size())) {
      worst = std::numeric_limits<double>::infinity();
    } else {
      std::vector<bool> used(block_vals.size(), false);
      for (int i = 0; i < full.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        int bj = -1;
        for (std::size_t j = 0; j < block_vals.size(); ++j) {
          if (used[j]) continue;
          const double dist = std::abs(full(i) - block_vals[j]);
          if (dist < best) {
            best = dist;
            bj = int(j);
          }
        }
        used[std::size_t(bj)] = true;
        worst = std::max(worst, best / (1.0 + std::abs(full(i))));
      }
    }
    std::ostringstream d;
    d << "n=" << full.size() << ", max matched deviation = " << worst;
    results.push_back({"block spectra equal full-matrix spectrum", worst < 1e-8,
                       d.str()});
  }

  // 4. dynamical-symmetry commutator (quartic only)
  if (!harmonic) {
    const int clim = std::max(limit, 12);
    const TruncationPolicy pol = TruncationPolicy::per_mode(clim);
    const auto [o1, o2] = dynamical_operators(pol);
    const std::vector<ModeIndex> states = enumerate_states(pol);
    Eigen::MatrixXd h0(states.size(), states.size());
    {
      const ModelSpec m = ModelSpec::quartic(0.0, clim);
      h0 = assemble_full(m).real();
    }
    const Eigen::MatrixXd comm = o1 * h0 - h0 * o1;
    double worst = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i)
      for (std::size_t j = 0; j < states.size(); ++j) {
        const ModeIndex& a = states[i];
        const ModeIndex& b = states[j];
        const int interior = clim - 4;
        if (std::max({a.m, a.n, a.k}) > interior) continue;
        if (std::max({b.m, b.n, b.k}) > interior) continue;
        worst = std::max(worst, std::abs(comm(long(i), long(j))));
      }
    std::ostringstream d;
    d << "per-mode limit " << clim << ", interior max |[O1,H0]| = " << worst;
    results.push_back({"dynamical operators commute with H0", worst < 1e-10,
                       d.str()});
  }

  bool all = true;
  for (const CheckResult& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.detail
              << ")\n";
    all = all && r.pass;
  }
  return all ? kExitOk : kExitCheckFailure;
}

/// Orbit pattern: three comma-separated tokens, each `2x`, `2x+1` or a
/// literal integer; equal letters mean equal indices, distinct letters get
/// distinct values.
std::vector<ModeIndex> parse_orbit_pattern(const std::string& text) {
  std::vector<int> values;
  std::map<char, int> letter_value;
  int next_value = 0;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.empty()) throw std::invalid_argument("orbit: empty token");
    if (std::isdigit(static_cast<unsigned char>(token[0])) &&
        token.find_first_not_of("0123456789") == std::string::npos) {
      values.push_back(std::stoi(token));
      continue;
    }
    bool odd = false;
    std::string base = token;
    if (base.size() > 2 && base.substr(base.size() - 2) == "+1") {
      odd = true;
      base = base.substr(0, base.size() - 2);
    }
    if (base.size() != 2 || base[0] != '2' ||
        !std::isalpha(static_cast<unsigned char>(base[1])))
      throw std::invalid_argument("orbit: token '" + token +
                                  "' is not 2<letter>, 2<letter>+1 or an integer");
    const char letter = base[1];
    if (letter_value.find(letter) == letter_value.end())
      letter_value[letter] = next_value++;
    values.push_back(2 * letter_value[letter] + (odd ? 1 : 0));
  }
  if (values.size() != 3)
    throw std::invalid_argument("orbit: need exactly three comma-separated tokens");
  return orbit_states(ModeIndex{values[0], values[1], values[2]});
}

int cmd_classify(const std::string& group_name, const std::string& orbit,
                 int level, const std::string& branch) {
  if (!branch.empty()) {
    std::cout << branch << " -> " << branch_to_td(branch) << "\n";
    return kExitOk;
  }
  const PointGroup& group =
      group_name == "Oh" ? PointGroup::oh() : PointGroup::td();
  std::vector<ModeIndex> states;
  std::string what;
  if (!orbit.empty()) {
    states = parse_orbit_pattern(orbit);
    what = "orbit " + orbit;
  } else if (level >= 0) {
    states = level_states(level);
    what = "level nu=" + std::to_string(level);
  } else {
    throw std::invalid_argument("classify: need --orbit, --level or --branch");
  }
  const auto content = irrep_content(states, group);
  std::cout << what << " (" << states.size() << " states, "
            << (group_name == "Oh" ? "Oh" : "Td") << "): ";
  bool first = true;
  for (const auto& [irrep, count] : content)
    for (int c = 0; c < count; ++c) {
      std::cout << (first ? "" : ", ") << irrep.name;
      first = false;
    }
  std::cout << "\n";
  if (group_name == "Oh") {
    std::cout << "branches to Td: ";
    first = true;
    for (const auto& [irrep, count] : content)
      for (int c = 0; c < count; ++c) {
        std::cout << (first ? "" : ", ") << branch_to_td(irrep.name);
        first = false;
      }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_dump_matrix(const RunConfig& cfg, double g) {
  const ModelSpec model = cfg.model_spec(g);
  const std::string name = cfg.irrep == "all" ? "A1" : cfg.irrep;
  const HamiltonianBlock block =
      assemble_block(model, PointGroup::td().irrep(name));
  if (cfg.out_dir.empty()) {
    write_matrix_dump(std::cout, block, g);
  } else {
    fs::create_directories(cfg.out_dir);
    std::ofstream os(fs::path(cfg.out_dir) /
                     ("matrix_" + cfg.model + "_" + name + ".txt"));
    write_matrix_dump(os, block, g);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry-adapted spectra of PT-symmetric 3D oscillators"};
  app.set_version_flag("--version", std::string(kVersion));
  app.set_config("--config", "", "flat key=value config file mirroring flag names");
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--model", cfg.model, "harmonic | quartic")
      ->check(CLI::IsMember({"harmonic", "quartic"}))
      ->capture_default_str();
  app.add_option("--limit", cfg.limit,
                 "truncation limit (default 20 harmonic / 16 quartic per mode)");
  app.add_option("--irrep", cfg.irrep, "A1 | A2 | E | T1 | T2 | all")
      ->check(CLI::IsMember({"A1", "A2", "E", "T1", "T2", "all"}))
      ->capture_default_str();
  app.add_option("--gmin", cfg.g_min)->capture_default_str();
  app.add_option("--gmax", cfg.g_max)->capture_default_str();
  app.add_option("--steps", cfg.steps, "grid intervals")->capture_default_str();
  app.add_option("--tol-im", cfg.tol_im, "Im-threshold scale factor")
      ->capture_default_str();
  app.add_option("--bisect-width", cfg.bisect_width)->capture_default_str();
  app.add_option("--window", cfg.energy_window,
                 "|E| window for the g_PT estimate (default: half the trusted range)");
  app.add_option("--out", cfg.out_dir, "output directory")->capture_default_str();
  app.add_option("--threads", cfg.threads)->capture_default_str();

  CLI::App* spectrum = app.add_subcommand("spectrum", "sweep eigenvalues, emit CSVs");
  CLI::App* exceptional =
      app.add_subcommand("exceptional", "locate exceptional points, estimate g_PT");
  CLI::App* check = app.add_subcommand("check", "selection-rule and oracle checks");
  check->add_flag("--inject-fault", cfg.inject_fault,
                  "corrupt one matrix element to exercise the failure path");

  CLI::App* classify = app.add_subcommand("classify", "irrep content and branching");
  std::string cls_group = "Td", cls_orbit, cls_branch;
  int cls_level = -1;
  classify->add_option("--group", cls_group)->check(CLI::IsMember({"Td", "Oh"}));
  classify->add_option("--orbit", cls_orbit, "pattern, e.g. 2n,2m,2k+1");
  classify->add_option("--level", cls_level, "harmonic level nu");
  classify->add_option("--branch", cls_branch, "Oh irrep to branch to Td");

  CLI::App* dump = app.add_subcommand("dump-matrix", "write one block");
  double dump_g = 0.1;
  dump->add_option("--g", dump_g, "coupling")->capture_default_str();

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(cfg);
    if (exceptional->parsed()) return cmd_exceptional(cfg);
    if (check->parsed()) return cmd_check(cfg);
    if (classify->parsed())
      return cmd_classify(cls_group, cls_orbit, cls_level, cls_branch);
    if (dump->parsed()) return cmd_dump_matrix(cfg, dump_g);
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
