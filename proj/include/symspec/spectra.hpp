// Coupling sweeps, eigenvalue-branch tracking, exceptional-point detection
// with bisection refinement, the first-order selection-rule check, and the
// phase-transition estimate with its window-sensitivity caveat.
#pragma once

#include "symspec/banded.hpp"
#include "symspec/basis.hpp"
#include "symspec/eigensolver.hpp"
#include "symspec/hamiltonian.hpp"
#include "symspec/util.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace symspec {

/// Default scale factor for deciding that an imaginary part is real symmetry
/// breaking rather than solver noise: threshold = tol * max(1, |Re E|).
inline constexpr double kDefaultTolIm = 1e-8;

inline double im_threshold(std::complex<double> value, double tol_im = kDefaultTolIm) {
  return tol_im * std::max(1.0, std::abs(value.real()));
}

struct SweepGrid {
  double g_min = 0.0;
  double g_max = 1.0;
  int steps = 200;  // number of intervals; steps+1 grid points

  SweepGrid(double g_min_, double g_max_, int steps_)
      : g_min(g_min_), g_max(g_max_), steps(steps_) {
    if (!(g_min < g_max)) throw std::invalid_argument("SweepGrid: need g_min < g_max");
    if (steps < 1) throw std::invalid_argument("SweepGrid: need steps >= 1");
    if (!std::isfinite(g_min) || !std::isfinite(g_max))
      throw std::invalid_argument("SweepGrid: bounds must be finite");
  }

  std::vector<double> points() const {
    std::vector<double> out(std::size_t(steps) + 1);
    const double h = (g_max - g_min) / steps;
    for (int i = 0; i <= steps; ++i) out[std::size_t(i)] = g_min + i * h;
    out.back() = g_max;
    return out;
  }
};

struct SpectrumSlice {
  double g = 0.0;
  Eigen::VectorXcd values;  // sorted by (Re, Im)
  bool valid = true;
  std::string error;
};

namespace detail {

inline bool value_less(std::complex<double> a, std::complex<double> b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

inline Eigen::VectorXcd sorted_values(Eigen::VectorXcd v) {
  std::vector<std::complex<double>> tmp(v.data(), v.data() + v.size());
  std::sort(tmp.begin(), tmp.end(), value_less);
  for (int i = 0; i < v.size(); ++i) v(i) = tmp[std::size_t(i)];
  return v;
}

}  // namespace detail

/// Eigenvalues of one irrep block over the grid. Grid points solve
/// independently (parallel); a failed solve marks its slice invalid and the
/// sweep continues.
inline std::vector<SpectrumSlice> sweep(const BlockAssembler& assembler,
                                        const Irrep& irrep, const SweepGrid& grid,
                                        int threads = 1) {
  if (assembler.basis(irrep).empty())
    throw std::invalid_argument("sweep: empty basis for irrep " + irrep.name);
  const std::vector<double> gs = grid.points();
  std::vector<SpectrumSlice> slices(gs.size());
  parallel_for(gs.size(), threads, [&](std::size_t i) {
    SpectrumSlice& s = slices[i];
    s.g = gs[i];
    try {
      s.values = detail::sorted_values(eig_all(assembler.matrix(irrep, s.g)).values);
    } catch (const NumericalError& e) {
      s.valid = false;
      s.error = e.what();
    }
  });
  return slices;
}

struct BranchTrack {
  std::string irrep;
  int id = 0;
  std::vector<std::pair<double, std::complex<double>>> samples;
  /// Set when some assignment step had two near-equal-cost resolutions
  /// (then resolved by (Re, Im) ordering).
  bool ambiguous = false;
};

namespace detail {

/// Exact min-cost square assignment (shortest augmenting paths with
/// potentials). cost is n x n, row-major; returns row -> col.
inline std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost) {
  const int n = int(cost.size());
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(std::size_t(n) + 1, 0.0), v(std::size_t(n) + 1, 0.0);
  std::vector<int> p(std::size_t(n) + 1, 0), way(std::size_t(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(std::size_t(n) + 1, inf);
    std::vector<char> used(std::size_t(n) + 1, 0);
    do {
      used[std::size_t(j0)] = 1;
      const int i0 = p[std::size_t(j0)];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[std::size_t(j)]) continue;
        const double cur = cost[std::size_t(i0) - 1][std::size_t(j) - 1] -
                           u[std::size_t(i0)] - v[std::size_t(j)];
        if (cur < minv[std::size_t(j)]) {
          minv[std::size_t(j)] = cur;
          way[std::size_t(j)] = j0;
        }
        if (minv[std::size_t(j)] < delta) {
          delta = minv[std::size_t(j)];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[std::size_t(j)]) {
          u[std::size_t(p[std::size_t(j)])] += delta;
          v[std::size_t(j)] -= delta;
        } else {
          minv[std::size_t(j)] -= delta;
        }
      }
      j0 = j1;
    } while (p[std::size_t(j0)] != 0);
    do {
      const int j1 = way[std::size_t(j0)];
      p[std::size_t(j0)] = p[std::size_t(j1)];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> row_to_col(std::size_t(n), -1);
  for (int j = 1; j <= n; ++j)
    if (p[std::size_t(j)] != 0) row_to_col[std::size_t(p[std::size_t(j)]) - 1] = j - 1;
  return row_to_col;
}

}  // namespace detail

/// Branch continuation across the sweep: greedy nearest-neighbor matching
/// between consecutive slices, with exact minimal-total-distance assignment
/// on whatever subset the greedy pass left in conflict. Tracking starts at the
/// first valid slice with g > 0 (branch identity is ill-defined inside the
/// g = 0 degenerate multiplets); invalid slices are skipped.
inline std::vector<BranchTrack> track(const std::vector<SpectrumSlice>& slices,
                                      const std::string& irrep_name) {
  std::vector<const SpectrumSlice*> use;
  for (const auto& s : slices)
    if (s.valid && s.g > 0.0) use.push_back(&s);
  if (use.size() < 2)
    throw std::invalid_argument("track: need at least two valid slices with g > 0");

  const int n = int(use.front()->values.size());
  for (const auto* s : use)
    if (int(s->values.size()) != n)
      throw std::invalid_argument("track: inconsistent block order across slices");

  std::vector<BranchTrack> tracks(static_cast<std::size_t>(n));
  for (int b = 0; b < n; ++b) {
    tracks[std::size_t(b)].irrep = irrep_name;
    tracks[std::size_t(b)].id = b;
    tracks[std::size_t(b)].samples.emplace_back(use[0]->g, use[0]->values(b));
  }

  std::vector<std::complex<double>> prev(use[0]->values.data(),
                                         use[0]->values.data() + n);
  for (std::size_t s = 1; s < use.size(); ++s) {
    const Eigen::VectorXcd& vals = use[s]->values;

    // greedy nearest-neighbor pass
    std::vector<int> pick(std::size_t(n), -1);
    std::vector<int> owner(std::size_t(n), -1);  // value -> branch, -2 = contested
    for (int b = 0; b < n; ++b) {
      double best = std::numeric_limits<double>::infinity();
      int bj = -1;
      for (int j = 0; j < n; ++j) {
        const double d = std::abs(prev[std::size_t(b)] - vals(j));
        if (d < best) {
          best = d;
          bj = j;
        }
      }
      pick[std::size_t(b)] = bj;
      owner[std::size_t(bj)] = owner[std::size_t(bj)] == -1 ? b : -2;
    }

    std::vector<int> assign(std::size_t(n), -1);
    std::vector<int> conflicted;
    for (int b = 0; b < n; ++b) {
      const int j = pick[std::size_t(b)];
      if (owner[std::size_t(j)] == b) assign[std::size_t(b)] = j;
      else conflicted.push_back(b);
    }
    if (!conflicted.empty()) {
      std::vector<int> free_values;
      std::vector<char> taken(std::size_t(n), 0);
      for (int b = 0; b < n; ++b)
        if (assign[std::size_t(b)] >= 0) taken[std::size_t(assign[std::size_t(b)])] = 1;
      for (int j = 0; j < n; ++j)
        if (!taken[std::size_t(j)]) free_values.push_back(j);

      // exact assignment on the conflicted subset
      const int m = int(conflicted.size());
      std::vector<std::vector<double>> cost(static_cast<std::size_t>(m),
                                            std::vector<double>(static_cast<std::size_t>(m)));
      for (int a = 0; a < m; ++a)
        for (int c = 0; c < m; ++c)
          cost[std::size_t(a)][std::size_t(c)] =
              std::abs(prev[std::size_t(conflicted[std::size_t(a)])] -
                       vals(free_values[std::size_t(c)]));
      const std::vector<int> sub = detail::min_cost_assignment(cost);
      for (int a = 0; a < m; ++a)
        assign[std::size_t(conflicted[std::size_t(a)])] =
            free_values[std::size_t(sub[std::size_t(a)])];
    }

    // near-tie resolution: when swapping two branches' assignments costs the
    // same to within 1e-12, order by (Re, Im) so the labeling is reproducible
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        const int ja = assign[std::size_t(a)], jb = assign[std::size_t(b)];
        const double direct = std::abs(prev[std::size_t(a)] - vals(ja)) +
                              std::abs(prev[std::size_t(b)] - vals(jb));
        const double swapped = std::abs(prev[std::size_t(a)] - vals(jb)) +
                               std::abs(prev[std::size_t(b)] - vals(ja));
        if (std::abs(direct - swapped) < 1e-12 &&
            detail::value_less(prev[std::size_t(a)], prev[std::size_t(b)]) !=
                detail::value_less(vals(ja), vals(jb))) {
          assign[std::size_t(a)] = jb;
          assign[std::size_t(b)] = ja;
          tracks[std::size_t(a)].ambiguous = true;
          tracks[std::size_t(b)].ambiguous = true;
        }
      }

    for (int b = 0; b < n; ++b) {
      const std::complex<double> v = vals(assign[std::size_t(b)]);
      tracks[std::size_t(b)].samples.emplace_back(use[s]->g, v);
      prev[std::size_t(b)] = v;
    }
  }
  return tracks;
}

/// Restrict an EP scan to the branches that start (at the first tracked g)
/// below the given real energy: the operational "low-energy window".
inline std::vector<BranchTrack> tracks_below(const std::vector<BranchTrack>& tracks,
                                             double max_start_re) {
  std::vector<BranchTrack> out;
  for (const BranchTrack& t : tracks)
    if (t.samples.front().second.real() <= max_start_re) out.push_back(t);
  return out;
}

struct ExceptionalPoint {
  std::string irrep;
  int branch_a = -1, branch_b = -1;
  double g_lo = 0.0, g_hi = 0.0;  // final bracket
  double g_c = 0.0;
  std::complex<double> E_c;
  bool converged = false;  // set by the cutoff-stability certificate
  bool bracketed = true;   // false: complex already at the first grid point
};

/// Eigenvalues of the same block at an arbitrary coupling (used to re-solve
/// during bisection and certificates).
using BlockSolveFn = std::function<Eigen::VectorXcd(double)>;

inline BlockSolveFn block_solver(const BlockAssembler& assembler, const Irrep& irrep) {
  // prime outside of the returned closure so const use stays thread-safe
  assembler.basis(irrep);
  return [&assembler, irrep](double g) {
    return eig_all(assembler.matrix(irrep, g)).values;
  };
}

namespace detail {

/// The two eigenvalues continuing a coalescing pair: nearest to the running
/// target value and its conjugate.
inline std::pair<std::complex<double>, std::complex<double>> nearest_pair(
    const Eigen::VectorXcd& vals, std::complex<double> target) {
  const std::complex<double> conj_target = std::conj(target);
  double d0 = std::numeric_limits<double>::infinity();
  double d1 = std::numeric_limits<double>::infinity();
  std::complex<double> v0, v1;
  for (int i = 0; i < vals.size(); ++i) {
    const std::complex<double> v = vals(i);
    const double d = std::min(std::abs(v - target), std::abs(v - conj_target));
    if (d < d0) {
      d1 = d0; v1 = v0;
      d0 = d; v0 = v;
    } else if (d < d1) {
      d1 = d; v1 = v;
    }
  }
  return {v0, v1};
}

}  // namespace detail

/// Locate the exceptional points of a tracked sweep: every branch pair whose
/// |Im| crosses the threshold between consecutive grid points is bisected
/// (re-solving the block) until the bracket is narrower than `bisect_width`.
/// A pair already complex at the first tracked point is reported unbracketed
/// and not refined. Isotypic partner copies of one coalescence (dim > 1
/// irreps) are merged into a single record.
inline std::vector<ExceptionalPoint> find_exceptional(
    const std::vector<BranchTrack>& tracks, const BlockSolveFn& solve,
    double tol_im = kDefaultTolIm, double bisect_width = 1e-6) {
  std::vector<ExceptionalPoint> out;
  if (tracks.empty()) return out;

  std::map<int, std::size_t> by_id;  // branch id -> position (tracks may be a subset)
  for (std::size_t i = 0; i < tracks.size(); ++i) by_id[tracks[i].id] = i;

  struct Crossing {
    int branch;
    std::size_t step;  // first sample index with |Im| above threshold
  };
  std::vector<Crossing> crossings;
  for (const BranchTrack& t : tracks) {
    bool was_complex = true;  // suppresses crossing-at-start; handled below
    for (std::size_t s = 0; s < t.samples.size(); ++s) {
      const bool now = std::abs(t.samples[s].second.imag()) >
                       im_threshold(t.samples[s].second, tol_im);
      if (now && !was_complex) crossings.push_back({t.id, s});
      was_complex = now;
      if (s == 0 && now) {
        // complex from the very first tracked point: unbracketed
        if (t.samples[s].second.imag() > 0.0) {
          ExceptionalPoint ep;
          ep.irrep = t.irrep;
          ep.branch_a = t.id;
          ep.branch_b = -1;
          ep.g_lo = ep.g_hi = ep.g_c = t.samples[s].first;
          ep.E_c = t.samples[s].second;
          ep.bracketed = false;
          out.push_back(ep);
        }
      }
    }
  }

  // pair each upward crossing having Im > 0 with its conjugate partner
  std::vector<ExceptionalPoint> candidates;
  for (const Crossing& c : crossings) {
    const BranchTrack& ta = tracks[by_id.at(c.branch)];
    const std::complex<double> va = ta.samples[c.step].second;
    if (va.imag() <= 0.0) continue;
    int partner = -1;
    double best = std::numeric_limits<double>::infinity();
    for (const Crossing& d : crossings) {
      if (d.step != c.step || d.branch == c.branch) continue;
      const std::complex<double> vb = tracks[by_id.at(d.branch)].samples[d.step].second;
      if (vb.imag() >= 0.0) continue;
      const double dist = std::abs(vb - std::conj(va));
      if (dist < best) {
        best = dist;
        partner = d.branch;
      }
    }
    if (partner < 0) continue;  // isolated crossing; conjugate copy not tracked here
    ExceptionalPoint ep;
    ep.irrep = ta.irrep;
    ep.branch_a = std::min(c.branch, partner);
    ep.branch_b = std::max(c.branch, partner);
    ep.g_lo = ta.samples[c.step - 1].first;
    ep.g_hi = ta.samples[c.step].first;
    ep.E_c = va;  // provisional; used for dedup and as bisection target
    candidates.push_back(ep);
  }

  // drop duplicate records of one coalescence (exact branch-pair duplicates
  // and isotypic partner copies at the same bracket with the same value)
  std::sort(candidates.begin(), candidates.end(),
            [](const ExceptionalPoint& a, const ExceptionalPoint& b) {
              if (a.g_hi != b.g_hi) return a.g_hi < b.g_hi;
              if (a.branch_a != b.branch_a) return a.branch_a < b.branch_a;
              return a.branch_b < b.branch_b;
            });
  std::vector<ExceptionalPoint> unique;
  for (const ExceptionalPoint& ep : candidates) {
    bool dup = false;
    for (const ExceptionalPoint& u : unique)
      if (u.g_hi == ep.g_hi &&
          std::abs(u.E_c - ep.E_c) < 1e-9 * (1.0 + std::abs(ep.E_c))) {
        dup = true;
        break;
      }
    if (!dup) unique.push_back(ep);
  }

  for (ExceptionalPoint& ep : unique) {
    double lo = ep.g_lo, hi = ep.g_hi;
    std::complex<double> target = ep.E_c;
    while (hi - lo > bisect_width) {
      const double mid = 0.5 * (lo + hi);
      const Eigen::VectorXcd vals = solve(mid);
      const auto [v0, v1] = detail::nearest_pair(vals, target);
      if (std::max(std::abs(v0.imag()), std::abs(v1.imag())) >
          im_threshold(v0, tol_im)) {
        hi = mid;
        target = v0.imag() > 0.0 ? v0 : v1;
      } else {
        lo = mid;
      }
    }
    ep.g_lo = lo;
    ep.g_hi = hi;
    ep.g_c = 0.5 * (lo + hi);
    const Eigen::VectorXcd vals = solve(ep.g_c);
    const auto [v0, v1] = detail::nearest_pair(vals, target);
    ep.E_c = 0.5 * (v0 + v1);
    out.push_back(ep);
  }

  std::sort(out.begin(), out.end(),
            [](const ExceptionalPoint& a, const ExceptionalPoint& b) {
              return a.g_c < b.g_c;
            });
  return out;
}

/// Cutoff-stability certificate: with the block rebuilt at a larger
/// truncation, the pair nearest E_c must still be real at g_c - delta and
/// complex at g_c + delta, i.e. the refined g_c moved by less than delta.
inline bool check_ep_converged(const ExceptionalPoint& ep,
                               const BlockSolveFn& solve_larger,
                               double tol_im = kDefaultTolIm, double delta = 1e-3) {
  if (!ep.bracketed) return false;
  const double g_left = ep.g_c - delta;
  if (g_left <= 0.0) return false;
  const auto [l0, l1] = detail::nearest_pair(solve_larger(g_left), ep.E_c);
  const bool left_real =
      std::max(std::abs(l0.imag()), std::abs(l1.imag())) <= im_threshold(l0, tol_im);
  const auto [r0, r1] = detail::nearest_pair(solve_larger(ep.g_c + delta), ep.E_c);
  const bool right_complex =
      std::max(std::abs(r0.imag()), std::abs(r1.imag())) > im_threshold(r0, tol_im);
  return left_real && right_complex;
}

struct FirstOrderEntry {
  std::string label;
  int parity = +1;
  int dim = 0;
  double max_abs = 0.0;
  bool pass = true;
};

struct FirstOrderReport {
  double tolerance = 1e-12;
  std::vector<FirstOrderEntry> entries;
  bool all_pass = true;
};

/// The selection-rule check behind unbroken symmetry at small g: across every
/// degenerate eigenspace of H0, the restriction of the perturbation xyz must
/// vanish identically (all states of a multiplet share the inversion parity).
///
/// Harmonic: eigenspaces are the levels nu = 0..nu_max.
/// Quartic: eigenspaces are permutation multiplets of 1D quartic eigenvalue
/// triples (lowest `multiplets` of them, indices inside the trusted window).
inline FirstOrderReport first_order_check(const ModelSpec& model, int count,
                                          double tolerance = 1e-12) {
  model.validate();
  FirstOrderReport report;
  report.tolerance = tolerance;

  if (model.kind == ModelSpec::Kind::Harmonic) {
    const int nu_max = std::min(count, model.truncation.limit);
    const Banded1D x = x_matrix(model.truncation.max_axis_index());
    for (int nu = 0; nu <= nu_max; ++nu) {
      const std::vector<ModeIndex> states = level_states(nu);
      FirstOrderEntry e;
      e.label = "nu=" + std::to_string(nu);
      e.parity = (nu % 2) ? -1 : +1;
      e.dim = int(states.size());
      for (const ModeIndex& a : states)
        for (const ModeIndex& b : states)
          e.max_abs = std::max(e.max_abs, std::abs(x(a.m, b.m) * x(a.n, b.n) *
                                                   x(a.k, b.k)));
      e.pass = e.max_abs < tolerance;
      report.entries.push_back(std::move(e));
    }
  } else {
    const int n_max = model.truncation.max_axis_index();
    const Quartic1DBasis q = quartic_1d_eigensystem(n_max);
    const int trusted = n_max / 2;
    const Eigen::MatrixXd xt =
        q.vectors.transpose() * x_matrix(n_max).dense() * q.vectors;

    // multiplets: ordered index triples i <= j <= k, by ascending energy sum
    std::vector<ModeIndex> reps;
    for (int i = 0; i < trusted; ++i)
      for (int j = i; j < trusted; ++j)
        for (int k = j; k < trusted; ++k) reps.push_back({i, j, k});
    std::sort(reps.begin(), reps.end(), [&](const ModeIndex& a, const ModeIndex& b) {
      const double ea = q.values(a.m) + q.values(a.n) + q.values(a.k);
      const double eb = q.values(b.m) + q.values(b.n) + q.values(b.k);
      return ea < eb;
    });
    if (int(reps.size()) > count) reps.resize(std::size_t(count));

    for (const ModeIndex& rep : reps) {
      const std::vector<ModeIndex> states = orbit_states(rep);
      FirstOrderEntry e;
      e.label = "multiplet {" + std::to_string(rep.m) + "," + std::to_string(rep.n) +
                "," + std::to_string(rep.k) + "}";
      e.parity = rep.parity();
      e.dim = int(states.size());
      for (const ModeIndex& a : states)
        for (const ModeIndex& b : states)
          e.max_abs = std::max(e.max_abs, std::abs(xt(a.m, b.m) * xt(a.n, b.n) *
                                                   xt(a.k, b.k)));
      e.pass = e.max_abs < tolerance;
      report.entries.push_back(std::move(e));
    }
  }
  for (const auto& e : report.entries) report.all_pass = report.all_pass && e.pass;
  return report;
}

struct PhaseTransitionEstimate {
  double g_pt = std::numeric_limits<double>::quiet_NaN();
  int eps_in_window = 0;
  /// Enlarging the energy window lowered the estimate; the data cannot pin a
  /// nonzero transition and the estimate is only a window-relative statement.
  bool window_sensitive = false;
  bool no_converged_ep = false;
};

/// Minimum g_c over converged, bracketed exceptional points inside the
/// trusted energy window |E_c| <= energy_window.
inline PhaseTransitionEstimate phase_transition_estimate(
    const std::vector<ExceptionalPoint>& eps, double energy_window) {
  PhaseTransitionEstimate est;
  double min_in = std::numeric_limits<double>::infinity();
  double min_all = std::numeric_limits<double>::infinity();
  for (const ExceptionalPoint& ep : eps) {
    if (!ep.converged || !ep.bracketed) continue;
    min_all = std::min(min_all, ep.g_c);
    if (std::abs(ep.E_c) <= energy_window) {
      min_in = std::min(min_in, ep.g_c);
      est.eps_in_window++;
    }
  }
  if (est.eps_in_window == 0) {
    est.no_converged_ep = true;
    return est;
  }
  est.g_pt = min_in;
  est.window_sensitive = min_all < min_in - 1e-12;
  return est;
}

// ---- CSV emission ---------------------------------------------------------

namespace detail {

inline void csv_number(std::ostream& os, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  os << buf;
}

}  // namespace detail

/// Sweep CSV: header `g,irrep,branch,re,im`, one row per (grid point, branch),
/// 15 significant digits. Slices not covered by tracking (the g = 0 point, or
/// sweeps too short to track) are emitted with the slice's sorted index as the
/// branch id, which is also how tracking labels its first point.
inline void write_sweep_csv(std::ostream& os, const std::string& irrep_name,
                            const std::vector<SpectrumSlice>& slices,
                            const std::vector<BranchTrack>& tracks) {
  os << "g,irrep,branch,re,im\n";
  const double first_tracked_g =
      tracks.empty() ? std::numeric_limits<double>::infinity()
                     : tracks.front().samples.front().first;
  for (const SpectrumSlice& s : slices) {
    if (!s.valid || s.g >= first_tracked_g) continue;
    for (int j = 0; j < s.values.size(); ++j) {
      detail::csv_number(os, s.g);
      os << "," << irrep_name << "," << j << ",";
      detail::csv_number(os, s.values(j).real());
      os << ",";
      detail::csv_number(os, s.values(j).imag());
      os << "\n";
    }
  }
  if (tracks.empty()) return;
  const std::size_t samples = tracks.front().samples.size();
  for (std::size_t si = 0; si < samples; ++si)
    for (const BranchTrack& t : tracks) {
      detail::csv_number(os, t.samples[si].first);
      os << "," << t.irrep << "," << t.id << ",";
      detail::csv_number(os, t.samples[si].second.real());
      os << ",";
      detail::csv_number(os, t.samples[si].second.imag());
      os << "\n";
    }
}

/// EP report CSV: `irrep,branch_a,branch_b,g_c,re_Ec,im_Ec,converged`.
/// Unbracketed records carry their boundary estimate and converged=0.
inline void write_ep_csv(std::ostream& os, const std::vector<ExceptionalPoint>& eps) {
  os << "irrep,branch_a,branch_b,g_c,re_Ec,im_Ec,converged\n";
  for (const ExceptionalPoint& ep : eps) {
    os << ep.irrep << "," << ep.branch_a << "," << ep.branch_b << ",";
    detail::csv_number(os, ep.g_c);
    os << ",";
    detail::csv_number(os, ep.E_c.real());
    os << ",";
    detail::csv_number(os, ep.E_c.imag());
    os << "," << (ep.converged ? 1 : 0) << "\n";
  }
}

}  // namespace symspec
