// Assembly of per-irrep complex-symmetric blocks H^S(g) = H0^S + i g (xyz)^S
// for the two oscillator models, the unprojected full matrix used as an
// oracle, and the dynamical-symmetry operators of the quartic model.
//
// Matrix entries are contracted directly from the exact integer coefficients
// of the symmetry-adapted vectors against banded 1D factors; the full matrix
// is never formed and projected.
#pragma once

#include "symspec/banded.hpp"
#include "symspec/basis.hpp"
#include "symspec/pointgroup.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace symspec {

struct ModelSpec {
  enum class Kind { Harmonic, Quartic };
  Kind kind = Kind::Harmonic;
  double g = 0.0;
  TruncationPolicy truncation;

  /// x^2+y^2+z^2 + i g xyz with total-quanta truncation (H0 diagonal).
  static ModelSpec harmonic(double g, int limit) {
    check_finite(g);
    return {Kind::Harmonic, g, TruncationPolicy::total_quanta(limit)};
  }
  /// x^4+y^4+z^4 + i g xyz with per-mode truncation (H0 separable).
  static ModelSpec quartic(double g, int limit) {
    check_finite(g);
    return {Kind::Quartic, g, TruncationPolicy::per_mode(limit)};
  }

  ModelSpec with_g(double new_g) const {
    check_finite(new_g);
    ModelSpec m = *this;
    m.g = new_g;
    return m;
  }
  ModelSpec with_limit(int limit) const {
    return kind == Kind::Harmonic ? harmonic(g, limit) : quartic(g, limit);
  }

  std::string kind_name() const {
    return kind == Kind::Harmonic ? "harmonic" : "quartic";
  }

  /// Truncation pairing is part of the contract, not a convention.
  void validate() const {
    check_finite(g);
    const bool ok =
        (kind == Kind::Harmonic &&
         truncation.kind == TruncationPolicy::Kind::TotalQuanta) ||
        (kind == Kind::Quartic && truncation.kind == TruncationPolicy::Kind::PerMode);
    if (!ok)
      throw std::invalid_argument(
          "ModelSpec: harmonic requires total-quanta truncation, quartic per-mode");
  }

 private:
  static void check_finite(double g) {
    if (!std::isfinite(g)) throw std::invalid_argument("ModelSpec: g must be finite");
  }
};

/// The 1D factor matrices a model needs, sized for its truncation.
class ModelOperators {
 public:
  explicit ModelOperators(const ModelSpec& model)
      : model_(model), x_(x_matrix(model.truncation.max_axis_index())) {
    model_.validate();
    if (model.kind == ModelSpec::Kind::Quartic) {
      const int n = model.truncation.max_axis_index();
      h1_ = p2_matrix(n).dense() + x4_matrix(n).dense();
    }
  }

  const ModelSpec& model() const { return model_; }
  const Banded1D& x() const { return x_; }

  /// 1D factor p^2 + x^4 of the quartic H0.
  const Eigen::MatrixXd& h1() const {
    if (model_.kind != ModelSpec::Kind::Quartic)
      throw std::logic_error("ModelOperators: h1 is quartic-only");
    return h1_;
  }

  /// <u| xyz |v> over normalized symmetry vectors; exactly zero between
  /// equal-parity vectors (xyz is odd under inversion).
  double xyz_element(const SymVector& u, const SymVector& v) const {
    if (u.parity() == v.parity()) return 0.0;
    double s = 0.0;
    for (const auto& [mu, cu] : u.terms())
      for (const auto& [mv, cv] : v.terms()) {
        if (std::abs(mu.m - mv.m) > 1 || std::abs(mu.n - mv.n) > 1 ||
            std::abs(mu.k - mv.k) > 1)
          continue;
        s += double(cu) * double(cv) * x_(mu.m, mv.m) * x_(mu.n, mv.n) * x_(mu.k, mv.k);
      }
    return s / std::sqrt(double(u.norm2()) * double(v.norm2()));
  }

  /// <u| H0 |v>: harmonic (2 nu + 3) <u|v>, quartic Kronecker sum of h1.
  double h0_element(const SymVector& u, const SymVector& v) const {
    if (model_.kind == ModelSpec::Kind::Harmonic) {
      const int nu = u.level();
      if (!v.same_level()) throw std::logic_error("h0_element: quartic-style vector");
      return (2.0 * nu + 3.0) * overlap(u, v);
    }
    double s = 0.0;
    for (const auto& [mu, cu] : u.terms())
      for (const auto& [mv, cv] : v.terms()) {
        double t = 0.0;
        if (mu.n == mv.n && mu.k == mv.k) t += h1_(mu.m, mv.m);
        if (mu.m == mv.m && mu.k == mv.k) t += h1_(mu.n, mv.n);
        if (mu.m == mv.m && mu.n == mv.n) t += h1_(mu.k, mv.k);
        if (t != 0.0) s += double(cu) * double(cv) * t;
      }
    return s / std::sqrt(double(u.norm2()) * double(v.norm2()));
  }

 private:
  ModelSpec model_;
  Banded1D x_;
  Eigen::MatrixXd h1_;
};

/// One irrep's dense complex-symmetric matrix at one coupling.
struct HamiltonianBlock {
  Irrep irrep;
  std::vector<SymVector> basis;
  Eigen::MatrixXcd matrix;

  int order() const { return int(matrix.rows()); }
};

namespace detail {

/// Builds the two real parts of a block and enforces the pre-averaging
/// asymmetry bound (an assembly bug would surface here, not get hidden).
inline void assemble_real_parts(const ModelOperators& ops,
                                const std::vector<SymVector>& basis,
                                Eigen::MatrixXd& h0, Eigen::MatrixXd& w) {
  const int n = int(basis.size());
  h0.resize(n, n);
  w.resize(n, n);
  if (n == 0) return;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      h0(i, j) = ops.h0_element(basis[i], basis[j]);
      w(i, j) = ops.xyz_element(basis[i], basis[j]);
    }
  const double scale = std::max(1.0, std::max(h0.cwiseAbs().maxCoeff(),
                                              w.cwiseAbs().maxCoeff()));
  const double asym = std::max((h0 - h0.transpose()).cwiseAbs().maxCoeff(),
                               (w - w.transpose()).cwiseAbs().maxCoeff());
  if (asym > 1e-12 * scale)
    throw std::logic_error("assemble: pre-averaging asymmetry exceeds bound");
  h0 = ((h0 + h0.transpose()) / 2.0).eval();
  w = ((w + w.transpose()) / 2.0).eval();
}

}  // namespace detail

/// Caches the symmetry-adapted bases and the g-independent real parts of all
/// blocks for one (model, truncation), so a coupling sweep costs one complex
/// combination per grid point. Immutable after the lazy per-irrep build;
/// const access from several threads requires priming (prime_all / warm
/// accessors) first.
class BlockAssembler {
 public:
  explicit BlockAssembler(const ModelSpec& model)
      : ops_(model), group_(&PointGroup::td()),
        states_(enumerate_states(model.truncation)) {}

  const ModelSpec& model() const { return ops_.model(); }
  const PointGroup& group() const { return *group_; }
  const std::vector<ModeIndex>& states() const { return states_; }
  const ModelOperators& operators() const { return ops_; }

  const std::vector<SymVector>& basis(const Irrep& irrep) const {
    return entry(irrep).basis;
  }

  /// Real part H0^S; the imaginary part of the block is g * xyz_part.
  const Eigen::MatrixXd& h0_part(const Irrep& irrep) const { return entry(irrep).h0; }
  const Eigen::MatrixXd& xyz_part(const Irrep& irrep) const { return entry(irrep).w; }

  /// H^S(g) = H0^S + i g (xyz)^S, complex symmetric by construction.
  Eigen::MatrixXcd matrix(const Irrep& irrep, double g) const {
    const Entry& e = entry(irrep);
    return e.h0.cast<std::complex<double>>() +
           std::complex<double>(0.0, g) * e.w.cast<std::complex<double>>();
  }

  HamiltonianBlock block(const Irrep& irrep, double g) const {
    return HamiltonianBlock{irrep, entry(irrep).basis, matrix(irrep, g)};
  }

  /// The lazy per-irrep build is not thread-safe; prime before sharing
  /// a const reference across threads.
  void prime_all() const {
    for (const Irrep& irrep : group_->table().irreps) entry(irrep);
  }

 private:
  struct Entry {
    std::vector<SymVector> basis;
    Eigen::MatrixXd h0, w;
  };

  const Entry& entry(const Irrep& irrep) const {
    auto it = cache_.find(irrep.name);
    if (it != cache_.end()) return it->second;
    Entry e;
    e.basis = project(states_, irrep, *group_);
    detail::assemble_real_parts(ops_, e.basis, e.h0, e.w);
    return cache_.emplace(irrep.name, std::move(e)).first->second;
  }

  ModelOperators ops_;
  const PointGroup* group_;
  std::vector<ModeIndex> states_;
  mutable std::map<std::string, Entry> cache_;
};

/// Spec-level convenience: one block at the model's own coupling.
inline HamiltonianBlock assemble_block(const ModelSpec& model, const Irrep& irrep) {
  BlockAssembler a(model);
  return a.block(irrep, model.g);
}

/// Unprojected full product-basis matrix over the same truncation
/// (the oracle the per-irrep decomposition is checked against).
inline Eigen::MatrixXcd assemble_full(const ModelSpec& model) {
  model.validate();
  const ModelOperators ops(model);
  const std::vector<ModeIndex> states = enumerate_states(model.truncation);
  const int n = int(states.size());
  const Banded1D& x = ops.x();
  Eigen::MatrixXcd h(n, n);
  const std::complex<double> ig(0.0, model.g);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const ModeIndex& a = states[i];
      const ModeIndex& b = states[j];
      double h0 = 0.0;
      if (model.kind == ModelSpec::Kind::Harmonic) {
        h0 = (i == j) ? 2.0 * a.level() + 3.0 : 0.0;
      } else {
        const Eigen::MatrixXd& h1 = ops.h1();
        if (a.n == b.n && a.k == b.k) h0 += h1(a.m, b.m);
        if (a.m == b.m && a.k == b.k) h0 += h1(a.n, b.n);
        if (a.m == b.m && a.n == b.n) h0 += h1(a.k, b.k);
      }
      const double xyz = x(a.m, b.m) * x(a.n, b.n) * x(a.k, b.k);
      h(i, j) = std::complex<double>(h0, 0.0) + ig * xyz;
    }
  return h;
}

/// The pair of commuting E_g operators behind the quartic model's
/// cross-irrep degeneracies:
///   O1 = 2 p_x^2 + 2 x^4 - p_y^2 - y^4 - p_z^2 - z^4,
///   O2 = its image under the cyclic relabeling x -> y -> z -> x.
/// Assembled over the per-mode product basis in enumeration order.
inline std::pair<Eigen::MatrixXd, Eigen::MatrixXd> dynamical_operators(
    const TruncationPolicy& truncation) {
  if (truncation.kind != TruncationPolicy::Kind::PerMode)
    throw std::invalid_argument("dynamical_operators: per-mode truncation required");
  const int nmax = truncation.max_axis_index();
  const Eigen::MatrixXd h1 = p2_matrix(nmax).dense() + x4_matrix(nmax).dense();
  const std::vector<ModeIndex> states = enumerate_states(truncation);
  const int n = int(states.size());
  Eigen::MatrixXd o1 = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd o2 = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const ModeIndex& a = states[i];
      const ModeIndex& b = states[j];
      double hx = 0.0, hy = 0.0, hz = 0.0;
      if (a.n == b.n && a.k == b.k) hx = h1(a.m, b.m);
      if (a.m == b.m && a.k == b.k) hy = h1(a.n, b.n);
      if (a.m == b.m && a.n == b.n) hz = h1(a.k, b.k);
      o1(i, j) = 2.0 * hx - hy - hz;
      o2(i, j) = 2.0 * hy - hz - hx;
    }
  return {std::move(o1), std::move(o2)};
}

/// Text dump, one line per nonzero entry.
inline void write_matrix_dump(std::ostream& os, const HamiltonianBlock& block,
                              double g) {
  os << "# irrep=" << block.irrep.name << " g=" << g << " n=" << block.order()
     << "\n";
  const auto& m = block.matrix;
  char buf[96];
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const std::complex<double> v = m(i, j);
      if (v == std::complex<double>(0.0, 0.0)) continue;
      std::snprintf(buf, sizeof buf, "%d %d %.15g %.15g", i, j, v.real(), v.imag());
      os << buf << "\n";
    }
}

}  // namespace symspec
