// Three-dimensional product-basis bookkeeping: mode triples (m,n,k),
// truncation policies, and exact integer-coefficient symmetry-adapted
// vectors.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace symspec {

/// Quantum numbers of a product state phi_m(x) phi_n(y) phi_k(z).
struct ModeIndex {
  int m = 0, n = 0, k = 0;

  int level() const { return m + n + k; }          // nu
  int parity() const { return (level() % 2) ? -1 : +1; }  // eigenvalue under inversion

  int operator[](int axis) const {
    return axis == 0 ? m : (axis == 1 ? n : k);
  }

  std::array<int, 3> sorted() const {
    std::array<int, 3> a{m, n, k};
    std::sort(a.begin(), a.end());
    return a;
  }

  friend auto operator<=>(const ModeIndex&, const ModeIndex&) = default;
};

/// Level-then-lexicographic order used for all deterministic enumerations.
struct ModeIndexOrder {
  bool operator()(const ModeIndex& a, const ModeIndex& b) const {
    if (a.level() != b.level()) return a.level() < b.level();
    return a < b;
  }
};

struct TruncationPolicy {
  enum class Kind { TotalQuanta, PerMode };
  Kind kind = Kind::TotalQuanta;
  int limit = 0;

  static TruncationPolicy total_quanta(int limit) {
    if (limit < 0) throw std::invalid_argument("TruncationPolicy: limit must be >= 0");
    return {Kind::TotalQuanta, limit};
  }
  static TruncationPolicy per_mode(int limit) {
    if (limit < 0) throw std::invalid_argument("TruncationPolicy: limit must be >= 0");
    return {Kind::PerMode, limit};
  }

  bool contains(const ModeIndex& s) const {
    if (kind == Kind::TotalQuanta) return s.level() <= limit;
    return std::max({s.m, s.n, s.k}) <= limit;
  }

  /// Largest 1D quantum number representable under this policy.
  int max_axis_index() const { return limit; }

  friend bool operator==(const TruncationPolicy&, const TruncationPolicy&) = default;
};

/// All retained states, ordered by ascending level then lexicographic (m,n,k).
inline std::vector<ModeIndex> enumerate_states(const TruncationPolicy& policy) {
  std::vector<ModeIndex> out;
  if (policy.kind == TruncationPolicy::Kind::TotalQuanta) {
    const int L = policy.limit;
    out.reserve(std::size_t(L + 1) * (L + 2) * (L + 3) / 6);
    for (int nu = 0; nu <= L; ++nu)
      for (int m = 0; m <= nu; ++m)
        for (int n = 0; n <= nu - m; ++n)
          out.push_back({m, n, nu - m - n});
  } else {
    const int L = policy.limit;
    out.reserve(std::size_t(L + 1) * (L + 1) * (L + 1));
    for (int m = 0; m <= L; ++m)
      for (int n = 0; n <= L; ++n)
        for (int k = 0; k <= L; ++k) out.push_back({m, n, k});
    std::sort(out.begin(), out.end(), ModeIndexOrder{});
  }
  return out;
}

/// The (nu+1)(nu+2)/2 states of harmonic level nu, lexicographically ordered.
inline std::vector<ModeIndex> level_states(int nu) {
  if (nu < 0) throw std::invalid_argument("level_states: nu must be >= 0");
  std::vector<ModeIndex> out;
  out.reserve(std::size_t(nu + 1) * (nu + 2) / 2);
  for (int m = 0; m <= nu; ++m)
    for (int n = 0; n <= nu - m; ++n) out.push_back({m, n, nu - m - n});
  return out;
}

/// All distinct permutations of a mode triple ({i,j,k}_P), ordered.
inline std::vector<ModeIndex> orbit_states(const ModeIndex& seed) {
  std::array<int, 3> a = seed.sorted();
  std::vector<ModeIndex> out;
  do {
    out.push_back({a[0], a[1], a[2]});
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

/// Exact integer-coefficient combination of same-parity product states.
/// The normalized vector is terms / sqrt(norm2).
class SymVector {
 public:
  using Term = std::pair<ModeIndex, std::int64_t>;

  explicit SymVector(std::vector<Term> terms) : terms_(std::move(terms)) {
    if (terms_.empty())
      throw std::invalid_argument("SymVector: needs at least one nonzero term");
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return ModeIndexOrder{}(a.first, b.first); });
    const int par = terms_.front().first.parity();
    norm2_ = 0;
    for (const Term& t : terms_) {
      if (t.second == 0) throw std::invalid_argument("SymVector: zero coefficient");
      if (t.first.parity() != par)
        throw std::invalid_argument("SymVector: mixed-parity terms");
      norm2_ += t.second * t.second;
    }
    for (std::size_t i = 1; i < terms_.size(); ++i)
      if (terms_[i].first == terms_[i - 1].first)
        throw std::invalid_argument("SymVector: duplicate mode index");
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::int64_t norm2() const { return norm2_; }
  int parity() const { return terms_.front().first.parity(); }

  /// Common level of all terms; throws if terms span several levels
  /// (valid for quartic per-mode use, where level() is not meaningful).
  int level() const {
    const int nu = terms_.front().first.level();
    for (const Term& t : terms_)
      if (t.first.level() != nu)
        throw std::logic_error("SymVector: terms span several levels");
    return nu;
  }

  bool same_level() const {
    const int nu = terms_.front().first.level();
    for (const Term& t : terms_)
      if (t.first.level() != nu) return false;
    return true;
  }

  /// Exact integer dot product (underlying product states are orthonormal).
  friend std::int64_t dot(const SymVector& a, const SymVector& b) {
    std::int64_t s = 0;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    ModeIndexOrder lt;
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
      if (lt(ia->first, ib->first)) ++ia;
      else if (lt(ib->first, ia->first)) ++ib;
      else { s += ia->second * ib->second; ++ia; ++ib; }
    }
    return s;
  }

  /// <a|b> over normalized vectors.
  friend double overlap(const SymVector& a, const SymVector& b) {
    return double(dot(a, b)) / std::sqrt(double(a.norm2()) * double(b.norm2()));
  }

 private:
  std::vector<Term> terms_;
  std::int64_t norm2_ = 0;
};

}  // namespace symspec
