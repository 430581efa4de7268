// Point groups T_d and O_h realized as signed coordinate permutations:
// conjugacy classes, character tables, projection onto irreducible
// representations, irrep content of permutation orbits, and the
// O_h -> T_d branching of irrep labels.
//
// Classes are formed by conjugation closure and labeled by the signature
// (number of fixed axes, determinant, trace) of the 3x3 signed permutation
// matrix, which separates every class of both groups.
#pragma once

#include "symspec/basis.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symspec {

/// Signed coordinate permutation: axis a maps to axis perm[a], and axis b
/// carries the sign signs[b]. As a matrix, M e_a = signs[perm[a]] e_perm[a].
struct GroupElement {
  std::array<int, 3> perm{0, 1, 2};
  std::array<int, 3> signs{1, 1, 1};

  friend GroupElement operator*(const GroupElement& g, const GroupElement& h) {
    GroupElement r;
    std::array<int, 3> ginv{};
    for (int a = 0; a < 3; ++a) ginv[g.perm[a]] = a;
    for (int a = 0; a < 3; ++a) r.perm[a] = g.perm[h.perm[a]];
    for (int b = 0; b < 3; ++b) r.signs[b] = g.signs[b] * h.signs[ginv[b]];
    return r;
  }

  GroupElement inverse() const {
    GroupElement r;
    for (int a = 0; a < 3; ++a) r.perm[perm[a]] = a;
    for (int b = 0; b < 3; ++b) r.signs[b] = signs[perm[b]];
    return r;
  }

  int perm_parity() const {
    // 3 elements: odd permutations are the three transpositions
    int fixed = 0;
    for (int a = 0; a < 3; ++a) fixed += (perm[a] == a);
    return (fixed == 1) ? -1 : +1;
  }

  int det() const { return perm_parity() * signs[0] * signs[1] * signs[2]; }

  int trace() const {
    int t = 0;
    for (int b = 0; b < 3; ++b)
      if (perm[b] == b) t += signs[b];
    return t;
  }

  int fixed_axes() const {
    int f = 0;
    for (int b = 0; b < 3; ++b) f += (perm[b] == b);
    return f;
  }

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Inversion (x,y,z) -> (-x,-y,-z).
inline GroupElement inversion_element() { return {{0, 1, 2}, {-1, -1, -1}}; }

/// Action on a product state: indices ride along the permutation and each
/// axis with a negative sign contributes (-1)^(index carried to that axis),
/// from phi_m(-q) = (-1)^m phi_m(q). Returns the image state and the sign.
inline std::pair<ModeIndex, int> act(const GroupElement& g, const ModeIndex& s) {
  std::array<int, 3> out{};
  for (int a = 0; a < 3; ++a) out[g.perm[a]] = s[a];
  int sign = 1;
  for (int b = 0; b < 3; ++b)
    if (g.signs[b] == -1 && (out[b] % 2) == 1) sign = -sign;
  return {ModeIndex{out[0], out[1], out[2]}, sign};
}

enum class GroupName { Td, Oh };

struct Irrep {
  std::string name;
  int dim = 1;
  friend bool operator==(const Irrep&, const Irrep&) = default;
};

struct CharacterTable {
  GroupName group = GroupName::Td;
  std::vector<std::string> class_labels;
  std::vector<int> class_sizes;
  std::vector<GroupElement> class_reps;
  std::vector<Irrep> irreps;
  std::vector<std::vector<int>> chi;  // chi[irrep][class]

  int irrep_index(std::string_view name) const {
    for (std::size_t i = 0; i < irreps.size(); ++i)
      if (irreps[i].name == name) return int(i);
    throw std::invalid_argument("CharacterTable: unknown irrep '" + std::string(name) + "'");
  }
  int class_index(std::string_view label) const {
    for (std::size_t i = 0; i < class_labels.size(); ++i)
      if (class_labels[i] == label) return int(i);
    throw std::invalid_argument("CharacterTable: unknown class '" + std::string(label) + "'");
  }
};

namespace detail {

inline std::string class_label_from_signature(int fixed, int det, int trace) {
  // (fixed axes, det, trace) separates all classes of T_d and O_h.
  if (fixed == 3 && det == +1 && trace == +3) return "E";
  if (fixed == 0 && det == +1 && trace == 0) return "8C3";
  if (fixed == 3 && det == +1 && trace == -1) return "3C2";
  if (fixed == 1 && det == -1 && trace == -1) return "6S4";
  if (fixed == 1 && det == -1 && trace == +1) return "6sd";
  if (fixed == 1 && det == +1 && trace == -1) return "6C2";
  if (fixed == 1 && det == +1 && trace == +1) return "6C4";
  if (fixed == 3 && det == -1 && trace == -3) return "i";
  if (fixed == 0 && det == -1 && trace == 0) return "8S6";
  if (fixed == 3 && det == -1 && trace == +1) return "3sh";
  throw std::logic_error("point group: unrecognized class signature");
}

inline std::vector<GroupElement> signed_permutations(bool td_only) {
  static constexpr std::array<std::array<int, 3>, 6> perms{{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  std::vector<GroupElement> out;
  for (const auto& p : perms)
    for (int sx : {+1, -1})
      for (int sy : {+1, -1})
        for (int sz : {+1, -1}) {
          if (td_only && sx * sy * sz != +1) continue;  // xyz left invariant
          out.push_back({p, {sx, sy, sz}});
        }
  return out;
}

}  // namespace detail

class PointGroup {
 public:
  static PointGroup build(GroupName name);

  /// Shared immutable instances.
  static const PointGroup& td() {
    static const PointGroup g = build(GroupName::Td);
    return g;
  }
  static const PointGroup& oh() {
    static const PointGroup g = build(GroupName::Oh);
    return g;
  }

  GroupName name() const { return name_; }
  int order() const { return int(elements_.size()); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const CharacterTable& table() const { return table_; }
  int class_of(std::size_t element_index) const { return class_of_[element_index]; }

  const Irrep& irrep(std::string_view name) const {
    return table_.irreps[table_.irrep_index(name)];
  }

  /// Character of the given irrep at the given element.
  int chi(const Irrep& irrep, std::size_t element_index) const {
    return table_.chi[table_.irrep_index(irrep.name)][class_of_[element_index]];
  }

 private:
  GroupName name_ = GroupName::Td;
  std::vector<GroupElement> elements_;
  std::vector<int> class_of_;
  CharacterTable table_;
};

inline PointGroup PointGroup::build(GroupName name) {
  PointGroup g;
  g.name_ = name;
  g.elements_ = detail::signed_permutations(name == GroupName::Td);

  // canonical class order and character tables
  CharacterTable& t = g.table_;
  t.group = name;
  if (name == GroupName::Td) {
    t.class_labels = {"E", "8C3", "3C2", "6S4", "6sd"};
    t.class_sizes = {1, 8, 3, 6, 6};
    t.irreps = {{"A1", 1}, {"A2", 1}, {"E", 2}, {"T1", 3}, {"T2", 3}};
    t.chi = {
        {1, 1, 1, 1, 1},
        {1, 1, 1, -1, -1},
        {2, -1, 2, 0, 0},
        {3, 0, -1, 1, -1},
        {3, 0, -1, -1, 1},
    };
  } else {
    t.class_labels = {"E", "8C3", "6C2", "6C4", "3C2", "i", "6S4", "8S6", "3sh", "6sd"};
    t.class_sizes = {1, 8, 6, 6, 3, 1, 6, 8, 3, 6};
    t.irreps = {{"A1g", 1}, {"A2g", 1}, {"Eg", 2}, {"T1g", 3}, {"T2g", 3},
                {"A1u", 1}, {"A2u", 1}, {"Eu", 2}, {"T1u", 3}, {"T2u", 3}};
    t.chi = {
        {1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
        {1, 1, -1, -1, 1, 1, -1, 1, 1, -1},
        {2, -1, 0, 0, 2, 2, 0, -1, 2, 0},
        {3, 0, -1, 1, -1, 3, 1, 0, -1, -1},
        {3, 0, 1, -1, -1, 3, -1, 0, -1, 1},
        {1, 1, 1, 1, 1, -1, -1, -1, -1, -1},
        {1, 1, -1, -1, 1, -1, 1, -1, -1, 1},
        {2, -1, 0, 0, 2, -2, 0, 1, -2, 0},
        {3, 0, -1, 1, -1, -3, -1, 0, 1, 1},
        {3, 0, 1, -1, -1, -3, 1, 0, 1, -1},
    };
  }

  // conjugacy classes by closure, labeled by signature
  const int n = g.order();
  g.class_of_.assign(n, -1);
  std::map<GroupElement, int> index;
  for (int i = 0; i < n; ++i) index[g.elements_[i]] = i;

  t.class_reps.assign(t.class_labels.size(), GroupElement{});
  std::vector<int> found_sizes(t.class_labels.size(), 0);
  for (int i = 0; i < n; ++i) {
    if (g.class_of_[i] >= 0) continue;
    std::vector<int> members;
    for (int j = 0; j < n; ++j) {
      const GroupElement c =
          g.elements_[j] * g.elements_[i] * g.elements_[j].inverse();
      auto it = index.find(c);
      if (it == index.end())
        throw std::runtime_error("point group: set not closed under conjugation");
      members.push_back(it->second);
    }
    const GroupElement& rep = g.elements_[i];
    const std::string label = detail::class_label_from_signature(
        rep.fixed_axes(), rep.det(), rep.trace());
    const int ci = t.class_index(label);
    t.class_reps[ci] = rep;
    for (int m : members) {
      if (g.class_of_[m] >= 0 && g.class_of_[m] != ci)
        throw std::runtime_error("point group: inconsistent conjugacy classes");
      g.class_of_[m] = ci;
    }
  }
  for (int i = 0; i < n; ++i) found_sizes[g.class_of_[i]]++;
  if (found_sizes != t.class_sizes)
    throw std::runtime_error("point group: conjugacy class sizes do not match table");

  // row orthogonality over integers: sum_c size * chi_i * chi_j = |G| delta_ij
  for (std::size_t a = 0; a < t.irreps.size(); ++a)
    for (std::size_t b = 0; b < t.irreps.size(); ++b) {
      long s = 0;
      for (std::size_t c = 0; c < t.class_labels.size(); ++c)
        s += long(t.class_sizes[c]) * t.chi[a][c] * t.chi[b][c];
      if (s != (a == b ? long(n) : 0))
        throw std::runtime_error("point group: character orthogonality violated");
    }
  return g;
}

namespace detail {

/// Fraction-free Gram-Schmidt step with gcd reduction; vectors are dense
/// int64 coordinate arrays over one orbit.
inline bool orthogonalize_against(std::vector<std::int64_t>& w,
                                  const std::vector<std::int64_t>& u) {
  __int128 du = 0, nu = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    du += __int128(w[i]) * u[i];
    nu += __int128(u[i]) * u[i];
  }
  if (du == 0) return true;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const __int128 v = nu * w[i] - du * u[i];
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error("projection: integer Gram-Schmidt overflow");
    w[i] = std::int64_t(v);
  }
  std::int64_t g = 0;
  for (std::int64_t v : w) g = std::gcd(g, v < 0 ? -v : v);
  if (g == 0) return false;  // linearly dependent
  if (g > 1)
    for (auto& v : w) v /= g;
  return true;
}

}  // namespace detail

/// Character projection onto the full isotypic subspace of `irrep` spanned by
/// `states`, which must be closed under the group action (a whole degenerate
/// level or whole permutation orbit). Returns exact integer combinations,
/// mutually orthogonal, linearly dependent seeds dropped in enumeration order.
inline std::vector<SymVector> project(std::span<const ModeIndex> states,
                                      const Irrep& irrep, const PointGroup& group) {
  std::map<ModeIndex, int> index;
  for (std::size_t i = 0; i < states.size(); ++i) index[states[i]] = int(i);
  if (index.size() != states.size())
    throw std::invalid_argument("project: duplicate states");

  // orbit grouping, first-occurrence order
  std::vector<std::vector<int>> orbits;
  std::map<std::array<int, 3>, int> orbit_of;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto key = states[i].sorted();
    auto it = orbit_of.find(key);
    if (it == orbit_of.end()) {
      orbit_of.emplace(key, int(orbits.size()));
      orbits.push_back({int(i)});
    } else {
      orbits[it->second].push_back(int(i));
    }
  }

  const auto& elements = group.elements();
  const int irrep_row = group.table().irrep_index(irrep.name);
  const auto& chi_row = group.table().chi[irrep_row];

  std::vector<SymVector> out;
  for (const auto& orbit : orbits) {
    std::map<ModeIndex, int> local;  // orbit-local coordinates
    for (std::size_t i = 0; i < orbit.size(); ++i) local[states[orbit[i]]] = int(i);

    std::vector<std::vector<std::int64_t>> accepted;
    for (int seed_global : orbit) {
      const ModeIndex seed = states[seed_global];
      std::vector<std::int64_t> w(orbit.size(), 0);
      for (std::size_t e = 0; e < elements.size(); ++e) {
        const int chi = chi_row[group.class_of(e)];
        if (chi == 0) continue;
        auto [img, sign] = act(elements[e], seed);
        auto it = local.find(img);
        if (it == local.end())
          throw std::invalid_argument("project: states not closed under group action");
        w[it->second] += std::int64_t(chi) * sign;
      }
      std::int64_t g = 0;
      for (std::int64_t v : w) g = std::gcd(g, v < 0 ? -v : v);
      if (g == 0) continue;  // irrep absent for this seed
      if (g > 1)
        for (auto& v : w) v /= g;

      bool independent = true;
      for (const auto& u : accepted)
        if (!detail::orthogonalize_against(w, u)) {
          independent = false;
          break;
        }
      if (!independent) continue;
      accepted.push_back(w);

      std::vector<SymVector::Term> terms;
      for (const auto& [mode, li] : local)
        if (w[li] != 0) terms.emplace_back(mode, w[li]);
      out.emplace_back(std::move(terms));
    }
  }
  return out;
}

/// Multiset of irreps carried by `states` (closed under the group action),
/// computed from characters; exact integer arithmetic throughout.
inline std::vector<std::pair<Irrep, int>> irrep_content(
    std::span<const ModeIndex> states, const PointGroup& group) {
  std::map<ModeIndex, int> index;
  for (std::size_t i = 0; i < states.size(); ++i) index[states[i]] = int(i);

  // trace of the action per class (class function, one representative suffices
  // only with care about signs; sum over all elements is simplest and exact)
  const auto& elements = group.elements();
  std::vector<long> traces(elements.size(), 0);
  for (std::size_t e = 0; e < elements.size(); ++e) {
    long tr = 0;
    for (const ModeIndex& s : states) {
      auto [img, sign] = act(elements[e], s);
      if (index.find(img) == index.end())
        throw std::invalid_argument("irrep_content: states not closed under group action");
      if (img == s) tr += sign;
    }
    traces[e] = tr;
  }

  std::vector<std::pair<Irrep, int>> out;
  const auto& t = group.table();
  for (std::size_t r = 0; r < t.irreps.size(); ++r) {
    long s = 0;
    for (std::size_t e = 0; e < elements.size(); ++e)
      s += long(t.chi[r][group.class_of(e)]) * traces[e];
    if (s % group.order() != 0)
      throw std::logic_error("irrep_content: non-integer multiplicity");
    const long mult = s / group.order();
    if (mult < 0) throw std::logic_error("irrep_content: negative multiplicity");
    if (mult > 0) out.emplace_back(t.irreps[r], int(mult));
  }
  return out;
}

/// O_h -> T_d restriction of irrep labels (each O_h irrep restricts to exactly
/// one T_d irrep; verified against character restriction in the test suite).
inline std::string branch_to_td(std::string_view oh_irrep) {
  if (oh_irrep == "A1g" || oh_irrep == "A2u") return "A1";
  if (oh_irrep == "A2g" || oh_irrep == "A1u") return "A2";
  if (oh_irrep == "Eg" || oh_irrep == "Eu") return "E";
  if (oh_irrep == "T1g" || oh_irrep == "T2u") return "T1";
  if (oh_irrep == "T2g" || oh_irrep == "T1u") return "T2";
  throw std::invalid_argument("branch_to_td: unknown O_h irrep '" + std::string(oh_irrep) + "'");
}

/// Closed-form symmetry-adapted combinations for T_d orbits of the product
/// basis, parametrized by (m,n,k). Golden fixtures for projection tests; the
/// inner vectors of a returned entry form one partner set. Instantiations
/// whose distinctness constraints fail are skipped.
inline std::vector<std::vector<SymVector>> reference_symmetry_vectors(
    const Irrep& irrep, int m, int n, int k) {
  using Terms = std::vector<SymVector::Term>;
  std::vector<std::vector<SymVector>> out;
  auto sv = [](Terms t) { return SymVector(std::move(t)); };
  auto idx = [](int a, int b, int c) { return ModeIndex{a, b, c}; };

  const int em = 2 * m, en = 2 * n, ek = 2 * k;
  const int om = 2 * m + 1, on = 2 * n + 1, ok = 2 * k + 1;

  auto all_distinct = [](int a, int b, int c) { return a != b && b != c && a != c; };

  if (irrep.name == "A1") {
    out.push_back({sv({{idx(em, em, em), 1}})});
    out.push_back({sv({{idx(om, om, om), 1}})});
    if (m != n) {
      out.push_back({sv({{idx(em, em, en), 1}, {idx(em, en, em), 1}, {idx(en, em, em), 1}})});
      out.push_back({sv({{idx(om, om, on), 1}, {idx(om, on, om), 1}, {idx(on, om, om), 1}})});
    }
    if (all_distinct(m, n, k)) {
      out.push_back({sv({{idx(em, en, ek), 1}, {idx(ek, em, en), 1}, {idx(en, ek, em), 1},
                         {idx(ek, en, em), 1}, {idx(em, ek, en), 1}, {idx(en, em, ek), 1}})});
      out.push_back({sv({{idx(om, on, ok), 1}, {idx(ok, om, on), 1}, {idx(on, ok, om), 1},
                         {idx(ok, on, om), 1}, {idx(om, ok, on), 1}, {idx(on, om, ok), 1}})});
    }
  } else if (irrep.name == "A2") {
    if (all_distinct(m, n, k)) {
      out.push_back({sv({{idx(em, en, ek), 1}, {idx(ek, em, en), 1}, {idx(en, ek, em), 1},
                         {idx(ek, en, em), -1}, {idx(em, ek, en), -1}, {idx(en, em, ek), -1}})});
      out.push_back({sv({{idx(om, on, ok), 1}, {idx(ok, om, on), 1}, {idx(on, ok, om), 1},
                         {idx(ok, on, om), -1}, {idx(om, ok, on), -1}, {idx(on, om, ok), -1}})});
    }
  } else if (irrep.name == "E") {
    if (m != n) {
      out.push_back({sv({{idx(en, em, em), 2}, {idx(em, en, em), -1}, {idx(em, em, en), -1}}),
                     sv({{idx(em, en, em), 1}, {idx(em, em, en), -1}})});
      out.push_back({sv({{idx(on, om, om), 2}, {idx(om, on, om), -1}, {idx(om, om, on), -1}}),
                     sv({{idx(om, on, om), 1}, {idx(om, om, on), -1}})});
    }
    if (all_distinct(m, n, k)) {
      out.push_back({sv({{idx(em, en, ek), 2}, {idx(ek, em, en), -1}, {idx(en, ek, em), -1}}),
                     sv({{idx(ek, em, en), 1}, {idx(en, ek, em), -1}})});
      out.push_back({sv({{idx(en, em, ek), 2}, {idx(ek, en, em), -1}, {idx(em, ek, en), -1}}),
                     sv({{idx(ek, en, em), 1}, {idx(em, ek, en), -1}})});
      out.push_back({sv({{idx(om, on, ok), 2}, {idx(ok, om, on), -1}, {idx(on, ok, om), -1}}),
                     sv({{idx(ok, om, on), 1}, {idx(on, ok, om), -1}})});
      out.push_back({sv({{idx(on, om, ok), 2}, {idx(ok, on, om), -1}, {idx(om, ok, on), -1}}),
                     sv({{idx(ok, on, om), 1}, {idx(om, ok, on), -1}})});
    }
  } else if (irrep.name == "T1") {
    if (m != k) {
      out.push_back({sv({{idx(om, en, ok), 1}, {idx(ok, en, om), -1}}),
                     sv({{idx(ok, om, en), 1}, {idx(om, ok, en), -1}}),
                     sv({{idx(en, ok, om), 1}, {idx(en, om, ok), -1}})});
    }
    if (m != k) {
      out.push_back({sv({{idx(em, on, ek), 1}, {idx(ek, on, em), -1}}),
                     sv({{idx(ek, em, on), 1}, {idx(em, ek, on), -1}}),
                     sv({{idx(on, ek, em), 1}, {idx(on, em, ek), -1}})});
    }
  } else if (irrep.name == "T2") {
    out.push_back({sv({{idx(om, en, en), 1}}), sv({{idx(en, om, en), 1}}),
                   sv({{idx(en, en, om), 1}})});
    out.push_back({sv({{idx(em, on, on), 1}}), sv({{idx(on, em, on), 1}}),
                   sv({{idx(on, on, em), 1}})});
    if (m != k) {
      out.push_back({sv({{idx(om, en, ok), 1}, {idx(ok, en, om), 1}}),
                     sv({{idx(ok, om, en), 1}, {idx(om, ok, en), 1}}),
                     sv({{idx(en, ok, om), 1}, {idx(en, om, ok), 1}})});
      out.push_back({sv({{idx(em, on, ek), 1}, {idx(ek, on, em), 1}}),
                     sv({{idx(ek, em, on), 1}, {idx(em, ek, on), 1}}),
                     sv({{idx(on, ek, em), 1}, {idx(on, em, ek), 1}})});
    }
  } else {
    throw std::invalid_argument("reference_symmetry_vectors: T_d irreps only");
  }
  return out;
}

}  // namespace symspec
