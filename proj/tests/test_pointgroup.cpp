#include "symspec/pointgroup.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

using namespace symspec;

namespace {

std::map<std::string, int> content_map(std::span<const ModeIndex> states,
                                       const PointGroup& g) {
  std::map<std::string, int> out;
  for (const auto& [irrep, count] : irrep_content(states, g)) out[irrep.name] = count;
  return out;
}

std::map<std::string, int> orbit_content(const ModeIndex& rep, const PointGroup& g) {
  const auto orb = orbit_states(rep);
  return content_map(orb, g);
}

}  // namespace

TEST_CASE("group construction: orders and class sizes") {
  const PointGroup& td = PointGroup::td();
  CHECK(td.order() == 24);
  CHECK(td.table().class_sizes == std::vector<int>{1, 8, 3, 6, 6});
  CHECK(td.table().class_labels ==
        std::vector<std::string>{"E", "8C3", "3C2", "6S4", "6sd"});

  const PointGroup& oh = PointGroup::oh();
  CHECK(oh.order() == 48);
  CHECK(oh.table().class_sizes == std::vector<int>{1, 8, 6, 6, 3, 1, 6, 8, 3, 6});
}

TEST_CASE("every T_d element leaves the monomial xyz invariant") {
  for (const GroupElement& e : PointGroup::td().elements())
    CHECK(e.signs[0] * e.signs[1] * e.signs[2] == +1);
}

TEST_CASE("inversion is central and a class by itself") {
  const GroupElement inv = inversion_element();
  CHECK(inv.det() == -1);
  CHECK(inv.trace() == -3);
  const PointGroup& oh = PointGroup::oh();
  int members = 0;
  for (std::size_t e = 0; e < oh.elements().size(); ++e) {
    if (oh.elements()[e] == inv)
      members = oh.table().class_sizes[std::size_t(oh.class_of(e))];
    CHECK(oh.elements()[e] * inv == inv * oh.elements()[e]);
  }
  CHECK(members == 1);
}

TEST_CASE("action on product states: signs and permutation") {
  const GroupElement inv = inversion_element();
  CHECK(act(inv, {1, 0, 0}) == std::make_pair(ModeIndex{1, 0, 0}, -1));

  const GroupElement swap_xy{{1, 0, 2}, {1, 1, 1}};
  CHECK(act(swap_xy, {2, 1, 0}) == std::make_pair(ModeIndex{1, 2, 0}, +1));

  const GroupElement c2z{{0, 1, 2}, {-1, -1, 1}};
  CHECK(act(c2z, {1, 1, 3}) == std::make_pair(ModeIndex{1, 1, 3}, +1));
}

TEST_CASE("action composes as a homomorphism") {
  std::mt19937 rng(7);
  const auto& elements = PointGroup::oh().elements();
  std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
  std::uniform_int_distribution<int> quanta(0, 6);
  for (int trial = 0; trial < 500; ++trial) {
    const GroupElement g = elements[pick(rng)];
    const GroupElement h = elements[pick(rng)];
    const ModeIndex s{quanta(rng), quanta(rng), quanta(rng)};
    const auto [s1, sign1] = act(h, s);
    const auto [s2, sign2] = act(g, s1);
    const auto [s3, sign3] = act(g * h, s);
    CHECK(s2 == s3);
    CHECK(sign1 * sign2 == sign3);
  }
}

TEST_CASE("group axioms: closure and inverses") {
  for (const PointGroup* g : {&PointGroup::td(), &PointGroup::oh()}) {
    const std::set<GroupElement> all(g->elements().begin(), g->elements().end());
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, g->elements().size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
      const GroupElement a = g->elements()[pick(rng)];
      const GroupElement b = g->elements()[pick(rng)];
      CHECK(all.count(a * b) == 1);
      CHECK(a * a.inverse() == GroupElement{});
    }
  }
}

TEST_CASE("character orthogonality holds exactly") {
  for (const PointGroup* g : {&PointGroup::td(), &PointGroup::oh()}) {
    const CharacterTable& t = g->table();
    long dim2 = 0;
    for (const Irrep& irrep : t.irreps) dim2 += long(irrep.dim) * irrep.dim;
    CHECK(dim2 == g->order());
    for (std::size_t a = 0; a < t.irreps.size(); ++a) {
      CHECK(t.chi[a][0] == t.irreps[a].dim);
      for (std::size_t b = 0; b < t.irreps.size(); ++b) {
        long s = 0;
        for (std::size_t c = 0; c < t.class_labels.size(); ++c)
          s += long(t.class_sizes[c]) * t.chi[a][c] * t.chi[b][c];
        CHECK(s == (a == b ? g->order() : 0));
      }
    }
  }
}

TEST_CASE("character projectors are idempotent and mutually orthogonal") {
  // Q_S = sum_g chi_S(g) O_g on a level; exact integers demand
  // Q_S^2 = (|G|/dim) Q_S and Q_S Q_S' = 0.
  const PointGroup& td = PointGroup::td();
  for (int nu : {0, 1, 2, 3, 4, 5, 6}) {
    const auto states = level_states(nu);
    const int n = int(states.size());
    std::map<ModeIndex, int> index;
    for (int i = 0; i < n; ++i) index[states[std::size_t(i)]] = i;

    std::vector<std::vector<std::vector<long>>> q;  // [irrep][row][col]
    for (const Irrep& irrep : td.table().irreps) {
      std::vector<std::vector<long>> m(std::size_t(n), std::vector<long>(std::size_t(n), 0));
      for (std::size_t e = 0; e < td.elements().size(); ++e) {
        const int chi = td.chi(irrep, e);
        if (chi == 0) continue;
        for (int col = 0; col < n; ++col) {
          const auto [img, sign] = act(td.elements()[e], states[std::size_t(col)]);
          m[std::size_t(index.at(img))][std::size_t(col)] += long(chi) * sign;
        }
      }
      q.push_back(std::move(m));
    }
    auto mul = [n](const auto& a, const auto& b) {
      std::vector<std::vector<long>> c(std::size_t(n), std::vector<long>(std::size_t(n), 0));
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
          if (a[std::size_t(i)][std::size_t(k)] != 0)
            for (int j = 0; j < n; ++j)
              c[std::size_t(i)][std::size_t(j)] +=
                  a[std::size_t(i)][std::size_t(k)] * b[std::size_t(k)][std::size_t(j)];
      return c;
    };
    for (std::size_t a = 0; a < q.size(); ++a)
      for (std::size_t b = 0; b < q.size(); ++b) {
        const auto prod = mul(q[a], q[b]);
        const long factor =
            a == b ? td.order() / td.table().irreps[a].dim : 0;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            CHECK(prod[std::size_t(i)][std::size_t(j)] ==
                  factor * q[a][std::size_t(i)][std::size_t(j)]);
      }
  }
}

TEST_CASE("projection: lowest levels") {
  const PointGroup& td = PointGroup::td();

  const auto a1_0 = project(level_states(0), td.irrep("A1"), td);
  REQUIRE(a1_0.size() == 1);
  CHECK(a1_0[0].terms().size() == 1);
  CHECK(a1_0[0].terms()[0] == SymVector::Term{ModeIndex{0, 0, 0}, 1});
  CHECK(a1_0[0].norm2() == 1);

  const auto t2_1 = project(level_states(1), td.irrep("T2"), td);
  REQUIRE(t2_1.size() == 3);
  for (const SymVector& v : t2_1) {
    CHECK(v.terms().size() == 1);
    CHECK(v.norm2() == 1);
  }

  CHECK(project(level_states(1), td.irrep("A1"), td).empty());
  CHECK(project(level_states(1), td.irrep("A2"), td).empty());
}

TEST_CASE("projected vectors are orthogonal, parity-pure and level-pure") {
  const PointGroup& td = PointGroup::td();
  for (int nu : {2, 3, 4, 5, 6, 7}) {
    const auto states = level_states(nu);
    int total = 0;
    for (const Irrep& irrep : td.table().irreps) {
      const auto vecs = project(states, irrep, td);
      total += int(vecs.size());
      for (std::size_t i = 0; i < vecs.size(); ++i) {
        CHECK(vecs[i].parity() == ((nu % 2) ? -1 : +1));
        CHECK(vecs[i].level() == nu);
        for (std::size_t j = i + 1; j < vecs.size(); ++j)
          CHECK(dot(vecs[i], vecs[j]) == 0);
      }
    }
    // isotypic completeness: all partner copies together span the level
    CHECK(total == int(states.size()));
  }
}

TEST_CASE("irrep content reproduces the T_d splitting of permutation orbits") {
  const PointGroup& td = PointGroup::td();
  using M = std::map<std::string, int>;
  // one row per orbit family, several parameter instances each
  CHECK(orbit_content({0, 0, 0}, td) == M{{"A1", 1}});
  CHECK(orbit_content({4, 4, 4}, td) == M{{"A1", 1}});
  CHECK(orbit_content({1, 0, 0}, td) == M{{"T2", 1}});
  CHECK(orbit_content({5, 2, 2}, td) == M{{"T2", 1}});
  CHECK(orbit_content({3, 3, 0}, td) == M{{"T2", 1}});
  CHECK(orbit_content({2, 0, 0}, td) == M{{"A1", 1}, {"E", 1}});
  CHECK(orbit_content({6, 2, 2}, td) == M{{"A1", 1}, {"E", 1}});
  CHECK(orbit_content({1, 1, 1}, td) == M{{"A1", 1}});
  CHECK(orbit_content({0, 2, 1}, td) == M{{"T1", 1}, {"T2", 1}});
  CHECK(orbit_content({0, 1, 3}, td) == M{{"T1", 1}, {"T2", 1}});
  CHECK(orbit_content({0, 2, 4}, td) == M{{"A1", 1}, {"A2", 1}, {"E", 2}});
  CHECK(orbit_content({3, 1, 1}, td) == M{{"A1", 1}, {"E", 1}});
  CHECK(orbit_content({1, 3, 5}, td) == M{{"A1", 1}, {"A2", 1}, {"E", 2}});
}

TEST_CASE("irrep content reproduces the O_h classification") {
  const PointGroup& oh = PointGroup::oh();
  using M = std::map<std::string, int>;
  CHECK(orbit_content({0, 0, 0}, oh) == M{{"A1g", 1}});
  CHECK(orbit_content({1, 1, 1}, oh) == M{{"A2u", 1}});
  CHECK(orbit_content({1, 1, 0}, oh) == M{{"T2g", 1}});
  CHECK(orbit_content({0, 0, 1}, oh) == M{{"T1u", 1}});
  CHECK(orbit_content({0, 0, 2}, oh) == M{{"A1g", 1}, {"Eg", 1}});
  CHECK(orbit_content({1, 1, 3}, oh) == M{{"A2u", 1}, {"Eu", 1}});
  CHECK(orbit_content({0, 2, 4}, oh) == M{{"A1g", 1}, {"A2g", 1}, {"Eg", 2}});
  CHECK(orbit_content({1, 3, 5}, oh) == M{{"A1u", 1}, {"A2u", 1}, {"Eu", 2}});
  CHECK(orbit_content({0, 2, 1}, oh) == M{{"T1u", 1}, {"T2u", 1}});
  CHECK(orbit_content({1, 3, 0}, oh) == M{{"T1g", 1}, {"T2g", 1}});
}

TEST_CASE("level content exhausts the degeneracy") {
  const PointGroup& td = PointGroup::td();
  for (int nu = 0; nu <= 10; ++nu) {
    const auto content = irrep_content(level_states(nu), td);
    int sum = 0;
    for (const auto& [irrep, count] : content) sum += irrep.dim * count;
    CHECK(sum == (nu + 1) * (nu + 2) / 2);
  }
}

TEST_CASE("O_h -> T_d branching agrees with character restriction") {
  const PointGroup& oh = PointGroup::oh();
  const PointGroup& td = PointGroup::td();
  std::map<GroupElement, int> td_class;
  for (std::size_t e = 0; e < td.elements().size(); ++e)
    td_class[td.elements()[e]] = td.class_of(e);

  for (const Irrep& ohr : oh.table().irreps) {
    // restrict the O_h character to the T_d subgroup and decompose
    std::map<std::string, long> counts;
    for (const Irrep& tdr : td.table().irreps) {
      long s = 0;
      for (std::size_t e = 0; e < oh.elements().size(); ++e) {
        auto it = td_class.find(oh.elements()[e]);
        if (it == td_class.end()) continue;
        s += long(oh.chi(ohr, e)) * td.table().chi[td.table().irrep_index(tdr.name)]
                                        [std::size_t(it->second)];
      }
      REQUIRE(s % td.order() == 0);
      if (s != 0) counts[tdr.name] = s / td.order();
    }
    REQUIRE(counts.size() == 1);
    CHECK(counts.begin()->second == 1);
    CHECK(counts.begin()->first == branch_to_td(ohr.name));
  }

  CHECK(branch_to_td("A2u") == "A1");
  CHECK(branch_to_td("T2u") == "T1");
  CHECK(branch_to_td("Eg") == "E");
  CHECK_THROWS_AS(branch_to_td("B1"), std::invalid_argument);
}

TEST_CASE("projection spans the reference symmetry-adapted combinations") {
  const PointGroup& td = PointGroup::td();
  for (const Irrep& irrep : td.table().irreps)
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n)
        for (int k = 0; k <= 2; ++k)
          for (const auto& partner_set : reference_symmetry_vectors(irrep, m, n, k))
            for (const SymVector& ref : partner_set) {
              const auto orbit = orbit_states(ref.terms().front().first);
              const auto basis = project(orbit, irrep, td);
              REQUIRE_FALSE(basis.empty());
              // residual of ref against the span of the projected basis
              double res2 = 1.0;
              for (const SymVector& b : basis) {
                const double c = overlap(ref, b);
                res2 -= c * c;
              }
              CHECK(res2 < 1e-12);
            }
}

TEST_CASE("projection input validation") {
  const PointGroup& td = PointGroup::td();
  // not closed under permutations
  const std::vector<ModeIndex> open{{1, 0, 0}, {0, 1, 0}};
  CHECK_THROWS_AS(project(open, td.irrep("T2"), td), std::invalid_argument);
  CHECK_THROWS_AS(irrep_content(open, td), std::invalid_argument);
}
