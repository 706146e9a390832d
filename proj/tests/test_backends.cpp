#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include <nlohmann/json.hpp>

#include "hecke/dihedral.hpp"
#include "hecke/dyadic.hpp"
#include "hecke/finite.hpp"
#include "hecke/sl2.hpp"

using namespace hecke;

namespace {

Sl2Element mat(const char* a, const char* b, const char* c, const char* d) {
  return Sl2Element{Rational::parse(a), Rational::parse(b), Rational::parse(c),
                    Rational::parse(d)};
}

// Independent left-coset enumeration: orbit closure under the integral
// generators, deduplicated with the Gamma-membership predicate alone (no
// canonical forms), quadratic but honest.
std::size_t oracle_left_count(const Sl2Backend& b, long n) {
  std::vector<GroupElement> reps{b.diag_rep(n)};
  std::vector<GroupElement> frontier = reps;
  auto gens = b.gamma_generators();
  std::vector<GroupElement> sides;
  for (const auto& s : gens) {
    sides.push_back(s);
    sides.push_back(b.inverse(s));
  }
  auto same_coset = [&](const GroupElement& x, const GroupElement& y) {
    return b.in_gamma(b.mul(b.inverse(x), y));
  };
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& g : frontier) {
      for (const auto& s : sides) {
        GroupElement h = b.mul(s, g);
        bool known = false;
        for (const auto& r : reps)
          if (same_coset(r, h)) {
            known = true;
            break;
          }
        if (!known) {
          reps.push_back(h);
          next.push_back(h);
        }
      }
    }
    frontier = std::move(next);
  }
  return reps.size();
}

// Brute-force double-coset orbit for the dihedral pair.
std::set<std::pair<long, int>> dihedral_orbit(long n, int s) {
  std::set<std::pair<long, int>> out;
  for (int t1 : {1, -1})
    for (int t2 : {1, -1}) {
      // (0,t1)(n,s)(0,t2) = (t1 n, t1 s t2)
      out.insert({t1 * n, t1 * s * t2});
    }
  return out;
}

} // namespace

TEST_CASE("dihedral coset combinatorics") {
  DihedralBackend b;

  // canonical rep of (-5,-1) agrees with the brute-force orbit minimum key
  auto orbit = dihedral_orbit(-5, -1);
  CHECK(orbit.count({5, 1}) == 1);
  DoubleCoset d = b.canonical_double_coset(DihedralElement{-5, -1});
  CHECK(std::get<DihedralElement>(d.rep) == DihedralElement{5, 1});
  for (const auto& [n, s] : orbit)
    CHECK(b.canonical_double_coset(DihedralElement{n, s}) == d);

  auto cosets = b.left_cosets_of(b.canonical_double_coset(DihedralElement{1, 1}));
  REQUIRE(cosets.size() == 2);
  CHECK(std::get<DihedralElement>(cosets[0].rep) == DihedralElement{-1, 1});
  CHECK(std::get<DihedralElement>(cosets[1].rep) == DihedralElement{1, 1});

  CosetCounts counts = coset_counts(b, d);
  CHECK(counts.left == 2);
  CHECK(counts.right == 2);
  CHECK(delta(b, d) == Rational(1));

  DoubleCoset e = b.canonical_double_coset(b.identity());
  CHECK(b.left_cosets_of(e).size() == 1);
  CHECK(coset_counts(b, e).left == 1);
}

TEST_CASE("dyadic coset combinatorics") {
  DyadicBackend b;
  GroupElement g = DyadicElement{Rational(0), 1};

  DoubleCoset d = b.canonical_double_coset(g);
  auto cosets = b.left_cosets_of(d);
  REQUIRE(cosets.size() == 2);
  CHECK(std::get<DyadicElement>(cosets[0].rep) == DyadicElement{Rational(0), 1});
  CHECK(std::get<DyadicElement>(cosets[1].rep) == DyadicElement{Rational(1), 1});

  CosetCounts counts = coset_counts(b, d);
  CHECK(counts.left == 2);
  CHECK(counts.right == 1);
  CHECK(delta(b, d) == Rational(2));

  // Delta is 2^k across a spread of k, including the inverse direction
  for (long k = -3; k <= 3; ++k) {
    GroupElement h = DyadicElement{Rational(5, 8), k};
    CHECK(delta(b, b.canonical_double_coset(h)) == Rational::power(2, k));
  }

  CHECK(delta(b, b.canonical_double_coset(b.identity())) == Rational(1));
  CHECK_THROWS_AS(b.validate(GroupElement{DyadicElement{Rational(1, 3), 0}}), domain_error);
  // enumeration budget is explicit, not a hang or a silent truncation
  DyadicBackend tiny(4);
  CHECK_THROWS_AS(tiny.left_cosets_of(tiny.canonical_double_coset(
                      GroupElement{DyadicElement{Rational(0), 5}})),
                  budget_error);
}

TEST_CASE("sl2 canonical double cosets") {
  Sl2Backend b(2);

  CHECK(b.coset_index(b.canonical_double_coset(b.diag_rep(3))) == 3);
  // [[q,k],[0,1/q]] and unipotents [[1,(j-i)/q],[0,1]] all land in index 1
  for (long k = 0; k < 2; ++k)
    CHECK(b.coset_index(b.canonical_double_coset(b.upper_rep(k))) == 1);
  CHECK(b.coset_index(b.canonical_double_coset(mat("1", "1/2", "0", "1"))) == 1);
  CHECK(b.coset_index(b.canonical_double_coset(b.identity())) == 0);

  // the canonical rep of the inverse coset is the same diagonal
  GroupElement y1inv = b.inverse(b.upper_rep(1));
  CHECK(b.coset_index(b.canonical_double_coset(y1inv)) == 1);

  CHECK_THROWS_AS(b.validate(GroupElement{mat("2", "0", "0", "1")}), domain_error);
  CHECK_THROWS_AS(b.validate(GroupElement{mat("1/3", "0", "0", "3")}), domain_error);
}

TEST_CASE("sl2 canonical left coset normal form") {
  Sl2Backend b(2);
  GroupElement g = mat("1", "0", "1/2", "1");
  LeftCoset lc = b.canonical_left_coset(g);
  const auto& f = std::get<Sl2Element>(lc.rep);
  CHECK(f == mat("2", "1", "0", "1/2"));
  // the form is in the same coset and in the double coset of index 1
  CHECK(b.in_gamma(b.mul(b.inverse(lc.rep), g)));
  CHECK(b.coset_index(b.canonical_double_coset(lc.rep)) == 1);

  // identity and diagonals are already canonical
  CHECK(std::get<Sl2Element>(b.canonical_left_coset(b.identity()).rep) ==
        std::get<Sl2Element>(b.identity()));
  CHECK(std::get<Sl2Element>(b.canonical_left_coset(b.diag_rep(1)).rep) == b.diag_rep(1));
}

TEST_CASE("sl2 left coset counts match the independent oracle") {
  for (long q : {2L, 3L}) {
    Sl2Backend b(q);
    for (long n = 1; n <= 2; ++n) {
      std::uint64_t expect = static_cast<std::uint64_t>(q + 1);
      for (long i = 0; i < 2 * n - 1; ++i) expect *= static_cast<std::uint64_t>(q);
      CHECK(left_count(b, b.coset_of_index(n)) == expect);
      CHECK(oracle_left_count(b, n) == expect);
    }
  }
  // n = 3 at q = 2 stays cheap enough for the quadratic oracle
  Sl2Backend b2(2);
  CHECK(left_count(b2, b2.coset_of_index(3)) == 96);
  CHECK(oracle_left_count(b2, 3) == 96);

  Sl2Backend tiny(2, 5);
  CHECK_THROWS_AS(tiny.left_cosets_of(tiny.coset_of_index(1)), budget_error);
}

TEST_CASE("finite pair: S3 with the swap subgroup") {
  FinitePairSpec spec{3, {{1, 0, 2}, {1, 2, 0}}, {{1, 0, 2}}};
  auto b = FiniteBackend::load(spec);
  CHECK(b->order() == 6);
  CHECK(b->gamma_order() == 2);

  auto dcs = b->double_cosets();
  REQUIRE(dcs.size() == 2);
  CHECK(left_count(*b, dcs[0]) + left_count(*b, dcs[1]) == 3);  // |G/Gamma| = 3
  // the non-identity double coset has L = 2
  DoubleCoset big = b->canonical_double_coset(b->parse_element(nlohmann::json{2, 1, 0}));
  CHECK(left_count(*b, big) == 2);
  CHECK(delta(*b, big) == Rational(1));

  // trivial core: reduction leaves the pair unchanged
  CHECK(b->core_subgroup().size() == 1);
  auto red = b->reduce();
  CHECK(red.already_reduced);
  CHECK(red.pair->order() == 6);
  for (const auto& [from, to] : red.coset_map) CHECK(from.rep == to.rep);
}

TEST_CASE("finite pair: S3 with A3") {
  FinitePairSpec spec{3, {{1, 0, 2}, {1, 2, 0}}, {{1, 2, 0}}};
  auto b = FiniteBackend::load(spec);
  auto dcs = b->double_cosets();
  REQUIRE(dcs.size() == 2);
  for (const auto& d : dcs) CHECK(left_count(*b, d) == 1);  // normal subgroup

  // the core is A3 itself; the reduction is the two-element pair
  CHECK(b->core_subgroup().size() == 3);
  auto red = b->reduce();
  CHECK(!red.already_reduced);
  CHECK(red.pair->order() == 2);
  CHECK(red.pair->gamma_order() == 1);
  CHECK(red.pair->core_subgroup().size() == 1);
  CHECK(red.coset_map.size() == 2);
}

TEST_CASE("finite pair: Gamma = G and Gamma = 1") {
  FinitePairSpec whole{3, {{1, 0, 2}, {1, 2, 0}}, {{1, 0, 2}, {1, 2, 0}}};
  auto bw = FiniteBackend::load(whole);
  CHECK(bw->double_cosets().size() == 1);

  FinitePairSpec trivial{3, {{1, 0, 2}, {1, 2, 0}}, {}};
  auto bt = FiniteBackend::load(trivial);
  CHECK(bt->double_cosets().size() == 6);
  CHECK(bt->core_subgroup().size() == 1);
  CHECK(bt->gamma_order() == 1);
}

TEST_CASE("finite pair load errors") {
  // subgroup generator outside the group
  FinitePairSpec bad{4, {{1, 0, 2, 3}}, {{1, 2, 3, 0}}};
  CHECK_THROWS_AS(FiniteBackend::load(bad), domain_error);

  // order budget
  FinitePairSpec big{6, {{1, 2, 3, 4, 5, 0}, {1, 0, 2, 3, 4, 5}}, {}};
  CHECK_THROWS_AS(FiniteBackend::load(big, Backend::kDefaultBudget, 100), budget_error);

  FinitePairSpec malformed{3, {{1, 1, 2}}, {}};
  CHECK_THROWS_AS(FiniteBackend::load(malformed), domain_error);
}

TEST_CASE("the identity double coset is the single coset Gamma") {
  DihedralBackend dih;
  DyadicBackend dy;
  Sl2Backend sl(3);
  for (const Backend* b : std::initializer_list<const Backend*>{&dih, &dy, &sl}) {
    auto cosets = b->left_cosets_of(b->canonical_double_coset(b->identity()));
    REQUIRE(cosets.size() == 1);
    CHECK(b->in_gamma(cosets[0].rep));
  }
}

TEST_CASE("element json round trips") {
  DihedralBackend dih;
  GroupElement g = dih.parse_element(nlohmann::json::array({-4, -1}));
  CHECK(dih.parse_element(dih.element_json(g)) == g);

  DyadicBackend dy;
  GroupElement h = dy.parse_element(nlohmann::json::array({"-7/8", 2}));
  CHECK(dy.parse_element(dy.element_json(h)) == h);

  Sl2Backend sl(3);
  GroupElement m = sl.parse_element(
      nlohmann::json::array({nlohmann::json::array({"3", "1"}),
                             nlohmann::json::array({"0", "1/3"})}));
  CHECK(sl.parse_element(sl.element_json(m)) == m);

  CHECK_THROWS_AS(dih.parse_element(nlohmann::json::array({1, 2})), domain_error);
  CHECK_THROWS_AS(sl.parse_element(nlohmann::json::array({1})), parse_error);
}
