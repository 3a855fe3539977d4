#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "cgt/errors.hpp"
#include "cgt/perm_group.hpp"
#include "oracles.hpp"

using cgt::Perm;
using cgt::PermGroup;

namespace {

PermGroup s3() { return PermGroup::symmetric(3); }
PermGroup a4() { return PermGroup::alternating(4); }

std::uint64_t oracle_order(const PermGroup& g) {
  std::vector<std::vector<unsigned>> images;
  for (const auto& p : g.generators()) images.push_back(p.images());
  return oracles::brute_force_order(images);
}

} // namespace

TEST_CASE("orders via stabilizer chain") {
  CHECK(PermGroup::trivial(1).order() == 1);
  CHECK(s3().order() == 6);
  CHECK(a4().order() == 12);
  CHECK(PermGroup::symmetric(4).order() == 24);
  CHECK(PermGroup::symmetric(6).order() == 720);
  CHECK(PermGroup::alternating(5).order() == 60);
  CHECK(PermGroup::cyclic(6).order() == 6);
  CHECK(PermGroup::dihedral(4).order() == 8);
  CHECK(PermGroup::dihedral(7).order() == 14);
}

TEST_CASE("chain order matches brute-force closure") {
  for (const PermGroup& g :
       {s3(), a4(), PermGroup::symmetric(4), PermGroup::dihedral(6), PermGroup::cyclic(9),
        PermGroup(6, {Perm::from_cycles(6, {{0, 1, 2}}), Perm::from_cycles(6, {{3, 4, 5}})})}) {
    CHECK(g.order() == oracle_order(g));
  }
}

TEST_CASE("membership by sifting") {
  PermGroup c3(3, {Perm::from_cycles(3, {{0, 1, 2}})});
  CHECK(c3.is_member(Perm(3)));
  CHECK(!c3.is_member(Perm::from_cycles(3, {{0, 1}})));

  // exact membership count inside the ambient symmetric group
  for (const PermGroup& g : {a4(), PermGroup::dihedral(4), PermGroup::cyclic(4)}) {
    unsigned d = g.degree();
    std::uint64_t members = 0;
    PermGroup::symmetric(d).for_each_element([&](const Perm& p) {
      if (g.is_member(p)) ++members;
    });
    CHECK(members == g.order());
  }

  CHECK_THROWS_AS(s3().is_member(Perm(4)), cgt::InputError);
}

TEST_CASE("random generator products are members") {
  std::mt19937_64 rng(11);
  PermGroup g = a4();
  for (int trial = 0; trial < 100; ++trial) {
    Perm p(g.degree());
    std::uniform_int_distribution<std::size_t> pick(0, g.generators().size() - 1);
    for (int i = 0; i < 8; ++i) p = p * g.generators()[pick(rng)];
    CHECK(g.is_member(p));
  }
}

TEST_CASE("element enumeration") {
  PermGroup g = s3();
  auto elems = g.elements();
  CHECK(elems.size() == 6);
  std::sort(elems.begin(), elems.end());
  CHECK(std::adjacent_find(elems.begin(), elems.end()) == elems.end());

  CHECK_THROWS_AS(PermGroup::symmetric(8).elements(), cgt::ResourceError);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) CHECK(g.is_member(g.random_element(rng)));
}

TEST_CASE("element orders and exponent") {
  auto orders = PermGroup::cyclic(6).element_orders();
  std::map<std::uint64_t, int> tally;
  for (auto o : orders) ++tally[o];
  CHECK(tally == std::map<std::uint64_t, int>{{1, 1}, {2, 1}, {3, 2}, {6, 2}});
  CHECK(PermGroup::cyclic(6).exponent() == 6);

  PermGroup v4(4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{2, 3}})});
  CHECK(v4.order() == 4);
  CHECK(v4.exponent() == 2);
  CHECK(PermGroup::cyclic(3).exponent() == 3); // 3 does not divide 2-1
}

TEST_CASE("normal closure") {
  CHECK(cgt::normal_closure(s3(), {Perm(3)}).is_trivial());
  CHECK(cgt::normal_closure(s3(), {Perm::from_cycles(3, {{0, 1, 2}})}).order() == 3);
  CHECK(cgt::normal_closure(a4(), {Perm::from_cycles(4, {{0, 1}, {2, 3}})}).order() == 4);
  CHECK_THROWS_AS(cgt::normal_closure(PermGroup::cyclic(3), {Perm::from_cycles(3, {{0, 1}})}),
                  cgt::InputError);
}

TEST_CASE("derived subgroup") {
  CHECK(cgt::derived_subgroup(PermGroup::cyclic(12)).is_trivial());
  CHECK(cgt::derived_subgroup(s3()).order() == 3);
  CHECK(cgt::derived_subgroup(a4()).order() == 4);
  CHECK(cgt::derived_subgroup(PermGroup::symmetric(4)).order() == 12);
  CHECK(cgt::derived_subgroup(PermGroup::dihedral(4)).order() == 2);

  for (const PermGroup& g : {s3(), a4(), PermGroup::dihedral(5)}) {
    PermGroup d = cgt::derived_subgroup(g);
    CHECK(cgt::is_normal(g, d));
    CHECK(cgt::quotient(g, d).is_abelian());
  }
}

TEST_CASE("quotients") {
  PermGroup g = s3();
  CHECK(cgt::quotient(g, g).is_trivial());

  PermGroup a3 = cgt::derived_subgroup(g);
  PermGroup q = cgt::quotient(g, a3);
  CHECK(q.order() == 2);

  PermGroup v4 = cgt::derived_subgroup(a4());
  PermGroup c3 = cgt::quotient(a4(), v4);
  CHECK(c3.order() == 3);
  CHECK(c3.exponent() == 3);

  PermGroup t(3, {Perm::from_cycles(3, {{0, 1}})});
  CHECK_THROWS_AS(cgt::quotient(s3(), t), cgt::InputError);

  // Lagrange consistency
  CHECK(cgt::quotient(a4(), v4).order() * v4.order() == a4().order());
}

TEST_CASE("normalizer") {
  PermGroup g = s3();
  PermGroup t(3, {Perm::from_cycles(3, {{0, 1}})});
  CHECK(cgt::normalizer(g, t).order() == 2);
  CHECK(cgt::normalizer(g, g).order() == 6);
  PermGroup v4 = cgt::derived_subgroup(a4());
  CHECK(cgt::normalizer(a4(), v4).order() == 12);
}

TEST_CASE("sylow subgroups") {
  CHECK(cgt::sylow(PermGroup::cyclic(6), 5).is_trivial());
  PermGroup syl3 = cgt::sylow(s3(), 3);
  CHECK(syl3.order() == 3);
  CHECK(cgt::is_normal(s3(), syl3));

  CHECK(cgt::sylow(PermGroup::symmetric(4), 2).order() == 8);
  PermGroup v4 = cgt::sylow(a4(), 2);
  CHECK(v4.order() == 4);
  CHECK(cgt::is_normal(a4(), v4));

  CHECK_THROWS_AS(cgt::sylow(s3(), 4), cgt::InputError);

  // p-part property across a few groups and all primes up to the order
  for (const PermGroup& g : {s3(), a4(), PermGroup::symmetric(4), PermGroup::dihedral(6),
                             PermGroup::cyclic(12)}) {
    for (unsigned p = 2; p <= g.order(); ++p) {
      if (!cgt::is_prime(p)) continue;
      std::uint64_t part = 1;
      std::uint64_t n = g.order();
      while (n % p == 0) {
        part *= p;
        n /= p;
      }
      CHECK(cgt::sylow(g, p).order() == part);
    }
  }
}

TEST_CASE("subgroup relations") {
  CHECK(cgt::is_subgroup(cgt::derived_subgroup(s3()), s3()));
  CHECK(!cgt::is_subgroup(s3(), cgt::derived_subgroup(s3())));
  CHECK(cgt::groups_equal(s3(), PermGroup(3, {Perm::from_cycles(3, {{0, 1}}),
                                              Perm::from_cycles(3, {{1, 2}})})));
}
