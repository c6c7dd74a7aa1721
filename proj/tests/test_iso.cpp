#include <gtest/gtest.h>

#include <functional>
#include <numeric>
#include <random>

#include "cayley/aut.hpp"
#include "cayley/construct.hpp"
#include "cayley/iso.hpp"
#include "support/battery.hpp"
#include "support/oracles.hpp"

namespace {

using namespace cayley;

GroupTable z8_z2(std::size_t action) {
  auto const k = cyclic(8);
  auto const h = cyclic(2, "s");
  return semidirect(k, h, actions(h, k).at(action));
}

GroupTable q8() {
  return oracle::from_permutations({oracle::cycles(8, {{1, 2, 3, 4}, {5, 6, 7, 8}}),
                                    oracle::cycles(8, {{1, 5, 3, 7}, {2, 8, 4, 6}})});
}

TEST(AreIsomorphic, Examples) {
  auto const z6 = cyclic(6);
  auto const z2z3 = direct_product(cyclic(2), cyclic(3));
  auto const w = are_isomorphic(z6, z2z3);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(is_isomorphism(z6, z2z3, *w));
  EXPECT_FALSE(are_isomorphic(cyclic(4), direct_product(cyclic(2), cyclic(2))));
  EXPECT_FALSE(are_isomorphic(z8_z2(1), z8_z2(2)));
  EXPECT_FALSE(are_isomorphic(cyclic(4), cyclic(5)));
  EXPECT_FALSE(are_isomorphic(dihedral(4), q8()));
}

TEST(AbelianInvariants, Examples) {
  EXPECT_EQ(abelian_invariants(cyclic(6)), (std::vector<std::uint64_t>{6}));
  EXPECT_EQ(abelian_invariants(direct_product(cyclic(2), cyclic(2))),
            (std::vector<std::uint64_t>{2, 2}));
  EXPECT_EQ(abelian_invariants(aut_group(cyclic(8)).table),
            (std::vector<std::uint64_t>{2, 2}));
  EXPECT_TRUE(abelian_invariants(cyclic(1)).empty());
  EXPECT_EQ(abelian_invariants(direct_product(cyclic(4), cyclic(6))),
            (std::vector<std::uint64_t>{2, 12}));
  EXPECT_THROW(abelian_invariants(dihedral(3)), std::invalid_argument);
}

TEST(Identify, Examples) {
  auto const d4 = identify(aut_group(direct_product(cyclic(4), cyclic(2))).table);
  EXPECT_EQ(d4.kind, CatalogName::Kind::dihedral);
  EXPECT_EQ(d4.params, (std::vector<std::uint64_t>{4}));
  EXPECT_EQ(d4.display, "D4");

  auto const p = identify(aut_group(direct_product(cyclic(8), cyclic(2))).table);
  EXPECT_EQ(p.kind, CatalogName::Kind::product_of_named);
  EXPECT_EQ(p.display, "Z2 x D4");
  ASSERT_EQ(p.factors.size(), 2u);
  EXPECT_EQ(p.factors[0].display, "Z2");

  auto const one = identify(cyclic(1));
  EXPECT_EQ(one.kind, CatalogName::Kind::cyclic);
  EXPECT_EQ(one.params, (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(one.display, "Z1");
}

TEST(Identify, Precedence) {
  EXPECT_EQ(identify(direct_product(cyclic(2), cyclic(3))).display, "Z6");
  EXPECT_EQ(identify(direct_product(cyclic(4), cyclic(2))).display, "Z2 x Z4");
  EXPECT_EQ(identify(direct_product(cyclic(4), cyclic(2))).kind,
            CatalogName::Kind::abelian_product);
  EXPECT_EQ(identify(direct_product(cyclic(2), dihedral(3))).display, "D6");
  EXPECT_EQ(identify(dihedral(2)).display, "Z2 x Z2");
  EXPECT_EQ(identify(z8_z2(1)).display, "Z8 : Z2 [r^3]");
  EXPECT_EQ(identify(z8_z2(2)).display, "Z8 : Z2 [r^5]");
  EXPECT_EQ(identify(z8_z2(3)).display, "D8");
  auto const k = cyclic(3);
  auto const h = cyclic(4, "s");
  auto const dic = identify(semidirect(k, h, actions(h, k)[1]));
  EXPECT_EQ(dic.kind, CatalogName::Kind::semidirect_cyclic);
  EXPECT_EQ(dic.params, (std::vector<std::uint64_t>{3, 4, 2}));
  EXPECT_EQ(dic.display, "Z3 : Z4 [r^2]");
  auto const q = identify(q8());
  EXPECT_EQ(q.kind, CatalogName::Kind::unidentified);
  EXPECT_EQ(q.display, "unidentified(8)");
}

TEST(NormalSubgroups, Counts) {
  EXPECT_EQ(normal_subgroups(dihedral(4)).size(), 6u);
  EXPECT_EQ(normal_subgroups(q8()).size(), 6u);
  EXPECT_EQ(normal_subgroups(cyclic(12)).size(), 6u);
  EXPECT_EQ(normal_subgroups(dihedral(3)).size(), 3u);
  auto const ns = normal_subgroups(dihedral(6));
  for (std::size_t i = 1; i < ns.size(); ++i) {
    EXPECT_LE(ns[i - 1].size(), ns[i].size());
  }
}

std::vector<battery::Entry> const& groups() {
  static auto const all = battery::small_groups();
  return all;
}

TEST(IsoProperty, AgreesWithOracleOnAllEqualOrderPairs) {
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < groups().size(); ++i) {
    for (std::size_t j = i; j < groups().size(); ++j) {
      auto const& a = groups()[i];
      auto const& b = groups()[j];
      if (a.group.order() != b.group.order()) {
        continue;
      }
      SCOPED_TRACE(a.name + " vs " + b.name);
      auto const ab = are_isomorphic(a.group, b.group);
      auto const ba = are_isomorphic(b.group, a.group);
      ASSERT_EQ(ab.has_value(), ba.has_value());
      ASSERT_EQ(ab.has_value(), oracle::isomorphic(a.group, b.group));
      if (ab) {
        ASSERT_TRUE(is_isomorphism(a.group, b.group, *ab));
        ASSERT_EQ(order_spectrum(a.group), order_spectrum(b.group));
      }
      ++pairs;
    }
  }
  EXPECT_GT(pairs, 60u);
}

TEST(IsoProperty, IdentifyIsRelabellingInvariant) {
  std::mt19937 rng(99);
  for (auto const& entry : groups()) {
    SCOPED_TRACE(entry.name);
    auto const& g = entry.group;
    std::vector<Elem> perm(g.order());
    std::iota(perm.begin(), perm.end(), Elem{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    auto const moved = oracle::relabel(g, perm);
    auto const w = are_isomorphic(g, moved);
    ASSERT_TRUE(w.has_value());
    ASSERT_TRUE(is_isomorphism(g, moved, *w));
    ASSERT_EQ(identify(g), identify(moved));
  }
}

// All abelian groups of order <= 64, each built as a product of cyclic
// prime-power factors in shuffled order.
TEST(IsoProperty, AbelianInvariantsReconstruct) {
  std::mt19937 rng(5);
  std::function<void(std::vector<std::uint64_t>&, std::uint64_t, std::uint64_t,
                     std::vector<std::vector<std::uint64_t>>&)>
      partitions = [&](std::vector<std::uint64_t>& cur, std::uint64_t left, std::uint64_t max,
                       std::vector<std::vector<std::uint64_t>>& out) {
        if (left == 0) {
          out.push_back(cur);
          return;
        }
        for (std::uint64_t part = std::min(left, max); part >= 1; --part) {
          cur.push_back(part);
          partitions(cur, left - part, part, out);
          cur.pop_back();
        }
      };
  std::size_t tested = 0;
  for (std::uint64_t n = 1; n <= 64; ++n) {
    std::vector<std::vector<std::uint64_t>> choices{{}};
    std::uint64_t rest = n;
    for (std::uint64_t p = 2; p <= rest; ++p) {
      unsigned e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      if (e == 0) {
        continue;
      }
      std::vector<std::vector<std::uint64_t>> parts;
      std::vector<std::uint64_t> cur;
      partitions(cur, e, e, parts);
      std::vector<std::vector<std::uint64_t>> next;
      for (auto const& base : choices) {
        for (auto const& part : parts) {
          auto extended = base;
          for (auto k : part) {
            std::uint64_t q = 1;
            for (std::uint64_t i = 0; i < k; ++i) {
              q *= p;
            }
            extended.push_back(q);
          }
          next.push_back(std::move(extended));
        }
      }
      choices = std::move(next);
    }
    for (auto factors : choices) {
      std::shuffle(factors.begin(), factors.end(), rng);
      GroupTable g = cyclic(1);
      for (auto f : factors) {
        g = direct_product(g, cyclic(f));
      }
      auto const inv = abelian_invariants(g);
      std::uint64_t prod = 1;
      GroupTable rebuilt = cyclic(1);
      for (std::size_t i = 0; i < inv.size(); ++i) {
        ASSERT_GE(inv[i], 2u);
        if (i > 0) {
          ASSERT_EQ(inv[i] % inv[i - 1], 0u);
        }
        prod *= inv[i];
        rebuilt = direct_product(rebuilt, cyclic(inv[i]));
      }
      ASSERT_EQ(prod, n);
      ASSERT_TRUE(are_isomorphic(g, rebuilt).has_value());
      ++tested;
    }
  }
  EXPECT_GT(tested, 90u);
}

TEST(IsoProperty, ChineseRemainder) {
  for (std::uint64_t m = 1; m <= 12; ++m) {
    for (std::uint64_t n = 1; n <= 12; ++n) {
      auto const inv = abelian_invariants(direct_product(cyclic(m), cyclic(n)));
      bool const single = inv.size() == 1 && inv[0] == m * n;
      ASSERT_EQ(single, oracle::gcd(m, n) == 1 && m * n > 1) << m << ' ' << n;
    }
  }
}

}  // namespace
