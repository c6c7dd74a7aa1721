#include "cayley/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "cayley/aut.hpp"
#include "cayley/construct.hpp"
#include "cayley/group.hpp"
#include "cayley/iso.hpp"
#include "cayley/numth.hpp"

namespace cayley::verify {

namespace {

using numth::euler_phi;
using u64 = std::uint64_t;

struct Outcome {
  bool ok = false;
  std::string expected;
  std::string actual;
};

// Runs body, timing it and turning cap errors into skips and any other
// exception into a failure carrying the message.
template <typename Body>
VerifyReport run_claim(std::string claim, Body&& body) {
  VerifyReport report;
  report.claim = std::move(claim);
  auto const start = std::chrono::steady_clock::now();
  try {
    Outcome const o = body();
    report.status = o.ok ? Status::pass : Status::fail;
    report.expected = o.expected;
    report.actual = o.actual;
  } catch (CapExceeded const& e) {
    report.status = Status::skipped;
    report.actual = e.what();
  } catch (std::exception const& e) {
    report.status = Status::fail;
    report.actual = std::string("error: ") + e.what();
  }
  auto const stop = std::chrono::steady_clock::now();
  report.ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return report;
}

std::string str(u64 x) { return std::to_string(x); }

// Z_n x Z_2 with generators named r and s.
GroupTable zn_z2(u64 n, Limits const& limits) {
  return direct_product(cyclic(n, "r", limits), cyclic(2, "s", limits), limits);
}

GroupTable z2_d4() { return direct_product(cyclic(2, "t"), dihedral(4)); }

// Kernels of the surjections G -> Z_2: exactly the index-2 subgroups.
std::vector<Subgroup> index_two_subgroups(GroupTable const& g, Limits const& limits) {
  auto const z2 = cyclic(2);
  std::vector<Subgroup> out;
  for (auto const& f : hom_set(g, z2, limits)) {
    auto k = kernel(g, z2, f);
    if (k.size() * 2 == g.order()) {
      out.push_back(std::move(k));
    }
  }
  return out;
}

// First index-2 subgroup W of g with W isomorphic to `shape` and a
// complement, as (position among index-2 subgroups, count of candidates).
struct SplitSearch {
  std::optional<std::size_t> found;
  std::size_t candidates = 0;
};

SplitSearch find_split_index_two(GroupTable const& g, GroupTable const& shape,
                                 Limits const& limits) {
  SplitSearch s;
  auto const subs = index_two_subgroups(g, limits);
  s.candidates = subs.size();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!are_isomorphic(subgroup_as_group(g, subs[i]), shape, limits)) {
      continue;
    }
    if (recognize_split(g, subs[i], limits)) {
      s.found = i;
      return s;
    }
  }
  return s;
}

Outcome iso_outcome(GroupTable const& a, GroupTable const& b, std::string const& what,
                    Limits const& limits) {
  Outcome o;
  o.expected = what;
  auto const w = are_isomorphic(a, b, limits);
  o.ok = w.has_value() && is_isomorphism(a, b, *w);
  o.actual = o.ok ? "verified isomorphism witness" : "no isomorphism";
  return o;
}

// Map r^i s^j -> x^i y^j on a Z_m : Z_2 table in pair encoding.
Morphism form_map(GroupTable const& g, u64 m, Elem x, Elem y) {
  Morphism f;
  f.image.resize(g.order());
  for (Elem i = 0; i < m; ++i) {
    for (Elem j = 0; j < 2; ++j) {
      f.image[pair_index(i, j, 2)] = g.mul(g.pow(x, i), g.pow(y, j));
    }
  }
  return f;
}

struct Battery {
  std::string name;
  GroupTable group;
};

Battery named_group(std::string name, GroupTable g) { return {std::move(name), std::move(g)}; }

bool action_is_central(Action const& psi, AutGroup const& aut_k) {
  for (auto const& m : psi.maps) {
    for (auto const& a : aut_k.elements) {
      if (compose(m, a) != compose(a, m)) {
        return false;
      }
    }
  }
  return true;
}

bool action_is_aut_h_invariant(Action const& psi, std::vector<Morphism> const& aut_h) {
  for (auto const& delta : aut_h) {
    for (Elem h = 0; h < psi.maps.size(); ++h) {
      if (psi.maps[delta(h)] != psi.maps[h]) {
        return false;
      }
    }
  }
  return true;
}

void append(std::vector<VerifyReport>& out, std::vector<VerifyReport> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()),
             std::make_move_iterator(more.end()));
}

}  // namespace

char const* to_string(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

u64 zn_z2_aut_order(u64 n) {
  switch (n % 4) {
    case 0: return 4 * euler_phi(n);
    case 2: return 6 * euler_phi(n);
    default: return euler_phi(n);
  }
}

std::vector<VerifyReport> check_zn_z2_aut_orders(u64 max_n, AutOrderFormula const& formula,
                                       Limits const& limits) {
  std::vector<VerifyReport> out;
  for (u64 n = 2; n <= max_n; ++n) {
    out.push_back(run_claim("aut-zn-z2.order.n=" + str(n), [&] {
      Outcome o;
      auto const want = formula(n);
      auto const got = automorphisms(zn_z2(n, limits), limits).size();
      o.ok = want == got;
      o.expected = "|Aut(Z" + str(n) + " x Z2)| = " + str(want) + " (n mod 4 = " +
                   str(n % 4) + ")";
      o.actual = str(got) + " automorphisms enumerated";
      return o;
    }));
  }
  return out;
}

std::vector<VerifyReport> check_aut_zn_mod4_structure(std::vector<u64> const& values,
                                                      Limits const& limits) {
  std::vector<VerifyReport> out;
  for (u64 n : values) {
    out.push_back(run_claim("aut-zn-z2.split.n=" + str(n), [&] {
      if (n == 0 || n % 4 != 0) {
        throw std::invalid_argument("n must be a positive multiple of 4");
      }
      Outcome o;
      o.expected = "index-2 normal W ~ Aut(Z" + str(n) + ") x Z2 with a complement";
      auto const aut = aut_group(zn_z2(n, limits), limits);
      auto const shape =
          direct_product(aut_group(cyclic(n), limits).table, cyclic(2), limits);
      auto const s = find_split_index_two(aut.table, shape, limits);
      o.ok = s.found.has_value();
      o.actual = o.ok ? "split found (|Aut| = " + str(aut.table.order()) + ", " +
                            str(s.candidates) + " index-2 subgroups)"
                      : "no split index-2 subgroup of that shape among " +
                            str(s.candidates);
      return o;
    }));
  }

  struct Named {
    u64 n;
    std::string label;
    GroupTable shape;
    std::string display;
  };
  std::vector<Named> named;
  named.push_back({2, "D3", dihedral(3), "D3"});
  named.push_back({4, "D4", dihedral(4), "D4"});
  named.push_back({6, "D6", dihedral(6), "D6"});
  named.push_back({8, "Z2xD4", z2_d4(), "Z2 x D4"});
  for (auto const& nm : named) {
    auto const base = "aut-zn-z2.n=" + str(nm.n);
    out.push_back(run_claim(base + ".named-" + nm.label, [&] {
      auto const aut = aut_group(zn_z2(nm.n, limits), limits);
      return iso_outcome(aut.table, nm.shape,
                         "Aut(Z" + str(nm.n) + " x Z2) isomorphic to " + nm.display,
                         limits);
    }));
    out.push_back(run_claim(base + ".identify", [&] {
      auto const aut = aut_group(zn_z2(nm.n, limits), limits);
      Outcome o;
      o.expected = nm.display;
      o.actual = identify(aut.table, limits).display;
      o.ok = o.actual == o.expected;
      return o;
    }));
  }
  return out;
}

std::vector<VerifyReport> check_prime_power_aut(
    std::vector<std::pair<u64, unsigned>> const& pairs, Limits const& limits) {
  std::vector<VerifyReport> out;
  for (auto const& [p, k] : pairs) {
    out.push_back(run_claim("aut-cyclic-prime-power.p=" + str(p) + ",k=" + str(k), [&] {
      Outcome o;
      auto const pk = numth::checked_pow(p, k);
      auto const want = pk - pk / p;
      auto const got = automorphisms(cyclic(pk, "r", limits), limits).size();
      o.ok = got == want;
      o.expected = "p^k - p^(k-1) = " + str(want);
      o.actual = str(got);
      return o;
    }));
  }
  return out;
}

std::vector<VerifyReport> check_elementary_abelian_aut(
    std::vector<std::pair<u64, unsigned>> const& pairs, Limits const& limits) {
  std::vector<VerifyReport> out;
  for (auto const& [p, m] : pairs) {
    out.push_back(run_claim("aut-elementary-abelian.p=" + str(p) + ",m=" + str(m), [&] {
      Outcome o;
      u64 want = 0;
      try {
        want = numth::elementary_abelian_aut_order(p, m);
      } catch (std::overflow_error const&) {
        throw CapExceeded("product formula overflows 64 bits");
      }
      if (want > limits.max_aut) {
        throw CapExceeded("prod (p^m - p^x) = " + str(want) + " exceeds the cap of " +
                          str(limits.max_aut) + " automorphisms");
      }
      GroupTable g = cyclic(1);
      for (unsigned i = 0; i < m; ++i) {
        g = direct_product(g, cyclic(p, "r", limits), limits);
      }
      auto const got = automorphisms(g, limits).size();
      o.ok = got == want;
      o.expected = "prod_{x=0}^{m-1} (p^m - p^x) = " + str(want);
      o.actual = str(got);
      return o;
    }));
  }
  return out;
}

std::vector<VerifyReport> check_dihedral_aut(u64 max_n, Limits const& limits) {
  std::vector<VerifyReport> out;
  for (u64 n = 3; n <= max_n; ++n) {
    auto const suffix = ".n=" + str(n);
    out.push_back(run_claim("aut-dihedral.holomorph" + suffix, [&] {
      Outcome o;
      auto const aut = aut_group(dihedral(n, limits), limits);
      auto const want = n * euler_phi(n);
      auto const w = are_isomorphic(aut.table, holomorph(n, limits), limits);
      o.ok = aut.table.order() == want && w.has_value();
      o.expected = "|Aut(D" + str(n) + ")| = n phi(n) = " + str(want) +
                   " and Aut(D" + str(n) + ") ~ Hol(Z" + str(n) + ")";
      o.actual = "|Aut| = " + str(aut.table.order()) +
                 (w ? ", holomorph witness verified" : ", no isomorphism to holomorph");
      return o;
    }));
    out.push_back(run_claim("aut-dihedral.self" + suffix, [&] {
      Outcome o;
      auto const dn = dihedral(n, limits);
      auto const aut = aut_group(dn, limits);
      bool const self = are_isomorphic(dn, aut.table, limits).has_value();
      bool const phi_two = euler_phi(n) == 2;
      o.ok = self == phi_two;
      o.expected = std::string("D") + str(n) + (phi_two ? " ~ " : " !~ ") + "Aut(D" +
                   str(n) + ") since phi(n) = " + str(euler_phi(n));
      o.actual = self ? "isomorphic" : "not isomorphic";
      return o;
    }));
  }
  return out;
}

std::vector<VerifyReport> check_z8_case_study(Limits const& limits) {
  std::vector<VerifyReport> out;
  auto const k = cyclic(8, "r", limits);
  auto const h = cyclic(2, "s", limits);
  auto const acts = actions(h, k, limits);

  out.push_back(run_claim("z8-z2.actions", [&] {
    Outcome o;
    o.expected = "4 actions sending s to r -> r^1, r^3, r^5, r^7";
    std::string seen;
    bool ok = acts.size() == 4;
    u64 const exps[] = {1, 3, 5, 7};
    for (std::size_t i = 0; i < acts.size(); ++i) {
      auto const e = acts[i].maps[1].image[1];
      seen += (i == 0 ? "" : ",") + str(e);
      ok = ok && i < 4 && e == exps[i];
    }
    o.ok = ok;
    o.actual = str(acts.size()) + " actions, exponents " + seen;
    return o;
  }));
  if (acts.size() != 4) {
    return out;
  }

  std::string const labels[] = {"rho", "sigma", "tau", "upsilon"};
  u64 const aut_orders[] = {16, 16, 16, 32};
  std::vector<GroupTable> groups;
  for (auto const& psi : acts) {
    groups.push_back(semidirect(k, h, psi, limits));
  }
  Elem const r = pair_index(1, 0, 2);
  Elem const s = pair_index(0, 1, 2);

  out.push_back(run_claim("z8-z2.relation.rho", [&] {
    Outcome o;
    o.expected = "table identical to Z8 x Z2";
    o.ok = groups[0] == direct_product(k, h, limits);
    o.actual = o.ok ? "identical" : "tables differ";
    return o;
  }));
  for (auto const& [idx, power] : {std::pair<int, u64>{1, 3}, {2, 5}}) {
    out.push_back(run_claim("z8-z2.relation." + labels[idx], [&, idx = idx, power = power] {
      auto const& g = groups[idx];
      Outcome o;
      o.expected = "sr = r^" + str(power) + "s";
      Elem const lhs = g.mul(s, r);
      Elem const rhs = g.mul(g.pow(r, power), s);
      o.ok = lhs == rhs && !is_abelian(g);
      o.actual = "sr = " + g.name(lhs) + ", r^" + str(power) + "s = " + g.name(rhs);
      return o;
    }));
  }
  out.push_back(run_claim("z8-z2.relation.upsilon", [&] {
    return iso_outcome(groups[3], dihedral(8, limits), "Z8 :_upsilon Z2 ~ D8", limits);
  }));
  out.push_back(run_claim("z8-z2.pairwise-nonisomorphic", [&] {
    Outcome o;
    o.expected = "no two of the four Z8 : Z2 groups are isomorphic";
    std::string clash;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        if (are_isomorphic(groups[i], groups[j], limits)) {
          clash += labels[i] + "~" + labels[j] + " ";
        }
      }
    }
    o.ok = clash.empty();
    o.actual = o.ok ? "6 pairs, all non-isomorphic" : "isomorphic pairs: " + clash;
    return o;
  }));

  std::vector<AutGroup> auts;
  for (auto const& g : groups) {
    auts.push_back(aut_group(g, limits));
  }
  for (std::size_t i = 0; i < 4; ++i) {
    out.push_back(run_claim("z8-z2.aut-order." + labels[i], [&, i] {
      Outcome o;
      o.expected = str(aut_orders[i]);
      o.actual = str(auts[i].table.order());
      o.ok = auts[i].table.order() == aut_orders[i];
      return o;
    }));
  }

  // Printed element forms [x, y] with x = image of r and y = image of s.
  auto forms = [&](std::size_t which) {
    auto const& g = groups[which];
    std::vector<std::pair<Elem, Elem>> f;
    auto rs = [&](u64 a, u64 b) { return g.mul(g.pow(r, a), g.pow(s, b)); };
    for (u64 i : {1, 3, 5, 7}) {
      if (which == 0 || which == 2) {
        for (u64 j : {0, 1}) {
          for (u64 kk : {0, 1}) {
            f.emplace_back(rs(i, j), rs(4 * kk, 1));
          }
        }
      } else {
        for (u64 kk = 0; kk < 8; kk += which == 1 ? 2 : 1) {
          f.emplace_back(rs(i, 0), rs(kk, 1));
        }
      }
    }
    return f;
  };
  for (std::size_t i = 0; i < 4; ++i) {
    out.push_back(run_claim("z8-z2.aut-forms." + labels[i], [&, i] {
      Outcome o;
      auto const f = forms(i);
      std::set<Morphism> maps;
      std::size_t members = 0;
      for (auto const& [x, y] : f) {
        auto m = form_map(groups[i], 8, x, y);
        members += auts[i].index_of(m).has_value() ? 1 : 0;
        maps.insert(std::move(m));
      }
      o.expected = "listed forms are " + str(aut_orders[i]) +
                   " distinct automorphisms exhausting Aut";
      o.actual = str(maps.size()) + " distinct forms, " + str(members) +
                 " are automorphisms, |Aut| = " + str(auts[i].table.order());
      o.ok = maps.size() == auts[i].table.order() && members == f.size() &&
             maps.size() == aut_orders[i];
      return o;
    }));
  }

  auto const shape = z2_d4();
    for (std::size_t i = 0; i < 3; ++i) {
    out.push_back(run_claim("z8-z2.aut-structure." + labels[i], [&, i] {
      auto o = iso_outcome(auts[i].table, shape,
                           "Aut(Z8 :_" + labels[i] + " Z2) ~ Z2 x D4", limits);
      auto const name = identify(auts[i].table, limits).display;
      o.ok = o.ok && name == "Z2 x D4";
      o.actual += ", identify gives \"" + name + "\"";
      return o;
    }));
  }

  auto const& aut_d8 = auts[3];
  out.push_back(run_claim("z8-z2.aut-dihedral.split", [&] {
    Outcome o;
    o.expected = "Aut(D8) has a normal index-2 subgroup W ~ Z2 x D4 with a complement";
    auto const sr = find_split_index_two(aut_d8.table, shape, limits);
    o.ok = sr.found.has_value();
    o.actual = o.ok ? "split W found among " + str(sr.candidates) + " index-2 subgroups"
                    : "none among " + str(sr.candidates) + " index-2 subgroups";
    return o;
  }));
  out.push_back(run_claim("z8-z2.aut-dihedral.split-even-k", [&] {
    Outcome o;
    o.expected = "{[r^i, r^k s] : k even} is normal of index 2, ~ Z2 x D4, and splits";
    auto const& d8 = groups[3];
    std::vector<Elem> members;
    for (u64 i : {1, 3, 5, 7}) {
      for (u64 kk = 0; kk < 8; kk += 2) {
        auto const m = form_map(d8, 8, d8.pow(r, i), d8.mul(d8.pow(r, kk), s));
        auto const idx = aut_d8.index_of(m);
        if (!idx) {
          throw std::logic_error("listed form is not an automorphism");
        }
        members.push_back(*idx);
      }
    }
    auto const w = make_subgroup(aut_d8.table, members);
    bool const normal = w.size() * 2 == aut_d8.table.order() && is_normal(aut_d8.table, w);
    bool const shaped =
        are_isomorphic(subgroup_as_group(aut_d8.table, w), shape, limits).has_value();
    bool const splits = normal && recognize_split(aut_d8.table, w, limits).has_value();
    o.ok = normal && shaped && splits;
    o.actual = std::string("normal=") + (normal ? "yes" : "no") +
               ", ~Z2xD4=" + (shaped ? "yes" : "no") + ", splits=" + (splits ? "yes" : "no");
    return o;
  }));
  out.push_back(run_claim("z8-z2.aut-dihedral.klein-quotient", [&] {
    Outcome o;
    o.expected = "<[r, rs]> has order 8, is normal, quotient is Klein four";
    auto const& d8 = groups[3];
    auto const idx = aut_d8.index_of(form_map(d8, 8, r, d8.mul(r, s)));
    if (!idx) {
      throw std::logic_error("[r, rs] is not an automorphism");
    }
    std::vector<Elem> gen{*idx};
    auto const c8 = subgroup_generated(aut_d8.table, gen);
    auto const q = quotient(aut_d8.table, c8);
    auto const spec = order_spectrum(q);
    o.ok = c8.size() == 8 && q.order() == 4 && spec.count(2) == 1 && spec.at(2) == 3;
    o.actual = "|<[r, rs]>| = " + str(c8.size()) + ", |quotient| = " + str(q.order()) +
               ", elements of order 2: " + str(spec.count(2) ? spec.at(2) : 0);
    return o;
  }));
  out.push_back(run_claim("z8-z2.aut-dihedral.holomorph", [&] {
    return iso_outcome(aut_d8.table, holomorph(8, limits), "Aut(D8) ~ Z8 : Aut(Z8)",
                       limits);
  }));
  return out;
}

std::vector<VerifyReport> check_action_equivalence(u64 max_m, u64 max_n,
                                                   Limits const& limits) {
  std::vector<VerifyReport> out;
  for (u64 m = 1; m <= max_m; ++m) {
    for (u64 n = 1; n <= max_n; ++n) {
      auto const tag = ".m=" + str(m) + ",n=" + str(n);
      auto const k = cyclic(m, "r", limits);
      auto const h = cyclic(n, "s", limits);
      out.push_back(run_claim("action-classes" + tag, [&] {
        Outcome o;
        auto const acts = actions(h, k, limits);
        auto const classes = action_class_indices(h, k, limits);
        o.expected = "every class of Z" + str(m) + " : Z" + str(n) +
                     " actions gives isomorphic products";
        std::size_t broken = 0;
        std::size_t largest = 0;
        for (auto const& cls : classes) {
          largest = std::max(largest, cls.size());
          auto const first = semidirect(k, h, acts[cls.front()], limits);
          for (std::size_t j = 1; j < cls.size(); ++j) {
            auto const other = semidirect(k, h, acts[cls[j]], limits);
            if (!are_isomorphic(first, other, limits)) {
              ++broken;
            }
          }
        }
        o.ok = broken == 0;
        o.actual = str(acts.size()) + " actions in " + str(classes.size()) +
                   " classes (largest " + str(largest) + "), " + str(broken) +
                   " non-isomorphic members";
        return o;
      }));

      // H ~ Aut(K): all bijective actions give one group.
      auto const aut_k = aut_group(k, limits);
      if (m > 1 && aut_k.table.order() == n && n > 1 &&
          are_isomorphic(aut_k.table, h, limits)) {
        out.push_back(run_claim("action-classes.bijective" + tag, [&] {
          Outcome o;
          o.expected = "all actions Z" + str(n) + " -> Aut(Z" + str(m) +
                       ") that are isomorphisms give isomorphic products";
          std::vector<GroupTable> products;
          for (auto const& psi : actions(h, k, limits)) {
            std::set<Morphism> distinct(psi.maps.begin(), psi.maps.end());
            if (distinct.size() == n) {
              products.push_back(semidirect(k, h, psi, limits));
            }
          }
          std::size_t broken = 0;
          for (std::size_t j = 1; j < products.size(); ++j) {
            broken += are_isomorphic(products[0], products[j], limits) ? 0 : 1;
          }
          o.ok = !products.empty() && broken == 0;
          o.actual = str(products.size()) + " bijective actions, " + str(broken) +
                     " non-isomorphic to the first";
          return o;
        }));
      }
    }
  }
  return out;
}

std::vector<VerifyReport> check_characteristic_theorems(u64 max_order,
                                                        Limits const& limits) {
  std::vector<VerifyReport> out;
  for (u64 m = 2; m <= max_order / 2; ++m) {
    for (u64 n = 2; m * n <= max_order; ++n) {
      if (numth::gcd(m, n) != 1) {
        continue;
      }
      auto const tag = ".m=" + str(m) + ",n=" + str(n);
      auto const k = cyclic(m, "r", limits);
      auto const h = cyclic(n, "s", limits);

      out.push_back(run_claim("characteristic.cyclic" + tag, [&] {
        Outcome o;
        auto const acts = actions(h, k, limits);
        std::size_t bad = 0;
        for (auto const& psi : acts) {
          auto const g = semidirect(k, h, psi, limits);
          bad += is_characteristic(g, first_factor(k, h), limits) ? 0 : 1;
        }
        o.ok = bad == 0;
        o.expected = "Z" + str(m) + " characteristic in Z" + str(m) + " : Z" + str(n) +
                     " for all " + str(acts.size()) + " actions";
        o.actual = str(acts.size() - bad) + " of " + str(acts.size()) + " characteristic";
        return o;
      }));

      out.push_back(run_claim("aut-product.cyclic" + tag, [&] {
        Outcome o;
        auto const want = euler_phi(m) * euler_phi(n);
        auto const got = automorphisms(direct_product(k, h, limits), limits).size();
        o.ok = got == want;
        o.expected = "|Aut(Z" + str(m) + " x Z" + str(n) + ")| = " + str(want);
        o.actual = str(got);
        return o;
      }));

      out.push_back(run_claim("lifts" + tag, [&] {
        Outcome o;
        o.expected = "zeta lifts are automorphisms when im(psi) is central; lambda "
                     "lifts when psi o delta = psi";
        auto const aut_k = aut_group(k, limits);
        auto const aut_h = automorphisms(h, limits);
        std::size_t zeta_checked = 0;
        std::size_t lambda_checked = 0;
        std::size_t violations = 0;
        std::size_t non_lifts = 0;
        for (auto const& psi : actions(h, k, limits)) {
          auto const g = semidirect(k, h, psi, limits);
          bool const central = action_is_central(psi, aut_k);
          for (auto const& omega : aut_k.elements) {
            bool const lifted = zeta_lift(k, h, omega, psi, g).automorphism;
            zeta_checked += central ? 1 : 0;
            violations += central && !lifted ? 1 : 0;
          }
          bool const invariant = action_is_aut_h_invariant(psi, aut_h);
          for (auto const& delta : aut_h) {
            bool const lifted = lambda_lift(k, h, delta, psi, g).automorphism;
            lambda_checked += invariant ? 1 : 0;
            violations += invariant && !lifted ? 1 : 0;
            non_lifts += !invariant && !lifted ? 1 : 0;
          }
        }
        o.ok = violations == 0;
        o.actual = str(zeta_checked) + " zeta and " + str(lambda_checked) +
                   " lambda lifts under the hypotheses, " + str(violations) +
                   " violations; " + str(non_lifts) +
                   " lambda candidates outside the hypothesis fail";
        return o;
      }));
    }
  }

  // Non-cyclic coprime pairs.
  std::vector<std::pair<Battery, Battery>> coprime;
  coprime.emplace_back(named_group("Z2xZ2", direct_product(cyclic(2), cyclic(2))),
                       named_group("Z3", cyclic(3, "s")));
  coprime.emplace_back(named_group("Z3xZ3", direct_product(cyclic(3), cyclic(3))),
                       named_group("Z2", cyclic(2, "s")));
  coprime.emplace_back(named_group("D3", dihedral(3)), named_group("Z5", cyclic(5, "t")));
  coprime.emplace_back(named_group("Z3", cyclic(3)),
                       named_group("Z2xZ2", direct_product(cyclic(2, "s"), cyclic(2, "t"))));
  coprime.emplace_back(named_group("Z2xZ2", direct_product(cyclic(2), cyclic(2))),
                       named_group("Z9", cyclic(9, "s")));
  coprime.emplace_back(named_group("D3", dihedral(3)), named_group("Z7", cyclic(7, "t")));
  for (auto const& [kb, hb] : coprime) {
    if (kb.group.order() * hb.group.order() > max_order) {
      continue;
    }
    auto const tag = ".K=" + kb.name + ",H=" + hb.name;
    out.push_back(run_claim("characteristic.coprime" + tag, [&] {
      Outcome o;
      auto const acts = actions(hb.group, kb.group, limits);
      std::size_t bad = 0;
      for (auto const& psi : acts) {
        auto const g = semidirect(kb.group, hb.group, psi, limits);
        bad += is_characteristic(g, first_factor(kb.group, hb.group), limits) ? 0 : 1;
      }
      o.ok = bad == 0;
      o.expected = kb.name + " characteristic in " + kb.name + " : " + hb.name +
                   " for every action";
      o.actual = str(acts.size() - bad) + " of " + str(acts.size()) + " characteristic";
      return o;
    }));
    out.push_back(run_claim("aut-product.coprime" + tag, [&] {
      Outcome o;
      auto const want = automorphisms(kb.group, limits).size() *
                        automorphisms(hb.group, limits).size();
      auto const got =
          automorphisms(direct_product(kb.group, hb.group, limits), limits).size();
      o.ok = got == want;
      o.expected = "|Aut(" + kb.name + " x " + hb.name + ")| = " + str(want);
      o.actual = str(got);
      return o;
    }));
  }

  // Biconditional: |Aut(K x H)| = |Aut K||Aut H| iff both factors characteristic.
  std::vector<std::pair<Battery, Battery>> pairs;
  pairs.emplace_back(named_group("Z4", cyclic(4)), named_group("Z2", cyclic(2, "s")));
  pairs.emplace_back(named_group("Z2", cyclic(2)), named_group("Z2", cyclic(2, "s")));
  pairs.emplace_back(named_group("Z3", cyclic(3)), named_group("Z3", cyclic(3, "s")));
  pairs.emplace_back(named_group("Z4", cyclic(4)), named_group("Z4", cyclic(4, "s")));
  pairs.emplace_back(named_group("Z6", cyclic(6)), named_group("Z2", cyclic(2, "s")));
  pairs.emplace_back(named_group("D3", dihedral(3)), named_group("Z2", cyclic(2, "t")));
  pairs.emplace_back(named_group("D3", dihedral(3)), named_group("Z3", cyclic(3, "t")));
  pairs.emplace_back(named_group("D4", dihedral(4)), named_group("Z2", cyclic(2, "t")));
  pairs.emplace_back(named_group("D3", dihedral(3)), named_group("Z4", cyclic(4, "t")));
  pairs.emplace_back(named_group("Z3", cyclic(3)), named_group("Z2", cyclic(2, "s")));
  pairs.emplace_back(named_group("D3", dihedral(3)), named_group("Z5", cyclic(5, "t")));
  for (auto const& [kb, hb] : pairs) {
    if (kb.group.order() * hb.group.order() > max_order) {
      continue;
    }
    out.push_back(run_claim("aut-product.biconditional.K=" + kb.name + ",H=" + hb.name, [&] {
      Outcome o;
      auto const g = direct_product(kb.group, hb.group, limits);
      auto const auts = automorphisms(g, limits);
      auto const split = automorphisms(kb.group, limits).size() *
                         automorphisms(hb.group, limits).size();
      bool const orders_match = auts.size() == split;
      bool const both_char =
          is_characteristic(g, first_factor(kb.group, hb.group), auts) &&
          is_characteristic(g, second_factor(kb.group, hb.group), auts);
      o.ok = orders_match == both_char;
      o.expected = "(|Aut(K x H)| = |Aut K||Aut H|) iff (K and H characteristic)";
      o.actual = "|Aut(K x H)| = " + str(auts.size()) + " vs " + str(split) +
                 ", both characteristic: " + (both_char ? "yes" : "no");
      return o;
    }));
  }
  return out;
}

VerifySummary run_all(VerifyConfig const& config) {
  auto const& lim = config.limits;
  VerifySummary summary;
  auto& r = summary.reports;

  AutOrderFormula formula = zn_z2_aut_order;
  if (config.fault == Fault::wrong_formula) {
    formula = [](u64 n) { return n % 4 == 0 ? 5 * euler_phi(n) : zn_z2_aut_order(n); };
  }
  append(r, check_zn_z2_aut_orders(config.zn_z2_max_n, formula, lim));
  append(r, check_aut_zn_mod4_structure(config.mod4_values, lim));
  append(r, check_prime_power_aut(config.prime_powers, lim));
  append(r, check_elementary_abelian_aut(config.elementary, lim));
  append(r, check_dihedral_aut(config.dihedral_max_n, lim));
  append(r, check_z8_case_study(lim));
  append(r, check_action_equivalence(config.action_max_m, config.action_max_n, lim));
  append(r, check_characteristic_theorems(config.characteristic_max_order, lim));

  if (config.fault == Fault::corrupted_table) {
    r.push_back(run_claim("negative-control.corrupted-table", [] {
      auto t = to_candidate(cyclic(4));
      t.mul[1][2] = 1;
      auto const v = verify_group_axioms(t);
      Outcome o;
      o.ok = v.ok();
      o.expected = "a valid group table";
      o.actual = std::string(to_string(v.violated)) + " violated, witness (" +
                 std::to_string(v.witness[0]) + ", " + std::to_string(v.witness[1]) +
                 ", " + std::to_string(v.witness[2]) + "): " + v.message;
      return o;
    }));
  }

  std::set<std::string> ids;
  for (auto const& rep : r) {
    if (!ids.insert(rep.claim).second) {
      throw std::logic_error("run_all: duplicate claim id " + rep.claim);
    }
    summary.total_ms += rep.ms;
    switch (rep.status) {
      case Status::pass: ++summary.passed; break;
      case Status::fail: ++summary.failed; break;
      case Status::skipped: ++summary.skipped; break;
    }
  }
  return summary;
}

std::string to_json(std::vector<VerifyReport> const& reports, int indent) {
  auto arr = nlohmann::ordered_json::array();
  for (auto const& rep : reports) {
    nlohmann::ordered_json j;
    j["claim"] = rep.claim;
    j["status"] = to_string(rep.status);
    j["expected"] = rep.expected;
    j["actual"] = rep.actual;
    j["ms"] = rep.ms;
    arr.push_back(std::move(j));
  }
  return arr.dump(indent);
}

}  // namespace cayley::verify
