#include "cayley/construct.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cayley/aut.hpp"
#include "cayley/detail/search.hpp"
#include "cayley/numth.hpp"

namespace cayley {

namespace {

void check_order(std::uint64_t order, Limits const& limits, char const* what) {
  if (order > limits.max_order) {
    throw CapExceeded(std::string(what) + ": group order " + std::to_string(order) +
                      " exceeds the size cap " + std::to_string(limits.max_order));
  }
}

std::string wrap(std::string const& name) {
  if (name.find("\xC2\xB7") != std::string::npos) {
    return "(" + name + ")";
  }
  return name;
}

std::string pair_name(GroupTable const& a, Elem x, GroupTable const& b, Elem y) {
  bool const x_id = x == a.identity();
  bool const y_id = y == b.identity();
  if (x_id && y_id) {
    return "e";
  }
  if (x_id) {
    return b.name(y);
  }
  if (y_id) {
    return a.name(x);
  }
  return wrap(a.name(x)) + "\xC2\xB7" + wrap(b.name(y));
}

// Shared by direct_product and semidirect: rows of the product are built
// from the K-part multiplied by a twisted K element.
GroupTable pair_product(GroupTable const& k, GroupTable const& h,
                        std::vector<Morphism> const* maps, Limits const& limits,
                        char const* what) {
  auto const nk = static_cast<std::uint64_t>(k.order());
  auto const nh = static_cast<std::uint64_t>(h.order());
  check_order(numth::checked_mul(nk, nh), limits, what);
  auto const n = static_cast<std::size_t>(nk * nh);
  std::vector<Elem> mul(n * n);
  std::vector<Elem> inv(n);
  std::vector<std::string> names(n);
  for (Elem k1 = 0; k1 < nk; ++k1) {
    for (Elem h1 = 0; h1 < nh; ++h1) {
      Elem const x = pair_index(k1, h1, nh);
      Morphism const* twist = maps != nullptr ? &(*maps)[h1] : nullptr;
      for (Elem k2 = 0; k2 < nk; ++k2) {
        Elem const kk = k.mul(k1, twist != nullptr ? twist->image[k2] : k2);
        for (Elem h2 = 0; h2 < nh; ++h2) {
          mul[x * n + pair_index(k2, h2, nh)] = pair_index(kk, h.mul(h1, h2), nh);
        }
      }
      names[x] = pair_name(k, k1, h, h1);
    }
  }
  Elem const e = pair_index(k.identity(), h.identity(), nh);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (mul[x * n + y] == e) {
        inv[x] = y;
        break;
      }
    }
  }
  return GroupTable(n, std::move(mul), e, std::move(inv), std::move(names));
}

std::vector<Elem> divisor_order_candidates(GroupTable const& target,
                                           std::vector<std::uint64_t> const& target_orders,
                                           std::uint64_t order) {
  std::vector<Elem> out;
  for (Elem y = 0; y < target.order(); ++y) {
    if (order % target_orders[y] == 0) {
      out.push_back(y);
    }
  }
  return out;
}

}  // namespace

void validate_action(GroupTable const& k, GroupTable const& h, Action const& psi) {
  if (psi.maps.size() != h.order()) {
    throw std::invalid_argument("invalid action: expected one map per element of H");
  }
  for (auto const& m : psi.maps) {
    if (!is_isomorphism(k, k, m)) {
      throw std::invalid_argument("invalid action: a map is not an automorphism of K");
    }
  }
  if (psi.maps[h.identity()] != identity_map(k.order())) {
    throw std::invalid_argument("invalid action: identity of H must act trivially");
  }
  for (Elem a = 0; a < h.order(); ++a) {
    for (Elem b = 0; b < h.order(); ++b) {
      if (psi.maps[h.mul(a, b)] != compose(psi.maps[a], psi.maps[b])) {
        throw std::invalid_argument(
            "invalid action: psi(h1 h2) != psi(h1) o psi(h2) for h1 = " + h.name(a) +
            ", h2 = " + h.name(b));
      }
    }
  }
}

Action trivial_action(GroupTable const& k, GroupTable const& h) {
  return Action{std::vector<Morphism>(h.order(), identity_map(k.order()))};
}

Subgroup first_factor(GroupTable const& k, GroupTable const& h) {
  std::vector<Elem> members;
  for (Elem x = 0; x < k.order(); ++x) {
    members.push_back(pair_index(x, h.identity(), h.order()));
  }
  std::sort(members.begin(), members.end());
  return Subgroup(std::move(members));
}

Subgroup second_factor(GroupTable const& k, GroupTable const& h) {
  std::vector<Elem> members;
  for (Elem y = 0; y < h.order(); ++y) {
    members.push_back(pair_index(k.identity(), y, h.order()));
  }
  std::sort(members.begin(), members.end());
  return Subgroup(std::move(members));
}

GroupTable cyclic(std::uint64_t n, std::string const& letter, Limits const& limits) {
  if (n == 0) {
    throw std::invalid_argument("cyclic: n must be >= 1");
  }
  check_order(n, limits, "cyclic");
  auto const m = static_cast<std::size_t>(n);
  std::vector<Elem> mul(m * m);
  std::vector<Elem> inv(m);
  std::vector<std::string> names(m);
  for (Elem i = 0; i < m; ++i) {
    for (Elem j = 0; j < m; ++j) {
      mul[i * m + j] = static_cast<Elem>((i + j) % m);
    }
    inv[i] = static_cast<Elem>((m - i) % m);
    names[i] = i == 0 ? "e" : i == 1 ? letter : letter + "^" + std::to_string(i);
  }
  return GroupTable(m, std::move(mul), 0, std::move(inv), std::move(names));
}

GroupTable direct_product(GroupTable const& a, GroupTable const& b, Limits const& limits) {
  return pair_product(a, b, nullptr, limits, "direct_product");
}

GroupTable semidirect(GroupTable const& k, GroupTable const& h, Action const& psi,
                      Limits const& limits) {
  check_order(numth::checked_mul(k.order(), h.order()), limits, "semidirect");
  validate_action(k, h, psi);
  return pair_product(k, h, &psi.maps, limits, "semidirect");
}

GroupTable dihedral(std::uint64_t n, Limits const& limits) {
  if (n == 0) {
    throw std::invalid_argument("dihedral: n must be >= 1");
  }
  check_order(numth::checked_mul(n, 2), limits, "dihedral");
  auto const rot = cyclic(n, "r", limits);
  auto const refl = cyclic(2, "s", limits);
  Morphism inversion;
  inversion.image = rot.inverses();
  Action kappa{{identity_map(rot.order()), inversion}};
  return semidirect(rot, refl, kappa, limits);
}

std::vector<Morphism> hom_set(GroupTable const& h, GroupTable const& k,
                              Limits const& limits) {
  check_order(h.order(), limits, "hom_set");
  check_order(k.order(), limits, "hom_set");
  auto const source_orders = element_orders(h);
  auto const target_orders = element_orders(k);

  detail::ImageSearch spec;
  spec.source = &h;
  spec.target = &k;
  spec.generators = greedy_generators(h);
  for (Elem g : spec.generators) {
    spec.candidates.push_back(divisor_order_candidates(k, target_orders, source_orders[g]));
  }

  std::vector<Morphism> out;
  detail::search_images(spec, [&](std::vector<Elem> const& image) {
    Morphism m{image};
    if (is_homomorphism(h, k, m)) {
      out.push_back(std::move(m));
    }
    if (out.size() > limits.max_homs) {
      throw CapExceeded("hom_set: more than " + std::to_string(limits.max_homs) +
                        " homomorphisms");
    }
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Action> actions(GroupTable const& h, GroupTable const& k, Limits const& limits) {
  auto const aut = aut_group(k, limits);
  auto const homs = hom_set(h, aut.table, limits);
  std::vector<Action> out;
  out.reserve(homs.size());
  for (auto const& hom : homs) {
    Action psi;
    psi.maps.reserve(h.order());
    for (Elem x = 0; x < h.order(); ++x) {
      psi.maps.push_back(aut.elements[hom.image[x]]);
    }
    out.push_back(std::move(psi));
  }
  return out;
}

std::vector<std::vector<std::size_t>> action_class_indices(GroupTable const& h,
                                                           GroupTable const& k,
                                                           Limits const& limits) {
  auto const aut = aut_group(k, limits);
  auto const homs = hom_set(h, aut.table, limits);
  auto const deltas = automorphisms(h, limits);

  std::vector<char> assigned(homs.size(), 0);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < homs.size(); ++i) {
    if (assigned[i]) {
      continue;
    }
    std::set<std::size_t> orbit;
    for (auto const& delta : deltas) {
      auto const twisted = compose(homs[i], delta);
      auto const it = std::lower_bound(homs.begin(), homs.end(), twisted);
      if (it == homs.end() || *it != twisted) {
        throw std::logic_error("action_classes: hom set not closed under Aut(H)");
      }
      orbit.insert(static_cast<std::size_t>(it - homs.begin()));
    }
    for (auto j : orbit) {
      assigned[j] = 1;
    }
    classes.emplace_back(orbit.begin(), orbit.end());
  }
  return classes;
}

std::vector<std::vector<Action>> action_classes(GroupTable const& h, GroupTable const& k,
                                                Limits const& limits) {
  auto const all = actions(h, k, limits);
  std::vector<std::vector<Action>> out;
  for (auto const& cls : action_class_indices(h, k, limits)) {
    std::vector<Action> members;
    for (auto i : cls) {
      members.push_back(all[i]);
    }
    out.push_back(std::move(members));
  }
  return out;
}

GroupTable holomorph(std::uint64_t n, Limits const& limits) {
  if (n == 0) {
    throw std::invalid_argument("holomorph: n must be >= 1");
  }
  check_order(numth::checked_mul(n, numth::euler_phi(n)), limits, "holomorph");
  auto const zn = cyclic(n, "r", limits);
  auto const aut = aut_group(zn, limits);
  Action identity_action{aut.elements};
  return semidirect(zn, aut.table, identity_action, limits);
}

namespace {

struct ComplementSearch {
  GroupTable const& g;
  std::vector<char> const& in_k;
  std::size_t target;
  std::set<std::vector<Elem>> visited;
  std::optional<Subgroup> found;

  // Every subgroup meeting K trivially is expanded once, by every element
  // outside it, so the search is complete.
  bool dfs(Subgroup const& sub, std::vector<Elem> const& gens) {
    if (sub.size() == target) {
      found = sub;
      return true;
    }
    for (Elem x = 0; x < g.order(); ++x) {
      if (in_k[x] || sub.contains(x)) {
        continue;
      }
      auto next_gens = gens;
      next_gens.push_back(x);
      auto next = subgroup_generated(g, next_gens);
      if (target % next.size() != 0) {
        continue;
      }
      bool meets = false;
      for (Elem y : next.members()) {
        if (y != g.identity() && in_k[y]) {
          meets = true;
          break;
        }
      }
      if (meets || !visited.insert(next.members()).second) {
        continue;
      }
      if (dfs(next, next_gens)) {
        return true;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<SplitWitness> recognize_split(GroupTable const& g, Subgroup const& k,
                                            Limits const& limits) {
  check_order(g.order(), limits, "recognize_split");
  if (!is_normal(g, k)) {
    throw std::invalid_argument("recognize_split: subgroup is not normal");
  }
  std::vector<char> in_k(g.order(), 0);
  for (Elem x : k.members()) {
    in_k[x] = 1;
  }
  ComplementSearch search{g, in_k, g.order() / k.size(), {}, std::nullopt};
  Elem const e = g.identity();
  if (!search.dfs(Subgroup({e}), {})) {
    return std::nullopt;
  }

  SplitWitness w{k,
                 *search.found,
                 subgroup_as_group(g, k),
                 subgroup_as_group(g, *search.found),
                 {},
                 GroupTable(1, {0}, 0, {0}),
                 {}};
  auto const k_embed = subgroup_embedding(g, k);
  auto const h_embed = subgroup_embedding(g, w.complement);
  std::vector<Elem> k_local(g.order(), 0);
  for (Elem i = 0; i < k_embed.size(); ++i) {
    k_local[k_embed[i]] = i;
  }
  for (Elem hg : h_embed) {
    Morphism conj;
    conj.image.reserve(k_embed.size());
    for (Elem kg : k_embed) {
      conj.image.push_back(k_local[g.mul(g.mul(hg, kg), g.inv(hg))]);
    }
    w.action.maps.push_back(std::move(conj));
  }
  w.product = semidirect(w.k_group, w.h_group, w.action, limits);
  w.iso.image.resize(g.order());
  for (Elem i = 0; i < k_embed.size(); ++i) {
    for (Elem j = 0; j < h_embed.size(); ++j) {
      w.iso.image[pair_index(i, j, h_embed.size())] = g.mul(k_embed[i], h_embed[j]);
    }
  }
  if (!is_isomorphism(w.product, g, w.iso)) {
    throw std::logic_error("recognize_split: reconstructed product is not isomorphic");
  }
  return w;
}

}  // namespace cayley
