#include "cayley/iso.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "cayley/construct.hpp"
#include "cayley/detail/search.hpp"
#include "cayley/numth.hpp"

namespace cayley {

namespace {

constexpr std::size_t semidirect_pool_limit = 128;

using ElementProfile = std::pair<std::uint64_t, std::size_t>;

std::vector<ElementProfile> profiles(GroupTable const& g) {
  auto const orders = element_orders(g);
  std::vector<ElementProfile> out(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    out[x] = {orders[x], centralizer_size(g, x)};
  }
  return out;
}

bool invariants_differ(GroupTable const& a, GroupTable const& b) {
  if (a.order() != b.order()) {
    return true;
  }
  if (is_abelian(a) != is_abelian(b)) {
    return true;
  }
  if (order_spectrum(a) != order_spectrum(b)) {
    return true;
  }
  if (center(a).size() != center(b).size()) {
    return true;
  }
  return derived_subgroup(a).size() != derived_subgroup(b).size();
}

CatalogName make_cyclic(std::uint64_t n) {
  return {CatalogName::Kind::cyclic, {n}, {}, "Z" + std::to_string(n)};
}

CatalogName make_unidentified(std::size_t order) {
  return {CatalogName::Kind::unidentified,
          {order},
          {},
          "unidentified(" + std::to_string(order) + ")"};
}

std::uint64_t catalog_order(CatalogName const& c) {
  switch (c.kind) {
    case CatalogName::Kind::cyclic: return c.params[0];
    case CatalogName::Kind::dihedral: return 2 * c.params[0];
    case CatalogName::Kind::semidirect_cyclic: return c.params[0] * c.params[1];
    case CatalogName::Kind::unidentified: return c.params[0];
    case CatalogName::Kind::abelian_product: {
      std::uint64_t n = 1;
      for (auto d : c.params) {
        n *= d;
      }
      return n;
    }
    case CatalogName::Kind::product_of_named: {
      std::uint64_t n = 1;
      for (auto const& f : c.factors) {
        n *= catalog_order(f);
      }
      return n;
    }
  }
  return 0;
}

void flatten_into(CatalogName const& c, std::vector<CatalogName>& out) {
  if (c.kind == CatalogName::Kind::product_of_named) {
    for (auto const& f : c.factors) {
      flatten_into(f, out);
    }
  } else if (c.kind == CatalogName::Kind::abelian_product) {
    for (auto d : c.params) {
      out.push_back(make_cyclic(d));
    }
  } else {
    out.push_back(c);
  }
}

CatalogName make_product(CatalogName const& a, CatalogName const& b) {
  CatalogName out{CatalogName::Kind::product_of_named, {}, {}, {}};
  flatten_into(a, out.factors);
  flatten_into(b, out.factors);
  std::stable_sort(out.factors.begin(), out.factors.end(),
                   [](CatalogName const& x, CatalogName const& y) {
                     auto const ox = catalog_order(x);
                     auto const oy = catalog_order(y);
                     return ox != oy ? ox < oy : x.display < y.display;
                   });
  for (std::size_t i = 0; i < out.factors.size(); ++i) {
    out.display += (i == 0 ? "" : " x ") + out.factors[i].display;
  }
  return out;
}

bool meets_trivially(Subgroup const& a, Subgroup const& b) {
  std::vector<Elem> common;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(common));
  return common.size() == 1;
}

std::optional<CatalogName> identify_direct_product(GroupTable const& g,
                                                   Limits const& limits) {
  auto const normals = normal_subgroups(g);
  auto const n = g.order();
  std::optional<CatalogName> best;
  std::size_t best_size = 0;
  for (auto const& nsub : normals) {
    if (nsub.size() == 1 || nsub.size() == n) {
      continue;
    }
    if (best && nsub.size() > best_size) {
      break;
    }
    std::optional<CatalogName> n_name;
    for (auto const& msub : normals) {
      if (msub.size() * nsub.size() != n || !meets_trivially(nsub, msub)) {
        continue;
      }
      if (!n_name) {
        n_name = identify(subgroup_as_group(g, nsub), limits);
        if (n_name->kind == CatalogName::Kind::unidentified) {
          break;
        }
      }
      auto const m_name = identify(subgroup_as_group(g, msub), limits);
      if (m_name.kind == CatalogName::Kind::unidentified) {
        continue;
      }
      auto candidate = make_product(*n_name, m_name);
      if (!best || candidate.display < best->display) {
        best = std::move(candidate);
        best_size = nsub.size();
      }
    }
  }
  return best;
}

std::optional<CatalogName> identify_semidirect_cyclic(GroupTable const& g,
                                                      Limits const& limits) {
  auto const order = g.order();
  for (std::uint64_t m = 3; m <= order / 2; ++m) {
    if (order % m != 0) {
      continue;
    }
    auto const n = order / m;
    for (std::uint64_t i = 2; i < m; ++i) {
      if (numth::gcd(i, m) != 1 || n % numth::multiplicative_order(i, m) != 0) {
        continue;
      }
      auto const k = cyclic(m, "r", limits);
      auto const h = cyclic(n, "s", limits);
      Action psi;
      Morphism power = identity_map(m);
      for (Elem j = 0; j < n; ++j) {
        psi.maps.push_back(power);
        Morphism next;
        for (Elem x = 0; x < m; ++x) {
          next.image.push_back(static_cast<Elem>((power.image[x] * i) % m));
        }
        power = std::move(next);
      }
      auto const candidate = semidirect(k, h, psi, limits);
      if (are_isomorphic(g, candidate, limits)) {
        return CatalogName{CatalogName::Kind::semidirect_cyclic,
                           {m, n, i},
                           {},
                           "Z" + std::to_string(m) + " : Z" + std::to_string(n) +
                               " [r^" + std::to_string(i) + "]"};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Morphism> are_isomorphic(GroupTable const& a, GroupTable const& b,
                                       Limits const& limits) {
  if (a.order() > limits.max_order || b.order() > limits.max_order) {
    throw CapExceeded("are_isomorphic: group order exceeds the size cap " +
                      std::to_string(limits.max_order));
  }
  if (invariants_differ(a, b)) {
    return std::nullopt;
  }
  auto const pa = profiles(a);
  auto const pb = profiles(b);

  detail::ImageSearch spec;
  spec.source = &a;
  spec.target = &b;
  spec.injective = true;
  spec.generators = greedy_generators(a);
  for (Elem gen : spec.generators) {
    std::vector<Elem> matching;
    for (Elem y = 0; y < b.order(); ++y) {
      if (pb[y] == pa[gen]) {
        matching.push_back(y);
      }
    }
    spec.candidates.push_back(std::move(matching));
  }

  std::optional<Morphism> witness;
  detail::search_images(spec, [&](std::vector<Elem> const& image) {
    Morphism m{image};
    if (is_isomorphism(a, b, m)) {
      witness = std::move(m);
      return false;
    }
    return true;
  });
  return witness;
}

std::vector<std::uint64_t> abelian_invariants(GroupTable const& g) {
  if (!is_abelian(g)) {
    throw std::invalid_argument("abelian_invariants: group is not abelian");
  }
  std::vector<std::uint64_t> factors;
  GroupTable current = g;
  while (current.order() > 1) {
    auto const orders = element_orders(current);
    auto const top = std::max_element(orders.begin(), orders.end());
    Elem const x = static_cast<Elem>(top - orders.begin());
    factors.push_back(*top);
    std::vector<Elem> gen{x};
    current = quotient(current, subgroup_generated(current, gen));
  }
  std::reverse(factors.begin(), factors.end());

  GroupTable rebuilt = cyclic(1);
  for (auto d : factors) {
    rebuilt = direct_product(rebuilt, cyclic(d));
  }
  if (!are_isomorphic(g, rebuilt)) {
    throw std::logic_error("abelian_invariants: reconstruction is not isomorphic");
  }
  return factors;
}

char const* to_string(CatalogName::Kind kind) {
  switch (kind) {
    case CatalogName::Kind::cyclic: return "cyclic";
    case CatalogName::Kind::abelian_product: return "abelian-product";
    case CatalogName::Kind::dihedral: return "dihedral";
    case CatalogName::Kind::semidirect_cyclic: return "semidirect-cyclic";
    case CatalogName::Kind::product_of_named: return "product-of-named";
    case CatalogName::Kind::unidentified: return "unidentified";
  }
  return "unknown";
}

std::vector<Subgroup> normal_subgroups(GroupTable const& g) {
  std::set<std::vector<Elem>> seen;
  std::vector<Subgroup> found;
  for (Elem x = 0; x < g.order(); ++x) {
    std::vector<Elem> gen{x};
    auto sub = normal_closure(g, gen);
    if (seen.insert(sub.members()).second) {
      found.push_back(std::move(sub));
    }
  }
  // Joins of normal subgroups are normal; close the list under pairwise joins.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Elem> gens = found[i].members();
      gens.insert(gens.end(), found[j].members().begin(), found[j].members().end());
      auto join = subgroup_generated(g, gens);
      if (seen.insert(join.members()).second) {
        found.push_back(std::move(join));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](Subgroup const& a, Subgroup const& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return found;
}

CatalogName identify(GroupTable const& g, Limits const& limits) {
  if (g.order() > limits.max_order) {
    throw CapExceeded("identify: group order exceeds the size cap " +
                      std::to_string(limits.max_order));
  }
  auto const n = g.order();
  auto const orders = element_orders(g);
  if (std::find(orders.begin(), orders.end(), n) != orders.end()) {
    return make_cyclic(n);
  }
  if (is_abelian(g)) {
    auto const inv = abelian_invariants(g);
    CatalogName out{CatalogName::Kind::abelian_product, inv, {}, {}};
    for (std::size_t i = 0; i < inv.size(); ++i) {
      out.display += (i == 0 ? "Z" : " x Z") + std::to_string(inv[i]);
    }
    return out;
  }
  if (n % 2 == 0 && n / 2 >= 3 && are_isomorphic(g, dihedral(n / 2, limits), limits)) {
    return {CatalogName::Kind::dihedral, {n / 2}, {}, "D" + std::to_string(n / 2)};
  }
  if (auto product = identify_direct_product(g, limits)) {
    return *product;
  }
  if (n <= semidirect_pool_limit) {
    if (auto sd = identify_semidirect_cyclic(g, limits)) {
      return *sd;
    }
  }
  return make_unidentified(n);
}

}  // namespace cayley
