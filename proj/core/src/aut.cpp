#include "cayley/aut.hpp"

#include <algorithm>
#include <stdexcept>

#include "cayley/detail/search.hpp"
#include "cayley/numth.hpp"

namespace cayley {

namespace {

void check_encoding(GroupTable const& k, GroupTable const& h, Action const& psi,
                    GroupTable const& product) {
  if (product.order() != k.order() * h.order()) {
    throw std::invalid_argument("lift: product order does not match |K||H|");
  }
  validate_action(k, h, psi);
  if (product != semidirect(k, h, psi)) {
    throw std::invalid_argument(
        "lift: product table is not the pair-encoded semidirect product");
  }
}

LiftResult finish_lift(GroupTable const& k, GroupTable const& h,
                       GroupTable const& product, Morphism map, HomCheck check) {
  LiftResult out;
  out.map = std::move(map);
  if (!is_bijective(out.map, product.order())) {
    out.automorphism = false;
  } else if (check == HomCheck::full_table) {
    out.automorphism = is_homomorphism(product, product, out.map);
  } else {
    out.automorphism = mixed_pairs_homomorphic(k, h, product, out.map);
  }
  return out;
}

}  // namespace

std::optional<Elem> AutGroup::index_of(Morphism const& m) const {
  auto const it = std::lower_bound(elements.begin(), elements.end(), m);
  if (it == elements.end() || *it != m) {
    return std::nullopt;
  }
  return static_cast<Elem>(it - elements.begin());
}

std::optional<ElementaryType> elementary_abelian_type(GroupTable const& g) {
  if (g.order() < 2) {
    return std::nullopt;
  }
  auto const f = numth::factorize(g.order());
  if (f.factors.size() != 1) {
    return std::nullopt;
  }
  auto const p = f.factors.front().prime;
  for (Elem x = 0; x < g.order(); ++x) {
    if (x != g.identity() && g.pow(x, p) != g.identity()) {
      return std::nullopt;
    }
  }
  if (!is_abelian(g)) {
    return std::nullopt;
  }
  return ElementaryType{p, f.factors.front().exponent};
}

std::vector<Morphism> automorphisms(GroupTable const& g, Limits const& limits) {
  if (g.order() > limits.max_order) {
    throw CapExceeded("automorphisms: group order " + std::to_string(g.order()) +
                      " exceeds the size cap " + std::to_string(limits.max_order));
  }
  if (auto const t = elementary_abelian_type(g)) {
    std::uint64_t projected = 0;
    try {
      projected = numth::elementary_abelian_aut_order(t->prime, t->rank);
    } catch (std::overflow_error const&) {
      projected = ~std::uint64_t{0};
    }
    if (projected > limits.max_aut) {
      throw CapExceeded("automorphisms: elementary abelian group of order " +
                        std::to_string(t->prime) + "^" + std::to_string(t->rank) +
                        " has prod_{x=0}^{m-1} (p^m - p^x) = " +
                        std::to_string(projected) +
                        " automorphisms, above the cap of " +
                        std::to_string(limits.max_aut));
    }
  }

  auto const orders = element_orders(g);
  detail::ImageSearch spec;
  spec.source = &g;
  spec.target = &g;
  spec.injective = true;
  spec.generators = greedy_generators(g);
  for (Elem gen : spec.generators) {
    std::vector<Elem> same_order;
    for (Elem y = 0; y < g.order(); ++y) {
      if (orders[y] == orders[gen]) {
        same_order.push_back(y);
      }
    }
    spec.candidates.push_back(std::move(same_order));
  }

  std::vector<Morphism> out;
  detail::search_images(spec, [&](std::vector<Elem> const& image) {
    Morphism m{image};
    if (is_isomorphism(g, g, m)) {
      out.push_back(std::move(m));
    }
    if (out.size() > limits.max_aut) {
      throw CapExceeded("automorphisms: more than " + std::to_string(limits.max_aut) +
                        " automorphisms");
    }
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

AutGroup aut_group(GroupTable const& g, Limits const& limits) {
  auto elements = automorphisms(g, limits);
  auto const n = elements.size();
  if (n > limits.max_order) {
    throw CapExceeded("aut_group: |Aut(G)| = " + std::to_string(n) +
                      " exceeds the size cap " + std::to_string(limits.max_order));
  }
  std::vector<Elem> mul(n * n);
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      auto const c = compose(elements[i], elements[j]);
      auto const it = std::lower_bound(elements.begin(), elements.end(), c);
      mul[i * n + j] = static_cast<Elem>(it - elements.begin());
    }
  }
  auto const gens = greedy_generators(g);
  std::vector<std::string> names;
  names.reserve(n);
  for (auto const& a : elements) {
    std::string name = "[";
    for (std::size_t i = 0; i < gens.size(); ++i) {
      name += (i == 0 ? "" : ", ") + g.name(a.image[gens[i]]);
    }
    names.push_back(name + "]");
  }
  auto table = GroupTable::from_multiplication(n, std::move(mul), 0, std::move(names));
  return AutGroup{std::move(elements), std::move(table)};
}

bool is_characteristic(GroupTable const& g, Subgroup const& c,
                       std::vector<Morphism> const& automorphisms) {
  if (!is_subgroup(g, c)) {
    throw std::invalid_argument("is_characteristic: not a subgroup");
  }
  for (auto const& gamma : automorphisms) {
    for (Elem x : c.members()) {
      if (!c.contains(gamma(x))) {
        return false;
      }
    }
  }
  return true;
}

bool is_characteristic(GroupTable const& g, Subgroup const& c, Limits const& limits) {
  if (!is_subgroup(g, c)) {
    throw std::invalid_argument("is_characteristic: not a subgroup");
  }
  return is_characteristic(g, c, automorphisms(g, limits));
}

bool mixed_pairs_homomorphic(GroupTable const& k, GroupTable const& h,
                             GroupTable const& product, Morphism const& f) {
  auto const nh = h.order();
  auto const ek = k.identity();
  auto const eh = h.identity();
  auto kk = [&](Elem x) { return pair_index(x, eh, nh); };
  auto hh = [&](Elem y) { return pair_index(ek, y, nh); };

  // The restrictions gamma and phi must be homomorphisms.
  for (Elem a = 0; a < k.order(); ++a) {
    for (Elem b = 0; b < k.order(); ++b) {
      if (f(kk(k.mul(a, b))) != product.mul(f(kk(a)), f(kk(b)))) {
        return false;
      }
    }
  }
  for (Elem a = 0; a < nh; ++a) {
    for (Elem b = 0; b < nh; ++b) {
      if (f(hh(h.mul(a, b))) != product.mul(f(hh(a)), f(hh(b)))) {
        return false;
      }
    }
  }
  for (Elem x = 0; x < k.order(); ++x) {
    for (Elem y = 0; y < nh; ++y) {
      // F(kh) = F(k)F(h): the map has the required product form.
      if (f(pair_index(x, y, nh)) != product.mul(f(kk(x)), f(hh(y)))) {
        return false;
      }
      // F(hk) = F(h)F(k).
      Elem const hk = product.mul(hh(y), kk(x));
      if (f(hk) != product.mul(f(hh(y)), f(kk(x)))) {
        return false;
      }
    }
  }
  return true;
}

LiftResult zeta_lift(GroupTable const& k, GroupTable const& h, Morphism const& omega,
                     Action const& psi, GroupTable const& product, HomCheck check) {
  check_encoding(k, h, psi, product);
  if (!is_isomorphism(k, k, omega)) {
    throw std::invalid_argument("zeta_lift: omega is not an automorphism of K");
  }
  Morphism map;
  map.image.resize(product.order());
  for (Elem x = 0; x < k.order(); ++x) {
    for (Elem y = 0; y < h.order(); ++y) {
      map.image[pair_index(x, y, h.order())] = pair_index(omega(x), y, h.order());
    }
  }
  return finish_lift(k, h, product, std::move(map), check);
}

LiftResult lambda_lift(GroupTable const& k, GroupTable const& h, Morphism const& delta,
                       Action const& psi, GroupTable const& product, HomCheck check) {
  check_encoding(k, h, psi, product);
  if (!is_isomorphism(h, h, delta)) {
    throw std::invalid_argument("lambda_lift: delta is not an automorphism of H");
  }
  Morphism map;
  map.image.resize(product.order());
  for (Elem x = 0; x < k.order(); ++x) {
    for (Elem y = 0; y < h.order(); ++y) {
      map.image[pair_index(x, y, h.order())] = pair_index(x, delta(y), h.order());
    }
  }
  return finish_lift(k, h, product, std::move(map), check);
}

}  // namespace cayley
