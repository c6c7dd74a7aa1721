#ifndef CAYLEY_AUT_HPP
#define CAYLEY_AUT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cayley/construct.hpp"
#include "cayley/error.hpp"
#include "cayley/group.hpp"

namespace cayley {

// Aut(G) with its composition table: table.mul(i, j) is the index of
// elements[i] o elements[j]. elements is sorted by image array, so the
// identity map sits at index 0.
struct AutGroup {
  std::vector<Morphism> elements;
  GroupTable table;

  // Position of an automorphism in elements, or nullopt.
  std::optional<Elem> index_of(Morphism const& m) const;
};

// All automorphisms of G, sorted by image array. The search backtracks over
// images of a greedy generating sequence, pruning candidates whose order
// differs from the generator's and partial maps that break a relation or
// injectivity; each survivor is re-checked against the full table.
//
// Throws CapExceeded when |G| exceeds limits.max_order or the enumeration
// grows past limits.max_aut. Elementary abelian inputs are sized up front
// from the product formula and refused before searching.
std::vector<Morphism> automorphisms(GroupTable const& g, Limits const& limits = {});

AutGroup aut_group(GroupTable const& g, Limits const& limits = {});

// (p, m) when G is elementary abelian of order p^m with m >= 1.
struct ElementaryType {
  std::uint64_t prime;
  unsigned rank;
};
std::optional<ElementaryType> elementary_abelian_type(GroupTable const& g);

// gamma(C) == C for every automorphism gamma.
bool is_characteristic(GroupTable const& g, Subgroup const& c, Limits const& limits = {});
bool is_characteristic(GroupTable const& g, Subgroup const& c,
                       std::vector<Morphism> const& automorphisms);

enum class HomCheck {
  full_table,   // f(ab) = f(a)f(b) over all pairs
  mixed_pairs,  // only f(hk) = f(h)f(k) for k in K, h in H; see below
};

// For a map F on K : H of the form F(kh) = gamma(k) phi(h), with gamma and
// phi homomorphisms into the factor copies, F is a homomorphism iff
// F(hk) = F(h)F(k) for every k in K and h in H. This checks exactly that,
// plus the product form itself.
bool mixed_pairs_homomorphic(GroupTable const& k, GroupTable const& h,
                             GroupTable const& product, Morphism const& f);

struct LiftResult {
  Morphism map;
  bool automorphism = false;
};

// (k, h) -> (omega(k), h). An automorphism whenever im(psi) is central in
// Aut(K); the candidate is returned either way.
// Throws std::invalid_argument if product is not semidirect(k, h, psi).
LiftResult zeta_lift(GroupTable const& k, GroupTable const& h, Morphism const& omega,
                     Action const& psi, GroupTable const& product,
                     HomCheck check = HomCheck::full_table);

// (k, h) -> (k, delta(h)). An automorphism whenever psi o delta == psi.
LiftResult lambda_lift(GroupTable const& k, GroupTable const& h, Morphism const& delta,
                       Action const& psi, GroupTable const& product,
                       HomCheck check = HomCheck::full_table);

}  // namespace cayley

#endif  // CAYLEY_AUT_HPP
