#ifndef CAYLEY_ISO_HPP
#define CAYLEY_ISO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/group.hpp"

namespace cayley {

// An isomorphism a -> b, or nullopt. Cheap invariants are compared first
// (order, commutativity, order spectrum, center size, derived subgroup
// size); survivors go to a backtracking search over images of a generating
// sequence, restricted to targets with matching order and centralizer size.
// A returned witness has passed the full-table isomorphism check.
std::optional<Morphism> are_isomorphic(GroupTable const& a, GroupTable const& b,
                                       Limits const& limits = {});

// Invariant factors d_1 | d_2 | ... | d_k, each >= 2, with G isomorphic to
// Z_{d_1} x ... x Z_{d_k}. Empty for the trivial group.
// Throws std::invalid_argument for nonabelian input.
std::vector<std::uint64_t> abelian_invariants(GroupTable const& g);

struct CatalogName {
  enum class Kind {
    cyclic,             // params {n}
    abelian_product,    // params = invariant factors
    dihedral,           // params {n}, order 2n
    semidirect_cyclic,  // params {m, n, i}: Z_m : Z_n with r -> r^i
    product_of_named,   // factors, ordered by size then display
    unidentified,       // params {order}
  };

  Kind kind = Kind::unidentified;
  std::vector<std::uint64_t> params;
  std::vector<CatalogName> factors;
  std::string display;

  friend bool operator==(CatalogName const&, CatalogName const&) = default;
};

char const* to_string(CatalogName::Kind kind);

// First match in the order cyclic, abelian product, dihedral, direct
// product of catalog members, Z_m : Z_n [r^i] (only for |G| <= 128, smallest
// (m, n, i)), else unidentified. Display strings use the expression grammar
// of the command-line tool: "Z8", "Z2 x Z4", "D6", "Z2 x D4", "Z8 : Z2 [r^3]".
CatalogName identify(GroupTable const& g, Limits const& limits = {});

// All normal subgroups, sorted by size then members.
std::vector<Subgroup> normal_subgroups(GroupTable const& g);

}  // namespace cayley

#endif  // CAYLEY_ISO_HPP
