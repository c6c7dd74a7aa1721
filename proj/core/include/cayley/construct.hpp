#ifndef CAYLEY_CONSTRUCT_HPP
#define CAYLEY_CONSTRUCT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/group.hpp"

namespace cayley {

// A homomorphism from H into Aut(K), stored as one automorphism of K per
// element of H: maps[h] is the map k -> psi_h(k).
struct Action {
  std::vector<Morphism> maps;

  friend bool operator==(Action const&, Action const&) = default;
};

// Throws std::invalid_argument unless every map is an automorphism of K,
// the identity of H acts trivially, and maps[h1 h2] == maps[h1] o maps[h2].
void validate_action(GroupTable const& k, GroupTable const& h, Action const& psi);

Action trivial_action(GroupTable const& k, GroupTable const& h);

// Elements of product groups use the pair encoding (k, h) -> k * |H| + h.
inline Elem pair_index(Elem k, Elem h, std::size_t h_order) {
  return static_cast<Elem>(k * h_order + h);
}
// The copies {(k, e)} and {(e, h)} inside a product built by this module.
Subgroup first_factor(GroupTable const& k, GroupTable const& h);
Subgroup second_factor(GroupTable const& k, GroupTable const& h);

// Z_n with element i standing for letter^i.
GroupTable cyclic(std::uint64_t n, std::string const& letter = "r",
                  Limits const& limits = {});

GroupTable direct_product(GroupTable const& a, GroupTable const& b,
                          Limits const& limits = {});

// (k, h)(k', h') = (k psi_h(k'), h h'). With the trivial action the table
// equals direct_product(k, h) entry for entry.
GroupTable semidirect(GroupTable const& k, GroupTable const& h, Action const& psi,
                      Limits const& limits = {});

// D_n of order 2n as Z_n : Z_2 with s acting by inversion; element r^i s^j
// has index 2i + j.
GroupTable dihedral(std::uint64_t n, Limits const& limits = {});

// All homomorphisms H -> K, sorted by image array.
std::vector<Morphism> hom_set(GroupTable const& h, GroupTable const& k,
                              Limits const& limits = {});

// One Action per element of hom(H, Aut(K)), in lexicographic order of the
// image arrays (automorphisms of K are themselves ordered by image array).
std::vector<Action> actions(GroupTable const& h, GroupTable const& k,
                            Limits const& limits = {});

// Partition of actions(H, K) into classes of the relation
// psi ~ phi  <=>  psi = phi o delta for some delta in Aut(H).
// Classes hold indices into actions(H, K); classes are ordered by their
// first member and members ascend.
std::vector<std::vector<std::size_t>> action_class_indices(GroupTable const& h,
                                                           GroupTable const& k,
                                                           Limits const& limits = {});
std::vector<std::vector<Action>> action_classes(GroupTable const& h,
                                                GroupTable const& k,
                                                Limits const& limits = {});

// Z_n : Aut(Z_n) under the identity action, order n * phi(n).
GroupTable holomorph(std::uint64_t n, Limits const& limits = {});

struct SplitWitness {
  Subgroup normal_part;  // K inside G
  Subgroup complement;   // H inside G, meets K trivially
  GroupTable k_group;    // K as a standalone table
  GroupTable h_group;    // H as a standalone table
  Action action;         // conjugation: psi_h(k) = h k h^-1
  GroupTable product;    // K : H rebuilt from the action
  Morphism iso;          // product -> G, (k, h) -> k h
};

// Looks for a complement to the normal subgroup K of G. Returns the first
// complement found by ascending generator backtracking, or nullopt when
// none exists. Throws std::invalid_argument if K is not normal.
std::optional<SplitWitness> recognize_split(GroupTable const& g, Subgroup const& k,
                                            Limits const& limits = {});

}  // namespace cayley

#endif  // CAYLEY_CONSTRUCT_HPP
