#ifndef CAYLEY_GROUP_HPP
#define CAYLEY_GROUP_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cayley/error.hpp"

namespace cayley {

// Elements of a finite group are dense indices 0..n-1.
using Elem = std::uint32_t;

// A finite group stored as its Cayley table.
//
// The table is trusted: the constructor only checks dimensions and that every
// entry is in range. Use verify_group_axioms() to check the group laws. Every
// constructor in this library places the identity at index 0, but the table
// itself records the identity explicitly so imported tables need not.
class GroupTable {
 public:
  GroupTable(std::size_t order, std::vector<Elem> mul, Elem identity,
             std::vector<Elem> inverse, std::vector<std::string> names = {});

  // Derives the inverse column from the table.
  static GroupTable from_multiplication(std::size_t order, std::vector<Elem> mul,
                                        Elem identity,
                                        std::vector<std::string> names = {});

  std::size_t order() const noexcept { return order_; }
  Elem identity() const noexcept { return identity_; }

  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * order_ + b]; }
  Elem inv(Elem a) const noexcept { return inv_[a]; }
  Elem pow(Elem a, std::uint64_t k) const;

  std::span<Elem const> row(Elem a) const noexcept {
    return {mul_.data() + a * order_, order_};
  }
  std::vector<Elem> const& table() const noexcept { return mul_; }
  std::vector<Elem> const& inverses() const noexcept { return inv_; }

  std::string const& name(Elem a) const { return names_.at(a); }
  std::vector<std::string> const& names() const noexcept { return names_; }

  // Tables compare equal when multiplication and identity agree; names are
  // display-only and ignored.
  friend bool operator==(GroupTable const& a, GroupTable const& b) {
    return a.order_ == b.order_ && a.identity_ == b.identity_ && a.mul_ == b.mul_;
  }

 private:
  std::size_t order_;
  std::vector<Elem> mul_;
  Elem identity_;
  std::vector<Elem> inv_;
  std::vector<std::string> names_;
};

// A raw, possibly malformed table, as read from user input.
struct TableCandidate {
  std::vector<std::vector<std::int64_t>> mul;
  std::int64_t identity = 0;
  std::vector<std::int64_t> inverse;
};

enum class Axiom { none, dimension, closure, identity, inverses, associativity };

char const* to_string(Axiom axiom);

struct AxiomVerdict {
  Axiom violated = Axiom::none;
  // closure: (row, column, entry); identity: (identity, x, product);
  // inverses: (x, inverse, product); associativity: (a, b, c).
  std::array<std::int64_t, 3> witness{-1, -1, -1};
  std::string message;

  bool ok() const noexcept { return violated == Axiom::none; }
  explicit operator bool() const noexcept { return ok(); }
};

AxiomVerdict verify_group_axioms(TableCandidate const& candidate);
AxiomVerdict verify_group_axioms(GroupTable const& group);

TableCandidate to_candidate(GroupTable const& group);

// Throws std::invalid_argument carrying the verdict message when the
// candidate is not a group.
GroupTable from_candidate(TableCandidate const& candidate,
                          std::vector<std::string> names = {});

// A sorted set of element indices of some parent group. The parent is not
// stored; operations take it alongside.
class Subgroup {
 public:
  Subgroup() = default;
  // members must be sorted and duplicate free.
  explicit Subgroup(std::vector<Elem> members);

  std::vector<Elem> const& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Elem x) const;

  friend bool operator==(Subgroup const&, Subgroup const&) = default;
  friend auto operator<=>(Subgroup const&, Subgroup const&) = default;

 private:
  std::vector<Elem> members_;
};

// Checks closure, identity and inverses, then wraps the members.
Subgroup make_subgroup(GroupTable const& group, std::vector<Elem> members);
bool is_subgroup(GroupTable const& group, Subgroup const& sub);

// A map between two groups given by its image array. Like Subgroup, the
// source and target tables travel separately.
struct Morphism {
  std::vector<Elem> image;

  Elem operator()(Elem x) const { return image[x]; }
  std::size_t size() const noexcept { return image.size(); }

  friend bool operator==(Morphism const&, Morphism const&) = default;
  friend auto operator<=>(Morphism const&, Morphism const&) = default;
};

Morphism identity_map(std::size_t order);
// outer after inner.
Morphism compose(Morphism const& outer, Morphism const& inner);
Morphism inverse(Morphism const& bijection);

// Full-table check of f(ab) = f(a)f(b).
bool is_homomorphism(GroupTable const& source, GroupTable const& target,
                     Morphism const& f);
bool is_bijective(Morphism const& f, std::size_t target_order);
bool is_isomorphism(GroupTable const& source, GroupTable const& target,
                    Morphism const& f);

Subgroup kernel(GroupTable const& source, GroupTable const& target,
                Morphism const& f);
Subgroup image(GroupTable const& target, Morphism const& f);

std::uint64_t element_order(GroupTable const& group, Elem g);
std::vector<std::uint64_t> element_orders(GroupTable const& group);
std::map<std::uint64_t, std::uint64_t> order_spectrum(GroupTable const& group);

bool is_abelian(GroupTable const& group);
Subgroup center(GroupTable const& group);
Subgroup subgroup_generated(GroupTable const& group, std::span<Elem const> generators);
Subgroup derived_subgroup(GroupTable const& group);
Subgroup normal_closure(GroupTable const& group, std::span<Elem const> generators);
std::size_t centralizer_size(GroupTable const& group, Elem g);

bool is_normal(GroupTable const& group, Subgroup const& sub);

// The coset group G/N. Coset i is ordered by its smallest member, so the
// coset of the identity comes first when the identity is element 0.
GroupTable quotient(GroupTable const& group, Subgroup const& normal);
// Index of the coset containing each element of G, matching quotient().
std::vector<Elem> coset_labels(GroupTable const& group, Subgroup const& normal);

// The subgroup as a standalone table. The identity is relabelled to 0 and
// the remaining members keep their relative order; local index i corresponds
// to subgroup_embedding(group, sub)[i].
GroupTable subgroup_as_group(GroupTable const& group, Subgroup const& sub);
std::vector<Elem> subgroup_embedding(GroupTable const& group, Subgroup const& sub);

// Greedy minimal generating sequence: repeatedly add the element that grows
// the generated subgroup the most, ties going to the lowest index.
std::vector<Elem> greedy_generators(GroupTable const& group);

// {"order", "identity", "mul", "names"}; indent < 0 gives compact output.
std::string to_json(GroupTable const& group, int indent = -1);
GroupTable group_from_json(std::string const& text);

}  // namespace cayley

#endif  // CAYLEY_GROUP_HPP
