#ifndef CAYLEY_CLI_EXPR_HPP
#define CAYLEY_CLI_EXPR_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/group.hpp"

// Group expressions:
//
//   expr   := prod
//   prod   := atom ("x" atom)*
//   atom   := "Z" int | "D" int | "Hol" int | atom ":" atom "[" action "]"
//           | "(" expr ")"
//   action := "r^" int | "#" int
//
// Whitespace is ignored, ":" binds tighter than "x", and both associate
// to the left. The right operand of ":" is a single primary, so
// "Z8 : Z2 [r^3]" reads as Semidirect(Z8, Z2).

namespace cayley::cli {

struct ActionSpec {
  enum class Kind {
    cyclic_power,  // generator of H acts by r -> r^value
    index,         // actions(H, K)[value]
  };
  Kind kind = Kind::index;
  std::uint64_t value = 0;

  friend bool operator==(ActionSpec const&, ActionSpec const&) = default;
};

struct GroupExpr {
  enum class Kind { cyclic, dihedral, holomorph, product, semidirect };

  Kind kind = Kind::cyclic;
  std::uint64_t n = 0;               // leaves only
  std::unique_ptr<GroupExpr> left;   // product and semidirect: K
  std::unique_ptr<GroupExpr> right;  // product and semidirect: H
  ActionSpec action;                 // semidirect only

  static GroupExpr leaf(Kind kind, std::uint64_t n);
  static GroupExpr product(GroupExpr a, GroupExpr b);
  static GroupExpr semidirect(GroupExpr k, GroupExpr h, ActionSpec action);

  GroupExpr clone() const;
};

bool operator==(GroupExpr const& a, GroupExpr const& b);

// Canonical text, fully parenthesized where precedence needs it; parses
// back to an equal tree.
std::string to_string(GroupExpr const& e);
std::string to_string(ActionSpec const& a);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& message, std::size_t offset,
             std::vector<std::string> expected);

  std::size_t offset() const noexcept { return offset_; }
  std::vector<std::string> const& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

inline constexpr std::size_t max_parse_depth = 64;

GroupExpr parse_expr(std::string_view text, std::size_t max_depth = max_parse_depth);

// Semantic failures: zero-sized leaves, bad action specs, indices out of
// range. Size caps surface as CapExceeded instead.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GroupTable eval_expr(GroupExpr const& e, Limits const& limits = {});

}  // namespace cayley::cli

#endif  // CAYLEY_CLI_EXPR_HPP
