#include "cayley/cli/expr.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

#include "cayley/construct.hpp"
#include "cayley/numth.hpp"

namespace cayley::cli {

namespace {

std::string describe(std::size_t offset, std::string const& message,
                     std::vector<std::string> const& expected) {
  std::string out = "at offset " + std::to_string(offset) + ": " + message;
  if (!expected.empty()) {
    out += "; expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      out += (i == 0 ? "" : i + 1 == expected.size() ? " or " : ", ") + expected[i];
    }
  }
  return out;
}

// Chains of "x" and ":" are parsed iteratively but evaluated recursively.
constexpr std::size_t max_leaves = 1024;

class Parser {
 public:
  Parser(std::string_view text, std::size_t max_depth) : s_(text), max_depth_(max_depth) {}

  GroupExpr parse() {
    GroupExpr e = prod();
    skip_ws();
    if (pos_ != s_.size()) {
      fail("unexpected input", {"'x'", "':'", "end of input"});
    }
    return e;
  }

 private:
  GroupExpr prod() {
    GroupExpr a = atom();
    while (accept("x")) {
      a = GroupExpr::product(std::move(a), atom());
    }
    return a;
  }

  GroupExpr atom() {
    GroupExpr a = primary();
    while (accept(":")) {
      GroupExpr h = primary();
      expect("[", {"'['"});
      ActionSpec spec = action();
      expect("]", {"']'"});
      a = GroupExpr::semidirect(std::move(a), std::move(h), spec);
    }
    return a;
  }

  GroupExpr primary() {
    if (++leaves_ > max_leaves) {
      fail("more than " + std::to_string(max_leaves) + " groups in one expression", {});
    }
    if (accept("Hol")) {
      return GroupExpr::leaf(GroupExpr::Kind::holomorph, integer());
    }
    if (accept("Z")) {
      return GroupExpr::leaf(GroupExpr::Kind::cyclic, integer());
    }
    if (accept("D")) {
      return GroupExpr::leaf(GroupExpr::Kind::dihedral, integer());
    }
    if (accept("(")) {
      if (++depth_ > max_depth_) {
        fail("nesting deeper than " + std::to_string(max_depth_) + " levels", {});
      }
      GroupExpr e = prod();
      expect(")", {"'x'", "':'", "')'"});
      --depth_;
      return e;
    }
    fail("expected a group", {"'Z'", "'D'", "'Hol'", "'('"});
  }

  ActionSpec action() {
    if (accept("r")) {
      expect("^", {"'^'"});
      return {ActionSpec::Kind::cyclic_power, integer()};
    }
    if (accept("#")) {
      return {ActionSpec::Kind::index, integer()};
    }
    fail("expected an action", {"'r^'", "'#'"});
  }

  std::uint64_t integer() {
    skip_ws();
    std::size_t end = pos_;
    while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) {
      ++end;
    }
    if (end == pos_) {
      fail("expected an integer", {"integer"});
    }
    std::uint64_t value = 0;
    auto const [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + end, value);
    if (ec != std::errc{} || ptr != s_.data() + end) {
      fail("integer out of range", {"integer"});
    }
    pos_ = end;
    return value;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (s_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token, std::vector<std::string> expected) {
    if (!accept(token)) {
      fail("unexpected input", std::move(expected));
    }
  }

  [[noreturn]] void fail(std::string const& message, std::vector<std::string> expected) {
    skip_ws();
    throw ParseError(message, pos_, std::move(expected));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
  std::size_t max_depth_;
  std::size_t leaves_ = 0;
};

bool needs_parens_as_primary(GroupExpr const& e) {
  return e.kind == GroupExpr::Kind::product || e.kind == GroupExpr::Kind::semidirect;
}

std::string wrap(GroupExpr const& e, bool parens) {
  return parens ? "(" + to_string(e) + ")" : to_string(e);
}

constexpr char const* letters[] = {"r", "s", "t", "u", "v", "w", "a", "b", "c"};

Action cyclic_power_action(GroupTable const& k, GroupTable const& h, std::uint64_t i) {
  std::uint64_t const m = k.order();
  std::uint64_t const n = h.order();
  i %= m;
  if (m > 1 && std::gcd(i, m) != 1) {
    throw EvalError("r -> r^" + std::to_string(i) + " is not an automorphism of Z" +
                    std::to_string(m) + " (gcd " + std::to_string(std::gcd(i, m)) + ")");
  }
  std::uint64_t const ord = numth::multiplicative_order(i, m);
  if (n % ord != 0) {
    throw EvalError("r -> r^" + std::to_string(i) + " has order " + std::to_string(ord) +
                    " in Aut(Z" + std::to_string(m) + "), which does not divide " +
                    std::to_string(n));
  }
  Action psi;
  std::uint64_t power = 1 % m;
  for (std::uint64_t y = 0; y < n; ++y) {
    Morphism f;
    f.image.resize(m);
    for (std::uint64_t x = 0; x < m; ++x) {
      f.image[x] = static_cast<Elem>((x * power) % m);
    }
    psi.maps.push_back(std::move(f));
    power = (power * i) % m;
  }
  return psi;
}

GroupTable eval(GroupExpr const& e, Limits const& limits, std::size_t& next_letter) {
  using Kind = GroupExpr::Kind;
  if ((e.kind == Kind::cyclic || e.kind == Kind::dihedral || e.kind == Kind::holomorph) &&
      e.n == 0) {
    throw EvalError(to_string(e) + ": order parameter must be at least 1");
  }
  switch (e.kind) {
    case Kind::cyclic:
      return cyclic(e.n, letters[next_letter++ % std::size(letters)], limits);
    case Kind::dihedral:
      return dihedral(e.n, limits);
    case Kind::holomorph:
      return holomorph(e.n, limits);
    case Kind::product: {
      auto const a = eval(*e.left, limits, next_letter);
      auto const b = eval(*e.right, limits, next_letter);
      return direct_product(a, b, limits);
    }
    case Kind::semidirect: {
      auto const k = eval(*e.left, limits, next_letter);
      auto const h = eval(*e.right, limits, next_letter);
      if (e.action.kind == ActionSpec::Kind::cyclic_power) {
        if (e.left->kind != Kind::cyclic || e.right->kind != Kind::cyclic) {
          throw EvalError("r^i actions need cyclic operands on both sides; use #j");
        }
        return semidirect(k, h, cyclic_power_action(k, h, e.action.value), limits);
      }
      auto const acts = actions(h, k, limits);
      if (e.action.value >= acts.size()) {
        throw EvalError("action #" + std::to_string(e.action.value) +
                        " out of range: there are " + std::to_string(acts.size()) +
                        " actions");
      }
      return semidirect(k, h, acts[e.action.value], limits);
    }
  }
  throw EvalError("malformed expression");
}

}  // namespace

GroupExpr GroupExpr::leaf(Kind kind, std::uint64_t n) {
  GroupExpr e;
  e.kind = kind;
  e.n = n;
  return e;
}

GroupExpr GroupExpr::product(GroupExpr a, GroupExpr b) {
  GroupExpr e;
  e.kind = Kind::product;
  e.left = std::make_unique<GroupExpr>(std::move(a));
  e.right = std::make_unique<GroupExpr>(std::move(b));
  return e;
}

GroupExpr GroupExpr::semidirect(GroupExpr k, GroupExpr h, ActionSpec action) {
  GroupExpr e = product(std::move(k), std::move(h));
  e.kind = Kind::semidirect;
  e.action = action;
  return e;
}

GroupExpr GroupExpr::clone() const {
  GroupExpr e;
  e.kind = kind;
  e.n = n;
  e.action = action;
  if (left) {
    e.left = std::make_unique<GroupExpr>(left->clone());
  }
  if (right) {
    e.right = std::make_unique<GroupExpr>(right->clone());
  }
  return e;
}

bool operator==(GroupExpr const& a, GroupExpr const& b) {
  if (a.kind != b.kind) {
    return false;
  }
  switch (a.kind) {
    case GroupExpr::Kind::product:
      return *a.left == *b.left && *a.right == *b.right;
    case GroupExpr::Kind::semidirect:
      return a.action == b.action && *a.left == *b.left && *a.right == *b.right;
    default:
      return a.n == b.n;
  }
}

std::string to_string(ActionSpec const& a) {
  return (a.kind == ActionSpec::Kind::cyclic_power ? "r^" : "#") + std::to_string(a.value);
}

std::string to_string(GroupExpr const& e) {
  switch (e.kind) {
    case GroupExpr::Kind::cyclic: return "Z" + std::to_string(e.n);
    case GroupExpr::Kind::dihedral: return "D" + std::to_string(e.n);
    case GroupExpr::Kind::holomorph: return "Hol" + std::to_string(e.n);
    case GroupExpr::Kind::product:
      return to_string(*e.left) + " x " +
             wrap(*e.right, e.right->kind == GroupExpr::Kind::product);
    case GroupExpr::Kind::semidirect:
      return wrap(*e.left, e.left->kind == GroupExpr::Kind::product) + " : " +
             wrap(*e.right, needs_parens_as_primary(*e.right)) + " [" +
             to_string(e.action) + "]";
  }
  return {};
}

ParseError::ParseError(std::string const& message, std::size_t offset,
                       std::vector<std::string> expected)
    : std::runtime_error(describe(offset, message, expected)),
      offset_(offset),
      expected_(std::move(expected)) {}

GroupExpr parse_expr(std::string_view text, std::size_t max_depth) {
  return Parser(text, max_depth).parse();
}

GroupTable eval_expr(GroupExpr const& e, Limits const& limits) {
  std::size_t next_letter = 0;
  return eval(e, limits, next_letter);
}

}  // namespace cayley::cli
