#include "cayley/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace cayley {

namespace {

std::string default_name(std::size_t i) { return "g" + std::to_string(i); }

void check_index(GroupTable const& group, Elem x, char const* what) {
  if (x >= group.order()) {
    throw std::out_of_range(std::string(what) + ": element index " +
                            std::to_string(x) + " out of range for order " +
                            std::to_string(group.order()));
  }
}

std::vector<char> membership(std::size_t order, Subgroup const& sub) {
  std::vector<char> in(order, 0);
  for (Elem x : sub.members()) {
    in.at(x) = 1;
  }
  return in;
}

// Closure of `seed` under right multiplication by `generators`, returned as
// a membership mask. For finite groups this is the generated subgroup.
std::vector<char> closure_mask(GroupTable const& group, std::vector<char> mask,
                               std::span<Elem const> generators) {
  std::vector<Elem> queue;
  for (Elem x = 0; x < group.order(); ++x) {
    if (mask[x]) {
      queue.push_back(x);
    }
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Elem const x = queue[i];
    for (Elem g : generators) {
      Elem const y = group.mul(x, g);
      if (!mask[y]) {
        mask[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return mask;
}

Subgroup from_mask(std::vector<char> const& mask) {
  std::vector<Elem> members;
  for (Elem x = 0; x < mask.size(); ++x) {
    if (mask[x]) {
      members.push_back(x);
    }
  }
  return Subgroup(std::move(members));
}

}  // namespace

GroupTable::GroupTable(std::size_t order, std::vector<Elem> mul, Elem identity,
                       std::vector<Elem> inverse, std::vector<std::string> names)
    : order_(order),
      mul_(std::move(mul)),
      identity_(identity),
      inv_(std::move(inverse)),
      names_(std::move(names)) {
  if (order_ == 0) {
    throw std::invalid_argument("GroupTable: order must be >= 1");
  }
  if (mul_.size() != order_ * order_ || inv_.size() != order_) {
    throw std::invalid_argument("GroupTable: table dimensions do not match order " +
                                std::to_string(order_));
  }
  if (identity_ >= order_) {
    throw std::invalid_argument("GroupTable: identity index out of range");
  }
  for (Elem v : mul_) {
    if (v >= order_) {
      throw std::invalid_argument("GroupTable: table entry out of range");
    }
  }
  for (Elem v : inv_) {
    if (v >= order_) {
      throw std::invalid_argument("GroupTable: inverse entry out of range");
    }
  }
  if (names_.empty()) {
    names_.reserve(order_);
    for (std::size_t i = 0; i < order_; ++i) {
      names_.push_back(default_name(i));
    }
  } else if (names_.size() != order_) {
    throw std::invalid_argument("GroupTable: expected one name per element");
  }
}

GroupTable GroupTable::from_multiplication(std::size_t order, std::vector<Elem> mul,
                                           Elem identity,
                                           std::vector<std::string> names) {
  if (mul.size() != order * order) {
    throw std::invalid_argument("GroupTable: table dimensions do not match order");
  }
  std::vector<Elem> inv(order, identity);
  for (Elem a = 0; a < order; ++a) {
    for (Elem b = 0; b < order; ++b) {
      if (mul[a * order + b] == identity) {
        inv[a] = b;
        break;
      }
    }
  }
  return GroupTable(order, std::move(mul), identity, std::move(inv), std::move(names));
}

Elem GroupTable::pow(Elem a, std::uint64_t k) const {
  Elem result = identity_;
  Elem base = a;
  while (k > 0) {
    if (k & 1U) {
      result = mul(result, base);
    }
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

char const* to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::none: return "none";
    case Axiom::dimension: return "dimension";
    case Axiom::closure: return "closure";
    case Axiom::identity: return "identity";
    case Axiom::inverses: return "inverses";
    case Axiom::associativity: return "associativity";
  }
  return "unknown";
}

AxiomVerdict verify_group_axioms(TableCandidate const& t) {
  AxiomVerdict v;
  auto const n = static_cast<std::int64_t>(t.mul.size());
  auto fail = [&v](Axiom a, std::int64_t x, std::int64_t y, std::int64_t z,
                   std::string msg) {
    v.violated = a;
    v.witness = {x, y, z};
    v.message = std::move(msg);
    return v;
  };

  if (n == 0) {
    return fail(Axiom::dimension, 0, -1, -1, "empty table");
  }
  for (std::int64_t r = 0; r < n; ++r) {
    auto const cols = static_cast<std::int64_t>(t.mul[r].size());
    if (cols != n) {
      return fail(Axiom::dimension, r, cols, n,
                  "row " + std::to_string(r) + " has " + std::to_string(cols) +
                      " entries, expected " + std::to_string(n));
    }
  }
  if (static_cast<std::int64_t>(t.inverse.size()) != n) {
    return fail(Axiom::dimension, static_cast<std::int64_t>(t.inverse.size()), n, -1,
                "inverse array has wrong length");
  }
  if (t.identity < 0 || t.identity >= n) {
    return fail(Axiom::dimension, t.identity, n, -1, "identity index out of range");
  }
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) {
      auto const c = t.mul[a][b];
      if (c < 0 || c >= n) {
        return fail(Axiom::closure, a, b, c,
                    "mul[" + std::to_string(a) + "][" + std::to_string(b) + "] = " +
                        std::to_string(c) + " lies outside [0, n)");
      }
    }
  }
  auto const e = t.identity;
  for (std::int64_t x = 0; x < n; ++x) {
    if (t.mul[e][x] != x) {
      return fail(Axiom::identity, e, x, t.mul[e][x],
                  "e*x != x for x = " + std::to_string(x));
    }
    if (t.mul[x][e] != x) {
      return fail(Axiom::identity, e, x, t.mul[x][e],
                  "x*e != x for x = " + std::to_string(x));
    }
  }
  for (std::int64_t x = 0; x < n; ++x) {
    auto const y = t.inverse[x];
    if (y < 0 || y >= n) {
      return fail(Axiom::inverses, x, y, -1, "inverse index out of range");
    }
    if (t.mul[x][y] != e) {
      return fail(Axiom::inverses, x, y, t.mul[x][y],
                  "x*inv(x) != e for x = " + std::to_string(x));
    }
    if (t.mul[y][x] != e) {
      return fail(Axiom::inverses, x, y, t.mul[y][x],
                  "inv(x)*x != e for x = " + std::to_string(x));
    }
  }
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) {
      auto const ab = t.mul[a][b];
      for (std::int64_t c = 0; c < n; ++c) {
        if (t.mul[ab][c] != t.mul[a][t.mul[b][c]]) {
          return fail(Axiom::associativity, a, b, c,
                      "(ab)c != a(bc) for (a, b, c) = (" + std::to_string(a) + ", " +
                          std::to_string(b) + ", " + std::to_string(c) + ")");
        }
      }
    }
  }
  return v;
}

TableCandidate to_candidate(GroupTable const& group) {
  TableCandidate t;
  auto const n = group.order();
  t.mul.assign(n, std::vector<std::int64_t>(n));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      t.mul[a][b] = group.mul(a, b);
    }
  }
  t.identity = group.identity();
  t.inverse.assign(group.inverses().begin(), group.inverses().end());
  return t;
}

AxiomVerdict verify_group_axioms(GroupTable const& group) {
  return verify_group_axioms(to_candidate(group));
}

GroupTable from_candidate(TableCandidate const& candidate,
                          std::vector<std::string> names) {
  auto verdict = verify_group_axioms(candidate);
  if (!verdict) {
    throw std::invalid_argument(std::string("not a group (") +
                                to_string(verdict.violated) + "): " + verdict.message);
  }
  auto const n = candidate.mul.size();
  std::vector<Elem> mul;
  mul.reserve(n * n);
  for (auto const& row : candidate.mul) {
    for (auto x : row) {
      mul.push_back(static_cast<Elem>(x));
    }
  }
  std::vector<Elem> inv(candidate.inverse.begin(), candidate.inverse.end());
  return GroupTable(n, std::move(mul), static_cast<Elem>(candidate.identity),
                    std::move(inv), std::move(names));
}

Subgroup::Subgroup(std::vector<Elem> members) : members_(std::move(members)) {
  if (!std::is_sorted(members_.begin(), members_.end()) ||
      std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("Subgroup: members must be sorted and distinct");
  }
}

bool Subgroup::contains(Elem x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool is_subgroup(GroupTable const& group, Subgroup const& sub) {
  if (sub.size() == 0 || sub.members().back() >= group.order()) {
    return false;
  }
  auto const in = membership(group.order(), sub);
  if (!in[group.identity()]) {
    return false;
  }
  for (Elem a : sub.members()) {
    if (!in[group.inv(a)]) {
      return false;
    }
    for (Elem b : sub.members()) {
      if (!in[group.mul(a, b)]) {
        return false;
      }
    }
  }
  return group.order() % sub.size() == 0;
}

Subgroup make_subgroup(GroupTable const& group, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup sub(std::move(members));
  if (!is_subgroup(group, sub)) {
    throw std::invalid_argument("make_subgroup: members do not form a subgroup");
  }
  return sub;
}

Morphism identity_map(std::size_t order) {
  Morphism m;
  m.image.resize(order);
  std::iota(m.image.begin(), m.image.end(), Elem{0});
  return m;
}

Morphism compose(Morphism const& outer, Morphism const& inner) {
  Morphism m;
  m.image.reserve(inner.size());
  for (Elem x : inner.image) {
    m.image.push_back(outer.image.at(x));
  }
  return m;
}

Morphism inverse(Morphism const& bijection) {
  Morphism m;
  m.image.assign(bijection.size(), 0);
  for (Elem x = 0; x < bijection.size(); ++x) {
    m.image.at(bijection.image[x]) = x;
  }
  return m;
}

bool is_homomorphism(GroupTable const& source, GroupTable const& target,
                     Morphism const& f) {
  auto const n = source.order();
  if (f.size() != n) {
    return false;
  }
  for (Elem y : f.image) {
    if (y >= target.order()) {
      return false;
    }
  }
  for (Elem a = 0; a < n; ++a) {
    auto const fa = f.image[a];
    auto const row = source.row(a);
    auto const trow = target.row(fa);
    for (Elem b = 0; b < n; ++b) {
      if (f.image[row[b]] != trow[f.image[b]]) {
        return false;
      }
    }
  }
  return true;
}

bool is_bijective(Morphism const& f, std::size_t target_order) {
  if (f.size() != target_order) {
    return false;
  }
  std::vector<char> seen(target_order, 0);
  for (Elem y : f.image) {
    if (y >= target_order || seen[y]) {
      return false;
    }
    seen[y] = 1;
  }
  return true;
}

bool is_isomorphism(GroupTable const& source, GroupTable const& target,
                    Morphism const& f) {
  return is_bijective(f, target.order()) && is_homomorphism(source, target, f);
}

Subgroup kernel(GroupTable const& source, GroupTable const& target,
                Morphism const& f) {
  std::vector<Elem> members;
  for (Elem x = 0; x < source.order(); ++x) {
    if (f.image.at(x) == target.identity()) {
      members.push_back(x);
    }
  }
  return Subgroup(std::move(members));
}

Subgroup image(GroupTable const& target, Morphism const& f) {
  std::vector<char> mask(target.order(), 0);
  for (Elem y : f.image) {
    mask.at(y) = 1;
  }
  return from_mask(mask);
}

std::uint64_t element_order(GroupTable const& group, Elem g) {
  check_index(group, g, "element_order");
  std::uint64_t s = 1;
  Elem x = g;
  while (x != group.identity()) {
    x = group.mul(x, g);
    ++s;
  }
  return s;
}

std::vector<std::uint64_t> element_orders(GroupTable const& group) {
  std::vector<std::uint64_t> out(group.order());
  for (Elem g = 0; g < group.order(); ++g) {
    out[g] = element_order(group, g);
  }
  return out;
}

std::map<std::uint64_t, std::uint64_t> order_spectrum(GroupTable const& group) {
  std::map<std::uint64_t, std::uint64_t> spectrum;
  for (auto o : element_orders(group)) {
    ++spectrum[o];
  }
  return spectrum;
}

bool is_abelian(GroupTable const& group) {
  for (Elem a = 0; a < group.order(); ++a) {
    for (Elem b = a + 1; b < group.order(); ++b) {
      if (group.mul(a, b) != group.mul(b, a)) {
        return false;
      }
    }
  }
  return true;
}

Subgroup center(GroupTable const& group) {
  std::vector<Elem> members;
  for (Elem x = 0; x < group.order(); ++x) {
    if (centralizer_size(group, x) == group.order()) {
      members.push_back(x);
    }
  }
  return Subgroup(std::move(members));
}

std::size_t centralizer_size(GroupTable const& group, Elem g) {
  std::size_t count = 0;
  for (Elem x = 0; x < group.order(); ++x) {
    count += group.mul(g, x) == group.mul(x, g) ? 1 : 0;
  }
  return count;
}

Subgroup subgroup_generated(GroupTable const& group, std::span<Elem const> generators) {
  for (Elem g : generators) {
    check_index(group, g, "subgroup_generated");
  }
  std::vector<char> mask(group.order(), 0);
  mask[group.identity()] = 1;
  return from_mask(closure_mask(group, std::move(mask), generators));
}

Subgroup derived_subgroup(GroupTable const& group) {
  std::vector<char> is_commutator(group.order(), 0);
  for (Elem a = 0; a < group.order(); ++a) {
    for (Elem b = 0; b < group.order(); ++b) {
      Elem const c = group.mul(group.mul(group.inv(a), group.inv(b)), group.mul(a, b));
      is_commutator[c] = 1;
    }
  }
  std::vector<Elem> gens;
  for (Elem x = 0; x < group.order(); ++x) {
    if (is_commutator[x]) {
      gens.push_back(x);
    }
  }
  return subgroup_generated(group, gens);
}

Subgroup normal_closure(GroupTable const& group, std::span<Elem const> generators) {
  std::vector<Elem> conjugates;
  std::vector<char> seen(group.order(), 0);
  for (Elem g : generators) {
    check_index(group, g, "normal_closure");
    for (Elem x = 0; x < group.order(); ++x) {
      Elem const c = group.mul(group.mul(x, g), group.inv(x));
      if (!seen[c]) {
        seen[c] = 1;
        conjugates.push_back(c);
      }
    }
  }
  return subgroup_generated(group, conjugates);
}

bool is_normal(GroupTable const& group, Subgroup const& sub) {
  if (!is_subgroup(group, sub)) {
    throw std::invalid_argument("is_normal: not a subgroup of the given group");
  }
  auto const in = membership(group.order(), sub);
  for (Elem x = 0; x < group.order(); ++x) {
    Elem const xi = group.inv(x);
    for (Elem h : sub.members()) {
      if (!in[group.mul(group.mul(x, h), xi)]) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Elem> coset_labels(GroupTable const& group, Subgroup const& normal) {
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> label(group.order(), unset);
  Elem next = 0;
  for (Elem x = 0; x < group.order(); ++x) {
    if (label[x] != unset) {
      continue;
    }
    for (Elem h : normal.members()) {
      label[group.mul(x, h)] = next;
    }
    ++next;
  }
  return label;
}

GroupTable quotient(GroupTable const& group, Subgroup const& normal) {
  if (!is_normal(group, normal)) {
    throw std::invalid_argument("quotient: subgroup is not normal");
  }
  auto const label = coset_labels(group, normal);
  auto const m = group.order() / normal.size();
  std::vector<Elem> rep(m, 0);
  std::vector<char> have(m, 0);
  for (Elem x = 0; x < group.order(); ++x) {
    if (!have[label[x]]) {
      have[label[x]] = 1;
      rep[label[x]] = x;
    }
  }
  std::vector<Elem> mul(m * m);
  for (Elem i = 0; i < m; ++i) {
    for (Elem j = 0; j < m; ++j) {
      mul[i * m + j] = label[group.mul(rep[i], rep[j])];
    }
  }
  std::vector<std::string> names;
  names.reserve(m);
  for (Elem i = 0; i < m; ++i) {
    names.push_back("[" + group.name(rep[i]) + "]");
  }
  return GroupTable::from_multiplication(m, std::move(mul), label[group.identity()],
                                         std::move(names));
}

std::vector<Elem> subgroup_embedding(GroupTable const& group, Subgroup const& sub) {
  std::vector<Elem> order;
  order.reserve(sub.size());
  order.push_back(group.identity());
  for (Elem x : sub.members()) {
    if (x != group.identity()) {
      order.push_back(x);
    }
  }
  return order;
}

GroupTable subgroup_as_group(GroupTable const& group, Subgroup const& sub) {
  if (!is_subgroup(group, sub)) {
    throw std::invalid_argument("subgroup_as_group: not a subgroup");
  }
  auto const embed = subgroup_embedding(group, sub);
  auto const m = embed.size();
  std::vector<Elem> local(group.order(), 0);
  for (Elem i = 0; i < m; ++i) {
    local[embed[i]] = i;
  }
  std::vector<Elem> mul(m * m);
  std::vector<Elem> inv(m);
  std::vector<std::string> names;
  names.reserve(m);
  for (Elem i = 0; i < m; ++i) {
    for (Elem j = 0; j < m; ++j) {
      mul[i * m + j] = local[group.mul(embed[i], embed[j])];
    }
    inv[i] = local[group.inv(embed[i])];
    names.push_back(group.name(embed[i]));
  }
  return GroupTable(m, std::move(mul), 0, std::move(inv), std::move(names));
}

std::vector<Elem> greedy_generators(GroupTable const& group) {
  std::vector<Elem> gens;
  std::vector<char> current(group.order(), 0);
  current[group.identity()] = 1;
  std::size_t size = 1;
  while (size < group.order()) {
    Elem best = 0;
    std::size_t best_size = 0;
    std::vector<char> best_mask;
    for (Elem g = 0; g < group.order(); ++g) {
      if (current[g]) {
        continue;
      }
      std::vector<Elem> trial = gens;
      trial.push_back(g);
      auto mask = closure_mask(group, current, trial);
      auto const s = static_cast<std::size_t>(std::count(mask.begin(), mask.end(), 1));
      if (s > best_size) {
        best = g;
        best_size = s;
        best_mask = std::move(mask);
        if (s == group.order()) {
          break;
        }
      }
    }
    gens.push_back(best);
    current = std::move(best_mask);
    size = best_size;
  }
  return gens;
}

std::string to_json(GroupTable const& group, int indent) {
  nlohmann::ordered_json j;
  j["order"] = group.order();
  j["identity"] = group.identity();
  auto rows = nlohmann::ordered_json::array();
  for (Elem a = 0; a < group.order(); ++a) {
    auto const row = group.row(a);
    rows.push_back(std::vector<Elem>(row.begin(), row.end()));
  }
  j["mul"] = std::move(rows);
  j["names"] = group.names();
  return j.dump(indent);
}

GroupTable group_from_json(std::string const& text) {
  auto const j = nlohmann::json::parse(text);
  TableCandidate t;
  t.mul = j.at("mul").get<std::vector<std::vector<std::int64_t>>>();
  t.identity = j.at("identity").get<std::int64_t>();
  if (j.at("order").get<std::size_t>() != t.mul.size()) {
    throw std::invalid_argument("group_from_json: order does not match table");
  }
  // Derive inverses; a missing inverse shows up as an axiom failure.
  auto const n = static_cast<std::int64_t>(t.mul.size());
  t.inverse.assign(t.mul.size(), -1);
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n && b < static_cast<std::int64_t>(t.mul[a].size()); ++b) {
      if (t.mul[a][b] == t.identity) {
        t.inverse[a] = b;
        break;
      }
    }
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    names = j.at("names").get<std::vector<std::string>>();
  }
  return from_candidate(t, std::move(names));
}

}  // namespace cayley
