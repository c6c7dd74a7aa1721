#include "battery.hpp"

#include "cayley/construct.hpp"
#include "oracles.hpp"

namespace battery {

using namespace cayley;
using oracle::cycles;

namespace {

GroupTable z(std::uint64_t n) { return cyclic(n); }

GroupTable prod(GroupTable const& a, GroupTable const& b) { return direct_product(a, b); }

GroupTable semi(std::uint64_t m, std::uint64_t n, std::size_t action) {
  auto const k = cyclic(m);
  auto const h = cyclic(n, "s");
  return semidirect(k, h, actions(h, k).at(action));
}

}  // namespace

std::vector<Entry> small_groups() {
  std::vector<Entry> out;
  for (std::uint64_t n = 1; n <= 16; ++n) {
    out.push_back({"Z" + std::to_string(n), z(n)});
  }
  out.push_back({"Z2 x Z2", prod(z(2), z(2))});
  out.push_back({"Z2 x Z4", prod(z(2), z(4))});
  out.push_back({"Z2 x Z2 x Z2", prod(prod(z(2), z(2)), z(2))});
  out.push_back({"Z3 x Z3", prod(z(3), z(3))});
  out.push_back({"Z2 x Z6", prod(z(2), z(6))});
  out.push_back({"Z2 x Z8", prod(z(2), z(8))});
  out.push_back({"Z4 x Z4", prod(z(4), z(4))});
  out.push_back({"Z2 x Z2 x Z4", prod(prod(z(2), z(2)), z(4))});
  out.push_back({"Z2 x Z2 x Z2 x Z2", prod(prod(z(2), z(2)), prod(z(2), z(2)))});
  for (std::uint64_t n = 3; n <= 8; ++n) {
    out.push_back({"D" + std::to_string(n), dihedral(n)});
  }
  out.push_back({"S3 perm", oracle::from_permutations({cycles(3, {{1, 2, 3}}),
                                                       cycles(3, {{1, 2}})})});
  out.push_back({"D4 perm", oracle::from_permutations({cycles(4, {{1, 2, 3, 4}}),
                                                       cycles(4, {{1, 3}})})});
  out.push_back({"Q8 perm", oracle::from_permutations(
                                {cycles(8, {{1, 2, 3, 4}, {5, 6, 7, 8}}),
                                 cycles(8, {{1, 5, 3, 7}, {2, 8, 4, 6}})})});
  out.push_back({"A4 perm", oracle::from_permutations({cycles(4, {{1, 2, 3}}),
                                                       cycles(4, {{1, 2}, {3, 4}})})});
  out.push_back({"Q16 perm",
                 oracle::from_permutations(
                     {cycles(16, {{1, 2, 3, 4, 5, 6, 7, 8}, {9, 10, 11, 12, 13, 14, 15, 16}}),
                      cycles(16, {{1, 9, 5, 13}, {2, 16, 6, 12}, {3, 15, 7, 11},
                                  {4, 14, 8, 10}})})});
  out.push_back({"Z3 : Z4 [#1]", semi(3, 4, 1)});
  out.push_back({"Z8 : Z2 [r^3]", semi(8, 2, 1)});
  out.push_back({"Z8 : Z2 [r^5]", semi(8, 2, 2)});
  out.push_back({"Z4 : Z4 [r^3]", semi(4, 4, 1)});
  out.push_back({"Z5 : Z2 [r^4]", semi(5, 2, 1)});
  out.push_back({"Z7 : Z2 [r^6]", semi(7, 2, 1)});
  out.push_back({"Z2 x D4", prod(z(2), dihedral(4))});
  out.push_back({"Z2 x Q8", prod(z(2), oracle::from_permutations(
                                           {cycles(8, {{1, 2, 3, 4}, {5, 6, 7, 8}}),
                                            cycles(8, {{1, 5, 3, 7}, {2, 8, 4, 6}})}))});
  out.push_back({"Z2 x D3", prod(z(2), dihedral(3))});
  out.push_back({"Z4 x Z2 : Z2 [#1]",
                 semidirect(prod(z(4), z(2)), z(2), actions(z(2), prod(z(4), z(2))).at(1))});
  return out;
}

}  // namespace battery
