#ifndef CAYLEY_VERIFY_HPP
#define CAYLEY_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cayley/error.hpp"

// Machine checks of the counting formulas and structure theorems for
// automorphism groups of products of cyclic groups. Each check returns
// reports rather than printing; failures are data, never exceptions.

namespace cayley::verify {

enum class Status { pass, fail, skipped };

char const* to_string(Status status);

struct VerifyReport {
  std::string claim;  // unique within a run, e.g. "aut-zn-z2.order.n=6"
  Status status = Status::pass;
  std::string expected;
  std::string actual;  // holds the reason when skipped
  double ms = 0.0;
};

// Order of Aut(Z_n x Z_2) as a function of n.
using AutOrderFormula = std::function<std::uint64_t(std::uint64_t)>;

// phi(n), 4 phi(n), phi(n), 6 phi(n) for n = 1, 0, 3, 2 mod 4.
std::uint64_t zn_z2_aut_order(std::uint64_t n);

enum class Fault {
  none,
  wrong_formula,    // an order formula that is off for n = 0 mod 4
  corrupted_table,  // append an axiom check on a broken Cayley table
};

struct VerifyConfig {
  std::uint64_t zn_z2_max_n = 20;
  std::vector<std::uint64_t> mod4_values{4, 8, 12, 16};
  std::vector<std::pair<std::uint64_t, unsigned>> prime_powers{
      {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 1}, {3, 2},
      {3, 3}, {5, 1}, {5, 2}, {7, 1}, {7, 2}};
  std::vector<std::pair<std::uint64_t, unsigned>> elementary{
      {2, 2}, {2, 3}, {3, 2}, {5, 2}, {2, 4}, {3, 3}};
  std::uint64_t dihedral_max_n = 12;
  std::uint64_t action_max_m = 12;
  std::uint64_t action_max_n = 6;
  std::uint64_t characteristic_max_order = 60;
  Fault fault = Fault::none;
  Limits limits{};
};

std::vector<VerifyReport> check_zn_z2_aut_orders(std::uint64_t max_n,
                                       AutOrderFormula const& formula = zn_z2_aut_order,
                                       Limits const& limits = {});

// For n divisible by 4: an index-2 normal subgroup of Aut(Z_n x Z_2)
// isomorphic to Aut(Z_n) x Z_2 with a complement; also the four named
// isomorphisms for n = 2, 4, 6, 8 and their catalog names.
std::vector<VerifyReport> check_aut_zn_mod4_structure(
    std::vector<std::uint64_t> const& values, Limits const& limits = {});

std::vector<VerifyReport> check_prime_power_aut(
    std::vector<std::pair<std::uint64_t, unsigned>> const& pairs,
    Limits const& limits = {});

std::vector<VerifyReport> check_elementary_abelian_aut(
    std::vector<std::pair<std::uint64_t, unsigned>> const& pairs,
    Limits const& limits = {});

std::vector<VerifyReport> check_dihedral_aut(std::uint64_t max_n, Limits const& limits = {});

std::vector<VerifyReport> check_z8_case_study(Limits const& limits = {});

std::vector<VerifyReport> check_action_equivalence(std::uint64_t max_m,
                                                   std::uint64_t max_n,
                                                   Limits const& limits = {});

std::vector<VerifyReport> check_characteristic_theorems(std::uint64_t max_order,
                                                        Limits const& limits = {});

struct VerifySummary {
  std::vector<VerifyReport> reports;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  double total_ms = 0.0;

  bool ok() const noexcept { return failed == 0; }
};

VerifySummary run_all(VerifyConfig const& config = {});

// [{"claim", "status", "expected", "actual", "ms"}, ...]
std::string to_json(std::vector<VerifyReport> const& reports, int indent = -1);

}  // namespace cayley::verify

#endif  // CAYLEY_VERIFY_HPP
