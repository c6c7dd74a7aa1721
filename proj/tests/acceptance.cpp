// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "cayley/aut.hpp"
#include "cayley/cli/commands.hpp"
#include "cayley/construct.hpp"
#include "cayley/group.hpp"
#include "cayley/verify.hpp"
#include "support/battery.hpp"
#include "support/oracles.hpp"

namespace {

using namespace cayley;
using namespace cayley::verify;

#ifdef NDEBUG
constexpr bool enforce_budgets = true;
#else
constexpr bool enforce_budgets = false;
#endif

struct Verdict {
  bool ok = true;
  std::string detail;
};

Verdict all_pass(std::vector<VerifyReport> const& reports) {
  Verdict v;
  std::size_t passed = 0;
  for (auto const& r : reports) {
    if (r.status == Status::pass) {
      ++passed;
    } else {
      v.ok = false;
      v.detail += " [" + r.claim + ": " + to_string(r.status) + ", " + r.actual + "]";
    }
  }
  v.detail = std::to_string(passed) + "/" + std::to_string(reports.size()) + " claims" +
             v.detail;
  return v;
}

std::vector<VerifyReport> with_prefix(std::vector<VerifyReport> reports,
                                      std::string const& prefix) {
  std::erase_if(reports, [&](VerifyReport const& r) { return r.claim.rfind(prefix, 0) != 0; });
  return reports;
}

int failures = 0;

void criterion(int id, char const* title, double budget_s, std::function<Verdict()> body) {
  auto const start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (std::exception const& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  double const s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::string budget;
  if (budget_s > 0) {
    bool const within = s < budget_s;
    budget = ", budget " + std::to_string(static_cast<int>(budget_s)) + " s" +
             (within ? "" : enforce_budgets ? " EXCEEDED" : " exceeded, not enforced");
    v.ok = v.ok && (within || !enforce_budgets);
  }
  failures += v.ok ? 0 : 1;
  std::printf("criterion %2d %s  %s: %s (%.3f s%s)\n", id, v.ok ? "PASS" : "FAIL", title,
              v.detail.c_str(), s, budget.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  criterion(1, "|Aut(Z_n x Z_2)| formula, n in [2, 20]", 5, [] { return all_pass(check_zn_z2_aut_orders(20)); });

  criterion(2, "named automorphism groups of Z_n x Z_2", 2, [] {
    auto const reports = check_aut_zn_mod4_structure({});
    auto named = with_prefix(reports, "aut-zn-z2.n=");
    std::erase_if(named, [](VerifyReport const& r) {
      return r.claim.find(".named-") == std::string::npos;
    });
    auto v = all_pass(named);
    v.ok = v.ok && named.size() == 4;
    return v;
  });

  criterion(3, "|Aut(Z_p^k)| = p^k - p^(k-1)", 2, [] {
    return all_pass(check_prime_power_aut({{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 1},
                                           {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}, {7, 2}}));
  });

  criterion(4, "elementary abelian product formula", 10, [] {
    auto const reports = check_elementary_abelian_aut({{2, 2}, {2, 3}, {3, 2}});
    auto v = all_pass(reports);
    v.ok = v.ok && reports.size() == 3 && reports[0].actual == "6" &&
           reports[1].actual == "168" && reports[2].actual == "48";
    v.detail += ", counts " + reports[0].actual + " " + reports[1].actual + " " +
                reports[2].actual;
    return v;
  });

  criterion(5, "Aut(D_n) ~ Hol(Z_n) and D_n ~ Aut(D_n), n in [3, 12]", 20, [] {
    auto const reports = check_dihedral_aut(12);
    auto v = all_pass(reports);
    std::string self;
    for (auto const& r : with_prefix(reports, "aut-dihedral.self.")) {
      if (r.actual == "isomorphic") {
        self += (self.empty() ? "" : ",") + r.claim.substr(r.claim.find('=') + 1);
      }
    }
    v.ok = v.ok && self == "3,4,6";
    v.detail += ", self-isomorphic for n = " + self;
    return v;
  });

  criterion(6, "Z_8 : Z_2 case study", 5, [] { return all_pass(check_z8_case_study()); });

  criterion(7, "equivalent actions give isomorphic products, m <= 12, n <= 6", 30, [] {
    auto const reports = with_prefix(check_action_equivalence(12, 6), "action-classes.m=");
    auto v = all_pass(reports);
    v.ok = v.ok && reports.size() == 72;
    return v;
  });

  criterion(8, "characteristic subgroups and product formulas, mn <= 60", 20, [] {
    auto const reports = check_characteristic_theorems(60);
    auto v = all_pass(reports);
    bool failing_direction = false;
    for (auto const& r : reports) {
      if (r.claim == "aut-product.biconditional.K=Z4,H=Z2") {
        failing_direction = r.status == Status::pass &&
                            r.actual.find("characteristic: no") != std::string::npos;
      }
    }
    v.ok = v.ok && failing_direction;
    v.detail += failing_direction ? ", Z4 x Z2 confirms the failing direction"
                                  : ", Z4 x Z2 case missing";
    return v;
  });

  criterion(9, "pruned automorphism search equals unpruned oracle, |G| <= 16", 0, [] {
    Limits roomy;
    roomy.max_aut = 30000;
    Verdict v;
    std::size_t checked = 0;
    std::size_t total_auts = 0;
    for (auto const& entry : battery::small_groups()) {
      if (entry.group.order() > 16) {
        continue;
      }
      std::vector<std::vector<Elem>> got;
      for (auto const& m : automorphisms(entry.group, roomy)) {
        got.push_back(m.image);
      }
      if (got != oracle::automorphisms(entry.group)) {
        v.ok = false;
        v.detail += " [" + entry.name + " differs]";
      }
      total_auts += got.size();
      ++checked;
    }
    v.detail = std::to_string(checked) + " groups, " + std::to_string(total_auts) +
               " automorphisms" + v.detail;
    return v;
  });

  criterion(10, "negative controls", 0, [] {
    Verdict v;
    auto t = to_candidate(cyclic(4));
    t.mul[1][2] = 1;
    auto const verdict = verify_group_axioms(t);
    bool const caught = !verdict.ok() && verdict.witness[0] >= 0 && verdict.witness[1] >= 0;
    std::ostringstream out;
    std::ostringstream err;
    int const code =
        cli::run({"verify-paper", "--max-n", "8", "--inject-fault", "formula"}, out, err);
    v.ok = caught && code != 0;
    v.detail = std::string("corrupted table: ") + to_string(verdict.violated) +
               " violated, witness (" + std::to_string(verdict.witness[0]) + ", " +
               std::to_string(verdict.witness[1]) + ", " + std::to_string(verdict.witness[2]) +
               "); wrong formula: verify-paper exit " + std::to_string(code);
    return v;
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
