#include "cayley/cli/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "cayley/aut.hpp"
#include "cayley/cli/expr.hpp"
#include "cayley/construct.hpp"
#include "cayley/error.hpp"
#include "cayley/group.hpp"
#include "cayley/iso.hpp"
#include "cayley/verify.hpp"

namespace cayley::cli {

namespace {

GroupTable build(std::string const& text) { return eval_expr(parse_expr(text)); }

// Terminal columns taken by a UTF-8 string, ignoring combining marks.
std::size_t display_width(std::string const& s) {
  return static_cast<std::size_t>(std::count_if(
      s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

void pad(std::ostream& out, std::string const& s, std::size_t width) {
  out << s << std::string(width - std::min(width, display_width(s)), ' ');
}

int cmd_info(std::string const& expr, std::ostream& out) {
  auto const g = build(expr);
  out << "order: " << g.order() << '\n';
  out << "abelian: " << (is_abelian(g) ? "yes" : "no") << '\n';
  out << "center: " << center(g).size() << '\n';
  out << "orders:";
  for (auto const& [order, count] : order_spectrum(g)) {
    out << ' ' << order << ':' << count;
  }
  out << '\n';
  return exit_ok;
}

int cmd_aut(std::string const& expr, bool json, std::ostream& out) {
  auto const aut = aut_group(build(expr));
  if (json) {
    out << to_json(aut.table, 2) << '\n';
    return exit_ok;
  }
  out << "|Aut|: " << aut.table.order() << '\n';
  out << "identify: " << identify(aut.table).display << '\n';
  return exit_ok;
}

int cmd_iso(std::string const& lhs, std::string const& rhs, std::ostream& out) {
  auto const a = build(lhs);
  auto const b = build(rhs);
  auto const w = are_isomorphic(a, b);
  if (!w) {
    out << "not isomorphic\n";
    return exit_negative;
  }
  out << "isomorphic\n";
  for (Elem g : greedy_generators(a)) {
    out << "  " << a.name(g) << " -> " << b.name((*w)(g)) << '\n';
  }
  return exit_ok;
}

int cmd_identify(std::string const& expr, std::ostream& out) {
  out << identify(build(expr)).display << '\n';
  return exit_ok;
}

int cmd_table(std::string const& expr, bool json, std::ostream& out) {
  auto const g = build(expr);
  if (json) {
    out << to_json(g, 2) << '\n';
    return exit_ok;
  }
  std::size_t width = 1;
  for (auto const& name : g.names()) {
    width = std::max(width, display_width(name));
  }
  width += 1;
  pad(out, "", width);
  out << "| ";
  for (Elem b = 0; b < g.order(); ++b) {
    pad(out, g.name(b), b + 1 == g.order() ? 0 : width);
  }
  out << '\n' << std::string(width, '-') << "+-" << std::string(width * g.order(), '-')
      << '\n';
  for (Elem a = 0; a < g.order(); ++a) {
    pad(out, g.name(a), width);
    out << "| ";
    for (Elem b = 0; b < g.order(); ++b) {
      pad(out, g.name(g.mul(a, b)), b + 1 == g.order() ? 0 : width);
    }
    out << '\n';
  }
  return exit_ok;
}

int cmd_homs(std::string const& h_expr, std::string const& k_expr, bool with_actions,
             std::ostream& out) {
  auto const h = build(h_expr);
  auto const k = build(k_expr);
  out << "|hom(H, K)|: " << hom_set(h, k).size() << '\n';
  if (!with_actions) {
    return exit_ok;
  }
  auto const aut = aut_group(k);
  auto const acts = actions(h, k);
  auto const classes = action_class_indices(h, k);
  auto const gens = greedy_generators(h);
  out << "|hom(H, Aut(K))|: " << acts.size() << '\n';
  out << "classes: " << classes.size() << '\n';
  for (std::size_t c = 0; c < classes.size(); ++c) {
    out << "class " << c << ':';
    for (auto j : classes[c]) {
      out << " #" << j;
    }
    out << '\n';
    for (auto j : classes[c]) {
      out << "  #" << j << ' ';
      if (gens.empty()) {
        out << " trivial";
      }
      for (std::size_t i = 0; i < gens.size(); ++i) {
        auto const idx = aut.index_of(acts[j].maps[gens[i]]);
        out << (i == 0 ? " " : ", ") << h.name(gens[i]) << " -> "
            << (idx ? aut.table.name(*idx) : "?");
      }
      out << '\n';
    }
  }
  return exit_ok;
}

int cmd_verify(std::uint64_t max_n, bool json, std::string const& fault, std::ostream& out) {
  verify::VerifyConfig config;
  if (max_n != 0) {
    config.zn_z2_max_n = max_n;
    config.dihedral_max_n = max_n;
    std::erase_if(config.mod4_values, [&](std::uint64_t n) { return n > max_n; });
  }
  if (fault == "formula") {
    config.fault = verify::Fault::wrong_formula;
  } else if (fault == "table") {
    config.fault = verify::Fault::corrupted_table;
  }
  auto const summary = verify::run_all(config);
  if (json) {
    out << verify::to_json(summary.reports, 2) << '\n';
  } else {
    std::size_t width = 0;
    for (auto const& r : summary.reports) {
      width = std::max(width, r.claim.size());
    }
    for (auto const& r : summary.reports) {
      out << std::left << std::setw(8) << to_string(r.status) << std::setw(static_cast<int>(width + 2))
          << r.claim << std::right << std::fixed << std::setprecision(1) << r.ms << " ms\n";
      if (r.status != verify::Status::pass) {
        if (!r.expected.empty()) {
          out << "        expected: " << r.expected << '\n';
        }
        out << "        actual:   " << r.actual << '\n';
      }
    }
    out << summary.passed << " passed, " << summary.failed << " failed, "
        << summary.skipped << " skipped in " << std::fixed << std::setprecision(0)
        << summary.total_ms << " ms\n";
  }
  return summary.ok() ? exit_ok : exit_negative;
}

void report_parse_error(ParseError const& e, std::vector<std::string> const& exprs,
                        std::ostream& err) {
  err << "parse error " << e.what() << '\n';
  // Show the caret only when the failing input is unambiguous.
  if (exprs.size() == 1) {
    err << "  " << exprs[0] << "\n  " << std::string(e.offset(), ' ') << "^\n";
  }
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite groups as Cayley tables: construction, automorphisms, isomorphism",
               "cayley"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string a;
  std::string b;
  bool json = false;
  bool with_actions = false;
  std::uint64_t max_n = 0;
  std::string fault;

  auto* info = app.add_subcommand("info", "Order, commutativity, center size, order spectrum");
  info->add_option("expr", a, "Group expression")->required();

  auto* aut = app.add_subcommand("aut", "Order and catalog name of the automorphism group");
  aut->add_option("expr", a, "Group expression")->required();
  aut->add_flag("--json", json, "Emit the Aut Cayley table as JSON");

  auto* iso = app.add_subcommand("iso", "Test two groups for isomorphism (exit 1 if not)");
  iso->add_option("expr1", a, "First group")->required();
  iso->add_option("expr2", b, "Second group")->required();

  auto* ident = app.add_subcommand("identify", "Catalog name of a group");
  ident->add_option("expr", a, "Group expression")->required();

  auto* table = app.add_subcommand("table", "Print the Cayley table");
  table->add_option("expr", a, "Group expression")->required();
  table->add_flag("--json", json, "Emit JSON instead of text");

  auto* homs = app.add_subcommand("homs", "Count hom(H, K); optionally classify actions");
  homs->add_option("H", a, "Acting group")->required();
  homs->add_option("K", b, "Target group")->required();
  homs->add_flag("--actions", with_actions,
                 "Also partition hom(H, Aut(K)) into classes under Aut(H)");

  auto* vp = app.add_subcommand("verify-paper", "Run the full verification suite");
  vp->add_option("--max-n", max_n, "Upper bound for the Z_n x Z_2 and D_n ranges")
      ->check(CLI::Range(std::uint64_t{3}, std::uint64_t{64}));
  vp->add_flag("--json", json, "Emit the report as JSON");
  vp->add_option("--inject-fault", fault, "Negative control: formula or table")
      ->check(CLI::IsMember({"formula", "table"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  std::vector<std::string> exprs;
  if (*vp) {
    return cmd_verify(max_n, json, fault, out);
  }
  exprs.push_back(a);
  if (*iso || *homs) {
    exprs.push_back(b);
  }
  try {
    if (*info) return cmd_info(a, out);
    if (*aut) return cmd_aut(a, json, out);
    if (*iso) return cmd_iso(a, b, out);
    if (*ident) return cmd_identify(a, out);
    if (*table) return cmd_table(a, json, out);
    if (*homs) return cmd_homs(a, b, with_actions, out);
  } catch (ParseError const& e) {
    report_parse_error(e, exprs, err);
    return exit_usage;
  } catch (EvalError const& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (CapExceeded const& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return exit_cap;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace cayley::cli
