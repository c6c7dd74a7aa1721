#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

#include "cayley/cli/commands.hpp"
#include "cayley/cli/expr.hpp"
#include "cayley/construct.hpp"
#include "cayley/iso.hpp"
#include "support/battery.hpp"
#include "support/oracles.hpp"

namespace {

using namespace cayley;
using namespace cayley::cli;
using Kind = GroupExpr::Kind;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int const code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Parse, Examples) {
  auto const a = parse_expr("Z8 x Z2");
  EXPECT_EQ(a, GroupExpr::product(GroupExpr::leaf(Kind::cyclic, 8),
                                  GroupExpr::leaf(Kind::cyclic, 2)));
  auto const b = parse_expr("Z8 : Z2 [r^3]");
  EXPECT_EQ(b, GroupExpr::semidirect(GroupExpr::leaf(Kind::cyclic, 8),
                                     GroupExpr::leaf(Kind::cyclic, 2),
                                     {ActionSpec::Kind::cyclic_power, 3}));
  auto const c = parse_expr("(Z2 x D4) : Z2 [#1]");
  ASSERT_EQ(c.kind, Kind::semidirect);
  EXPECT_EQ(c.left->kind, Kind::product);
  EXPECT_EQ(c.right->kind, Kind::cyclic);
  EXPECT_EQ(c.action, (ActionSpec{ActionSpec::Kind::index, 1}));
}

TEST(Parse, PrecedenceAndWhitespace) {
  auto const e = parse_expr("Z2 x Z8 : Z2 [r^3] x D3");
  ASSERT_EQ(e.kind, Kind::product);
  EXPECT_EQ(e.left->kind, Kind::product);
  EXPECT_EQ(e.left->right->kind, Kind::semidirect);
  EXPECT_EQ(parse_expr("  Z8:Z2[ r ^ 3 ]"), parse_expr("Z8 : Z2 [r^3]"));
  EXPECT_EQ(parse_expr("Z2xZ2"), parse_expr("Z2 x Z2"));
  EXPECT_EQ(parse_expr("Hol8").kind, Kind::holomorph);
  auto const chain = parse_expr("Z8 : Z2 [r^3] : Z2 [#0]");
  EXPECT_EQ(chain.left->kind, Kind::semidirect);
}

TEST(Parse, ErrorsCarryOffsetAndExpectations) {
  try {
    parse_expr("Z8 x (Z2");
    FAIL();
  } catch (ParseError const& e) {
    EXPECT_EQ(e.offset(), 8u);
    EXPECT_EQ(e.expected(), (std::vector<std::string>{"'x'", "':'", "')'"}));
  }
  try {
    parse_expr("Z8 : Z2 [q]");
    FAIL();
  } catch (ParseError const& e) {
    EXPECT_EQ(e.offset(), 9u);
    EXPECT_EQ(e.expected(), (std::vector<std::string>{"'r^'", "'#'"}));
  }
  try {
    parse_expr("Zx");
    FAIL();
  } catch (ParseError const& e) {
    EXPECT_EQ(e.offset(), 1u);
    EXPECT_EQ(e.expected(), (std::vector<std::string>{"integer"}));
  }
  try {
    parse_expr("");
    FAIL();
  } catch (ParseError const& e) {
    EXPECT_EQ(e.offset(), 0u);
    EXPECT_EQ(e.expected().size(), 4u);
  }
  EXPECT_THROW(parse_expr("Z8 Z2"), ParseError);
  EXPECT_THROW(parse_expr("Z99999999999999999999999"), ParseError);
  EXPECT_THROW(parse_expr("Z8 : Z2"), ParseError);
  EXPECT_THROW(parse_expr("Z8 x"), ParseError);
  EXPECT_THROW(parse_expr("z8"), ParseError);
}

TEST(Parse, DepthCap) {
  std::string ok = std::string(64, '(') + "Z2" + std::string(64, ')');
  EXPECT_EQ(parse_expr(ok), parse_expr("Z2"));
  std::string deep = std::string(65, '(') + "Z2" + std::string(65, ')');
  EXPECT_THROW(parse_expr(deep), ParseError);
  std::string huge(1 << 20, '(');
  EXPECT_THROW(parse_expr(huge), ParseError);
  std::string wide = "Z1";
  for (int i = 0; i < 5000; ++i) {
    wide += " x Z1";
  }
  EXPECT_THROW(parse_expr(wide), ParseError);
}

TEST(Parse, FuzzOnlyThrowsParseErrors) {
  std::mt19937 rng(1234);
  std::string const alphabet = "ZDHolx:[]()r^#0123456789 \t-";
  std::uniform_int_distribution<std::size_t> len(0, 24);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::size_t accepted = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    std::string s(len(rng), ' ');
    for (auto& ch : s) {
      ch = alphabet[pick(rng)];
    }
    try {
      auto const e = parse_expr(s);
      ASSERT_EQ(parse_expr(to_string(e)), e) << s;
      ++accepted;
    } catch (ParseError const&) {
    }
  }
  EXPECT_GT(accepted, 0u);
}

GroupExpr random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> kind(0, depth > 0 ? 4 : 2);
  std::uniform_int_distribution<std::uint64_t> n(0, 30);
  switch (kind(rng)) {
    case 0: return GroupExpr::leaf(Kind::cyclic, n(rng));
    case 1: return GroupExpr::leaf(Kind::dihedral, n(rng));
    case 2: return GroupExpr::leaf(Kind::holomorph, n(rng));
    case 3: return GroupExpr::product(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    default: {
      ActionSpec a{n(rng) % 2 ? ActionSpec::Kind::index : ActionSpec::Kind::cyclic_power,
                   n(rng)};
      return GroupExpr::semidirect(random_expr(rng, depth - 1), random_expr(rng, depth - 1), a);
    }
  }
}

TEST(Parse, PrintedTreesParseBack) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 3000; ++trial) {
    auto const e = random_expr(rng, 4);
    auto const text = to_string(e);
    ASSERT_EQ(parse_expr(text), e) << text;
    ASSERT_EQ(e.clone(), e);
  }
}

TEST(Eval, Examples) {
  EXPECT_TRUE(oracle::isomorphic(eval_expr(parse_expr("Z8 : Z2 [r^7]")), dihedral(8)));
  EXPECT_THROW(eval_expr(parse_expr("Z8 : Z2 [r^2]")), EvalError);
  try {
    eval_expr(parse_expr("Z9 : Z2 [r^2]"));
    FAIL();
  } catch (EvalError const& e) {
    EXPECT_NE(std::string(e.what()).find("order 6"), std::string::npos);
  }
}

TEST(Eval, ActionsAndErrors) {
  auto const sigma = eval_expr(parse_expr("Z8 : Z2 [r^3]"));
  auto const by_index = eval_expr(parse_expr("Z8 : Z2 [#1]"));
  EXPECT_EQ(sigma, by_index);
  EXPECT_EQ(eval_expr(parse_expr("Z8 : Z2 [r^1]")), eval_expr(parse_expr("Z8 x Z2")));
  EXPECT_EQ(eval_expr(parse_expr("Z8 : Z2 [r^11]")), sigma);
  EXPECT_EQ(eval_expr(parse_expr("Z1 : Z3 [r^0]")).order(), 3u);
  EXPECT_THROW(eval_expr(parse_expr("Z8 : Z2 [#4]")), EvalError);
  EXPECT_THROW(eval_expr(parse_expr("D4 : Z2 [r^3]")), EvalError);
  EXPECT_THROW(eval_expr(parse_expr("Z0")), EvalError);
  EXPECT_THROW(eval_expr(parse_expr("D0 x Z2")), EvalError);
  EXPECT_THROW(eval_expr(parse_expr("Z5000")), CapExceeded);
  EXPECT_THROW(eval_expr(parse_expr("Z64 x Z64 x Z2")), CapExceeded);
  auto const g = eval_expr(parse_expr("(Z2 x D4) : Z2 [#1]"));
  EXPECT_EQ(g.order(), 32u);
  EXPECT_EQ(eval_expr(parse_expr("Hol8")).order(), 32u);
  EXPECT_EQ(eval_expr(parse_expr("Z4 x Z2")).name(pair_index(1, 1, 2)), "r·s");
}

TEST(Eval, CatalogNamesRoundTrip) {
  std::size_t named = 0;
  for (auto const& entry : battery::small_groups()) {
    auto const name = identify(entry.group);
    SCOPED_TRACE(entry.name + " -> " + name.display);
    if (name.kind == CatalogName::Kind::unidentified) {
      continue;
    }
    auto const back = eval_expr(parse_expr(name.display));
    ASSERT_TRUE(are_isomorphic(back, entry.group).has_value());
    ASSERT_TRUE(oracle::isomorphic(back, entry.group));
    ++named;
  }
  EXPECT_GT(named, 40u);
}

TEST(Commands, Info) {
  auto const r = cli({"info", "D4"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_EQ(r.out, "order: 8\nabelian: no\ncenter: 2\norders: 1:1 2:5 4:2\n");
}

TEST(Commands, Aut) {
  auto const r = cli({"aut", "D8"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_NE(r.out.find("|Aut|: 32"), std::string::npos);
  auto const j = cli({"aut", "Z8", "--json"});
  EXPECT_EQ(j.code, exit_ok);
  auto const parsed = nlohmann::json::parse(j.out);
  EXPECT_EQ(parsed.at("order"), 4);
  EXPECT_EQ(parsed.at("mul").size(), 4u);
  EXPECT_EQ(cli({"aut", "Z2 x Z2 x Z2 x Z2"}).code, exit_cap);
}

TEST(Commands, IsoAndIdentify) {
  auto const yes = cli({"iso", "Z6", "Z2 x Z3"});
  EXPECT_EQ(yes.code, exit_ok);
  EXPECT_EQ(yes.out.rfind("isomorphic", 0), 0u);
  EXPECT_EQ(cli({"iso", "Z4", "Z2 x Z2"}).code, exit_negative);
  EXPECT_EQ(cli({"identify", "Z8 : Z2 [r^5]"}).out, "Z8 : Z2 [r^5]\n");
  EXPECT_EQ(cli({"identify", "Z8 : Z2 [r^7]"}).out, "D8\n");
}

TEST(Commands, Table) {
  auto const t = cli({"table", "Z2"});
  EXPECT_EQ(t.code, exit_ok);
  EXPECT_EQ(t.out, "  | e r\n--+-----\ne | e r\nr | r e\n");
  auto const j = cli({"table", "D3", "--json"});
  auto const parsed = nlohmann::json::parse(j.out);
  EXPECT_EQ(parsed.at("order"), 6);
  EXPECT_EQ(parsed.at("identity"), 0);
  EXPECT_EQ(parsed.at("names").size(), 6u);
}

TEST(Commands, Homs) {
  auto const r = cli({"homs", "Z4", "Z5", "--actions"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_NE(r.out.find("|hom(H, K)|: 1"), std::string::npos);
  EXPECT_NE(r.out.find("|hom(H, Aut(K))|: 4"), std::string::npos);
  EXPECT_NE(r.out.find("classes: 3"), std::string::npos);
  EXPECT_EQ(cli({"homs", "Z6", "Z4"}).out, "|hom(H, K)|: 2\n");
}

TEST(Commands, ErrorsAndExitCodes) {
  auto const parse = cli({"info", "Z8 x (Z2"});
  EXPECT_EQ(parse.code, exit_usage);
  EXPECT_TRUE(parse.out.empty());
  EXPECT_NE(parse.err.find("offset 8"), std::string::npos);
  EXPECT_EQ(cli({"info", "Z8 : Z2 [r^2]"}).code, exit_usage);
  EXPECT_EQ(cli({"info", "Z100000"}).code, exit_cap);
  EXPECT_EQ(cli({}).code, exit_usage);
  EXPECT_EQ(cli({"frobnicate"}).code, exit_usage);
  EXPECT_EQ(cli({"iso", "Z2"}).code, exit_usage);
  EXPECT_EQ(cli({"verify-paper", "--inject-fault", "nonsense"}).code, exit_usage);
  EXPECT_EQ(cli({"--help"}).code, exit_ok);
}

TEST(Commands, VerifySubcommandExitMatchesReport) {
  for (std::vector<std::string> extra :
       {std::vector<std::string>{}, {"--inject-fault", "formula"}, {"--inject-fault", "table"}}) {
    std::vector<std::string> args{"verify-paper", "--max-n", "5", "--json"};
    args.insert(args.end(), extra.begin(), extra.end());
    auto const r = cli(args);
    auto const j = nlohmann::json::parse(r.out);
    bool any_fail = false;
    for (auto const& item : j) {
      any_fail = any_fail || item.at("status") == "fail";
    }
    EXPECT_EQ(r.code == exit_ok, !any_fail);
    EXPECT_EQ(any_fail, !extra.empty());
  }
  auto const text = cli({"verify-paper", "--max-n", "4"});
  EXPECT_EQ(text.code, exit_ok);
  EXPECT_NE(text.out.find("0 failed"), std::string::npos);
}

}  // namespace
