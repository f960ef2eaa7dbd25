#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "treeramsey/coloring.hpp"
#include "treeramsey/tree_core.hpp"

using namespace treeramsey;

namespace {

BitString bs(const char* s) { return BitString::parse(s); }

}  // namespace

TEST_CASE("mix64 reference values") {
  CHECK(mix64(0) == 0);
  CHECK(mix64(1) == 6238072747940578789ull);
  CHECK(mix64(0xdeadbeefull) == 5622224078331092714ull);
}

TEST_CASE("node codes separate length from bits") {
  CHECK(node_code(BitString::root()) == 1);
  CHECK(node_code(bs("0")) == 2);
  CHECK(node_code(bs("1")) == 3);
  CHECK(node_code(bs("01")) == 5);
  CHECK(node_code(bs("110")) == 14);
  const std::string too_long(64, '0');
  CHECK_THROWS_WITH_AS(node_code(BitString::parse(too_long)), "node too long to code",
                       std::invalid_argument);
}

TEST_CASE("chain and tuple codes fold through the mixer") {
  CHECK(chain_code({BitString::root()}) == 6238072747940578789ull);
  CHECK(chain_code({bs("0"), bs("01")}) == 16693908587660597998ull);
  CHECK(chain_code({bs(""), bs("1"), bs("10")}) == 16632849452876621481ull);
  CHECK(tuple_code({}) == 0);
  CHECK(tuple_code({0}) == 6238072747940578789ull);
  CHECK(tuple_code({2, 5}) == 10602560191095352132ull);
  CHECK_THROWS_WITH_AS(tuple_code({-1}), "tuple entries must be nonnegative",
                       std::invalid_argument);
}

TEST_CASE("seeded colorings hash the chain code") {
  const ChainColoring f = ChainColoring::seeded(2, 3, 5, 7);
  CHECK(f.arity() == 2);
  CHECK(f.colors() == 3);
  CHECK(f.depth() == 5);
  CHECK(f.kind() == ChainColoring::Kind::Seeded);
  CHECK(f.seed() == 7);
  CHECK(f.eval({bs(""), bs("1")}) == 2);

  const ChainColoring g = ChainColoring::seeded(1, 2, 4, 1);
  CHECK(g.eval({bs("0")}) == 0);

  for (const Chain& c : enumerate_chains(TruncatedTree::full(4), 2)) {
    const int got = ChainColoring::seeded(2, 3, 4, 11).eval(c);
    CHECK(got == static_cast<int>(mix64(11 ^ chain_code(c)) % 3));
  }
  CHECK_THROWS_AS(f.table_entries(), std::invalid_argument);
}

TEST_CASE("seeded colorings reject malformed chains") {
  const ChainColoring f = ChainColoring::seeded(2, 2, 3, 1);
  CHECK_THROWS_WITH_AS(f.eval({bs("0")}), "chain has the wrong arity", std::invalid_argument);
  CHECK_THROWS_WITH_AS(f.eval({bs("0"), bs("1")}), "coloring applied to a non-chain",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(f.eval({bs("0"), bs("0110")}),
                       "chain node deeper than the coloring's depth", std::invalid_argument);
}

TEST_CASE("table colorings answer from their entries") {
  std::vector<std::pair<Chain, int>> entries;
  const TruncatedTree host = TruncatedTree::full(3);
  for (const BitString& v : host.members()) entries.push_back({{v}, v.length() % 2});
  const ChainColoring f = ChainColoring::table(1, 2, 3, entries);
  CHECK(f.kind() == ChainColoring::Kind::Table);
  CHECK(f.eval({bs("")}) == 0);
  CHECK(f.eval({bs("1")}) == 1);
  CHECK(f.eval({bs("10")}) == 0);
  CHECK(f.eval({bs("011")}) == 1);
  CHECK_THROWS_AS(f.seed(), std::invalid_argument);

  const auto back = f.table_entries();
  CHECK(back.size() == host.size());
  CHECK(std::is_sorted(back.begin(), back.end(),
                       [](const auto& a, const auto& b) { return chain_less(a.first, b.first); }));

  const ChainColoring sparse = ChainColoring::table(1, 2, 3, {{{bs("0")}, 1}});
  CHECK_THROWS_WITH_AS(sparse.eval({bs("1")}), "table coloring has no entry for this chain",
                       std::invalid_argument);
}

TEST_CASE("table construction guards") {
  CHECK_THROWS_WITH_AS(ChainColoring::table(2, 2, 3, {{{bs("0")}, 0}}),
                       "table keys must be chains of the stated arity", std::invalid_argument);
  CHECK_THROWS_WITH_AS(ChainColoring::table(1, 2, 2, {{{bs("000")}, 0}}),
                       "table chain deeper than the stated depth", std::invalid_argument);
  CHECK_THROWS_WITH_AS(ChainColoring::table(1, 2, 3, {{{bs("0")}, 2}}),
                       "table color out of range", std::invalid_argument);
  CHECK_THROWS_WITH_AS(ChainColoring::table(1, 2, 3, {{{bs("0")}, 0}, {{bs("0")}, 1}}),
                       "table assigns two colors to one chain", std::invalid_argument);
  CHECK_NOTHROW(ChainColoring::table(1, 2, 3, {{{bs("0")}, 0}, {{bs("0")}, 0}}));
}

TEST_CASE("length profile colorings ignore everything but lengths") {
  const ChainColoring f = ChainColoring::length_profile_seeded(2, 4, 9, 9);
  CHECK(f.kind() == ChainColoring::Kind::LengthProfileSeeded);
  CHECK(f.eval({bs("1"), bs("110")}) == 3);
  CHECK(f.eval({bs("0"), bs("001")}) == f.eval({bs("1"), bs("110")}));

  const ChainColoring table =
      ChainColoring::length_profile_table(2, 2, 3, {{{0, 2}, 1}, {{1, 2}, 0}});
  CHECK(table.kind() == ChainColoring::Kind::LengthProfileTable);
  CHECK(table.eval({bs(""), bs("01")}) == 1);
  CHECK(table.eval({bs("1"), bs("10")}) == 0);
  CHECK_THROWS_WITH_AS(table.eval({bs(""), bs("1")}),
                       "table coloring has no entry for this length profile",
                       std::invalid_argument);
  CHECK(table.profile_entries().size() == 2);

  CHECK_THROWS_WITH_AS(ChainColoring::length_profile_table(2, 2, 3, {{{2, 1}, 0}}),
                       "profile lengths must strictly increase", std::invalid_argument);
  CHECK_THROWS_WITH_AS(ChainColoring::length_profile_table(1, 2, 3, {{{4}, 0}}),
                       "profile length out of range", std::invalid_argument);
}

TEST_CASE("constant colorings") {
  const ChainColoring f = ChainColoring::constant(2, 3, 4, 2);
  CHECK(f.kind() == ChainColoring::Kind::LengthProfileTable);
  for (const Chain& c : enumerate_chains(TruncatedTree::full(4), 2)) CHECK(f.eval(c) == 2);
  CHECK_THROWS_WITH_AS(ChainColoring::constant(2, 2, 4, 2), "constant color out of range",
                       std::invalid_argument);
}

TEST_CASE("coloring construction guards") {
  CHECK_THROWS_WITH_AS(ChainColoring::seeded(0, 2, 3, 1), "coloring arity must be positive",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(ChainColoring::seeded(1, 0, 3, 1), "coloring must use at least one color",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(ChainColoring::seeded(1, 2, -1, 1), "coloring depth must be nonnegative",
                       std::invalid_argument);
}

TEST_CASE("finset codes canonicalize their pairs") {
  const FinsetCode code = FinsetCode::of_pairs({{{bs("1")}, 0}, {{bs("0")}, 2}, {{bs("1")}, 0}});
  CHECK(code.pairs().size() == 2);
  CHECK(code.pairs()[0].first == Chain{bs("0")});
  CHECK(code.pairs()[1].first == Chain{bs("1")});
  CHECK(code.to_canonical_string() == R"([[["0"],2],[["1"],0]])");

  const FinsetCode single = FinsetCode::of_pairs({{{bs("")}, 1}});
  CHECK(single.to_canonical_string() == R"([[[""],1]])");
  CHECK(FinsetCode().pairs().empty());
  CHECK(FinsetCode().to_canonical_string() == "[]");

  const FinsetCode back = FinsetCode::from_canonical_string(code.to_canonical_string());
  CHECK(back == code);
  CHECK(FinsetCode::from_canonical_string("[]") == FinsetCode());

  CHECK_THROWS_WITH_AS(FinsetCode::of_pairs({{{bs("0"), bs("1")}, 0}}),
                       "finset entries must pair a chain with a color", std::invalid_argument);
  CHECK_THROWS_AS(FinsetCode::of_pairs({{{bs("0")}, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(FinsetCode::from_canonical_string("{}"), std::invalid_argument);
}

TEST_CASE("code order compares size before content") {
  const FinsetCode empty = FinsetCode();
  const FinsetCode zero = FinsetCode::of_pairs({{{bs("")}, 0}});
  const FinsetCode one = FinsetCode::of_pairs({{{bs("")}, 1}});
  const FinsetCode two = FinsetCode::of_pairs({{{bs("")}, 0}, {{bs("0")}, 0}});
  CHECK(code_less(empty, zero));
  CHECK(code_less(zero, one));
  CHECK(code_less(one, two));
  CHECK_FALSE(code_less(one, zero));
  CHECK_FALSE(code_less(one, one));
  CHECK(CodeLess{}(empty, one));
}

TEST_CASE("induced values collect pinned colors") {
  const ChainColoring f = ChainColoring::seeded(2, 3, 4, 5);
  const AncestorRecord pool(std::vector<BitString>{bs(""), bs("0")});
  const FinsetCode got = induced_value(pool, f, bs("01"));
  const FinsetCode want = FinsetCode::of_pairs({
      {{bs("")}, f.eval({bs(""), bs("01")})},
      {{bs("0")}, f.eval({bs("0"), bs("01")})},
  });
  CHECK(got == want);

  const ChainColoring h = ChainColoring::seeded(3, 2, 4, 5);
  const FinsetCode triple = induced_value(pool, h, bs("01"));
  CHECK(triple ==
        FinsetCode::of_pairs({{{bs(""), bs("0")}, h.eval({bs(""), bs("0"), bs("01")})}}));

  CHECK(induced_value(AncestorRecord(std::vector<BitString>{}), f, bs("01")) == FinsetCode());

  CHECK_THROWS_WITH_AS(induced_value(pool, f, bs("1")),
                       "the evaluation point must properly extend the last ancestor base",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(induced_value(pool, ChainColoring::seeded(1, 2, 4, 5), bs("01")),
                       "only colorings of arity at least 2 induce lower-arity values",
                       std::invalid_argument);
}

TEST_CASE("ancestor records enforce the prefix ladder") {
  const AncestorRecord empty((std::vector<BitString>()));
  CHECK(empty.empty());
  CHECK(empty.size() == 0);

  const AncestorRecord one = empty.push(bs("0"));
  const AncestorRecord two = one.push(bs("01"));
  CHECK(two.size() == 2);
  CHECK(two.back() == bs("01"));
  CHECK(two.nodes() == std::vector<BitString>{bs("0"), bs("01")});
  CHECK(one.size() == 1);

  CHECK_THROWS_WITH_AS(AncestorRecord(std::vector<BitString>{bs("0"), bs("1")}),
                       "ancestor bases must strictly increase in the prefix order",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(two.push(bs("00")),
                       "ancestor bases must strictly increase in the prefix order",
                       std::invalid_argument);
}
