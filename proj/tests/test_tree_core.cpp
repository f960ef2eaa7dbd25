#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "treeramsey/tree_core.hpp"

using namespace treeramsey;

namespace {

BitString bs(const char* s) { return BitString::parse(s); }

}  // namespace

TEST_CASE("bit strings parse and print") {
  CHECK(BitString::root().empty());
  CHECK(BitString::root().str() == "");
  CHECK(bs("") == BitString::root());
  CHECK(bs("0110").str() == "0110");
  CHECK(bs("0110").length() == 4);
  CHECK(bs("0110").bit(0) == 0);
  CHECK(bs("0110").bit(1) == 1);
  CHECK(bs("0110").bit(3) == 0);
  CHECK(bs("011").packed() == 3);
  CHECK(bs("110").packed() == 6);
  CHECK_THROWS_WITH_AS(bs("012"), "bit string may contain only '0' and '1'",
                       std::invalid_argument);
  CHECK_THROWS_AS(bs("0").bit(1), std::invalid_argument);

  const std::string at_limit(64, '1');
  CHECK(bs(at_limit.c_str()).length() == 64);
  const std::string beyond(65, '1');
  CHECK_THROWS_WITH_AS(BitString::parse(beyond), "bit string longer than 64",
                       std::invalid_argument);
}

TEST_CASE("bit string tree moves") {
  CHECK(bs("01").child(0) == bs("010"));
  CHECK(bs("01").child(1) == bs("011"));
  CHECK(bs("011").parent() == bs("01"));
  CHECK(bs("0").parent() == BitString::root());
  CHECK_THROWS_WITH_AS(BitString::root().parent(), "the root has no parent",
                       std::invalid_argument);
  CHECK_THROWS_AS(bs("0").child(2), std::invalid_argument);
  const std::string at_limit(64, '0');
  CHECK_THROWS_WITH_AS(bs(at_limit.c_str()).child(0), "bit string longer than 64",
                       std::invalid_argument);

  CHECK(bs("0110").prefix(0) == BitString::root());
  CHECK(bs("0110").prefix(2) == bs("01"));
  CHECK(bs("0110").prefix(4) == bs("0110"));
  CHECK_THROWS_AS(bs("01").prefix(3), std::invalid_argument);
}

TEST_CASE("prefix order") {
  CHECK(bs("01").is_prefix_of(bs("01")));
  CHECK(bs("01").is_prefix_of(bs("0110")));
  CHECK_FALSE(bs("01").is_proper_prefix_of(bs("01")));
  CHECK(bs("01").is_proper_prefix_of(bs("010")));
  CHECK(BitString::root().is_proper_prefix_of(bs("1")));
  CHECK_FALSE(bs("00").is_prefix_of(bs("01")));
  CHECK(bs("0").comparable_with(bs("01")));
  CHECK(bs("01").comparable_with(bs("0")));
  CHECK_FALSE(bs("00").comparable_with(bs("01")));
  CHECK_FALSE(bs("0").comparable_with(bs("1")));
}

TEST_CASE("canonical order is length then lexicographic") {
  std::vector<BitString> nodes{bs("10"), bs("1"), bs(""), bs("010"), bs("0"), bs("00"), bs("11")};
  std::sort(nodes.begin(), nodes.end(), canonical_less);
  std::vector<std::string> got;
  for (const auto& v : nodes) got.push_back(v.str());
  CHECK(got == std::vector<std::string>{"", "0", "1", "00", "10", "11", "010"});
  CHECK(bs("1") < bs("00"));
  CHECK_FALSE(bs("00") < bs("00"));
}

TEST_CASE("chains are strictly increasing tuples") {
  CHECK_FALSE(is_chain({}));
  CHECK(is_chain({BitString::root()}));
  CHECK(is_chain({bs("0"), bs("01")}));
  CHECK(is_chain({bs(""), bs("1"), bs("10")}));
  CHECK_FALSE(is_chain({bs("0"), bs("1")}));
  CHECK_FALSE(is_chain({bs("0"), bs("0")}));
  CHECK_FALSE(is_chain({bs("01"), bs("0")}));

  CHECK(chain_less({bs("0")}, {bs("0"), bs("00")}));
  CHECK(chain_less({bs("0"), bs("00")}, {bs("0"), bs("01")}));
  CHECK(chain_less({bs("0"), bs("00")}, {bs("1"), bs("10")}));
  CHECK_FALSE(chain_less({bs("1")}, {bs("0")}));
  CHECK_FALSE(chain_less({bs("0")}, {bs("0")}));
}

TEST_CASE("truncated trees materialize membership") {
  const TruncatedTree t3 = TruncatedTree::full(3);
  CHECK(t3.size() == 15);
  CHECK(t3.max_depth() == 3);
  CHECK(t3.is_prefix_closed());
  CHECK(t3.contains(bs("101")));
  CHECK_FALSE(t3.contains(bs("0000")));
  CHECK(t3.members().front() == BitString::root());
  CHECK(t3.members()[1] == bs("0"));
  CHECK(t3.members()[2] == bs("1"));
  CHECK(std::is_sorted(t3.members().begin(), t3.members().end(), canonical_less));

  CHECK(TruncatedTree::full(0).size() == 1);
  CHECK_THROWS_WITH_AS(TruncatedTree::full(21), "full tree deeper than 20 is not materialized",
                       std::invalid_argument);
}

TEST_CASE("trees over explicit member sets") {
  const TruncatedTree t =
      TruncatedTree::of_members(2, {bs("1"), bs("10"), bs("11"), bs("1"), bs("")});
  CHECK(t.size() == 4);
  CHECK(t.contains(bs("")));
  CHECK(t.contains(bs("10")));
  CHECK_FALSE(t.contains(bs("0")));
  CHECK(t.is_prefix_closed());

  std::vector<BitString> within = t.members_within(bs("1"));
  CHECK(within == std::vector<BitString>{bs("1"), bs("10"), bs("11")});
  std::vector<BitString> above = t.members_strictly_above(bs("1"));
  CHECK(above == std::vector<BitString>{bs("10"), bs("11")});
  CHECK(t.members_strictly_above(bs("10")).empty());

  CHECK_THROWS_WITH_AS(TruncatedTree::of_members(1, {bs("00")}),
                       "tree member deeper than the stated depth", std::invalid_argument);

  const TruncatedTree evens =
      TruncatedTree::of_predicate(2, [](const BitString& v) { return v.length() % 2 == 0; });
  CHECK(evens.size() == 5);
  CHECK_FALSE(evens.is_prefix_closed());
}

TEST_CASE("identity embeddings") {
  const Embedding id2 = Embedding::identity(2);
  CHECK(id2.depth() == 2);
  CHECK(id2.max_image_length() == 2);
  CHECK(id2.image(bs("01")) == bs("01"));
  CHECK(verify_embedding(id2));
  CHECK(id2.preimage(bs("10")) == bs("10"));
  CHECK_FALSE(id2.preimage(bs("000")).has_value());
  CHECK(id2.truncated(1) == Embedding::identity(1));
  CHECK(id2.image_nodes().size() == 7);
  CHECK_THROWS_AS(id2.image(bs("000")), std::invalid_argument);
  CHECK_THROWS_AS(id2.truncated(3), std::invalid_argument);
}

TEST_CASE("embeddings may order children either way") {
  const Embedding swapped(1, {{bs(""), bs("1")}, {bs("0"), bs("11")}, {bs("1"), bs("10")}});
  CHECK(verify_embedding(swapped));
  CHECK(swapped.max_image_length() == 2);
  CHECK(swapped.preimage(bs("11")) == bs("0"));
}

TEST_CASE("embedding construction guards") {
  CHECK_THROWS_WITH_AS(Embedding(1, {{bs(""), bs("")}, {bs("0"), bs("0")}}),
                       "embedding must be defined on every index of the stated depth",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      Embedding(1, {{bs(""), bs("")}, {bs("0"), bs("0")}, {bs("1"), bs("0")}}),
      "embedding images must be distinct", std::invalid_argument);
  CHECK_THROWS_AS(Embedding(0, {{bs("0"), bs("0")}}), std::invalid_argument);
  CHECK_THROWS_AS(Embedding::identity(19), std::invalid_argument);
}

TEST_CASE("verification rejects order violations") {
  const Embedding comparable_children(
      1, {{bs(""), bs("")}, {bs("0"), bs("0")}, {bs("1"), bs("00")}});
  CHECK_FALSE(verify_embedding(comparable_children));

  const Embedding detached_child(1, {{bs(""), bs("0")}, {bs("0"), bs("00")}, {bs("1"), bs("1")}});
  CHECK_FALSE(verify_embedding(detached_child));

  const Embedding id1 = Embedding::identity(1);
  CHECK(verify_embedding(id1, TruncatedTree::full(1)));
  CHECK_FALSE(verify_embedding(id1, TruncatedTree::of_members(1, {bs(""), bs("0")})));
}

TEST_CASE("chain enumeration is exhaustive and canonical") {
  const TruncatedTree t2 = TruncatedTree::full(2);
  const std::vector<Chain> singles = enumerate_chains(t2, 1);
  CHECK(singles.size() == 7);
  CHECK(singles.front() == Chain{bs("")});
  CHECK(singles.back() == Chain{bs("11")});

  const std::vector<Chain> pairs = enumerate_chains(t2, 2);
  CHECK(pairs.size() == 10);
  for (const Chain& c : pairs) CHECK(is_chain(c));
  CHECK(std::is_sorted(pairs.begin(), pairs.end(), chain_less));

  const std::vector<Chain> triples = enumerate_chains(t2, 3);
  CHECK(triples.size() == 4);

  const std::vector<Chain> under_zero = enumerate_chains(t2, 2, bs("0"));
  CHECK(under_zero == std::vector<Chain>{{bs("0"), bs("00")}, {bs("0"), bs("01")}});

  CHECK(enumerate_chains(Embedding::identity(2), 2).size() == 10);
  CHECK_THROWS_WITH_AS(enumerate_chains(t2, 0), "chain arity must be positive",
                       std::invalid_argument);
}

TEST_CASE("embedding composition") {
  const Embedding id2 = Embedding::identity(2);
  const Embedding inner(1, {{bs(""), bs("0")}, {bs("0"), bs("00")}, {bs("1"), bs("01")}});
  CHECK(compose_embeddings(id2, inner) == inner);

  const Embedding doubled(1, {{bs(""), bs("")}, {bs("0"), bs("00")}, {bs("1"), bs("11")}});
  const Embedding swapped(1, {{bs(""), bs("")}, {bs("0"), bs("1")}, {bs("1"), bs("0")}});
  const Embedding both = compose_embeddings(doubled, swapped);
  CHECK(both.image(bs("0")) == bs("11"));
  CHECK(both.image(bs("1")) == bs("00"));
  CHECK(verify_embedding(both));

  const Embedding deep(1, {{bs(""), bs("")}, {bs("0"), bs("000")}, {bs("1"), bs("1")}});
  CHECK_THROWS_WITH_AS(compose_embeddings(id2, deep),
                       "inner embedding leaves the outer embedding's domain",
                       std::invalid_argument);
}
