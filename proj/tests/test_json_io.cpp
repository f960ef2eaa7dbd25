#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "treeramsey/json_io.hpp"

using namespace treeramsey;

namespace {

BitString bs(const char* s) { return BitString::parse(s); }

}  // namespace

TEST_CASE("embeddings serialize flat") {
  const Embedding e(1, {{bs(""), bs("1")}, {bs("0"), bs("10")}, {bs("1"), bs("11")}});
  const Json j = embedding_to_json(e);
  CHECK(j.at("depth") == 1);
  CHECK(j.at("") == "1");
  CHECK(j.at("0") == "10");
  CHECK(j.at("1") == "11");
  CHECK(embedding_from_json(j) == e);
  CHECK(embedding_from_json(embedding_to_json(Embedding::identity(3))) ==
        Embedding::identity(3));
  CHECK_THROWS_AS(embedding_from_json(Json::array()), std::invalid_argument);
  CHECK_THROWS_AS(embedding_from_json(Json{{"depth", -1}}), std::invalid_argument);
}

TEST_CASE("chain colorings round trip through JSON") {
  const ChainColoring seeded = ChainColoring::seeded(2, 3, 6, 42);
  const Json js = chain_coloring_to_json(seeded);
  CHECK(js.at("n") == 2);
  CHECK(js.at("k") == 3);
  CHECK(js.at("depth") == 6);
  CHECK(js.at("source").at("kind") == "seeded");
  CHECK(js.at("source").at("seed") == 42);
  const ChainColoring seeded_back = chain_coloring_from_json(js);
  CHECK(seeded_back.kind() == ChainColoring::Kind::Seeded);
  for (const Chain& c : enumerate_chains(TruncatedTree::full(4), 2))
    CHECK(seeded_back.eval(c) == seeded.eval(c));

  const ChainColoring table =
      ChainColoring::table(1, 2, 2, {{{bs("")}, 1}, {{bs("0")}, 0}, {{bs("1")}, 1}});
  const Json jt = chain_coloring_to_json(table);
  CHECK(jt.at("source").at("kind") == "table");
  const ChainColoring table_back = chain_coloring_from_json(jt);
  CHECK(table_back.eval({bs("")}) == 1);
  CHECK(table_back.eval({bs("0")}) == 0);
  CHECK(table_back.eval({bs("1")}) == 1);

  const ChainColoring profile = ChainColoring::length_profile_seeded(2, 2, 8, 7);
  const ChainColoring profile_back = chain_coloring_from_json(chain_coloring_to_json(profile));
  CHECK(profile_back.kind() == ChainColoring::Kind::LengthProfileSeeded);
  CHECK(profile_back.eval({bs("0"), bs("01")}) == profile.eval({bs("0"), bs("01")}));

  const ChainColoring constant = ChainColoring::constant(2, 2, 4, 1);
  const Json jc = chain_coloring_to_json(constant);
  CHECK(jc.at("source").at("kind") == "length-profile-table");
  const ChainColoring constant_back = chain_coloring_from_json(jc);
  for (const Chain& c : enumerate_chains(TruncatedTree::full(4), 2))
    CHECK(constant_back.eval(c) == 1);

  Json bogus = js;
  bogus["source"]["kind"] = "mystery";
  CHECK_THROWS_AS(chain_coloring_from_json(bogus), std::invalid_argument);
}

TEST_CASE("tuple colorings round trip through JSON") {
  const IntTupleColoring seeded = IntTupleColoring::seeded(2, 2, 9, 3);
  const Json js = tuple_coloring_to_json(seeded);
  CHECK(js.at("n") == 2);
  CHECK(js.at("domain") == 9);
  const IntTupleColoring seeded_back = tuple_coloring_from_json(js);
  for (int i = 0; i < 8; ++i) CHECK(seeded_back.eval({i, 8}) == seeded.eval({i, 8}));

  const IntTupleColoring table = IntTupleColoring::table(2, 2, 3, {{{0, 1}, 1}, {{0, 2}, 0}});
  const IntTupleColoring table_back = tuple_coloring_from_json(tuple_coloring_to_json(table));
  CHECK(table_back.eval({0, 1}) == 1);
  CHECK(table_back.eval({0, 2}) == 0);
}

TEST_CASE("stage choices and ledgers round trip") {
  StageChoice choice;
  choice.index = bs("01");
  choice.base = bs("0011");
  choice.color = FinsetCode::of_pairs({{{bs("")}, 1}, {{bs("00")}, 0}});
  choice.witness_root = bs("00110");
  choice.klass = ChoiceClass::Sigma2;

  const Json j = stage_choice_to_json(choice);
  CHECK(j.at("sigma") == "01");
  CHECK(j.at("rho") == "0011");
  CHECK(j.at("class") == "sigma-2");
  CHECK(stage_choice_from_json(j) == choice);

  ReductionLedger ledger;
  ledger.stages = {choice};
  ledger.jump_levels = 2;
  const Json jl = ledger_to_json(ledger);
  CHECK(jl.at("jump-levels") == 2);
  const ReductionLedger back = ledger_from_json(jl);
  CHECK(back.jump_levels == 2);
  REQUIRE(back.stages.size() == 1);
  CHECK(back.stages[0] == choice);
}

TEST_CASE("solve and reduce results serialize") {
  const ChainColoring f = ChainColoring::constant(2, 2, 8, 1);
  const SolveResult solved = tt_solve(f, 8, 1);
  const Json j = solve_result_to_json(solved);
  CHECK(j.at("color") == solved.color);
  CHECK(j.at("stages").size() == 1);
  const SolveResult back = solve_result_from_json(j);
  CHECK(back.color == solved.color);
  CHECK(back.witness == solved.witness);
  CHECK(back.ledger.jump_levels == solved.ledger.jump_levels);
  REQUIRE(back.ledger.stages.size() == solved.ledger.stages.size());
  for (size_t i = 0; i < back.ledger.stages.size(); ++i)
    CHECK(back.ledger.stages[i] == solved.ledger.stages[i]);
  REQUIRE(back.stage_embeddings.size() == 1);
  CHECK(back.stage_embeddings[0] == solved.stage_embeddings[0]);

  const ReduceResult reduced = reduce_step(Embedding::identity(6), f, 2);
  const Json jr = reduce_result_to_json(reduced);
  CHECK(jr.contains("tree"));
  CHECK(jr.contains("coloring"));
  CHECK(jr.at("ledger").at("jump-levels") == 2);
  CHECK(embedding_from_json(jr.at("tree")) == reduced.tree);
}

TEST_CASE("rt results, jump stages, and programs serialize") {
  std::vector<std::pair<std::vector<int>, int>> entries;
  for (int i = 0; i < 9; ++i) entries.push_back({{i}, 1});
  const RtResult rt = rt_solve(IntTupleColoring::table(1, 2, 9, std::move(entries)), 3, 8);
  const Json j = rt_result_to_json(rt);
  CHECK(j.at("color") == 1);
  CHECK(j.at("homogeneous") == Json::array({0, 1, 2}));
  CHECK(j.at("solve").at("color") == rt.solve.color);

  const JumpStageSet stage = jump_stage(OracleApprox::empty(8), 4);
  const Json sj = jump_stage_to_json(stage);
  CHECK(sj.at("level") == 1);
  CHECK(sj.at("stage") == 4);
  CHECK(sj.at("members").get<std::vector<uint64_t>>() == stage.members);

  const Json pj = program_to_json(MachineProgram::decode(4749));
  CHECK(pj.at("code") == 4749);
  CHECK(pj.at("instructions") ==
        Json::array({Json::array({"QUERY", 0, 0}), Json::array({"JZ", 0, 1})}));
}

TEST_CASE("canonical dumps are stable") {
  const Json j{{"zeta", 1}, {"alpha", Json{{"b", 2}, {"a", 1}}}};
  const std::string dumped = dump_canonical(j);
  CHECK(dumped ==
        "{\n  \"alpha\": {\n    \"a\": 1,\n    \"b\": 2\n  },\n  \"zeta\": 1\n}\n");
  CHECK(dump_canonical(j) == dumped);
  CHECK(dumped.back() == '\n');
}

TEST_CASE("JSON files round trip") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "treeramsey_json_io_test.json";
  const Json j = embedding_to_json(Embedding::identity(2));
  write_json_file(path.string(), j);
  CHECK(read_json_file(path.string()) == j);
  std::remove(path.string().c_str());
  CHECK_THROWS_AS(read_json_file((fs::temp_directory_path() / "missing_treeramsey.json").string()),
                  std::invalid_argument);
}
