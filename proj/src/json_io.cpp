#include "treeramsey/json_io.hpp"

#include <fstream>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace treeramsey {
namespace {

[[noreturn]] void bad(const std::string& message) { throw std::invalid_argument(message); }

Json chain_to_json(const Chain& chain) {
  Json out = Json::array();
  for (const BitString& node : chain) out.push_back(node.str());
  return out;
}

Chain chain_from_json(const Json& j) {
  Chain out;
  for (const auto& node : j) out.push_back(BitString::parse(node.get<std::string>()));
  return out;
}

Json entries_to_json(const std::vector<std::pair<Chain, int>>& entries) {
  Json out = Json::array();
  for (const auto& entry : entries) out.push_back(Json::array({chain_to_json(entry.first), entry.second}));
  return out;
}

Json profile_entries_to_json(const std::vector<std::pair<std::vector<int>, int>>& entries) {
  Json out = Json::array();
  for (const auto& entry : entries) out.push_back(Json::array({entry.first, entry.second}));
  return out;
}

std::vector<std::pair<std::vector<int>, int>> profile_entries_from_json(const Json& j) {
  std::vector<std::pair<std::vector<int>, int>> out;
  for (const auto& entry : j)
    out.emplace_back(entry.at(0).get<std::vector<int>>(), entry.at(1).get<int>());
  return out;
}

}  // namespace

Json embedding_to_json(const Embedding& embedding) {
  Json out = Json::object();
  out["depth"] = embedding.depth();
  for (const auto& entry : embedding.mapping()) out[entry.first.str()] = entry.second.str();
  return out;
}

Embedding embedding_from_json(const Json& j) {
  if (!j.is_object()) bad("an embedding must be a JSON object");
  std::map<BitString, BitString> mapping;
  int depth = -1;
  for (const auto& entry : j.items()) {
    if (entry.key() == "depth") {
      depth = entry.value().get<int>();
      continue;
    }
    mapping.emplace(BitString::parse(entry.key()), BitString::parse(entry.value().get<std::string>()));
  }
  if (depth < 0) bad("an embedding needs a nonnegative \"depth\" field");
  return Embedding(depth, std::move(mapping));
}

Json chain_coloring_to_json(const ChainColoring& coloring) {
  Json source = Json::object();
  switch (coloring.kind()) {
    case ChainColoring::Kind::Table:
      source["kind"] = "table";
      source["entries"] = entries_to_json(coloring.table_entries());
      break;
    case ChainColoring::Kind::Seeded:
      source["kind"] = "seeded";
      source["seed"] = coloring.seed();
      break;
    case ChainColoring::Kind::LengthProfileTable:
      source["kind"] = "length-profile-table";
      source["entries"] = profile_entries_to_json(coloring.profile_entries());
      break;
    case ChainColoring::Kind::LengthProfileSeeded:
      source["kind"] = "length-profile-seeded";
      source["seed"] = coloring.seed();
      break;
  }
  return Json{{"n", coloring.arity()},
              {"k", coloring.colors()},
              {"depth", coloring.depth()},
              {"source", std::move(source)}};
}

ChainColoring chain_coloring_from_json(const Json& j) {
  const int arity = j.at("n").get<int>();
  const int colors = j.at("k").get<int>();
  const int depth = j.at("depth").get<int>();
  const Json& source = j.at("source");
  const std::string kind = source.at("kind").get<std::string>();
  if (kind == "seeded")
    return ChainColoring::seeded(arity, colors, depth, source.at("seed").get<uint64_t>());
  if (kind == "length-profile-seeded")
    return ChainColoring::length_profile_seeded(arity, colors, depth,
                                                source.at("seed").get<uint64_t>());
  if (kind == "table") {
    std::vector<std::pair<Chain, int>> entries;
    for (const auto& entry : source.at("entries"))
      entries.emplace_back(chain_from_json(entry.at(0)), entry.at(1).get<int>());
    return ChainColoring::table(arity, colors, depth, std::move(entries));
  }
  if (kind == "length-profile-table")
    return ChainColoring::length_profile_table(arity, colors, depth,
                                               profile_entries_from_json(source.at("entries")));
  bad("unknown chain coloring kind \"" + kind + "\"");
}

Json tuple_coloring_to_json(const IntTupleColoring& coloring) {
  Json source = Json::object();
  if (coloring.kind() == IntTupleColoring::Kind::Seeded) {
    source["kind"] = "seeded";
    source["seed"] = coloring.seed();
  } else {
    source["kind"] = "table";
    source["entries"] = profile_entries_to_json(coloring.table_entries());
  }
  return Json{{"n", coloring.arity()},
              {"k", coloring.colors()},
              {"domain", coloring.domain()},
              {"source", std::move(source)}};
}

IntTupleColoring tuple_coloring_from_json(const Json& j) {
  const int arity = j.at("n").get<int>();
  const int colors = j.at("k").get<int>();
  const int domain = j.at("domain").get<int>();
  const Json& source = j.at("source");
  const std::string kind = source.at("kind").get<std::string>();
  if (kind == "seeded")
    return IntTupleColoring::seeded(arity, colors, domain, source.at("seed").get<uint64_t>());
  if (kind == "table")
    return IntTupleColoring::table(arity, colors, domain,
                                   profile_entries_from_json(source.at("entries")));
  bad("unknown tuple coloring kind \"" + kind + "\"");
}

Json stage_choice_to_json(const StageChoice& choice) {
  return Json{{"sigma", choice.index.str()},
              {"rho", choice.base.str()},
              {"color-code", choice.color.to_canonical_string()},
              {"witness-root", choice.witness_root.str()},
              {"class", to_string(choice.klass)}};
}

StageChoice stage_choice_from_json(const Json& j) {
  StageChoice out;
  out.index = BitString::parse(j.at("sigma").get<std::string>());
  out.base = BitString::parse(j.at("rho").get<std::string>());
  out.color = FinsetCode::from_canonical_string(j.at("color-code").get<std::string>());
  out.witness_root = BitString::parse(j.at("witness-root").get<std::string>());
  const std::string klass = j.at("class").get<std::string>();
  if (klass == "sigma-1")
    out.klass = ChoiceClass::Sigma1;
  else if (klass == "sigma-2")
    out.klass = ChoiceClass::Sigma2;
  else
    bad("unknown choice class \"" + klass + "\"");
  return out;
}

Json ledger_to_json(const ReductionLedger& ledger) {
  Json stages = Json::array();
  for (const StageChoice& choice : ledger.stages) stages.push_back(stage_choice_to_json(choice));
  return Json{{"stages", std::move(stages)}, {"jump-levels", ledger.jump_levels}};
}

ReductionLedger ledger_from_json(const Json& j) {
  ReductionLedger out;
  for (const auto& entry : j.at("stages")) out.stages.push_back(stage_choice_from_json(entry));
  out.jump_levels = j.at("jump-levels").get<int>();
  return out;
}

Json reduce_result_to_json(const ReduceResult& result) {
  return Json{{"tree", embedding_to_json(result.tree)},
              {"coloring", chain_coloring_to_json(result.coloring)},
              {"ledger", ledger_to_json(result.ledger)}};
}

Json solve_result_to_json(const SolveResult& result) {
  Json stages = Json::array();
  for (const Embedding& stage : result.stage_embeddings)
    stages.push_back(embedding_to_json(stage));
  return Json{{"color", result.color},
              {"witness", embedding_to_json(result.witness)},
              {"ledger", ledger_to_json(result.ledger)},
              {"stages", std::move(stages)}};
}

SolveResult solve_result_from_json(const Json& j) {
  SolveResult out{j.at("color").get<int>(), embedding_from_json(j.at("witness")),
                  ledger_from_json(j.at("ledger")), {}};
  for (const auto& stage : j.at("stages")) out.stage_embeddings.push_back(embedding_from_json(stage));
  return out;
}

Json rt_result_to_json(const RtResult& result) {
  return Json{{"color", result.color},
              {"homogeneous", result.homogeneous},
              {"solve", solve_result_to_json(result.solve)}};
}

Json jump_stage_to_json(const JumpStageSet& stage) {
  return Json{{"level", stage.level}, {"stage", stage.stage}, {"members", stage.members}};
}

Json program_to_json(const MachineProgram& program) {
  Json listing = Json::array();
  for (const Instr& ins : program.instructions()) {
    Json line = Json::array();
    switch (ins.op) {
      case Op::Halt:
        line = Json::array({"HALT"});
        break;
      case Op::Inc:
        line = Json::array({"INC", ins.a});
        break;
      case Op::Dec:
        line = Json::array({"DEC", ins.a});
        break;
      case Op::Jz:
        line = Json::array({"JZ", ins.a, ins.b});
        break;
      case Op::Query:
        line = Json::array({"QUERY", ins.a, ins.b});
        break;
    }
    listing.push_back(std::move(line));
  }
  return Json{{"code", program.code()}, {"instructions", std::move(listing)}};
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) bad("cannot open \"" + path + "\" for writing");
  out << dump_canonical(j);
  if (!out) bad("cannot write \"" + path + "\"");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open \"" + path + "\" for reading");
  return Json::parse(in);
}

}  // namespace treeramsey
