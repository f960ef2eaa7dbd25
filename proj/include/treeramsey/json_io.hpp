#pragma once

#include <string>

#include "json.hpp"
#include "treeramsey/jump_lab.hpp"
#include "treeramsey/ramsey_bridge.hpp"
#include "treeramsey/reduction.hpp"
#include "treeramsey/tt_solver.hpp"

namespace treeramsey {

using Json = nlohmann::json;

/// Embeddings serialize flat: a "depth" field plus one field per index node
/// (the root index is the empty key), each holding the image's bit string.
Json embedding_to_json(const Embedding& embedding);
Embedding embedding_from_json(const Json& j);

/// Chain colorings carry {"n", "k", "depth", "source"}; the source object
/// holds the kind plus either a seed or the table/profile entries.
Json chain_coloring_to_json(const ChainColoring& coloring);
ChainColoring chain_coloring_from_json(const Json& j);

/// Tuple colorings carry {"n", "k", "domain", "source"}.
Json tuple_coloring_to_json(const IntTupleColoring& coloring);
IntTupleColoring tuple_coloring_from_json(const Json& j);

Json stage_choice_to_json(const StageChoice& choice);
StageChoice stage_choice_from_json(const Json& j);

Json ledger_to_json(const ReductionLedger& ledger);
ReductionLedger ledger_from_json(const Json& j);

Json reduce_result_to_json(const ReduceResult& result);

Json solve_result_to_json(const SolveResult& result);
SolveResult solve_result_from_json(const Json& j);

Json rt_result_to_json(const RtResult& result);

Json jump_stage_to_json(const JumpStageSet& stage);

Json program_to_json(const MachineProgram& program);

/// Two spaces of indentation, object keys in sorted order, trailing newline:
/// equal values always dump to identical bytes.
std::string dump_canonical(const Json& j);

void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

}  // namespace treeramsey
