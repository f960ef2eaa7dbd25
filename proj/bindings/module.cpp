// Python bindings. Structured values cross the boundary as canonical JSON
// strings so the python surface stays in lockstep with the CLI file formats.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treeramsey/coloring.hpp"
#include "treeramsey/errors.hpp"
#include "treeramsey/json_io.hpp"
#include "treeramsey/jump_lab.hpp"
#include "treeramsey/ramsey_bridge.hpp"
#include "treeramsey/reduction.hpp"
#include "treeramsey/tree_core.hpp"
#include "treeramsey/tt_solver.hpp"

namespace py = pybind11;
namespace tr = treeramsey;

namespace {

std::string dumps(const tr::Json& j) { return tr::dump_canonical(j); }

tr::Json loads(const std::string& text) { return tr::Json::parse(text); }

tr::ChainColoring chain_coloring(const std::string& json) {
  return tr::chain_coloring_from_json(loads(json));
}

tr::IntTupleColoring tuple_coloring(const std::string& json) {
  return tr::tuple_coloring_from_json(loads(json));
}

tr::Chain parse_chain(const std::vector<std::string>& nodes) {
  tr::Chain chain;
  chain.reserve(nodes.size());
  for (const std::string& node : nodes) chain.push_back(tr::BitString::parse(node));
  return chain;
}

tr::SolveOptions solve_options(const std::optional<std::vector<int>>& stage_depths) {
  tr::SolveOptions options;
  if (stage_depths) options.stage_depths = *stage_depths;
  return options;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite tree Ramsey solving with a Ramsey bridge and a jump laboratory";

  py::register_exception<tr::DepthExhausted>(m, "DepthExhausted");
  py::register_exception<tr::CapExceeded>(m, "CapExceeded");

  m.def("mix64", &tr::mix64, py::arg("x"), "the 64-bit mixing finalizer behind every seeded coloring");
  m.def(
      "node_code", [](const std::string& node) { return tr::node_code(tr::BitString::parse(node)); },
      py::arg("node"), "injective code of one tree node given as a 0/1 string");
  m.def(
      "chain_code", [](const std::vector<std::string>& nodes) { return tr::chain_code(parse_chain(nodes)); },
      py::arg("nodes"), "order-sensitive code of a chain of 0/1 strings");
  m.def(
      "tuple_code", [](const std::vector<int>& xs) { return tr::tuple_code(xs); }, py::arg("xs"),
      "order-sensitive code of a tuple of nonnegative integers");

  m.def(
      "gen_chain_coloring",
      [](int arity, int colors, int depth, uint64_t seed, bool profile) {
        return dumps(tr::chain_coloring_to_json(
            profile ? tr::ChainColoring::length_profile_seeded(arity, colors, depth, seed)
                    : tr::ChainColoring::seeded(arity, colors, depth, seed)));
      },
      py::arg("arity"), py::arg("colors"), py::arg("depth"), py::arg("seed"),
      py::arg("profile") = false, "seeded chain coloring as canonical JSON");
  m.def(
      "gen_tuple_coloring",
      [](int arity, int colors, int domain, uint64_t seed) {
        return dumps(tr::tuple_coloring_to_json(tr::IntTupleColoring::seeded(arity, colors, domain, seed)));
      },
      py::arg("arity"), py::arg("colors"), py::arg("domain"), py::arg("seed"),
      "seeded integer tuple coloring as canonical JSON");

  m.def(
      "eval_chain",
      [](const std::string& coloring, const std::vector<std::string>& nodes) {
        return chain_coloring(coloring).eval(parse_chain(nodes));
      },
      py::arg("coloring"), py::arg("nodes"), "color of a chain under a chain-coloring JSON");
  m.def(
      "eval_tuple",
      [](const std::string& coloring, const std::vector<int>& xs) {
        return tuple_coloring(coloring).eval(xs);
      },
      py::arg("coloring"), py::arg("xs"), "color of a tuple under a tuple-coloring JSON");

  m.def(
      "reduce_step",
      [](const std::string& coloring, int host_depth, int target_depth) {
        return dumps(tr::reduce_result_to_json(
            tr::reduce_step(tr::Embedding::identity(host_depth), chain_coloring(coloring), target_depth)));
      },
      py::arg("coloring"), py::arg("host_depth"), py::arg("target_depth"),
      "one exponent-reduction stage over an identity host, as JSON");
  m.def(
      "tt_solve",
      [](const std::string& coloring, int depth, int target_depth,
         const std::optional<std::vector<int>>& stage_depths) {
        return dumps(tr::solve_result_to_json(
            tr::tt_solve(chain_coloring(coloring), depth, target_depth, solve_options(stage_depths))));
      },
      py::arg("coloring"), py::arg("depth"), py::arg("target_depth"),
      py::arg("stage_depths") = py::none(),
      "monochromatic subtree for a chain coloring, as solve-result JSON");
  m.def(
      "rt_solve",
      [](const std::string& coloring, int set_size, int depth,
         const std::optional<std::vector<int>>& stage_depths) {
        return dumps(tr::rt_result_to_json(
            tr::rt_solve(tuple_coloring(coloring), set_size, depth, solve_options(stage_depths))));
      },
      py::arg("coloring"), py::arg("set_size"), py::arg("depth"),
      py::arg("stage_depths") = py::none(),
      "homogeneous set for a tuple coloring via the tree lift, as JSON");
  m.def(
      "verify_solve",
      [](const std::string& coloring, const std::string& solve_result) {
        const tr::SolveResult solved = tr::solve_result_from_json(loads(solve_result));
        return tr::verify_embedding(solved.witness) &&
               tr::verify_monochromatic(solved.witness, chain_coloring(coloring), solved.color);
      },
      py::arg("coloring"), py::arg("solve_result"),
      "check a solve-result JSON against its coloring");
  m.def(
      "ledger_jump_cost",
      [](const std::string& solve_result) {
        return tr::ledger_jump_cost(tr::solve_result_from_json(loads(solve_result)));
      },
      py::arg("solve_result"), "oracle-jump levels recorded in a solve-result JSON");

  m.def(
      "jump_approx",
      [](uint64_t horizon, uint64_t stage, int levels, const std::optional<std::vector<uint64_t>>& members,
         const std::string& set_name) {
        tr::OracleApprox base = tr::OracleApprox::empty(horizon);
        if (set_name == "evens") {
          base = tr::OracleApprox::evens(horizon);
        } else if (members) {
          base = tr::OracleApprox::of_members(horizon, *members);
        }
        if (levels == 0) {
          return dumps(tr::jump_stage_to_json(tr::JumpStageSet{0, stage, base.members()}));
        }
        return dumps(tr::jump_stage_to_json(tr::iter_jump_stage(base, stage, levels).back()));
      },
      py::arg("horizon"), py::arg("stage"), py::arg("levels") = 1, py::arg("members") = py::none(),
      py::arg("set_name") = "empty", "a finite stage of the iterated jump, as JSON");
  m.def(
      "run_program",
      [](uint64_t code, uint64_t horizon, const std::vector<uint64_t>& members, uint64_t input,
         uint64_t bound) {
        switch (tr::step_run(tr::MachineProgram::decode(code), tr::OracleApprox::of_members(horizon, members),
                             input, bound)) {
          case tr::RunStatus::Halted:
            return "halted";
          case tr::RunStatus::Running:
            return "running";
          default:
            return "oracle-insufficient";
        }
      },
      py::arg("code"), py::arg("horizon"), py::arg("members"), py::arg("input"), py::arg("bound"),
      "status of one oracle-machine run under a step and query bound");
  m.def(
      "program_instructions",
      [](uint64_t code) { return dumps(tr::program_to_json(tr::MachineProgram::decode(code))); },
      py::arg("code"), "decoded instruction listing of a program code, as JSON");
  m.def("cantor_pair", &tr::cantor_pair, py::arg("a"), py::arg("b"));
  m.def(
      "cantor_unpair",
      [](uint64_t z) {
        const auto [a, b] = tr::cantor_unpair(z);
        return py::make_tuple(a, b);
      },
      py::arg("z"));
}
