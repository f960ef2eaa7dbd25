// treeramsey: finite tree Ramsey solving, Ramsey-via-trees, and jump-stage
// approximation with reproducible JSON input and output.
//
// Exit codes: 0 success, 2 when a search runs out of tree depth, 1 for any
// other failure (bad arguments, malformed input, verification mismatch).

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "treeramsey/errors.hpp"
#include "treeramsey/json_io.hpp"
#include "treeramsey/jump_lab.hpp"
#include "treeramsey/ramsey_bridge.hpp"
#include "treeramsey/reduction.hpp"
#include "treeramsey/tt_solver.hpp"

namespace tr = treeramsey;

namespace {

// Write to --out when given, otherwise to standard output; both paths go
// through the same canonical serialization so reruns are byte-identical.
void emit(const tr::Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << tr::dump_canonical(j);
  } else {
    tr::write_json_file(out_path, j);
  }
}

struct TtSolveOpts {
  std::string coloring_path;
  int depth = 0;
  int target_depth = 0;
  std::vector<int> stage_depths;
  std::string out_path;
  std::string ledger_path;
};

void run_tt_solve(const TtSolveOpts& opts) {
  auto f = tr::chain_coloring_from_json(tr::read_json_file(opts.coloring_path));
  tr::SolveOptions options;
  if (!opts.stage_depths.empty()) options.stage_depths = opts.stage_depths;
  auto result = tr::tt_solve(f, opts.depth, opts.target_depth, options);
  if (!opts.ledger_path.empty()) {
    tr::write_json_file(opts.ledger_path, tr::ledger_to_json(result.ledger));
  }
  emit(tr::solve_result_to_json(result), opts.out_path);
}

void add_tt(CLI::App& app) {
  auto* tt = app.add_subcommand("tt", "solve tree Ramsey instances");
  tt->require_subcommand(1);
  auto opts = std::make_shared<TtSolveOpts>();
  auto* solve = tt->add_subcommand(
      "solve", "find a monochromatic depth-d subtree for a chain coloring");
  solve->add_option("--coloring", opts->coloring_path,
                    "chain coloring JSON file")
      ->required();
  solve->add_option("--depth", opts->depth, "host tree depth D")->required();
  solve->add_option("--target-depth", opts->target_depth,
                    "depth d of the requested witness")
      ->required();
  solve->add_option("--stage-depths", opts->stage_depths,
                    "override the per-stage output depths of the pipeline");
  solve->add_option("--out", opts->out_path, "write the solve result here");
  solve->add_option("--ledger", opts->ledger_path,
                    "also write the reduction ledger to this file");
  solve->callback([opts] { run_tt_solve(*opts); });
}

struct RtSolveOpts {
  std::string coloring_path;
  int set_size = 0;
  int depth = 0;
  std::vector<int> stage_depths;
  std::string out_path;
  std::string ledger_path;
};

void run_rt_solve(const RtSolveOpts& opts) {
  auto f = tr::tuple_coloring_from_json(tr::read_json_file(opts.coloring_path));
  tr::SolveOptions options;
  if (!opts.stage_depths.empty()) options.stage_depths = opts.stage_depths;
  auto result = tr::rt_solve(f, opts.set_size, opts.depth, options);
  if (!opts.ledger_path.empty()) {
    tr::write_json_file(opts.ledger_path,
                        tr::ledger_to_json(result.solve.ledger));
  }
  emit(tr::rt_result_to_json(result), opts.out_path);
}

void add_rt(CLI::App& app) {
  auto* rt = app.add_subcommand("rt", "solve classical Ramsey instances");
  rt->require_subcommand(1);
  auto opts = std::make_shared<RtSolveOpts>();
  auto* solve = rt->add_subcommand(
      "solve", "find a homogeneous set by lifting the coloring to the tree");
  solve->add_option("--coloring", opts->coloring_path,
                    "integer tuple coloring JSON file")
      ->required();
  solve->add_option("--set-size", opts->set_size,
                    "requested homogeneous set size m")
      ->required();
  solve->add_option("--depth", opts->depth, "tree depth D used for the lift")
      ->required();
  solve->add_option("--stage-depths", opts->stage_depths,
                    "override the per-stage output depths of the pipeline");
  solve->add_option("--out", opts->out_path, "write the result here");
  solve->add_option("--ledger", opts->ledger_path,
                    "also write the reduction ledger to this file");
  solve->callback([opts] { run_rt_solve(*opts); });
}

struct ReduceStepOpts {
  std::string coloring_path;
  std::string host_path;
  int depth = -1;
  int target_depth = 0;
  std::string out_path;
  std::string ledger_path;
};

void run_reduce_step(const ReduceStepOpts& opts) {
  if (opts.host_path.empty() == (opts.depth < 0)) {
    throw std::invalid_argument(
        "give either --depth for an identity host or --host with an "
        "embedding file, not both");
  }
  tr::Embedding host =
      opts.host_path.empty()
          ? tr::Embedding::identity(opts.depth)
          : tr::embedding_from_json(tr::read_json_file(opts.host_path));
  auto f = tr::chain_coloring_from_json(tr::read_json_file(opts.coloring_path));
  auto result = tr::reduce_step(host, f, opts.target_depth);
  if (!opts.ledger_path.empty()) {
    tr::write_json_file(opts.ledger_path, tr::ledger_to_json(result.ledger));
  }
  emit(tr::reduce_result_to_json(result), opts.out_path);
}

void add_reduce(CLI::App& app) {
  auto* reduce =
      app.add_subcommand("reduce", "run one exponent-reduction stage");
  reduce->require_subcommand(1);
  auto opts = std::make_shared<ReduceStepOpts>();
  auto* step = reduce->add_subcommand(
      "step",
      "reduce an arity-n coloring to arity n-1 on a standard subtree");
  step->add_option("--coloring", opts->coloring_path,
                   "chain coloring JSON file")
      ->required();
  step->add_option("--host", opts->host_path,
                   "host embedding JSON file (defaults to the identity)");
  step->add_option("--depth", opts->depth,
                   "identity host depth when --host is absent");
  step->add_option("--target-depth", opts->target_depth,
                   "depth of the reduced output tree")
      ->required();
  step->add_option("--out", opts->out_path, "write the reduce result here");
  step->add_option("--ledger", opts->ledger_path,
                   "also write the stage ledger to this file");
  step->callback([opts] { run_reduce_step(*opts); });
}

struct VerifyOpts {
  std::string coloring_path;
  std::string witness_path;
  std::string result_path;
  int color = 0;
  bool color_given = false;
  std::string out_path;
};

void run_verify(const VerifyOpts& opts, int& exit_code) {
  if (opts.witness_path.empty() == opts.result_path.empty()) {
    throw std::invalid_argument(
        "give exactly one of --witness (embedding file) or --result "
        "(solve result file)");
  }
  auto f = tr::chain_coloring_from_json(tr::read_json_file(opts.coloring_path));
  tr::Embedding witness = tr::Embedding::identity(0);
  std::optional<int> expected;
  if (!opts.result_path.empty()) {
    auto solved = tr::solve_result_from_json(tr::read_json_file(opts.result_path));
    witness = solved.witness;
    expected = solved.color;
  } else {
    witness = tr::embedding_from_json(tr::read_json_file(opts.witness_path));
  }
  if (opts.color_given) expected = opts.color;

  bool embedding_ok = tr::verify_embedding(witness);
  bool monochromatic = false;
  int color = expected.value_or(0);
  if (embedding_ok) {
    if (!expected) {
      auto chains = tr::enumerate_chains(witness, f.arity());
      if (!chains.empty()) color = f.eval(chains.front());
    }
    monochromatic = tr::verify_monochromatic(witness, f, color);
  }

  tr::Json report{{"embedding-valid", embedding_ok},
                  {"monochromatic", monochromatic},
                  {"color", color}};
  emit(report, opts.out_path);
  if (!embedding_ok || !monochromatic) exit_code = 1;
}

void add_verify(CLI::App& app, int& exit_code) {
  auto opts = std::make_shared<VerifyOpts>();
  auto* verify = app.add_subcommand(
      "verify", "check that a witness is a monochromatic embedding");
  verify->add_option("--coloring", opts->coloring_path,
                     "chain coloring JSON file")
      ->required();
  verify->add_option("--witness", opts->witness_path, "embedding JSON file");
  verify->add_option("--result", opts->result_path,
                     "solve result JSON file (witness and color)");
  auto* color_opt = verify->add_option(
      "--color", opts->color, "expected color (otherwise inferred)");
  verify->add_option("--out", opts->out_path, "write the report here");
  verify->callback([opts, color_opt, &exit_code] {
    opts->color_given = color_opt->count() > 0;
    run_verify(*opts, exit_code);
  });
}

struct JumpApproxOpts {
  std::string set_name = "empty";
  uint64_t horizon = 0;
  std::vector<uint64_t> members;
  uint64_t stage = 0;
  int levels = 1;
  std::string out_path;
};

void run_jump_approx(const JumpApproxOpts& opts) {
  tr::OracleApprox base = tr::OracleApprox::empty(opts.horizon);
  if (opts.set_name == "evens") {
    base = tr::OracleApprox::evens(opts.horizon);
  } else if (opts.set_name == "members") {
    base = tr::OracleApprox::of_members(opts.horizon, opts.members);
  } else if (!opts.members.empty()) {
    throw std::invalid_argument("--members needs --set members");
  }
  if (opts.levels == 0) {
    tr::JumpStageSet view{0, opts.stage, base.members()};
    emit(tr::jump_stage_to_json(view), opts.out_path);
    return;
  }
  auto stages = tr::iter_jump_stage(base, opts.stage, opts.levels);
  emit(tr::jump_stage_to_json(stages.back()), opts.out_path);
}

void add_jump(CLI::App& app) {
  auto* jump = app.add_subcommand("jump", "halting-set stage approximation");
  jump->require_subcommand(1);
  auto opts = std::make_shared<JumpApproxOpts>();
  auto* approx = jump->add_subcommand(
      "approx", "compute a finite stage of the iterated jump of a base set");
  approx->add_option("--set", opts->set_name, "base set: empty, evens, members")
      ->check(CLI::IsMember({"empty", "evens", "members"}));
  approx->add_option("--horizon", opts->horizon,
                     "how far the base set is known")
      ->required();
  approx->add_option("--members", opts->members,
                     "explicit base-set members (with --set members)");
  approx->add_option("--stage", opts->stage, "stage bound s")->required();
  approx->add_option("--levels", opts->levels,
                     "how many jumps to iterate (0 returns the base view)")
      ->check(CLI::Range(0, 64));
  approx->add_option("--out", opts->out_path, "write the stage set here");
  approx->callback([opts] { run_jump_approx(*opts); });
}

struct GenColoringOpts {
  std::string kind = "chain";
  int arity = 2;
  int colors = 2;
  int depth = -1;
  int domain = -1;
  uint64_t seed = 0;
  bool profile = false;
  std::string out_path;
};

void run_gen_coloring(const GenColoringOpts& opts) {
  if (opts.kind == "chain") {
    if (opts.depth < 0) throw std::invalid_argument("chain colorings need --depth");
    auto c = opts.profile
                 ? tr::ChainColoring::length_profile_seeded(
                       opts.arity, opts.colors, opts.depth, opts.seed)
                 : tr::ChainColoring::seeded(opts.arity, opts.colors,
                                             opts.depth, opts.seed);
    emit(tr::chain_coloring_to_json(c), opts.out_path);
  } else {
    if (opts.domain < 0) throw std::invalid_argument("tuple colorings need --domain");
    if (opts.profile) {
      throw std::invalid_argument("--profile only applies to chain colorings");
    }
    auto c = tr::IntTupleColoring::seeded(opts.arity, opts.colors, opts.domain,
                                          opts.seed);
    emit(tr::tuple_coloring_to_json(c), opts.out_path);
  }
}

void add_gen(CLI::App& app) {
  auto* gen = app.add_subcommand("gen", "generate reproducible inputs");
  gen->require_subcommand(1);
  auto opts = std::make_shared<GenColoringOpts>();
  auto* coloring =
      gen->add_subcommand("coloring", "emit a seeded coloring JSON file");
  coloring->add_option("--kind", opts->kind, "chain or tuple coloring")
      ->check(CLI::IsMember({"chain", "tuple"}));
  coloring->add_option("--arity", opts->arity, "chain / tuple length n")
      ->required();
  coloring->add_option("--colors", opts->colors, "number of colors k")
      ->required();
  coloring->add_option("--depth", opts->depth,
                       "tree depth covered (chain colorings)");
  coloring->add_option("--domain", opts->domain,
                       "integer domain bound N (tuple colorings)");
  coloring->add_option("--seed", opts->seed, "generator seed")->required();
  coloring->add_flag("--profile", opts->profile,
                     "color by length profile only (chain colorings)");
  coloring->add_option("--out", opts->out_path, "write the coloring here");
  coloring->callback([opts] { run_gen_coloring(*opts); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite tree Ramsey solver and jump laboratory"};
  app.require_subcommand(1);
  int exit_code = 0;

  add_tt(app);
  add_rt(app);
  add_reduce(app);
  add_verify(app, exit_code);
  add_jump(app);
  add_gen(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const tr::DepthExhausted& e) {
    std::cerr << "depth exhausted: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
