#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "treeramsey/coloring.hpp"
#include "treeramsey/errors.hpp"
#include "treeramsey/reduction.hpp"
#include "treeramsey/tree_core.hpp"

namespace treeramsey {

/// Solver knobs. When stage_depths is set it fixes the output depth of each
/// reduction step, outermost first, and must hold exactly arity - 1 entries;
/// when unset, step i (0-based) reduces to depth `depth + arity - i`, so each
/// truncated intermediate tree is exactly as deep as the next step's output
/// and the last one is one level deeper than the final search needs.
struct SolveOptions {
  std::optional<std::vector<int>> stage_depths;
};

/// A solved instance: the color everything came out in, the monochromatic
/// embedding (images inside the original host), the concatenated ledger of
/// every reduction step, and each step's output embedding in ambient
/// coordinates, outermost first.
struct SolveResult {
  int color = 0;
  Embedding witness;
  ReductionLedger ledger;
  std::vector<Embedding> stage_embeddings;
};

/// Solver for colorings of single nodes. Finds a color c and a depth-`depth`
/// embedding into `host` all of whose images evaluate to c; colors are tried
/// by descending frequency over the host's images (ties to the smaller
/// color), and the embedding returned is the canonically least one for the
/// first color that admits any. Complete: throws DepthExhausted only when no
/// color admits such an embedding in the host.
SolveResult tt1_solve(const Embedding& host, const ChainColoring& f, int depth);

/// Iterated solver for colorings of n-chains: runs n - 1 reduction steps,
/// truncating each step's output tree one level below that step's depth so
/// the induced coloring is total on it, then solves the resulting coloring of
/// single nodes at depth `depth`. The witness embedding is monochromatic for
/// f on every chain extendable inside it, jump_levels in the ledger totals
/// 2(n - 1), and stage_embeddings holds each reduction's output.
SolveResult tt_solve(const ChainColoring& f, int host_depth, int depth,
                     const SolveOptions& options = {});

/// True when every arity(f)-chain drawn from the embedding's images
/// evaluates to `color`.
bool verify_monochromatic(const Embedding& witness, const ChainColoring& f, int color);

/// Exhaustive reference solver over the full depth-`host_depth` tree: for
/// each color, depth-first search in index order (children of an index node
/// placed in canonical order, left image below right) finds the canonically
/// least monochromatic embedding of depth `depth`; the result is the least
/// witness across colors by image sequence, ties to the smaller color. Every
/// node placement attempt and every completed embedding counts against `cap`;
/// exceeding it throws CapExceeded. Throws DepthExhausted when no color
/// admits an embedding. When chains of the coloring's arity cannot occur at
/// this depth, the least embedding with color 0 is returned.
SolveResult brute_force_tt(const ChainColoring& f, int host_depth, int depth,
                           uint64_t cap = 5000000);

}  // namespace treeramsey
