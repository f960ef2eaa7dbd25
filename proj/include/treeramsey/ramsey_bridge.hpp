#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "treeramsey/coloring.hpp"
#include "treeramsey/errors.hpp"
#include "treeramsey/tt_solver.hpp"

namespace treeramsey {

/// A coloring of strictly increasing arity-tuples drawn from
/// {0, ..., domain - 1}.
class IntTupleColoring {
 public:
  static IntTupleColoring seeded(int arity, int colors, int domain, uint64_t seed);
  static IntTupleColoring table(int arity, int colors, int domain,
                                std::vector<std::pair<std::vector<int>, int>> entries);

  int arity() const { return arity_; }
  int colors() const { return colors_; }
  int domain() const { return domain_; }

  int eval(const std::vector<int>& tuple) const;

  enum class Kind { Table, Seeded };
  Kind kind() const;
  uint64_t seed() const;  // seeded kind only
  std::vector<std::pair<std::vector<int>, int>> table_entries() const;

 private:
  struct Impl;
  IntTupleColoring(int arity, int colors, int domain, std::shared_ptr<const Impl> impl);

  int arity_;
  int colors_;
  int domain_;
  std::shared_ptr<const Impl> impl_;
};

/// Lifts a tuple coloring to chains by node length: a chain whose nodes have
/// lengths l_1 < ... < l_n is colored f(l_1, ..., l_n). Defined for every
/// chain of the depth-`tree_depth` tree, which requires tree_depth < domain.
ChainColoring lift_length_coloring(const IntTupleColoring& f, int tree_depth);

/// The image lengths along the witness's leftmost branch, root down to index
/// depth m - 1: an m-element strictly increasing set. Any tuple drawn from it
/// is the length profile of a chain inside the witness.
std::vector<int> extract_homogeneous_set(const Embedding& witness, int m);

/// A homogeneous set for a tuple coloring, together with the tree solve that
/// produced it.
struct RtResult {
  int color = 0;
  std::vector<int> homogeneous;
  SolveResult solve;
};

/// Finds an m-element set of {0, ..., domain - 1} all of whose arity-tuples
/// get one color: lifts f to chains, solves the tree instance at output depth
/// m - 1 over the depth-`tree_depth` host, and reads the set off the witness's
/// leftmost branch. Every tuple of the returned set is re-evaluated before
/// returning. DepthExhausted propagates from the tree solve when the host is
/// too shallow for this instance.
RtResult rt_solve(const IntTupleColoring& f, int m, int tree_depth,
                  const SolveOptions& options = {});

struct RtBruteResult {
  int color = 0;
  std::vector<int> homogeneous;
};

/// Exhaustive reference search: the lexicographically least m-element
/// homogeneous set over the full domain. Each candidate subset counts against
/// `cap` (CapExceeded beyond it); DepthExhausted when no homogeneous set of
/// this size exists.
RtBruteResult brute_force_rt(const IntTupleColoring& f, int m, uint64_t cap = 5000000);

}  // namespace treeramsey
