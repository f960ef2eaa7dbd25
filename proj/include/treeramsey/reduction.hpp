#pragma once

#include <string>
#include <utility>
#include <vector>

#include "treeramsey/coloring.hpp"
#include "treeramsey/errors.hpp"
#include "treeramsey/tree_core.hpp"

namespace treeramsey {

/// Quantifier class of a recorded stage choice. Committing to a color and a
/// witness root is a bounded rendering of a exists-forall search, so every
/// stage entry a reduction writes is Sigma2; Sigma1 is reserved for choices
/// that only ever assert an existence.
enum class ChoiceClass { Sigma1, Sigma2 };

std::string to_string(ChoiceClass c);

/// One stage of an exponent reduction: at output index `index`, starting from
/// the already-placed node `base`, the stage committed to the value `color`
/// attained at `witness_root` and placed its successors above that witness.
struct StageChoice {
  BitString index;
  BitString base;
  FinsetCode color;
  BitString witness_root;
  ChoiceClass klass = ChoiceClass::Sigma2;
};

bool operator==(const StageChoice& a, const StageChoice& b);
inline bool operator!=(const StageChoice& a, const StageChoice& b) { return !(a == b); }

/// Audit trail of one reduction step: one entry per internal output index, in
/// canonical index order, plus the oracle price of the step measured in jump
/// levels (always 2: one level to settle each stage's forall, one to pick its
/// greatest value).
struct ReductionLedger {
  std::vector<StageChoice> stages;
  int jump_levels = 0;
};

/// DepthExhausted thrown by reduce_step; carries the entries of the stages
/// that completed and the output index of the stage that ran out of tree.
class ReduceDepthExhausted : public DepthExhausted {
 public:
  ReduceDepthExhausted(const std::string& what, const BitString& failed_index,
                       ReductionLedger completed);

  const BitString& failed_index() const { return failed_index_; }
  const ReductionLedger& completed() const { return completed_; }

 private:
  BitString failed_index_;
  ReductionLedger completed_;
};

/// What select_color_and_root commits a stage to.
struct SelectResult {
  FinsetCode color;
  BitString witness_root;
};

/// Result of one exponent reduction: an embedding whose images all lie in the
/// input embedding's image, the induced coloring of its chains of the
/// next-lower arity, and the ledger of stage choices.
struct ReduceResult {
  Embedding tree;
  ChainColoring coloring;
  ReductionLedger ledger;
};

/// Stage selection above `base`: among region nodes rho strictly above `base`
/// that still have a proper extension inside the region, each rho is scored
/// with the code-least value of induced_value(ancestors, f, .) over its proper
/// region extensions; the committed color is the code-greatest score and the
/// witness root is the canonical-least rho attaining it. Every region node
/// strictly above the witness root then carries a value >= the color, and the
/// color is attained above every such node. `ancestors` must end at `base`,
/// which must belong to the region. Throws DepthExhausted when no scored node
/// exists below the truncation.
SelectResult select_color_and_root(const TruncatedTree& region, const BitString& base,
                                   const AncestorRecord& ancestors, const ChainColoring& f);

/// The canonically least pair (left, right) of incomparable region nodes
/// strictly above `parent` whose induced value equals `color` (left before
/// right, pairs ordered lexicographically). Throws DepthExhausted when no such
/// pair exists below the truncation.
std::pair<BitString, BitString> standard_subtree_successors(const TruncatedTree& region,
                                                            const BitString& parent,
                                                            const FinsetCode& color,
                                                            const AncestorRecord& ancestors,
                                                            const ChainColoring& f);

/// One exponent reduction at truncation. From a verified embedding `host` and
/// a coloring `f` of (n+1)-chains total on host's image, builds a depth-`depth`
/// embedding S with images inside host's image, the induced n-chain coloring g,
/// and the stage ledger. g is a table keyed by S's index chains in ambient
/// coordinates, defined exactly for chains whose top index is internal, and
/// satisfies exact agreement: any n-chain of S whose top is internal evaluates
/// under f, after appending any S-node strictly above its top, to the chain's
/// g value.
///
/// Stages run in canonical index order. Each stage considers candidate
/// (color, witness root) pairs in the order select_color_and_root ranks them
/// (colors code-descending, witnesses canonical-ascending) and commits to the
/// first whose committed-value nodes, strictly above the witness, still hold
/// a ladder of witnesses and incomparable pairs depth - |index| levels deep;
/// anything less cannot carry the remaining construction. The stage's two
/// successors are the least incomparable pair that can head the rest of that
/// ladder, and each successor's stage searches every committed-value node
/// above it. A stage that exhausts its candidates throws
/// ReduceDepthExhausted.
ReduceResult reduce_step(const Embedding& host, const ChainColoring& f, int depth);

}  // namespace treeramsey
