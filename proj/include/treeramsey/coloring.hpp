#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "treeramsey/tree_core.hpp"

namespace treeramsey {

/// Stateless 64-bit mixer (the splitmix64 finalizer). All seeded colorings
/// and structure codes below are built from it, so independent
/// re-implementations can reproduce every derived value bit for bit.
uint64_t mix64(uint64_t x);

/// Injective code of a single node: a leading 1 bit followed by the node's
/// bits, so distinct nodes of any length code differently. Lengths up to 63.
uint64_t node_code(const BitString& node);

/// Order-sensitive fold of node codes: acc <- mix64(acc ^ node_code(v)).
uint64_t chain_code(const Chain& chain);

/// Order-sensitive fold of nonnegative integers: acc <- mix64(acc ^ (x + 1)).
uint64_t tuple_code(const std::vector<int>& xs);

/// A finite set of (chain, color) pairs together with a canonical integer-free
/// presentation. These are the values of the colorings induced along a branch
/// during exponent reduction: the set records, for every ancestor chain, the
/// color the ambient coloring gives it when capped by a fixed node.
class FinsetCode {
 public:
  using Pair = std::pair<Chain, int>;

  FinsetCode() = default;
  static FinsetCode of_pairs(std::vector<Pair> pairs);

  const std::vector<Pair>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }

  /// Compact JSON text `[[["node",...],color],...]`; equal sets produce equal
  /// strings, so this doubles as a serialization key.
  std::string to_canonical_string() const;
  static FinsetCode from_canonical_string(const std::string& s);

  friend bool operator==(const FinsetCode& a, const FinsetCode& b) {
    return a.pairs_ == b.pairs_;
  }
  friend bool operator!=(const FinsetCode& a, const FinsetCode& b) { return !(a == b); }

 private:
  std::vector<Pair> pairs_;
};

/// Total order on codes: fewer pairs first, then pairwise (chain, color)
/// comparison with chains ordered canonically. "Greater value" in the
/// reduction's color selection always means greater in this order.
bool code_less(const FinsetCode& a, const FinsetCode& b);

struct CodeLess {
  bool operator()(const FinsetCode& a, const FinsetCode& b) const { return code_less(a, b); }
};

/// The nodes chosen at stages below the current one, i.e. the bases rho_tau
/// for tau an initial segment of the current stage index. Must be strictly
/// increasing in the prefix order; entry 0 is the base of the root stage.
class AncestorRecord {
 public:
  AncestorRecord() = default;
  explicit AncestorRecord(std::vector<BitString> nodes);

  AncestorRecord push(const BitString& node) const;

  const std::vector<BitString>& nodes() const { return nodes_; }
  size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  const BitString& back() const { return nodes_.back(); }

 private:
  std::vector<BitString> nodes_;
};

/// A k-coloring of the arity-n chains of a depth-bounded tree. Backends:
///   table            explicit chain -> color map (fails on missing chains)
///   seeded           color = mix64(seed ^ chain_code(chain)) % k
///   profile table    color depends only on the tuple of node lengths
///   profile seeded   color = mix64(seed ^ tuple_code(lengths)) % k
/// Values are validated: eval rejects non-chains, wrong arity, and nodes
/// deeper than the stated depth.
class ChainColoring {
 public:
  static ChainColoring seeded(int arity, int colors, int depth, uint64_t seed);
  static ChainColoring table(int arity, int colors, int depth,
                             std::vector<std::pair<Chain, int>> entries);
  static ChainColoring length_profile_seeded(int arity, int colors, int depth, uint64_t seed);
  static ChainColoring length_profile_table(int arity, int colors, int depth,
                                            std::vector<std::pair<std::vector<int>, int>> entries);
  /// Every chain gets the same color.
  static ChainColoring constant(int arity, int colors, int depth, int color);

  int arity() const { return arity_; }
  int colors() const { return colors_; }
  int depth() const { return depth_; }

  int eval(const Chain& chain) const;

  enum class Kind { Table, Seeded, LengthProfileTable, LengthProfileSeeded };
  Kind kind() const;
  uint64_t seed() const;  // seeded kinds only
  std::vector<std::pair<Chain, int>> table_entries() const;
  std::vector<std::pair<std::vector<int>, int>> profile_entries() const;

 private:
  struct Impl;
  ChainColoring(int arity, int colors, int depth, std::shared_ptr<const Impl> impl);

  int arity_;
  int colors_;
  int depth_;
  std::shared_ptr<const Impl> impl_;
};

/// The value of the induced lower-arity coloring at tau, relative to the
/// ancestor bases P and the ambient coloring f: the set of pairs
/// (m, f(m ^ tau)) over all chains m drawn from P. When P has fewer than
/// arity(f) - 1 nodes the set is empty. tau must properly extend the last
/// ancestor base.
FinsetCode induced_value(const AncestorRecord& ancestors, const ChainColoring& f,
                         const BitString& tau);

}  // namespace treeramsey
