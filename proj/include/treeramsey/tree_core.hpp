#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace treeramsey {

/// A finite 0/1 sequence, i.e. a node of the infinite binary tree.
/// The root is the empty sequence. Nodes are ordered by the prefix partial
/// order; the canonical total order used for every "least" choice in this
/// library is (length, then lexicographic on bits).
///
/// Bits are packed into a single word with the first coordinate at the high
/// end of the used window, so same-length lexicographic comparison is integer
/// comparison. Lengths up to 64 are supported.
class BitString {
 public:
  BitString() : bits_(0), len_(0) {}

  static BitString root() { return BitString(); }

  /// Parses a string of '0'/'1' characters; the empty string is the root.
  static BitString parse(std::string_view s);

  std::string str() const;

  int length() const { return len_; }
  bool empty() const { return len_ == 0; }

  /// i-th coordinate, 0-based from the root end.
  int bit(int i) const;

  BitString child(int b) const;
  BitString parent() const;

  /// Initial segment of the given length.
  BitString prefix(int len) const;

  /// Prefix order: *this is an initial segment of other (possibly equal).
  bool is_prefix_of(const BitString& other) const;
  bool is_proper_prefix_of(const BitString& other) const;
  bool comparable_with(const BitString& other) const;

  uint64_t packed() const { return bits_; }

  friend bool operator==(const BitString& a, const BitString& b) {
    return a.len_ == b.len_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const BitString& a, const BitString& b) { return !(a == b); }

  struct Hash {
    size_t operator()(const BitString& s) const {
      uint64_t x = s.bits_ * 0x9e3779b97f4a7c15ull + static_cast<uint64_t>(s.len_);
      x ^= x >> 31;
      x *= 0xbf58476d1ce4e5b9ull;
      x ^= x >> 29;
      return static_cast<size_t>(x);
    }
  };

 private:
  uint64_t bits_;
  int len_;
};

/// Canonical total order: shorter first, then lexicographic on bits.
bool canonical_less(const BitString& a, const BitString& b);

inline bool operator<(const BitString& a, const BitString& b) {
  return canonical_less(a, b);
}

/// A strictly increasing tuple of nodes under the prefix order.
using Chain = std::vector<BitString>;

/// True iff nonempty and each node is a proper prefix of the next.
bool is_chain(const Chain& c);

/// Canonical order on chains: componentwise canonical node order,
/// with a proper prefix tuple sorting before its extensions.
bool chain_less(const Chain& a, const Chain& b);

/// A depth-bounded host tree: a set of nodes of length at most max_depth,
/// with membership materialized eagerly in canonical order. The full tree is
/// the default; arbitrary member sets are supported so that the node regions
/// produced by the reduction pipeline can be re-used as hosts.
class TruncatedTree {
 public:
  static TruncatedTree full(int max_depth);
  static TruncatedTree of_members(int max_depth, std::vector<BitString> members);
  static TruncatedTree of_predicate(int max_depth,
                                    const std::function<bool(const BitString&)>& pred);

  int max_depth() const { return max_depth_; }
  bool contains(const BitString& node) const;
  bool empty() const { return members_->empty(); }
  size_t size() const { return members_->size(); }

  /// All members in canonical order.
  const std::vector<BitString>& members() const { return *members_; }

  /// Members extending root, root itself included if present.
  std::vector<BitString> members_within(const BitString& root) const;

  /// Members properly extending the given node.
  std::vector<BitString> members_strictly_above(const BitString& node) const;

  /// True iff membership is closed under initial segments.
  bool is_prefix_closed() const;

 private:
  TruncatedTree(int max_depth, std::vector<BitString> members);

  int max_depth_;
  std::shared_ptr<const std::vector<BitString>> members_;
  std::shared_ptr<const std::unordered_set<BitString, BitString::Hash>> index_;
};

/// A full binary tree of the given depth mapped into host coordinates:
/// b is defined on every index of length <= depth, preserves the prefix
/// order in both directions, and sends the two successors of each internal
/// index to incomparable proper extensions of the parent image.
class Embedding {
 public:
  Embedding(int depth, std::map<BitString, BitString> mapping);

  static Embedding identity(int depth);

  int depth() const { return depth_; }

  const BitString& image(const BitString& index) const;
  const std::map<BitString, BitString>& mapping() const { return *map_; }

  /// All image nodes in canonical order.
  std::vector<BitString> image_nodes() const;

  int max_image_length() const { return max_image_length_; }

  std::optional<BitString> preimage(const BitString& host_node) const;

  /// Restriction to indices of length <= new_depth.
  Embedding truncated(int new_depth) const;

  friend bool operator==(const Embedding& a, const Embedding& b) {
    return a.depth_ == b.depth_ && *a.map_ == *b.map_;
  }

 private:
  int depth_;
  std::shared_ptr<const std::map<BitString, BitString>> map_;
  std::shared_ptr<const std::map<BitString, BitString>> inverse_;
  int max_image_length_;
};

/// All strictly increasing arity-tuples of host members, in canonical order
/// (lexicographic over the tuple, nodes compared canonically). When `within`
/// is given, only chains whose nodes all extend it (or equal it) are listed.
std::vector<Chain> enumerate_chains(const TruncatedTree& host, int arity,
                                    const std::optional<BitString>& within = std::nullopt);
std::vector<Chain> enumerate_chains(const Embedding& host, int arity,
                                    const std::optional<BitString>& within = std::nullopt);

/// Checks the Embedding invariants; the host variant also checks that every
/// image is a host member. Equivalent to the quadratic order-isomorphism
/// check but runs in linear time via parent/sibling relations.
bool verify_embedding(const Embedding& e);
bool verify_embedding(const Embedding& e, const TruncatedTree& host);

/// outer o inner, where inner maps into outer's index tree.
/// Throws std::invalid_argument on domain mismatch.
Embedding compose_embeddings(const Embedding& outer, const Embedding& inner);

}  // namespace treeramsey
