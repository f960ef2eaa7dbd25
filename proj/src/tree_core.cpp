#include "treeramsey/tree_core.hpp"

#include <algorithm>
#include <stdexcept>

namespace treeramsey {

namespace {

constexpr int kMaxLength = 64;
constexpr int kMaxFullDepth = 20;
constexpr int kMaxEmbeddingDepth = 18;

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

BitString BitString::parse(std::string_view s) {
  if (s.size() > kMaxLength) bad("bit string longer than 64");
  BitString out;
  for (char ch : s) {
    if (ch == '0')
      out = out.child(0);
    else if (ch == '1')
      out = out.child(1);
    else
      bad("bit string may contain only '0' and '1'");
  }
  return out;
}

std::string BitString::str() const {
  std::string out;
  out.reserve(static_cast<size_t>(len_));
  for (int i = 0; i < len_; ++i) out.push_back(bit(i) ? '1' : '0');
  return out;
}

int BitString::bit(int i) const {
  if (i < 0 || i >= len_) bad("bit index out of range");
  return static_cast<int>((bits_ >> (len_ - 1 - i)) & 1u);
}

BitString BitString::child(int b) const {
  if (b != 0 && b != 1) bad("child selector must be 0 or 1");
  if (len_ >= kMaxLength) bad("bit string longer than 64");
  BitString out;
  out.bits_ = (bits_ << 1) | static_cast<uint64_t>(b);
  out.len_ = len_ + 1;
  return out;
}

BitString BitString::parent() const {
  if (len_ == 0) bad("the root has no parent");
  BitString out;
  out.bits_ = bits_ >> 1;
  out.len_ = len_ - 1;
  return out;
}

BitString BitString::prefix(int len) const {
  if (len < 0 || len > len_) bad("prefix length out of range");
  BitString out;
  out.bits_ = len == 0 ? 0 : (bits_ >> (len_ - len));
  out.len_ = len;
  return out;
}

bool BitString::is_prefix_of(const BitString& other) const {
  if (len_ > other.len_) return false;
  if (len_ == 0) return true;
  return (other.bits_ >> (other.len_ - len_)) == bits_;
}

bool BitString::is_proper_prefix_of(const BitString& other) const {
  return len_ < other.len_ && is_prefix_of(other);
}

bool BitString::comparable_with(const BitString& other) const {
  return is_prefix_of(other) || other.is_prefix_of(*this);
}

bool canonical_less(const BitString& a, const BitString& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.packed() < b.packed();
}

bool is_chain(const Chain& c) {
  if (c.empty()) return false;
  for (size_t i = 0; i + 1 < c.size(); ++i)
    if (!c[i].is_proper_prefix_of(c[i + 1])) return false;
  return true;
}

bool chain_less(const Chain& a, const Chain& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return canonical_less(a[i], b[i]);
  }
  return a.size() < b.size();
}

TruncatedTree::TruncatedTree(int max_depth, std::vector<BitString> members) : max_depth_(max_depth) {
  if (max_depth < 0) bad("tree depth must be nonnegative");
  std::sort(members.begin(), members.end(), canonical_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (const auto& m : members)
    if (m.length() > max_depth) bad("tree member deeper than the stated depth");
  auto index = std::make_shared<std::unordered_set<BitString, BitString::Hash>>(members.begin(),
                                                                                members.end());
  members_ = std::make_shared<const std::vector<BitString>>(std::move(members));
  index_ = std::move(index);
}

TruncatedTree TruncatedTree::full(int max_depth) {
  if (max_depth < 0) bad("tree depth must be nonnegative");
  if (max_depth > kMaxFullDepth) bad("full tree deeper than 20 is not materialized");
  std::vector<BitString> members;
  members.reserve((size_t{2} << max_depth) - 1);
  members.push_back(BitString::root());
  for (size_t i = 0; i < members.size(); ++i) {
    BitString m = members[i];
    if (m.length() < max_depth) {
      members.push_back(m.child(0));
      members.push_back(m.child(1));
    }
  }
  return TruncatedTree(max_depth, std::move(members));
}

TruncatedTree TruncatedTree::of_members(int max_depth, std::vector<BitString> members) {
  return TruncatedTree(max_depth, std::move(members));
}

TruncatedTree TruncatedTree::of_predicate(int max_depth,
                                          const std::function<bool(const BitString&)>& pred) {
  TruncatedTree all = full(max_depth);
  std::vector<BitString> kept;
  for (const auto& m : all.members())
    if (pred(m)) kept.push_back(m);
  return TruncatedTree(max_depth, std::move(kept));
}

bool TruncatedTree::contains(const BitString& node) const { return index_->count(node) > 0; }

std::vector<BitString> TruncatedTree::members_within(const BitString& root) const {
  std::vector<BitString> out;
  for (const auto& m : *members_)
    if (root.is_prefix_of(m)) out.push_back(m);
  return out;
}

std::vector<BitString> TruncatedTree::members_strictly_above(const BitString& node) const {
  std::vector<BitString> out;
  for (const auto& m : *members_)
    if (node.is_proper_prefix_of(m)) out.push_back(m);
  return out;
}

bool TruncatedTree::is_prefix_closed() const {
  for (const auto& m : *members_)
    if (!m.empty() && !contains(m.parent())) return false;
  return true;
}

Embedding::Embedding(int depth, std::map<BitString, BitString> mapping) : depth_(depth) {
  if (depth < 0) bad("embedding depth must be nonnegative");
  if (depth > kMaxEmbeddingDepth) bad("embedding deeper than 18 is not materialized");
  size_t expected = (size_t{2} << depth) - 1;
  if (mapping.size() != expected) bad("embedding must be defined on every index of the stated depth");
  auto inverse = std::make_shared<std::map<BitString, BitString>>();
  int max_len = 0;
  for (const auto& [idx, img] : mapping) {
    if (idx.length() > depth) bad("embedding index deeper than the stated depth");
    if (!inverse->emplace(img, idx).second) bad("embedding images must be distinct");
    max_len = std::max(max_len, img.length());
  }
  map_ = std::make_shared<const std::map<BitString, BitString>>(std::move(mapping));
  inverse_ = std::move(inverse);
  max_image_length_ = max_len;
}

Embedding Embedding::identity(int depth) {
  const TruncatedTree tree = TruncatedTree::full(depth);
  std::map<BitString, BitString> mapping;
  for (const auto& m : tree.members()) mapping.emplace(m, m);
  return Embedding(depth, std::move(mapping));
}

const BitString& Embedding::image(const BitString& index) const {
  auto it = map_->find(index);
  if (it == map_->end()) bad("index outside the embedding's domain: " + index.str());
  return it->second;
}

std::vector<BitString> Embedding::image_nodes() const {
  std::vector<BitString> out;
  out.reserve(map_->size());
  for (const auto& [img, idx] : *inverse_) out.push_back(img);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::optional<BitString> Embedding::preimage(const BitString& host_node) const {
  auto it = inverse_->find(host_node);
  if (it == inverse_->end()) return std::nullopt;
  return it->second;
}

Embedding Embedding::truncated(int new_depth) const {
  if (new_depth < 0 || new_depth > depth_) bad("truncation depth out of range");
  std::map<BitString, BitString> mapping;
  for (const auto& [idx, img] : *map_)
    if (idx.length() <= new_depth) mapping.emplace(idx, img);
  return Embedding(new_depth, std::move(mapping));
}

namespace {

template <typename Members>
std::vector<Chain> enumerate_chains_over(const Members& sorted_members, int arity,
                                         const std::optional<BitString>& within) {
  if (arity <= 0) bad("chain arity must be positive");
  std::vector<BitString> pool;
  for (const auto& m : sorted_members)
    if (!within || within->is_prefix_of(m)) pool.push_back(m);

  std::vector<Chain> out;
  Chain cur;
  // Depth-first over canonical positions; extensions of the current top are
  // always later in canonical order, so scanning forward keeps the output
  // lexicographically sorted.
  std::function<void(size_t)> extend = [&](size_t start) {
    if (static_cast<int>(cur.size()) == arity) {
      out.push_back(cur);
      return;
    }
    for (size_t i = start; i < pool.size(); ++i) {
      if (!cur.empty() && !cur.back().is_proper_prefix_of(pool[i])) continue;
      cur.push_back(pool[i]);
      extend(i + 1);
      cur.pop_back();
    }
  };
  extend(0);
  return out;
}

}  // namespace

std::vector<Chain> enumerate_chains(const TruncatedTree& host, int arity,
                                    const std::optional<BitString>& within) {
  return enumerate_chains_over(host.members(), arity, within);
}

std::vector<Chain> enumerate_chains(const Embedding& host, int arity,
                                    const std::optional<BitString>& within) {
  return enumerate_chains_over(host.image_nodes(), arity, within);
}

bool verify_embedding(const Embedding& e) {
  const auto& m = e.mapping();
  for (const auto& [idx, img] : m) {
    if (idx.length() >= e.depth()) continue;
    const BitString& left = m.at(idx.child(0));
    const BitString& right = m.at(idx.child(1));
    if (!img.is_proper_prefix_of(left)) return false;
    if (!img.is_proper_prefix_of(right)) return false;
    if (left.comparable_with(right)) return false;
  }
  return true;
}

bool verify_embedding(const Embedding& e, const TruncatedTree& host) {
  if (!verify_embedding(e)) return false;
  for (const auto& [idx, img] : e.mapping())
    if (!host.contains(img)) return false;
  return true;
}

Embedding compose_embeddings(const Embedding& outer, const Embedding& inner) {
  std::map<BitString, BitString> mapping;
  for (const auto& [idx, mid] : inner.mapping()) {
    if (mid.length() > outer.depth()) bad("inner embedding leaves the outer embedding's domain");
    mapping.emplace(idx, outer.image(mid));
  }
  Embedding out(inner.depth(), std::move(mapping));
  if (!verify_embedding(out)) bad("composition is not an embedding");
  return out;
}

}  // namespace treeramsey
